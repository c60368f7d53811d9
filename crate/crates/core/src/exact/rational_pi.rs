use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::scalar::Real;

/// An exact real number of the form `q·π` with `q` an arbitrary-precision rational.
///
/// `q` is always kept in lowest terms with a positive denominator, so equality and
/// ordering are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPi(BigRational);

impl RationalPi {
    /// `num/den · π`. Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        RationalPi(BigRational::new(num.into(), den.into()))
    }

    /// `k·π` for an integer `k`.
    pub fn integer(k: impl Into<BigInt>) -> Self {
        RationalPi(BigRational::from_integer(k.into()))
    }

    pub fn from_coefficient(q: BigRational) -> Self {
        RationalPi(q)
    }

    pub fn zero() -> Self {
        RationalPi(BigRational::zero())
    }

    pub fn pi() -> Self {
        Self::integer(1)
    }

    pub fn two_pi() -> Self {
        Self::integer(2)
    }

    /// The rational `q` in `q·π`.
    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        RationalPi(self.0.abs())
    }

    /// `2ⁿ · self`, exact for any sign of `n`.
    pub fn scale_pow2(&self, n: i64) -> Self {
        let shift = n.unsigned_abs() as usize;
        if n >= 0 {
            RationalPi(BigRational::new(self.numer() << shift, self.denom().clone()))
        } else {
            RationalPi(BigRational::new(self.numer().clone(), self.denom() << shift))
        }
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Self {
        RationalPi(&self.0 * BigRational::from_integer(k.into()))
    }

    /// True iff the value lies in `2πℤ`.
    pub fn is_multiple_of_two_pi(&self) -> bool {
        self.0.is_integer() && self.0.numer().is_even()
    }

    /// The unique `k` with `self - 2πk ∈ [-π, π)`.
    pub fn nearest_period(&self) -> BigInt {
        // floor((q + 1) / 2)
        let shifted = &self.0 + BigRational::one();
        (shifted / BigRational::from_integer(BigInt::from(2)))
            .floor()
            .to_integer()
    }

    /// For nonzero values, the unique `m` with `2ᵐπ ≤ |self| < 2ᵐ⁺¹π`.
    pub fn dyadic_shell(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let num = self.numer().abs();
        let den = self.denom();
        let e = num.bits() as i64 - den.bits() as i64;
        // |q| lies in (2^(e-1), 2^(e+1)); pick between e-1 and e.
        let candidate = RationalPi(BigRational::new(num, den.clone()));
        if candidate >= RationalPi::pi().scale_pow2(e) {
            Some(e)
        } else {
            Some(e - 1)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }

    /// The value in a floating-point type; exactness ends here.
    pub fn to_real<F: Real>(&self) -> F {
        let q = F::from_f64(self.0.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
        q * F::PI()
    }

    /// `p/q pi` with a separating space; used for shifts in reports.
    pub fn to_spaced_string(&self) -> String {
        if self.0.is_integer() {
            format!("{} pi", self.numer())
        } else {
            format!("{}/{} pi", self.numer(), self.denom())
        }
    }

    /// The coefficient as a plain rational string (`-9/4`, `2`).
    pub fn coefficient_string(&self) -> String {
        self.0.to_string()
    }
}

impl fmt::Display for RationalPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            match self.numer().to_i64() {
                Some(1) => f.write_str("pi"),
                Some(-1) => f.write_str("-pi"),
                _ => write!(f, "{}pi", self.numer()),
            }
        } else {
            write!(f, "{}/{}pi", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for RationalPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalPi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::expr::parse_scalar(s)
    }
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident) => {
        impl $Op<&RationalPi> for &RationalPi {
            type Output = RationalPi;
            fn $op(self, rhs: &RationalPi) -> RationalPi {
                RationalPi($Op::$op(&self.0, &rhs.0))
            }
        }
        impl $Op<RationalPi> for RationalPi {
            type Output = RationalPi;
            fn $op(self, rhs: RationalPi) -> RationalPi {
                RationalPi($Op::$op(self.0, rhs.0))
            }
        }
        impl $Op<&RationalPi> for RationalPi {
            type Output = RationalPi;
            fn $op(self, rhs: &RationalPi) -> RationalPi {
                RationalPi($Op::$op(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);

impl AddAssign<&RationalPi> for RationalPi {
    fn add_assign(&mut self, rhs: &RationalPi) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&RationalPi> for RationalPi {
    fn sub_assign(&mut self, rhs: &RationalPi) {
        self.0 -= &rhs.0;
    }
}

impl Neg for RationalPi {
    type Output = RationalPi;
    fn neg(self) -> RationalPi {
        RationalPi(-self.0)
    }
}

impl Neg for &RationalPi {
    type Output = RationalPi;
    fn neg(self) -> RationalPi {
        RationalPi(-&self.0)
    }
}

impl std::iter::Sum for RationalPi {
    fn sum<I: Iterator<Item = RationalPi>>(iter: I) -> Self {
        iter.fold(RationalPi::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a RationalPi> for RationalPi {
    fn sum<I: Iterator<Item = &'a RationalPi>>(iter: I) -> Self {
        iter.fold(RationalPi::zero(), |acc, x| acc + x)
    }
}
