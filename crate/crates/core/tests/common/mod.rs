//! Brute-force oracles shared by the integration tests. None of these reuse the
//! enumeration bounds, fragment splitting or composition code of the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;
use wavemult::{Interval, IntervalSet, RationalPi};

pub fn rp(n: i64, d: i64) -> RationalPi {
    RationalPi::new(n, d)
}

pub fn set(text: &str) -> IntervalSet {
    text.parse().expect("valid set text")
}

/// `#{(j, k) : 1 ≤ j ≤ 28, |k| ≤ 16, 2ʲ(ξ + 2πk) ∈ W}` by plain double loop; ample
/// for catalog sets (`|W| ⊂ [π/8, 5π]`) and `|ξ| ≥ 2⁻¹⁶π`.
pub fn lattice_count(w: &IntervalSet, xi: &RationalPi) -> u32 {
    let mut count = 0;
    for k in -16..=16i64 {
        let y = xi + &RationalPi::integer(2 * k);
        for j in 1..=28 {
            if w.contains(&y.scale_pow2(j)) {
                count += 1;
            }
        }
    }
    count
}

/// The unique `z ∈ target` with `z − x ∈ 2πℤ`, searching `|k| ≤ 64`.
pub fn congruent_point(target: &IntervalSet, x: &RationalPi) -> Option<RationalPi> {
    let hits: Vec<RationalPi> = (-64..=64i64)
        .map(|k| x + &RationalPi::integer(2 * k))
        .filter(|z| target.contains(z))
        .collect();
    match hits.as_slice() {
        [z] => Some(z.clone()),
        _ => None,
    }
}

/// Canonical `σ(x)` for `x ∈ W₁`: the point of `W₂` congruent to `x` mod `2π`.
pub fn sigma_oracle(w2: &IntervalSet, x: &RationalPi) -> Option<RationalPi> {
    congruent_point(w2, x)
}

/// Dyadic extension by scanning `n ∈ [-64, 64]` for `2ⁿx ∈ W₁`.
pub fn extended_sigma_oracle(w1: &IntervalSet, w2: &IntervalSet, x: &RationalPi) -> Option<RationalPi> {
    let ns: Vec<i64> = (-64..=64).filter(|n| w1.contains(&x.scale_pow2(*n))).collect();
    let [n] = ns.as_slice() else { return None };
    let image = sigma_oracle(w2, &x.scale_pow2(*n))?;
    Some(image.scale_pow2(-n))
}

/// Point of an interval: `lo + (a mod b)/b · (hi − lo)`.
pub fn point_in(iv: &Interval, a: u32, b: u32) -> RationalPi {
    let t = BigRational::new(BigInt::from(a % b), BigInt::from(b));
    let offset = RationalPi::from_coefficient(iv.length().coefficient() * t);
    iv.lo() + &offset
}

/// Rank by greedy pivoting on the Gram matrix: an index joins the basis when the
/// Gram determinant of the enlarged set, relative to the current one, exceeds
/// `threshold` (a bound on `‖g‖²`, i.e. `h/2π`). Determinants come from Gaussian elimination with partial pivoting.
pub fn gram_determinant_rank(vectors: &[Vec<Complex<f64>>], threshold: f64) -> usize {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current_det = 1.0;
    for i in 0..vectors.len() {
        let mut trial = chosen.clone();
        trial.push(i);
        let g: Vec<Vec<Complex<f64>>> = trial
            .iter()
            .map(|&a| {
                trial
                    .iter()
                    .map(|&b| {
                        vectors[a]
                            .iter()
                            .zip(&vectors[b])
                            .map(|(x, y)| x * y.conj())
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let det = determinant(g).re;
        if det > threshold * current_det {
            chosen = trial;
            current_det = det;
        }
    }
    chosen.len()
}

fn determinant(mut m: Vec<Vec<Complex<f64>>>) -> Complex<f64> {
    let n = m.len();
    let mut det = Complex::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().partial_cmp(&m[b][col].norm()).unwrap())
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Complex::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let factor = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= factor * p;
            }
        }
    }
    det
}

/// `q·π` with `q = num/2^shift`, covering dyadic and near-dyadic endpoints.
pub fn arb_rational_pi() -> impl Strategy<Value = RationalPi> {
    (
        -256i64..256,
        0u32..6,
        prop_oneof![Just(1i64), Just(3), Just(5), Just(7)],
    )
        .prop_map(|(n, s, odd)| RationalPi::new(n, (1i64 << s) * odd))
}

pub fn arb_interval() -> impl Strategy<Value = Interval> {
    (arb_rational_pi(), arb_rational_pi())
        .prop_filter("nonempty", |(a, b)| a != b)
        .prop_map(|(a, b)| {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            Interval::new(lo, hi).unwrap()
        })
}

pub fn arb_raw_intervals() -> impl Strategy<Value = Vec<Interval>> {
    prop::collection::vec(arb_interval(), 0..8)
}

pub fn arb_set() -> impl Strategy<Value = IntervalSet> {
    arb_raw_intervals().prop_map(IntervalSet::normalize)
}
