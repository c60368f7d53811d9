use num_complex::Complex;

use crate::exact::IntervalSet;
use crate::scalar::Real;
use crate::wavelet_sets::WaveletSet;

#[derive(Clone, Debug, PartialEq)]
pub enum ProfileKind<F> {
    /// `ψ̂ = χ_W` for a wavelet set `W`.
    Msf(WaveletSet),
    /// The Meyer wavelet with the degree-7 polynomial bell.
    Meyer,
    /// Piecewise-linear interpolation of `(ξ, ψ̂(ξ))` samples, zero outside their span.
    Sampled(Vec<(F, Complex<F>)>),
}

/// An evaluatable model of `ψ̂`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralProfile<F> {
    kind: ProfileKind<F>,
    gain: Complex<F>,
    // float endpoints of the MSF set, for fast membership
    pieces: Vec<(F, F)>,
}

impl<F: Real> SpectralProfile<F> {
    pub fn msf(w: &WaveletSet) -> Self {
        let pieces = w
            .set()
            .iter()
            .map(|iv| (iv.lo().to_real(), iv.hi().to_real()))
            .collect();
        SpectralProfile {
            kind: ProfileKind::Msf(w.clone()),
            gain: Complex::new(F::one(), F::zero()),
            pieces,
        }
    }

    pub fn meyer() -> Self {
        SpectralProfile {
            kind: ProfileKind::Meyer,
            gain: Complex::new(F::one(), F::zero()),
            pieces: Vec::new(),
        }
    }

    /// Samples are sorted by `ξ`; duplicates keep the last value.
    pub fn sampled(mut samples: Vec<(F, Complex<F>)>) -> Self {
        samples.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite sample abscissae"));
        samples.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 = later.1;
                true
            } else {
                false
            }
        });
        SpectralProfile {
            kind: ProfileKind::Sampled(samples),
            gain: Complex::new(F::one(), F::zero()),
            pieces: Vec::new(),
        }
    }

    /// The identically zero profile.
    pub fn zero() -> Self {
        Self::sampled(Vec::new())
    }

    /// The same profile multiplied by `c`.
    pub fn scaled(&self, c: Complex<F>) -> Self {
        SpectralProfile {
            gain: self.gain * c,
            ..self.clone()
        }
    }

    pub fn kind(&self) -> &ProfileKind<F> {
        &self.kind
    }

    /// The underlying wavelet set for MSF profiles.
    pub fn wavelet_set(&self) -> Option<&WaveletSet> {
        match &self.kind {
            ProfileKind::Msf(w) => Some(w),
            _ => None,
        }
    }

    pub fn exact_set(&self) -> Option<&IntervalSet> {
        self.wavelet_set().map(WaveletSet::set)
    }

    pub fn evaluate(&self, xi: F) -> Complex<F> {
        let raw = match &self.kind {
            ProfileKind::Msf(_) => {
                let inside = self.pieces.iter().any(|&(lo, hi)| lo <= xi && xi < hi);
                if inside {
                    Complex::new(F::one(), F::zero())
                } else {
                    Complex::new(F::zero(), F::zero())
                }
            }
            ProfileKind::Meyer => meyer_hat(xi),
            ProfileKind::Sampled(samples) => interpolate(samples, xi),
        };
        raw * self.gain
    }

    /// `sup{|ξ| : ψ̂(ξ) ≠ 0}`.
    pub fn support_radius(&self) -> F {
        match &self.kind {
            ProfileKind::Msf(_) => self
                .pieces
                .iter()
                .fold(F::zero(), |m, &(lo, hi)| m.max(lo.abs()).max(hi.abs())),
            ProfileKind::Meyer => F::lit(8.0 / 3.0) * F::PI(),
            ProfileKind::Sampled(samples) => samples.iter().fold(F::zero(), |m, &(x, _)| m.max(x.abs())),
        }
    }
}

/// `ν(t) = t⁴(35 − 84t + 70t² − 20t³)`, clamped to `[0, 1]`.
pub fn meyer_bell<F: Real>(t: F) -> F {
    if t <= F::zero() {
        return F::zero();
    }
    if t >= F::one() {
        return F::one();
    }
    let t4 = t.powi(4);
    t4 * (F::lit(35.0) - F::lit(84.0) * t + F::lit(70.0) * t * t - F::lit(20.0) * t.powi(3))
}

/// Meyer `ψ̂(ξ) = e^{iξ/2}·|ψ̂(ξ)|`.
pub fn meyer_hat<F: Real>(xi: F) -> Complex<F> {
    let pi = F::PI();
    let a = xi.abs();
    let two_thirds = F::lit(2.0 / 3.0) * pi;
    let four_thirds = F::lit(4.0 / 3.0) * pi;
    let eight_thirds = F::lit(8.0 / 3.0) * pi;
    let three = F::lit(3.0);
    let half_pi = pi / F::lit(2.0);
    let modulus = if a < two_thirds || a > eight_thirds {
        F::zero()
    } else if a <= four_thirds {
        (half_pi * meyer_bell(three * a / (F::lit(2.0) * pi) - F::one())).sin()
    } else {
        (half_pi * meyer_bell(three * a / (F::lit(4.0) * pi) - F::one())).cos()
    };
    Complex::from_polar(modulus, xi / F::lit(2.0))
}

fn interpolate<F: Real>(samples: &[(F, Complex<F>)], xi: F) -> Complex<F> {
    let zero = Complex::new(F::zero(), F::zero());
    let (Some(first), Some(last)) = (samples.first(), samples.last()) else {
        return zero;
    };
    if xi < first.0 || xi > last.0 {
        return zero;
    }
    let idx = samples.partition_point(|(x, _)| *x <= xi);
    if idx == samples.len() {
        return last.1;
    }
    let (x0, y0) = samples[idx - 1];
    let (x1, y1) = samples[idx];
    let t = (xi - x0) / (x1 - x0);
    y0 + (y1 - y0) * t
}
