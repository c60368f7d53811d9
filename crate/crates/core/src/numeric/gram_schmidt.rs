use num_complex::Complex;

use crate::numeric::profile::SpectralProfile;
use crate::scalar::Real;

/// The translation fiber of `ψ_j = D⁻ʲψ` at `ξ`, truncated to `|k| ≤ K`:
/// `entries[k + K] = 2^{j/2}·ψ̂(2ʲ(ξ + 2πk))`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberVector<F> {
    pub xi: F,
    pub j: u32,
    pub radius: usize,
    pub entries: Vec<Complex<F>>,
}

impl<F: Real> FiberVector<F> {
    /// Entry at lattice index `k`.
    pub fn get(&self, k: i64) -> Complex<F> {
        let idx = k + self.radius as i64;
        usize::try_from(idx)
            .ok()
            .and_then(|i| self.entries.get(i).copied())
            .unwrap_or_else(|| Complex::new(F::zero(), F::zero()))
    }

    pub fn norm_sqr(&self) -> F {
        norm_sqr(&self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re == F::zero() && z.im == F::zero())
    }
}

pub(crate) fn inner<F: Real>(a: &[Complex<F>], b: &[Complex<F>]) -> Complex<F> {
    a.iter()
        .zip(b)
        .fold(Complex::new(F::zero(), F::zero()), |acc, (x, y)| {
            acc + x * y.conj()
        })
}

pub(crate) fn norm_sqr<F: Real>(a: &[Complex<F>]) -> F {
    a.iter().fold(F::zero(), |acc, z| acc + z.norm_sqr())
}

pub fn fiber<F: Real>(profile: &SpectralProfile<F>, xi: F, j: u32, radius: usize) -> FiberVector<F> {
    let two_pi = F::lit(2.0) * F::PI();
    let dil = F::lit(2.0).powi(j as i32);
    let amp = dil.sqrt();
    let k_max = radius as i64;
    let entries = (-k_max..=k_max)
        .map(|k| {
            let k = F::from_i64(k).expect("small lattice index");
            profile.evaluate(dil * (xi + two_pi * k)) * amp
        })
        .collect();
    FiberVector {
        xi,
        j,
        radius,
        entries,
    }
}

/// Whether scales `1..=J` and lattice indices `|k| ≤ K` capture every nonzero
/// term at `ξ` for a profile supported in `|ξ| ≤ support_radius`.
pub fn truncation_is_exact<F: Real>(profile: &SpectralProfile<F>, xi: F, scales: u32, radius: usize) -> bool {
    let rho = profile.support_radius();
    let pi = F::PI();
    let two = F::lit(2.0);
    let k = F::from_usize(radius).expect("small radius");
    let deep_enough = two.powi(scales as i32 + 1) * xi.abs() > rho;
    let wide_enough = two * (two * pi * k + pi) > rho;
    deep_enough && wide_enough
}

/// Fiberwise Gram-Schmidt of `ψ⃗_1(ξ), …, ψ⃗_J(ξ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramSchmidtState<F> {
    pub xi: F,
    pub fibers: Vec<FiberVector<F>>,
    /// `g⃗_j(ξ)`.
    pub residuals: Vec<Vec<Complex<F>>>,
    /// `h_j(ξ) = 2π‖g⃗_j(ξ)‖²`.
    pub h_values: Vec<F>,
    /// `eta[j][k] = ⟨ψ⃗_j, g⃗_k⟩ / ‖g⃗_k‖²` for `k < j`, zero when `g⃗_k` was dropped.
    pub eta: Vec<Vec<Complex<F>>>,
    /// Whether `h_j` cleared the rank threshold.
    pub active: Vec<bool>,
    /// `tol · max(1, max_j ‖ψ⃗_j‖²)`.
    pub threshold: F,
}

impl<F: Real> GramSchmidtState<F> {
    pub fn rank(&self) -> usize {
        self.active.iter().filter(|a| **a).count()
    }

    /// `max |⟨g⃗_j, g⃗_k⟩| / (‖g⃗_j‖‖g⃗_k‖)` over pairs of retained residuals.
    pub fn max_relative_coherence(&self) -> F {
        let mut worst = F::zero();
        for j in 0..self.residuals.len() {
            for k in 0..j {
                if !(self.active[j] && self.active[k]) {
                    continue;
                }
                let a = &self.residuals[j];
                let b = &self.residuals[k];
                let c = inner(a, b).norm() / (norm_sqr(a).sqrt() * norm_sqr(b).sqrt());
                worst = worst.max(c);
            }
        }
        worst
    }

    /// `max_j ‖ψ⃗_j − g⃗_j − Σ_{k<j} η_{j,k} g⃗_k‖ / ‖ψ⃗_j‖` (zero fibers skipped).
    pub fn max_reconstruction_error(&self) -> F {
        let mut worst = F::zero();
        for (j, psi) in self.fibers.iter().enumerate() {
            let scale = psi.norm_sqr().sqrt();
            if scale == F::zero() {
                continue;
            }
            let mut r: Vec<Complex<F>> = psi
                .entries
                .iter()
                .zip(&self.residuals[j])
                .map(|(p, g)| p - g)
                .collect();
            for (k, eta) in self.eta[j].iter().enumerate() {
                for (ri, gi) in r.iter_mut().zip(&self.residuals[k]) {
                    *ri = *ri - eta * gi;
                }
            }
            worst = worst.max(norm_sqr(&r).sqrt() / scale);
        }
        worst
    }
}

/// Runs the recursion `g⃗_j = ψ⃗_j − Σ_{k<j} ⟨ψ⃗_j, u⃗_k⟩u⃗_k` for `j = 1..=J`, where
/// `u⃗_k = g⃗_k/‖g⃗_k‖` and residuals with `h_k` at or below the threshold are
/// treated as zero. Projections are applied twice so retained residuals stay
/// orthogonal to working precision.
pub fn gram_schmidt<F: Real>(
    profile: &SpectralProfile<F>,
    xi: F,
    scales: u32,
    radius: usize,
    tol: F,
) -> GramSchmidtState<F> {
    let fibers: Vec<FiberVector<F>> = (1..=scales).map(|j| fiber(profile, xi, j, radius)).collect();
    let scale = fibers.iter().map(FiberVector::norm_sqr).fold(F::one(), F::max);
    let threshold = tol * scale;
    let two_pi = F::lit(2.0) * F::PI();
    let zero = Complex::new(F::zero(), F::zero());

    let mut units: Vec<Option<Vec<Complex<F>>>> = Vec::with_capacity(fibers.len());
    let mut norms: Vec<F> = Vec::with_capacity(fibers.len());
    let mut residuals = Vec::with_capacity(fibers.len());
    let mut h_values = Vec::with_capacity(fibers.len());
    let mut eta = Vec::with_capacity(fibers.len());
    let mut active = Vec::with_capacity(fibers.len());

    for psi in &fibers {
        let mut g = psi.entries.clone();
        let mut coeffs = vec![zero; units.len()];
        for _pass in 0..2 {
            for (k, u) in units.iter().enumerate() {
                let Some(u) = u else { continue };
                let c = inner(&g, u);
                for (gi, ui) in g.iter_mut().zip(u) {
                    *gi = *gi - c * ui;
                }
                coeffs[k] = coeffs[k] + c;
            }
        }
        // coefficient on g_k is c_k / ‖g_k‖
        let row: Vec<Complex<F>> = coeffs
            .iter()
            .zip(&norms)
            .zip(&units)
            .map(|((c, n), u)| if u.is_some() { c / *n } else { zero })
            .collect();

        let n2 = norm_sqr(&g);
        let h = two_pi * n2;
        let keep = h > threshold;
        let n = n2.sqrt();
        units.push(keep.then(|| g.iter().map(|z| z / n).collect()));
        norms.push(n);
        h_values.push(h);
        active.push(keep);
        eta.push(row);
        residuals.push(g);
    }

    GramSchmidtState {
        xi,
        fibers,
        residuals,
        h_values,
        eta,
        active,
        threshold,
    }
}

/// `m(ξ)`: the number of fibers that add a new direction.
pub fn multiplicity_rank<F: Real>(
    profile: &SpectralProfile<F>,
    xi: F,
    scales: u32,
    radius: usize,
    tol: F,
) -> usize {
    gram_schmidt(profile, xi, scales, radius, tol).rank()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DimensionSum<F> {
    pub value: F,
    pub truncation_exact: bool,
}

/// `Σ_{j=1..J} Σ_{|k|≤K} |ψ̂(2ʲ(ξ + 2πk))|²`.
pub fn dimension_sum<F: Real>(
    profile: &SpectralProfile<F>,
    xi: F,
    scales: u32,
    radius: usize,
) -> DimensionSum<F> {
    let two_pi = F::lit(2.0) * F::PI();
    let k_max = radius as i64;
    let mut value = F::zero();
    for j in 1..=scales {
        let dil = F::lit(2.0).powi(j as i32);
        for k in -k_max..=k_max {
            let k = F::from_i64(k).expect("small lattice index");
            value = value + profile.evaluate(dil * (xi + two_pi * k)).norm_sqr();
        }
    }
    DimensionSum {
        value,
        truncation_exact: truncation_is_exact(profile, xi, scales, radius),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet_sets::WaveletSet;
    use std::f64::consts::PI;

    fn msf(name: &str) -> SpectralProfile<f64> {
        SpectralProfile::msf(&WaveletSet::from_catalog(name).unwrap())
    }

    #[test]
    fn shannon_fiber_single_hit() {
        let f = fiber(&msf("shannon"), PI / 2.0, 1, 4);
        assert_eq!(f.entries.len(), 9);
        for k in -4..=4 {
            let expected = if k == 0 { 2f64.sqrt() } else { 0.0 };
            assert_eq!(f.get(k).re, expected, "k = {k}");
            assert_eq!(f.get(k).im, 0.0);
        }
    }

    #[test]
    fn zero_profile_gives_zero_everything() {
        let p = SpectralProfile::<f64>::zero();
        assert!(fiber(&p, 1.0, 2, 3).is_zero());
        let gs = gram_schmidt(&p, 1.0, 4, 4, 1e-9);
        assert!(gs.h_values.iter().all(|h| *h == 0.0));
        assert_eq!(gs.rank(), 0);
        assert_eq!(dimension_sum(&p, 1.0, 4, 4).value, 0.0);
    }

    #[test]
    fn meyer_fiber_outside_support() {
        assert!(fiber(&SpectralProfile::<f64>::meyer(), PI / 2.0, 3, 4).is_zero());
    }

    #[test]
    fn shannon_recursion_at_half_pi() {
        let gs = gram_schmidt(&msf("shannon"), PI / 2.0, 4, 4, 1e-9);
        assert!(gs.h_values[0] > 0.0);
        assert_eq!(&gs.h_values[1..], &[0.0, 0.0, 0.0]);
        assert_eq!(gs.residuals[0], gs.fibers[0].entries);
        assert_eq!(gs.rank(), 1);
    }

    #[test]
    fn first_residual_is_first_fiber() {
        let gs = gram_schmidt(&SpectralProfile::<f64>::meyer(), 0.7, 5, 4, 1e-9);
        assert_eq!(gs.residuals[0], gs.fibers[0].entries);
        assert!(gs.eta[0].is_empty());
    }

    #[test]
    fn meyer_dimension_sum_is_one() {
        let d = dimension_sum(&SpectralProfile::<f64>::meyer(), PI / 2.0, 4, 4);
        assert!((d.value - 1.0).abs() < 1e-9);
        assert!(d.truncation_exact);
    }

    #[test]
    fn shannon_counts() {
        let p = msf("shannon");
        assert_eq!(multiplicity_rank(&p, PI / 2.0, 8, 8, 1e-9), 1);
        let d = dimension_sum(&p, PI / 2.0, 8, 8);
        assert_eq!(d.value, 1.0);
        assert!(d.truncation_exact);
    }

    #[test]
    fn truncation_flags() {
        let p = msf("paper_w1");
        assert!(!truncation_is_exact(&p, 0.01, 4, 8));
        assert!(truncation_is_exact(&p, 0.5, 8, 8));
        assert!(!truncation_is_exact(&p, 0.5, 8, 0));
    }

    #[test]
    fn single_precision_rank() {
        let w = WaveletSet::from_catalog("shannon").unwrap();
        let p = SpectralProfile::<f32>::msf(&w);
        assert_eq!(multiplicity_rank(&p, 1.3f32, 8, 4, 1e-4), 1);
        let m = SpectralProfile::<f32>::meyer();
        assert_eq!(multiplicity_rank(&m, 1.3f32, 6, 4, 1e-4), 1);
    }
}
