mod common;

use common::*;
use num_complex::Complex;
use proptest::prelude::*;
use wavemult::msf_dimension::{symmetric_window, uniform_midpoints};
use wavemult::numeric::{dimension_sum, fiber, gram_schmidt, multiplicity_rank, verify_m_equals_d};
use wavemult::{
    dimension_at, dimension_step_function, RationalPi, SpectralProfile64, WaveletSet, CATALOG_NAMES,
};

const TOL: f64 = 1e-9;

fn msf(name: &str) -> SpectralProfile64 {
    SpectralProfile64::msf(&WaveletSet::from_catalog(name).unwrap())
}

fn profiles() -> Vec<(&'static str, SpectralProfile64)> {
    let mut out: Vec<_> = CATALOG_NAMES.iter().map(|n| (*n, msf(n))).collect();
    out.push(("meyer", SpectralProfile64::meyer()));
    out
}

fn grid64() -> Vec<RationalPi> {
    uniform_midpoints(&symmetric_window(5), 64)
}

#[test]
fn residuals_orthogonal_and_eta_reconstructs() {
    for (name, p) in profiles() {
        for xi in grid64() {
            let gs = gram_schmidt(&p, xi.to_f64(), 16, 8, TOL);
            assert!(gs.max_relative_coherence() <= TOL, "{name} at {xi}");
            assert!(gs.max_reconstruction_error() <= TOL, "{name} at {xi}");
            assert!(gs.h_values.iter().all(|h| *h >= 0.0));
        }
    }
}

#[test]
fn rank_matches_gram_determinant_oracle() {
    for (name, p) in profiles() {
        for xi in grid64() {
            let gs = gram_schmidt(&p, xi.to_f64(), 16, 8, TOL);
            let vectors: Vec<Vec<Complex<f64>>> = gs.fibers.iter().map(|f| f.entries.clone()).collect();
            let oracle = gram_determinant_rank(&vectors, gs.threshold / std::f64::consts::TAU);
            assert!(oracle <= 4);
            assert_eq!(gs.rank(), oracle, "{name} at {xi}");
        }
    }
}

#[test]
fn msf_dimension_sum_is_an_exact_count() {
    for name in CATALOG_NAMES {
        let p = msf(name);
        let w = WaveletSet::from_catalog(name).unwrap();
        let f = dimension_step_function(&w, &symmetric_window(5)).unwrap();
        for xi in f.midpoint_grid(64) {
            let d = dimension_sum(&p, xi.to_f64(), 16, 8);
            assert!(d.truncation_exact);
            assert_eq!(d.value, dimension_at(&w, &xi).unwrap() as f64, "{name} at {xi}");
        }
    }
}

#[test]
fn journe_rank_two() {
    let w = WaveletSet::from_catalog("journe").unwrap();
    let xi = rp(1, 5);
    assert_eq!(dimension_at(&w, &xi).unwrap(), 2);
    assert_eq!(multiplicity_rank(&msf("journe"), xi.to_f64(), 12, 8, TOL), 2);
}

#[test]
fn shannon_fiber_example() {
    let f = fiber(&msf("shannon"), std::f64::consts::FRAC_PI_2, 1, 4);
    let nonzero: Vec<i64> = (-4..=4).filter(|k| f.get(*k).norm() != 0.0).collect();
    assert_eq!(nonzero, vec![0]);
    assert_eq!(f.get(0), Complex::new(2f64.sqrt(), 0.0));
}

#[test]
fn meyer_agreement_on_32_points() {
    let grid = uniform_midpoints(&symmetric_window(5), 32);
    let r = verify_m_equals_d(&SpectralProfile64::meyer(), &grid, 16, 8, TOL).unwrap();
    assert!(r.all_agree());
    for row in &r.rows {
        assert_eq!(row.rank, 1);
        assert!((row.dim_sum - 1.0).abs() < 1e-9);
        assert!(row.exact.is_none());
    }
}

#[test]
fn zero_profile_has_multiplicity_zero() {
    let z = SpectralProfile64::zero();
    assert_eq!(multiplicity_rank(&z, 0.3, 8, 8, TOL), 0);
}

#[test]
fn sampled_meyer_copy_has_rank_one() {
    // dense samples of the Meyer profile
    let samples: Vec<(f64, Complex<f64>)> = (-4000..=4000)
        .map(|i| {
            let x = i as f64 * (8.0 * std::f64::consts::PI / 3.0) / 4000.0;
            (x, wavemult::numeric::meyer_hat(x))
        })
        .collect();
    let p = SpectralProfile64::sampled(samples);
    for xi in uniform_midpoints(&symmetric_window(4), 16) {
        assert_eq!(multiplicity_rank(&p, xi.to_f64(), 12, 6, 1e-6), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_scale_invariant(
        which in 0usize..5,
        idx in 0usize..64,
        mag in -3.0f64..3.0,
        phase in 0.0f64..std::f64::consts::TAU,
    ) {
        let (_, p) = &profiles()[which];
        let xi = grid64()[idx].to_f64();
        let c = Complex::from_polar(10f64.powf(mag), phase);
        prop_assert_eq!(
            multiplicity_rank(p, xi, 16, 8, TOL),
            multiplicity_rank(&p.scaled(c), xi, 16, 8, TOL)
        );
    }
}
