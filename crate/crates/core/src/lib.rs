//! Wavelet multiplicity and dimension functions.
//!
//! The exact side works with wavelet sets `W` (finite unions of half-open intervals
//! with rational-π endpoints) and their MSF wavelets `ψ̂ = χ_W`: wavelet-set
//! verification, exact dimension functions as step functions, and the bijections
//! `σ: W₁ → W₂` effected by `2π` translations together with the test of whether
//! powers of `σ` remain piecewise `2πℤ` translations. The numerical side computes
//! the multiplicity function of an arbitrary spectral profile as the rank of its
//! translation fibers and checks it against the dimension sum.
//!
//! Numerical code is generic over [`Real`] (`f32`, `f64`); the `*64` aliases below
//! fix `f64`.

pub mod error;
pub mod exact;
pub mod expr;
pub mod msf_dimension;
pub mod numeric;
pub mod report;
pub mod scalar;
pub mod sigma;
pub mod translation;
pub mod wavelet_sets;

pub use error::{Error, Result};
pub use exact::{Interval, IntervalSet, RationalPi};
pub use expr::{parse_scalar, parse_set};
pub use msf_dimension::{
    core_equivalent_exact, dimension_at, dimension_integral, dimension_step_function, CoreEquivalence,
    DimensionIntegral, StepFunction,
};
pub use numeric::{
    dimension_sum, fiber, gram_schmidt, multiplicity_rank, verify_m_equals_d, GramSchmidtState,
    SpectralProfile,
};
pub use scalar::Real;
pub use sigma::{CommutantVerdict, SigmaMap};
pub use translation::{ExtendedPiecewiseMap, PiecewiseTranslation};
pub use wavelet_sets::{
    catalog, dilation_congruence, is_wavelet_set, translation_congruence, WaveletSet, WaveletSetReport,
    CATALOG_NAMES,
};

pub type SpectralProfile64 = numeric::SpectralProfile<f64>;
pub type SpectralProfile32 = numeric::SpectralProfile<f32>;
pub type FiberVector64 = numeric::FiberVector<f64>;
pub type GramSchmidtState64 = numeric::GramSchmidtState<f64>;
pub type AgreementReport64 = numeric::AgreementReport<f64>;
