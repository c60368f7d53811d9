//! Numerical fiber analysis for general wavelets: fiber vectors, the fiberwise
//! Gram-Schmidt recursion, rank-based multiplicity and truncated dimension sums.

mod gram_schmidt;
mod profile;
mod verify;

pub use gram_schmidt::{
    dimension_sum, fiber, gram_schmidt, multiplicity_rank, truncation_is_exact, DimensionSum, FiberVector,
    GramSchmidtState,
};
pub use profile::{meyer_bell, meyer_hat, ProfileKind, SpectralProfile};
pub use verify::{verify_m_equals_d, AgreementReport, AgreementRow};

/// Default relative rank tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
