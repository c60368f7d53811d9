use crate::error::Result;
use crate::exact::RationalPi;
use crate::msf_dimension::dimension_at;
use crate::numeric::gram_schmidt::{dimension_sum, gram_schmidt};
use crate::numeric::profile::SpectralProfile;
use crate::scalar::Real;

/// One grid point of an `m = D` sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct AgreementRow<F> {
    pub xi: RationalPi,
    pub rank: usize,
    pub dim_sum: F,
    /// Exact lattice count, for MSF profiles.
    pub exact: Option<u32>,
    pub truncation_exact: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AgreementReport<F> {
    pub rows: Vec<AgreementRow<F>>,
}

impl<F: Real> AgreementReport<F> {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &AgreementRow<F>> {
        self.rows.iter().filter(|r| !r.agree)
    }
}

/// Compares the Gram-Schmidt rank with the rounded dimension sum at each grid
/// point, and both with the exact count when the profile is MSF.
pub fn verify_m_equals_d<F: Real>(
    profile: &SpectralProfile<F>,
    grid: &[RationalPi],
    scales: u32,
    radius: usize,
    tol: F,
) -> Result<AgreementReport<F>> {
    let mut rows = Vec::with_capacity(grid.len());
    for xi in grid {
        let x: F = xi.to_real();
        let rank = gram_schmidt(profile, x, scales, radius, tol).rank();
        let sum = dimension_sum(profile, x, scales, radius);
        let exact = match profile.wavelet_set() {
            Some(w) => Some(dimension_at(w, xi)?),
            None => None,
        };
        let rounded = sum.value.round().to_usize();
        let agree = rounded == Some(rank) && exact.is_none_or(|e| e as usize == rank);
        rows.push(AgreementRow {
            xi: xi.clone(),
            rank,
            dim_sum: sum.value,
            exact,
            truncation_exact: sum.truncation_exact,
            agree,
        });
    }
    Ok(AgreementReport { rows })
}
