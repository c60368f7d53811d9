//! Wavelet-set verification.
//!
//! A set `W` is accepted when its `2πℤ`-translates tile `[-π, π)` and its dyadic
//! dilates tile `ℝ∖{0}`, i.e. tile the reference annulus `[-2π,-π) ∪ [π,2π)`. Both
//! checks are exact: `W` is cut into fragments that a single translation (or a
//! single power of 2) carries into the reference region, and the images must cover
//! it exactly once.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, RationalPi};
use crate::translation::PiecewiseTranslation;

pub const CATALOG_NAMES: [&str; 4] = ["shannon", "journe", "paper_w1", "paper_w2"];

/// Outcome of [`is_wavelet_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveletSetReport {
    pub set: IntervalSet,
    pub is_translation_congruent: bool,
    pub is_dilation_congruent: bool,
    /// `τ_W : W → [-π, π)`, present iff translation congruence holds.
    pub tau_witness: Option<PiecewiseTranslation>,
    /// Points of the reference regions (`[-π,π)` for translation, the annulus for
    /// dilation) covered zero times or more than once.
    pub failure_regions: IntervalSet,
}

impl WaveletSetReport {
    pub fn accepted(&self) -> bool {
        self.is_translation_congruent && self.is_dilation_congruent
    }
}

/// A set that passed [`is_wavelet_set`], together with its translation witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveletSet {
    set: IntervalSet,
    tau: PiecewiseTranslation,
}

impl WaveletSet {
    pub fn new(set: IntervalSet) -> Result<Self> {
        let report = is_wavelet_set(&set)?;
        match report.tau_witness {
            Some(tau) if report.is_dilation_congruent => {
                debug_assert_eq!(set.measure(), RationalPi::two_pi());
                Ok(WaveletSet { set, tau })
            }
            _ => Err(Error::NotWaveletSet {
                set,
                translation: report.is_translation_congruent,
                dilation: report.is_dilation_congruent,
            }),
        }
    }

    pub fn from_catalog(name: &str) -> Result<Self> {
        Self::new(catalog(name)?)
    }

    pub fn set(&self) -> &IntervalSet {
        &self.set
    }

    /// The translation witness `τ_W`.
    pub fn tau(&self) -> &PiecewiseTranslation {
        &self.tau
    }
}

impl AsRef<IntervalSet> for WaveletSet {
    fn as_ref(&self) -> &IntervalSet {
        &self.set
    }
}

/// Splits each piece at the odd multiples of π and pairs each fragment with the
/// shift `-2πk` that moves it into `[-π, π)`.
fn translation_fragments(w: &IntervalSet) -> Vec<(Interval, RationalPi)> {
    let mut out = Vec::new();
    for iv in w {
        let mut lo = iv.lo().clone();
        while &lo < iv.hi() {
            let k = lo.nearest_period();
            let cell_end = RationalPi::integer(&k * BigInt::from(2) + BigInt::from(1));
            let hi = cell_end.min(iv.hi().clone());
            let shift = RationalPi::integer(-(&k * BigInt::from(2)));
            out.push((
                Interval::new(lo.clone(), hi.clone()).expect("nonempty fragment"),
                shift,
            ));
            lo = hi;
        }
    }
    out
}

/// For `x ≠ 0`, the `m` whose half-open shell `[2ᵐπ, 2ᵐ⁺¹π)` (or its mirror
/// `[-2ᵐ⁺¹π, -2ᵐπ)` for negative `x`) contains `x`.
pub(crate) fn half_open_shell(x: &RationalPi) -> i64 {
    let m = x.dyadic_shell().expect("nonzero");
    if x.is_negative() && x.abs() == RationalPi::pi().scale_pow2(m) {
        m - 1
    } else {
        m
    }
}

/// Splits each piece at `±2ᵐπ` and pairs each fragment with the exponent `m` such
/// that `2⁻ᵐ·fragment` lies in the reference annulus.
fn dilation_fragments(w: &IntervalSet) -> Vec<(Interval, i64)> {
    let mut out = Vec::new();
    for iv in w {
        let mut lo = iv.lo().clone();
        while &lo < iv.hi() {
            let m = half_open_shell(&lo);
            let shell_end = if lo.is_positive() {
                RationalPi::pi().scale_pow2(m + 1)
            } else {
                -RationalPi::pi().scale_pow2(m)
            };
            let hi = shell_end.min(iv.hi().clone());
            out.push((
                Interval::new(lo.clone(), hi.clone()).expect("nonempty fragment"),
                m,
            ));
            lo = hi;
        }
    }
    out
}

/// Points covered by at least two of the intervals.
fn overlap_region(ivs: &[Interval]) -> IntervalSet {
    let mut sorted = ivs.to_vec();
    sorted.sort_by(|a, b| a.lo().cmp(b.lo()));
    let mut out = Vec::new();
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            if b.lo() >= a.hi() {
                break;
            }
            if let Some(x) = a.intersect(b) {
                out.push(x);
            }
        }
    }
    IntervalSet::normalize(out)
}

/// Returns `(tiles exactly, regions covered 0 or ≥2 times)` for images inside `reference`.
fn tiling_check(images: &[Interval], reference: &IntervalSet) -> (bool, IntervalSet) {
    let covered = IntervalSet::normalize(images.to_vec());
    let total: RationalPi = images.iter().map(Interval::length).sum();
    let exact = covered == *reference && total == reference.measure();
    if exact {
        return (true, IntervalSet::empty());
    }
    let gaps = reference.difference(&covered);
    (false, gaps.union(&overlap_region(images)))
}

/// The translation witness `τ_W : W → [-π, π)` when the `2πℤ`-translates of `W`
/// tile `[-π, π)` exactly.
pub fn translation_congruence(w: &IntervalSet) -> Option<PiecewiseTranslation> {
    let (witness, _) = translation_check(w);
    witness
}

fn translation_check(w: &IntervalSet) -> (Option<PiecewiseTranslation>, IntervalSet) {
    let fragments = translation_fragments(w);
    let images: Vec<Interval> = fragments.iter().map(|(iv, s)| iv.translate(s)).collect();
    let (ok, failures) = tiling_check(&images, &IntervalSet::base_interval());
    if !ok {
        return (None, failures);
    }
    let tau = PiecewiseTranslation::from_fragments(fragments).expect("tiling fragments are disjoint");
    (Some(tau), failures)
}

/// True iff the dyadic dilates `{2ʲW}` tile `ℝ∖{0}`.
pub fn dilation_congruence(w: &IntervalSet) -> Result<bool> {
    dilation_check(w).map(|(ok, _)| ok)
}

fn reference_annulus() -> IntervalSet {
    let pi = RationalPi::pi();
    let two_pi = RationalPi::two_pi();
    IntervalSet::span(-&two_pi, -&pi).union(&IntervalSet::span(pi, two_pi))
}

fn dilation_check(w: &IntervalSet) -> Result<(bool, IntervalSet)> {
    w.require_away_from_zero()?;
    let images: Vec<Interval> = dilation_fragments(w)
        .iter()
        .map(|(iv, m)| iv.dilate(-m))
        .collect();
    Ok(tiling_check(&images, &reference_annulus()))
}

/// Runs both congruence checks.
pub fn is_wavelet_set(w: &IntervalSet) -> Result<WaveletSetReport> {
    let (dilation_ok, dilation_failures) = dilation_check(w)?;
    let (tau, translation_failures) = translation_check(w);
    Ok(WaveletSetReport {
        set: w.clone(),
        is_translation_congruent: tau.is_some(),
        is_dilation_congruent: dilation_ok,
        tau_witness: tau,
        failure_regions: translation_failures.union(&dilation_failures),
    })
}

/// Named wavelet sets: `shannon`, `journe`, `paper_w1` and its reflection `paper_w2`.
pub fn catalog(name: &str) -> Result<IntervalSet> {
    let rp = RationalPi::new;
    let span = IntervalSet::span;
    let set = match name {
        "shannon" => span(rp(-2, 1), rp(-1, 1)).union(&span(rp(1, 1), rp(2, 1))),
        "journe" => IntervalSet::normalize(vec![
            Interval::new(rp(-32, 7), rp(-4, 1))?,
            Interval::new(rp(-1, 1), rp(-4, 7))?,
            Interval::new(rp(4, 7), rp(1, 1))?,
            Interval::new(rp(4, 1), rp(32, 7))?,
        ]),
        "paper_w1" => span(rp(-1, 4), rp(-1, 8)).union(&span(rp(15, 8), rp(15, 4))),
        "paper_w2" => catalog("paper_w1")?.negate(),
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    Ok(set)
}
