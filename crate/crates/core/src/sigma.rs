//! Bijections between wavelet sets effected by `2π` translations, their dyadic
//! extension to `ℝ∖{0}`, and powers.
//!
//! For wavelet sets `W₁`, `W₂` the canonical bijection is `σ = τ_{W₂}⁻¹ ∘ τ_{W₁}`,
//! where `τ_W` folds `W` onto `[-π, π)`. It extends to `ℝ∖{0}` by
//! `σ(x) = 2⁻ⁿσ(2ⁿx)` for the unique `n` with `2ⁿx ∈ W₁`. The unitary induced by
//! `σᵖ` stays in the local commutant of `ψ_{W₁}` iff `σᵖ|_{W₁}` is again a
//! piecewise `2πℤ` translation.

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, RationalPi};
use crate::translation::{ExtendedPiecewiseMap, PiecewiseTranslation};
use crate::wavelet_sets::WaveletSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMap {
    map: PiecewiseTranslation,
    w1: WaveletSet,
    w2: WaveletSet,
}

/// Verdict of [`SigmaMap::power_in_local_commutant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantVerdict {
    pub power: u32,
    pub holds: bool,
    /// A piece of `W₁` on which `σᵖ` shifts by something outside `2πℤ`.
    pub witness: Option<(IntervalSet, RationalPi)>,
    pub composed: ExtendedPiecewiseMap,
}

impl SigmaMap {
    /// The canonical `σ = τ_{W₂}⁻¹ ∘ τ_{W₁}`.
    pub fn build(w1: &WaveletSet, w2: &WaveletSet) -> Self {
        let map = w1.tau().then(&w2.tau().inverse());
        debug_assert_eq!(map.domain(), w1.set());
        debug_assert_eq!(&map.image(), w2.set());
        SigmaMap {
            map,
            w1: w1.clone(),
            w2: w2.clone(),
        }
    }

    /// Verifies both sets first; fails if either is not a wavelet set.
    pub fn between(w1: &IntervalSet, w2: &IntervalSet) -> Result<Self> {
        Ok(Self::build(
            &WaveletSet::new(w1.clone())?,
            &WaveletSet::new(w2.clone())?,
        ))
    }

    pub fn map(&self) -> &PiecewiseTranslation {
        &self.map
    }

    pub fn w1(&self) -> &WaveletSet {
        &self.w1
    }

    pub fn w2(&self) -> &WaveletSet {
        &self.w2
    }

    /// Range of `n` for which `2ⁿ·S` can meet `W₁`.
    fn dyadic_range(&self, s_min: &RationalPi, s_max: &RationalPi) -> (i64, i64) {
        let w = self.w1.set();
        let w_min = w.min_abs().expect("wavelet sets are nonempty");
        let w_max = w.max_abs().expect("wavelet sets are nonempty");
        // 2ⁿ·s_max ≥ w_min and 2ⁿ·s_min ≤ w_max
        let lo = w_min.dyadic_shell().unwrap() - s_max.dyadic_shell().unwrap() - 1;
        let hi = w_max.dyadic_shell().unwrap() - s_min.dyadic_shell().unwrap() + 1;
        (lo, hi)
    }

    /// Pointwise value of the dyadic extension `σ(x) = 2⁻ⁿσ(2ⁿx)`.
    pub fn extend_at(&self, x: &RationalPi) -> Result<RationalPi> {
        if x.is_zero() {
            return Err(Error::AtZero);
        }
        let ax = x.abs();
        let (lo, hi) = self.dyadic_range(&ax, &ax);
        for n in lo..=hi {
            let y = x.scale_pow2(n);
            if let Some(shift) = self.map.shift_at(&y) {
                return Ok(x + &shift.scale_pow2(-n));
            }
        }
        Err(Error::NoDyadicLanding { x: x.clone() })
    }

    /// The extension restricted to a bounded set away from 0: each fragment carried
    /// into `W₁` by `2ⁿ` is translated by `2⁻ⁿ·shift`.
    pub fn restrict_extended(&self, s: &IntervalSet) -> Result<ExtendedPiecewiseMap> {
        s.require_away_from_zero()?;
        if s.is_empty() {
            return Ok(PiecewiseTranslation::identity(s));
        }
        let (lo, hi) = self.dyadic_range(&s.min_abs().unwrap(), &s.max_abs().unwrap());
        let mut fragments: Vec<(Interval, RationalPi)> = Vec::new();
        for n in lo..=hi {
            for (piece, shift) in self.map.entries() {
                let scaled_shift = shift.scale_pow2(-n);
                for iv in piece.dilate(-n).intersect(s).intervals() {
                    fragments.push((iv.clone(), scaled_shift.clone()));
                }
            }
        }
        PiecewiseTranslation::from_fragments(fragments)
    }

    /// `σᵖ` restricted to `W₁`.
    pub fn compose_power(&self, p: u32) -> Result<ExtendedPiecewiseMap> {
        if p == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let mut current = self.map.clone();
        for _ in 1..p {
            let step = self.restrict_extended(&current.image())?;
            current = current.then(&step);
        }
        Ok(current)
    }

    /// Whether `σᵖ|_{W₁}` is effected by `2π` translations.
    pub fn power_in_local_commutant(&self, p: u32) -> Result<CommutantVerdict> {
        let composed = self.compose_power(p)?;
        let witness = composed
            .first_non_2pi_shift()
            .map(|(piece, shift)| (piece.clone(), shift.clone()));
        Ok(CommutantVerdict {
            power: p,
            holds: witness.is_none(),
            witness,
            composed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(n: i64, d: i64) -> RationalPi {
        RationalPi::new(n, d)
    }

    fn reflected_pair_sigma() -> SigmaMap {
        SigmaMap::build(
            &WaveletSet::from_catalog("paper_w1").unwrap(),
            &WaveletSet::from_catalog("paper_w2").unwrap(),
        )
    }

    #[test]
    fn identity_when_sets_agree() {
        for name in crate::wavelet_sets::CATALOG_NAMES {
            let w = WaveletSet::from_catalog(name).unwrap();
            let s = SigmaMap::build(&w, &w);
            assert!(s.map().is_identity());
            assert_eq!(s.map().entries().len(), 1);
            let c = s.power_in_local_commutant(3).unwrap();
            assert!(c.holds);
            assert!(c.composed.is_identity());
            assert_eq!(s.extend_at(&rp(5, 3)).unwrap(), rp(5, 3));
        }
    }

    #[test]
    fn extension_on_w1_is_sigma() {
        let s = reflected_pair_sigma();
        assert_eq!(s.extend_at(&rp(2, 1)).unwrap(), rp(-2, 1));
        assert_eq!(s.restrict_extended(s.w1().set()).unwrap(), *s.map());
    }

    #[test]
    fn extension_by_dilation() {
        let s = reflected_pair_sigma();
        // 8·(17π/64) = 17π/8, σ(17π/8) = π/8, so σ(17π/64) = π/64.
        assert_eq!(s.extend_at(&rp(17, 64)).unwrap(), rp(1, 64));
        assert!(matches!(s.extend_at(&RationalPi::zero()), Err(Error::AtZero)));
    }

    #[test]
    fn restriction_to_16_a_minus_2pi() {
        let s = reflected_pair_sigma();
        let r = s
            .restrict_extended(&IntervalSet::span(rp(2, 1), rp(17, 8)))
            .unwrap();
        assert_eq!(r.entries().len(), 1);
        assert_eq!(r.entries()[0].1, rp(-4, 1));
    }

    #[test]
    fn restriction_rejects_zero() {
        let s = reflected_pair_sigma();
        let near_zero = IntervalSet::span(RationalPi::zero(), rp(1, 1));
        assert!(matches!(
            s.restrict_extended(&near_zero),
            Err(Error::TouchesZero(_))
        ));
    }

    #[test]
    fn power_zero_rejected() {
        assert!(reflected_pair_sigma().compose_power(0).is_err());
    }
}
