//! Injective maps that translate each piece of a finite partition by a constant.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, RationalPi};

/// A piecewise translation `x ↦ x + shift(x)` on a finite union of intervals.
///
/// Entries are grouped by shift (one [`IntervalSet`] per distinct shift) and ordered by
/// the left end of their piece, which makes the representation canonical. Pieces are
/// disjoint and so are their translated images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseTranslation {
    entries: Vec<(IntervalSet, RationalPi)>,
    domain: IntervalSet,
}

/// Same representation, used for maps whose shifts are dyadically scaled and so
/// need not lie in `2πℤ`.
pub type ExtendedPiecewiseMap = PiecewiseTranslation;

impl PiecewiseTranslation {
    /// Builds a map from `(fragment, shift)` pairs, merging fragments that share a
    /// shift. Fails if two fragments overlap or two images overlap.
    pub fn from_fragments<I>(fragments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Interval, RationalPi)>,
    {
        let mut groups: BTreeMap<RationalPi, Vec<Interval>> = BTreeMap::new();
        let mut piece_total = RationalPi::zero();
        for (iv, shift) in fragments {
            piece_total += &iv.length();
            groups.entry(shift).or_default().push(iv);
        }
        let mut entries: Vec<(IntervalSet, RationalPi)> = groups
            .into_iter()
            .map(|(shift, ivs)| (IntervalSet::normalize(ivs), shift))
            .collect();
        entries.sort_by(|a, b| a.0.inf().cmp(&b.0.inf()));

        let domain = entries
            .iter()
            .fold(IntervalSet::empty(), |acc, (piece, _)| acc.union(piece));
        if domain.measure() != piece_total {
            return Err(Error::InvalidArgument(
                "piecewise translation has overlapping pieces".into(),
            ));
        }
        let map = PiecewiseTranslation { entries, domain };
        if map.image().measure() != piece_total {
            return Err(Error::InvalidArgument(
                "piecewise translation is not injective".into(),
            ));
        }
        Ok(map)
    }

    pub fn identity(domain: &IntervalSet) -> Self {
        let entries = if domain.is_empty() {
            Vec::new()
        } else {
            vec![(domain.clone(), RationalPi::zero())]
        };
        PiecewiseTranslation {
            entries,
            domain: domain.clone(),
        }
    }

    /// `(piece, shift)` groups, one per distinct shift.
    pub fn entries(&self) -> &[(IntervalSet, RationalPi)] {
        &self.entries
    }

    pub fn domain(&self) -> &IntervalSet {
        &self.domain
    }

    pub fn image(&self) -> IntervalSet {
        let raw = self
            .entries
            .iter()
            .flat_map(|(piece, shift)| piece.iter().map(move |iv| iv.translate(shift)))
            .collect();
        IntervalSet::normalize(raw)
    }

    /// Every maximal interval of the domain with its shift, ordered by position.
    pub fn fragments(&self) -> Vec<(Interval, RationalPi)> {
        let mut out: Vec<(Interval, RationalPi)> = self
            .entries
            .iter()
            .flat_map(|(piece, shift)| piece.iter().map(move |iv| (iv.clone(), shift.clone())))
            .collect();
        out.sort_by(|a, b| a.0.lo().cmp(b.0.lo()));
        out
    }

    pub fn shift_at(&self, x: &RationalPi) -> Option<&RationalPi> {
        self.entries
            .iter()
            .find(|(piece, _)| piece.contains(x))
            .map(|(_, shift)| shift)
    }

    pub fn apply(&self, x: &RationalPi) -> Option<RationalPi> {
        self.shift_at(x).map(|s| x + s)
    }

    pub fn inverse(&self) -> Self {
        let fragments = self
            .entries
            .iter()
            .flat_map(|(piece, shift)| piece.iter().map(move |iv| (iv.translate(shift), -shift)));
        Self::from_fragments(fragments).expect("inverse of an injective map is injective")
    }

    pub fn restrict(&self, set: &IntervalSet) -> Self {
        let fragments = self.entries.iter().flat_map(|(piece, shift)| {
            piece
                .intersect(set)
                .intervals()
                .to_vec()
                .into_iter()
                .map(move |iv| (iv, shift.clone()))
        });
        Self::from_fragments(fragments).expect("restriction of an injective map is injective")
    }

    /// `next ∘ self`, defined where `self` lands in `next`'s domain.
    pub fn then(&self, next: &PiecewiseTranslation) -> Self {
        let mut fragments = Vec::new();
        for (piece, s1) in &self.entries {
            let moved = piece.translate(s1);
            for (next_piece, s2) in &next.entries {
                let total = s1 + s2;
                for iv in moved.intersect(next_piece).intervals() {
                    fragments.push((iv.translate(&-s1), total.clone()));
                }
            }
        }
        Self::from_fragments(fragments).expect("composition of injective maps is injective")
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|(_, s)| s.is_zero())
    }

    /// True iff every shift is an integer multiple of 2π.
    pub fn is_effected_by_2pi_translations(&self) -> bool {
        self.first_non_2pi_shift().is_none()
    }

    pub fn first_non_2pi_shift(&self) -> Option<(&IntervalSet, &RationalPi)> {
        self.entries
            .iter()
            .find(|(_, s)| !s.is_multiple_of_two_pi())
            .map(|(p, s)| (p, s))
    }

    pub fn measure(&self) -> RationalPi {
        self.domain.measure()
    }
}

impl fmt::Debug for PiecewiseTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (piece, shift) in &self.entries {
            m.entry(piece, &format_args!("{}", shift.to_spaced_string()));
        }
        m.finish()
    }
}
