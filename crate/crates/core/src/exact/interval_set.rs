use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::RationalPi;

/// A nonempty half-open interval `[lo, hi)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: RationalPi,
    hi: RationalPi,
}

impl Interval {
    pub fn new(lo: RationalPi, hi: RationalPi) -> Result<Self> {
        if lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::EmptyInterval {
                lo: Box::new(lo),
                hi: Box::new(hi),
            })
        }
    }

    /// Builds `[lo, hi)` when nonempty.
    pub fn try_new(lo: RationalPi, hi: RationalPi) -> Option<Self> {
        (lo < hi).then_some(Interval { lo, hi })
    }

    pub fn lo(&self) -> &RationalPi {
        &self.lo
    }

    pub fn hi(&self) -> &RationalPi {
        &self.hi
    }

    pub fn length(&self) -> RationalPi {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &RationalPi) -> bool {
        &self.lo <= x && x < &self.hi
    }

    pub fn midpoint(&self) -> RationalPi {
        (&self.lo + &self.hi).scale_pow2(-1)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        Interval::try_new(lo, hi)
    }

    pub fn translate(&self, t: &RationalPi) -> Interval {
        Interval {
            lo: &self.lo + t,
            hi: &self.hi + t,
        }
    }

    pub fn dilate(&self, n: i64) -> Interval {
        Interval {
            lo: self.lo.scale_pow2(n),
            hi: self.hi.scale_pow2(n),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite disjoint union of half-open intervals with exact `q·π` endpoints.
///
/// The representation is canonical: pieces are sorted, pairwise disjoint and never
/// adjacent, so two sets are equal as point sets iff they are equal as values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    pieces: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { pieces: Vec::new() }
    }

    /// Canonicalizes an arbitrary list of intervals (overlapping, adjacent, unsorted).
    pub fn normalize(mut raw: Vec<Interval>) -> Self {
        raw.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut pieces: Vec<Interval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match pieces.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => pieces.push(iv),
            }
        }
        IntervalSet { pieces }
    }

    pub fn from_interval(iv: Interval) -> Self {
        IntervalSet { pieces: vec![iv] }
    }

    /// `[lo, hi)` as a set; empty when `lo >= hi`.
    pub fn span(lo: RationalPi, hi: RationalPi) -> Self {
        Interval::try_new(lo, hi)
            .map(Self::from_interval)
            .unwrap_or_default()
    }

    /// `[-π, π)`.
    pub fn base_interval() -> Self {
        Self::span(-RationalPi::pi(), RationalPi::pi())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.pieces.iter()
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let raw = self.pieces.iter().chain(&other.pieces).cloned().collect();
        IntervalSet::normalize(raw)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.pieces.len() && j < other.pieces.len() {
            let a = &self.pieces[i];
            let b = &other.pieces[j];
            if let Some(iv) = a.intersect(b) {
                out.push(iv);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // Pieces of the inputs are separated by gaps, so the output is already canonical.
        IntervalSet { pieces: out }
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let mut j = 0;
        for a in &self.pieces {
            let mut cursor = a.lo.clone();
            while j < other.pieces.len() && other.pieces[j].hi <= cursor {
                j += 1;
            }
            let mut k = j;
            while k < other.pieces.len() && other.pieces[k].lo < a.hi {
                let b = &other.pieces[k];
                if let Some(iv) = Interval::try_new(cursor.clone(), b.lo.clone()) {
                    out.push(iv);
                }
                if b.hi > cursor {
                    cursor = b.hi.clone();
                }
                if cursor >= a.hi {
                    break;
                }
                k += 1;
            }
            if let Some(iv) = Interval::try_new(cursor, a.hi.clone()) {
                out.push(iv);
            }
        }
        IntervalSet::normalize(out)
    }

    pub fn symmetric_difference(&self, other: &IntervalSet) -> IntervalSet {
        self.difference(other).union(&other.difference(self))
    }

    /// Pointwise `x ↦ 2ⁿx`.
    pub fn dilate(&self, n: i64) -> IntervalSet {
        IntervalSet {
            pieces: self.pieces.iter().map(|iv| iv.dilate(n)).collect(),
        }
    }

    /// Pointwise `x ↦ x + t`.
    pub fn translate(&self, t: &RationalPi) -> IntervalSet {
        IntervalSet {
            pieces: self.pieces.iter().map(|iv| iv.translate(t)).collect(),
        }
    }

    /// Reflection `x ↦ -x`, re-expressed with half-open pieces (differs from the
    /// literal reflection only at endpoints).
    pub fn negate(&self) -> IntervalSet {
        IntervalSet {
            pieces: self
                .pieces
                .iter()
                .rev()
                .map(|iv| Interval {
                    lo: -&iv.hi,
                    hi: -&iv.lo,
                })
                .collect(),
        }
    }

    pub fn measure(&self) -> RationalPi {
        self.pieces.iter().map(Interval::length).sum()
    }

    pub fn contains(&self, x: &RationalPi) -> bool {
        // last piece with lo <= x
        let idx = self.pieces.partition_point(|iv| &iv.lo <= x);
        idx > 0 && self.pieces[idx - 1].contains(x)
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn inf(&self) -> Option<&RationalPi> {
        self.pieces.first().map(|iv| &iv.lo)
    }

    pub fn sup(&self) -> Option<&RationalPi> {
        self.pieces.last().map(|iv| &iv.hi)
    }

    /// `max |x|` over the closure.
    pub fn max_abs(&self) -> Option<RationalPi> {
        let lo = self.inf()?.abs();
        let hi = self.sup()?.abs();
        Some(lo.max(hi))
    }

    /// Distance from 0 to the set (0 when 0 lies in the closure).
    pub fn min_abs(&self) -> Option<RationalPi> {
        self.pieces
            .iter()
            .map(|iv| {
                if iv.lo.is_positive() {
                    iv.lo.clone()
                } else if iv.hi.is_negative() {
                    iv.hi.abs()
                } else {
                    RationalPi::zero()
                }
            })
            .min()
    }

    /// True iff 0 lies in the closure.
    pub fn touches_zero(&self) -> bool {
        self.min_abs().is_some_and(|d| d.is_zero())
    }

    /// Fails with [`Error::TouchesZero`] unless the closure avoids 0.
    pub fn require_away_from_zero(&self) -> Result<()> {
        if self.touches_zero() {
            Err(Error::TouchesZero(self.clone()))
        } else {
            Ok(())
        }
    }

    pub fn positive_part(&self) -> IntervalSet {
        self.intersect(&IntervalSet::span(
            RationalPi::zero(),
            self.sup().cloned().unwrap_or_else(RationalPi::zero),
        ))
    }

    pub fn negative_part(&self) -> IntervalSet {
        self.intersect(&IntervalSet::span(
            self.inf().cloned().unwrap_or_else(RationalPi::zero),
            RationalPi::zero(),
        ))
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        IntervalSet::normalize(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.pieces.iter()
    }
}

/// Canonical text form: `[a,b),[c,d)`; the empty set prints as an empty string.
impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for IntervalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::expr::parse_set(s)
    }
}
