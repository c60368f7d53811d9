//! Exact dimension functions of MSF wavelets.
//!
//! With `ψ̂ = χ_W` the dimension function is a lattice count,
//! `D(ξ) = #{(j, k) : j ≥ 1, k ∈ ℤ, 2ʲ(ξ + 2πk) ∈ W}`, and on any window bounded
//! away from 0 it is a finite sum of indicators of the sets
//! `S_{j,k} = (2⁻ʲW − 2πk) ∩ window`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, RationalPi};
use crate::wavelet_sets::WaveletSet;

/// A nonnegative integer-valued step function on a window.
///
/// Segments are sorted, cover the window exactly, and touching segments always
/// carry different values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction {
    window: IntervalSet,
    segments: Vec<(Interval, u32)>,
}

impl StepFunction {
    pub fn constant(window: &IntervalSet, value: u32) -> Self {
        StepFunction {
            window: window.clone(),
            segments: window.iter().map(|iv| (iv.clone(), value)).collect(),
        }
    }

    fn from_raw_segments(window: IntervalSet, raw: Vec<(Interval, u32)>) -> Self {
        let mut segments: Vec<(Interval, u32)> = Vec::with_capacity(raw.len());
        for (iv, v) in raw {
            match segments.last_mut() {
                Some((last, lv)) if *lv == v && last.hi() == iv.lo() => {
                    *last = Interval::new(last.lo().clone(), iv.hi().clone()).expect("nonempty");
                }
                _ => segments.push((iv, v)),
            }
        }
        StepFunction { window, segments }
    }

    pub fn window(&self) -> &IntervalSet {
        &self.window
    }

    pub fn segments(&self) -> &[(Interval, u32)] {
        &self.segments
    }

    /// Value at `x`, or `None` outside the window.
    pub fn value_at(&self, x: &RationalPi) -> Option<u32> {
        let idx = self.segments.partition_point(|(iv, _)| iv.lo() <= x);
        if idx == 0 {
            return None;
        }
        let (iv, v) = &self.segments[idx - 1];
        iv.contains(x).then_some(*v)
    }

    pub fn max_value(&self) -> u32 {
        self.segments.iter().map(|(_, v)| *v).max().unwrap_or(0)
    }

    pub fn is_constant(&self, value: u32) -> bool {
        self.segments.iter().all(|(_, v)| *v == value)
    }

    /// The points where the value equals `value`.
    pub fn level_set(&self, value: u32) -> IntervalSet {
        self.segments
            .iter()
            .filter(|(_, v)| *v == value)
            .map(|(iv, _)| iv.clone())
            .collect()
    }

    pub fn restrict(&self, window: &IntervalSet) -> StepFunction {
        let sub = self.window.intersect(window);
        let mut raw = Vec::new();
        for (iv, v) in &self.segments {
            for piece in IntervalSet::from_interval(iv.clone()).intersect(&sub).intervals() {
                raw.push((piece.clone(), *v));
            }
        }
        StepFunction::from_raw_segments(sub, raw)
    }

    /// Points where the two functions differ, including points in only one window.
    pub fn differing_regions(&self, other: &StepFunction) -> IntervalSet {
        let mut out: Vec<Interval> = Vec::new();
        for (a, va) in &self.segments {
            for (b, vb) in &other.segments {
                if va != vb {
                    out.extend(a.intersect(b));
                }
            }
        }
        IntervalSet::normalize(out).union(&self.window.symmetric_difference(&other.window))
    }

    /// At least `n` grid points, spread evenly over the segments and interior to
    /// each, so no point sits on a breakpoint.
    pub fn midpoint_grid(&self, n: usize) -> Vec<RationalPi> {
        if self.segments.is_empty() {
            return Vec::new();
        }
        let per = n.div_ceil(self.segments.len()).max(1);
        let mut out = Vec::with_capacity(per * self.segments.len());
        for (iv, _) in &self.segments {
            out.extend(uniform_midpoints_in(iv, per));
        }
        out
    }
}

/// Midpoints of `n` equal cells of `iv`.
pub fn uniform_midpoints_in(iv: &Interval, n: usize) -> Vec<RationalPi> {
    let len = iv.length();
    let cells = BigInt::from(2 * n);
    (0..n)
        .map(|i| {
            let offset = RationalPi::from_coefficient(
                len.coefficient() * num_rational::BigRational::new(BigInt::from(2 * i + 1), cells.clone()),
            );
            iv.lo() + &offset
        })
        .collect()
}

/// At least `n` midpoints spread over the window in proportion to piece count.
pub fn uniform_midpoints(window: &IntervalSet, n: usize) -> Vec<RationalPi> {
    if window.is_empty() {
        return Vec::new();
    }
    let per = n.div_ceil(window.len()).max(1);
    window
        .iter()
        .flat_map(|iv| uniform_midpoints_in(iv, per))
        .collect()
}

/// `[π/2ᴺ, π) ∪ [-π, -π/2ᴺ)`.
pub fn symmetric_window(depth: u32) -> IntervalSet {
    let pi = RationalPi::pi();
    let eps = pi.scale_pow2(-(depth as i64));
    IntervalSet::span(eps.clone(), pi.clone()).union(&IntervalSet::span(-pi, -eps))
}

fn period_bound(r: &RationalPi) -> i64 {
    // |2πk| ≤ R/2 + π  ⇒  |k| ≤ R/(4π) + 1/2
    (r.coefficient() / BigInt::from(4))
        .floor()
        .to_integer()
        .to_i64()
        .expect("bounded set")
        + 1
}

/// `D(ξ)` by exhaustive lattice enumeration.
pub fn dimension_at(w: &WaveletSet, xi: &RationalPi) -> Result<u32> {
    if xi.is_zero() {
        return Err(Error::AtZero);
    }
    if !IntervalSet::base_interval().contains(xi) {
        return Err(Error::OutsideBaseInterval(xi.clone()));
    }
    let r = w.set().max_abs().expect("nonempty");
    let kb = period_bound(&r);
    let mut count = 0;
    for k in -kb..=kb {
        let y = xi + &RationalPi::integer(2 * k);
        if y.is_zero() {
            continue;
        }
        let mut j = 1;
        loop {
            let p = y.scale_pow2(j);
            if p.abs() > r {
                break;
            }
            if w.set().contains(&p) {
                count += 1;
            }
            j += 1;
        }
    }
    Ok(count)
}

fn check_window(query: &IntervalSet) -> Result<()> {
    if !query.is_subset(&IntervalSet::base_interval()) {
        return Err(Error::WindowOutsideBase(query.clone()));
    }
    query.require_away_from_zero()
}

/// The nonempty sets `S_{j,k} = (2⁻ʲW − 2πk) ∩ query`, as flat intervals.
fn lattice_sets(w: &WaveletSet, query: &IntervalSet) -> Vec<Interval> {
    let r = w.set().max_abs().expect("nonempty");
    let r_shell = r.dyadic_shell().expect("nonzero");
    let kb = period_bound(&r);
    let mut out = Vec::new();
    for k in -kb..=kb {
        let shift = RationalPi::integer(2 * k);
        let moved = query.translate(&shift);
        let Some(y_min) = moved.min_abs() else { continue };
        // 2ʲ·y_min ≤ R is needed for any hit
        let j_max = r_shell - y_min.dyadic_shell().expect("window avoids 0") + 1;
        for j in 1..=j_max {
            let hits = w.set().dilate(-j).intersect(&moved).translate(&-&shift);
            out.extend(hits.intervals().iter().cloned());
        }
    }
    out
}

/// `D` on `query` as an exact step function.
pub fn dimension_step_function(w: &WaveletSet, query: &IntervalSet) -> Result<StepFunction> {
    check_window(query)?;
    let hits = lattice_sets(w, query);

    let mut deltas: BTreeMap<RationalPi, i64> = BTreeMap::new();
    for iv in &hits {
        *deltas.entry(iv.lo().clone()).or_default() += 1;
        *deltas.entry(iv.hi().clone()).or_default() -= 1;
    }
    for iv in query {
        deltas.entry(iv.lo().clone()).or_default();
        deltas.entry(iv.hi().clone()).or_default();
    }

    let points: Vec<(RationalPi, i64)> = deltas.into_iter().collect();
    let mut raw = Vec::new();
    let mut count: i64 = 0;
    for pair in points.windows(2) {
        let (lo, d) = &pair[0];
        count += d;
        if query.contains(lo) {
            let iv = Interval::new(lo.clone(), pair[1].0.clone()).expect("sorted breakpoints");
            raw.push((iv, u32::try_from(count).expect("coverage count is nonnegative")));
        }
    }
    Ok(StepFunction::from_raw_segments(query.clone(), raw))
}

/// Partial sums of `∫_{-π}^{π} D` by scale, and their exact limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionIntegral {
    /// `partial_sums[J-1] = Σ_{j=1..J} Σ_k |(2⁻ʲW − 2πk) ∩ [-π,π)|`.
    pub partial_sums: Vec<RationalPi>,
    /// `Σ_{j≥1} 2⁻ʲ|W| = |W|`.
    pub limit: RationalPi,
}

impl DimensionIntegral {
    /// `limit − partial_sums[J-1]`, which is exactly `2⁻ᴶ·limit`.
    pub fn tail(&self, depth: usize) -> RationalPi {
        &self.limit - &self.partial_sums[depth - 1]
    }
}

pub fn dimension_integral(w: &WaveletSet, depth: usize) -> DimensionIntegral {
    let base = IntervalSet::base_interval();
    let mut partial_sums = Vec::with_capacity(depth);
    let mut acc = RationalPi::zero();
    for j in 1..=depth as i64 {
        let scaled = w.set().dilate(-j);
        let k_lo = scaled.inf().unwrap().nearest_period();
        let k_hi = scaled.sup().unwrap().nearest_period();
        let mut k = k_lo;
        while k <= k_hi {
            let shift = RationalPi::integer(-(&k * BigInt::from(2)));
            acc += &scaled.translate(&shift).intersect(&base).measure();
            k += 1;
        }
        partial_sums.push(acc.clone());
    }
    DimensionIntegral {
        partial_sums,
        limit: w.set().measure(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreEquivalence {
    pub equivalent: bool,
    pub differing: IntervalSet,
    pub a: StepFunction,
    pub b: StepFunction,
}

/// Compares the exact dimension functions of two MSF wavelets on `query`.
pub fn core_equivalent_exact(a: &WaveletSet, b: &WaveletSet, query: &IntervalSet) -> Result<CoreEquivalence> {
    let fa = dimension_step_function(a, query)?;
    let fb = dimension_step_function(b, query)?;
    let differing = fa.differing_regions(&fb);
    Ok(CoreEquivalence {
        equivalent: fa == fb,
        differing,
        a: fa,
        b: fb,
    })
}

/// `D ≡ 1` on `[π/2¹⁰, π)` and its mirror, as for wavelets coming from an MRA.
pub fn is_mra_consistent(w: &WaveletSet) -> Result<bool> {
    Ok(dimension_step_function(w, &symmetric_window(10))?.is_constant(1))
}
