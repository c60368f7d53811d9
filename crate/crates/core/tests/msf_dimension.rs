mod common;

use common::*;
use proptest::prelude::*;
use wavemult::msf_dimension::{is_mra_consistent, symmetric_window};
use wavemult::{
    core_equivalent_exact, dimension_at, dimension_step_function, IntervalSet, RationalPi, WaveletSet,
    CATALOG_NAMES,
};

fn ws(name: &str) -> WaveletSet {
    WaveletSet::from_catalog(name).unwrap()
}

#[test]
fn pointwise_values_match_brute_force() {
    for name in CATALOG_NAMES {
        let w = ws(name);
        for n in (1..128i64).step_by(3) {
            for xi in [rp(n, 128), rp(-n, 128), rp(2 * n - 1, 256), rp(-(2 * n - 1), 256)] {
                assert_eq!(
                    dimension_at(&w, &xi).unwrap(),
                    lattice_count(w.set(), &xi),
                    "{name} at {xi}"
                );
            }
        }
    }
}

#[test]
fn frozen_pointwise_examples() {
    assert_eq!(dimension_at(&ws("shannon"), &rp(1, 2)).unwrap(), 1);
    assert_eq!(dimension_at(&ws("paper_w1"), &rp(1, 2)).unwrap(), 1);
    // Journé at 5π/7: brute-force enumeration gives 0.
    assert_eq!(lattice_count(ws("journe").set(), &rp(5, 7)), 0);
    assert_eq!(dimension_at(&ws("journe"), &rp(5, 7)).unwrap(), 0);
}

#[test]
fn journe_step_function_on_upper_window() {
    let f = dimension_step_function(&ws("journe"), &set("[1/8pi,pi)")).unwrap();
    // frozen from the brute-force lattice count at segment midpoints
    let expected = [
        ((1, 8), (2, 7), 2),
        ((2, 7), (4, 7), 1),
        ((4, 7), (6, 7), 0),
        ((6, 7), (1, 1), 1),
    ];
    assert_eq!(f.segments().len(), expected.len());
    for ((iv, v), ((a, b), (c, d), e)) in f.segments().iter().zip(expected) {
        assert_eq!((iv.lo(), iv.hi(), *v), (&rp(a, b), &rp(c, d), e));
        assert_eq!(lattice_count(ws("journe").set(), &iv.midpoint()), e);
    }
    assert!(f.max_value() >= 2);
}

#[test]
fn mra_detection() {
    for name in ["shannon", "paper_w1", "paper_w2"] {
        assert!(is_mra_consistent(&ws(name)).unwrap(), "{name}");
    }
    assert!(!is_mra_consistent(&ws("journe")).unwrap());
}

#[test]
fn core_equivalence_examples() {
    let q = set("[1/64pi,pi)");
    assert!(
        core_equivalent_exact(&ws("paper_w1"), &ws("paper_w2"), &q)
            .unwrap()
            .equivalent
    );
    for name in CATALOG_NAMES {
        let c = core_equivalent_exact(&ws(name), &ws(name), &symmetric_window(6)).unwrap();
        assert!(c.equivalent);
        assert!(c.differing.is_empty());
    }
    let c = core_equivalent_exact(&ws("shannon"), &ws("journe"), &set("[1/8pi,pi)")).unwrap();
    assert!(!c.equivalent);
    assert_eq!(c.differing, set("[1/8pi,2/7pi),[4/7pi,6/7pi)"));
}

#[test]
fn paper_sets_constant_one() {
    for name in ["paper_w1", "paper_w2"] {
        let f = dimension_step_function(&ws(name), &symmetric_window(6)).unwrap();
        assert!(f.is_constant(1), "{name}: {:?}", f.segments());
    }
}

fn arb_window() -> impl Strategy<Value = IntervalSet> {
    (1i64..200, 1i64..200, any::<bool>()).prop_map(|(a, b, neg)| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a + 1) };
        let s = IntervalSet::span(RationalPi::new(lo, 200), RationalPi::new(hi.min(200), 200));
        if neg {
            s.negate()
        } else {
            s
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// 200 random points per case: the step function agrees with pointwise evaluation.
    #[test]
    fn pointwise_and_step_function_agree(
        which in 0usize..4,
        window in arb_window(),
        probes in prop::collection::vec((0u32..1_000_000, 1u32..1_000_000), 200),
    ) {
        prop_assume!(!window.is_empty());
        let w = ws(CATALOG_NAMES[which]);
        let f = dimension_step_function(&w, &window).unwrap();
        let iv = &window.intervals()[0];
        for (a, b) in probes {
            let xi = point_in(iv, a, b.max(a + 1));
            prop_assert_eq!(f.value_at(&xi), Some(dimension_at(&w, &xi).unwrap()));
        }
    }

    #[test]
    fn enlarging_window_keeps_values(which in 0usize..4, small in arb_window(), extra in arb_window()) {
        prop_assume!(!small.is_empty());
        let w = ws(CATALOG_NAMES[which]);
        let big = small.union(&extra);
        let f_small = dimension_step_function(&w, &small).unwrap();
        let f_big = dimension_step_function(&w, &big).unwrap();
        prop_assert_eq!(f_big.restrict(&small), f_small);
    }
}
