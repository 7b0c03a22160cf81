mod common;

use std::collections::BTreeSet;

use common::points;
use proptest::prelude::*;
use tempora::{
    normalize, pointwise_intersection, strict_subset_order, subset_order, tp_expand, FactSet,
    GroundAtom, Interval, IntervalSet, RepairKind, TemporalFact,
};

fn interval() -> impl Strategy<Value = Interval> {
    (-6i64..10, 0i64..4).prop_map(|(a, len)| Interval::closed(a, a + len).unwrap())
}

fn fact() -> impl Strategy<Value = TemporalFact> {
    (prop::sample::select(vec!["P", "Q"]), interval())
        .prop_map(|(p, iv)| TemporalFact::new(GroundAtom::new(p, &[]), iv))
}

fn facts() -> impl Strategy<Value = FactSet> {
    prop::collection::vec(fact(), 0..6).prop_map(|v| v.into_iter().collect())
}

/// A normal-form `b1` and a `b2` built partly from pieces of `b1`.
fn pair() -> impl Strategy<Value = (FactSet, FactSet)> {
    facts().prop_map(|b| b.normalize()).prop_flat_map(|b1| {
        let items: Vec<TemporalFact> = b1.iter().cloned().collect();
        let n = items.len();
        let pieces = prop::collection::vec((0..n.max(1), 0i64..4, 0i64..4, any::<bool>()), 0..4);
        (Just(b1), pieces, prop::collection::vec(fact(), 0..2)).prop_map(move |(b1, pieces, extra)| {
            let mut b2 = FactSet::new();
            for (j, da, db, whole) in pieces {
                let Some(f) = items.get(j) else { continue };
                let (lo, hi) = f.interval.bounds().unwrap();
                let iv = if whole {
                    f.interval
                } else {
                    let a = (lo + da).min(hi);
                    Interval::closed(a, (hi - db).max(a)).unwrap()
                };
                b2.insert(TemporalFact::new(f.atom.clone(), iv));
            }
            if extra.len() == 1 {
                b2.insert(extra[0].clone());
            }
            (b1, b2)
        })
    })
}

fn set_points(s: &IntervalSet) -> BTreeSet<i64> {
    s.points().collect()
}

fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec(interval(), 0..4).prop_map(|v| {
        let mut s = IntervalSet::new();
        for iv in v {
            s.insert(iv);
        }
        s
    })
}

proptest! {
    #[test]
    fn interval_set_ops_are_pointwise(a in interval_set(), b in interval_set()) {
        let (pa, pb) = (set_points(&a), set_points(&b));
        prop_assert_eq!(set_points(&a.union(&b)), &pa | &pb);
        prop_assert_eq!(set_points(&a.intersection(&b)), &pa & &pb);
        let comp = a.complement();
        for t in -10..15 {
            prop_assert_eq!(comp.contains(t), !pa.contains(&t));
        }
        prop_assert_eq!(a.is_subset(&b), pa.is_subset(&pb));
        // Stored intervals are pairwise separated by a gap.
        for w in a.intervals().windows(2) {
            prop_assert!(w[0].bounds().unwrap().1 + 1 < w[1].bounds().unwrap().0);
        }
    }

    #[test]
    fn normalize_is_idempotent_and_point_preserving(b in facts()) {
        let n = normalize(&b);
        prop_assert!(n.is_normal_form());
        prop_assert_eq!(normalize(&n), n.clone());
        prop_assert_eq!(points(&n), points(&b));
        prop_assert_eq!(tp_expand(&n).unwrap(), tp_expand(&b).unwrap());
        prop_assert!(n.point_equivalent(&b));
    }

    #[test]
    fn strong_inclusion_is_set_inclusion((b1, b2) in pair()) {
        prop_assert_eq!(subset_order(RepairKind::S, &b2, &b1), b2.is_subset(&b1));
    }

    #[test]
    fn interval_inclusion_does_not_grow((b1, b2) in pair()) {
        if subset_order(RepairKind::I, &b2, &b1) {
            prop_assert!(b2.len() <= b1.len());
        }
    }

    #[test]
    fn inclusion_chain((b1, b2) in pair()) {
        for (b1, b2) in [(&b1, &b2), (&b2, &b1)] {
            if subset_order(RepairKind::S, b2, b1) {
                prop_assert!(subset_order(RepairKind::I, b2, b1));
            }
            if subset_order(RepairKind::I, b2, b1) {
                prop_assert!(subset_order(RepairKind::P, b2, b1));
            }
            for kind in RepairKind::ALL {
                let strict_p = subset_order(RepairKind::P, b2, b1) && !subset_order(RepairKind::P, b1, b2);
                prop_assert_eq!(
                    strict_subset_order(kind, b2, b1),
                    subset_order(kind, b2, b1) && strict_p
                );
            }
        }
    }

    #[test]
    fn pointwise_inclusion_is_point_inclusion(b1 in facts(), b2 in facts()) {
        prop_assert_eq!(
            subset_order(RepairKind::P, &b2, &b1),
            points(&b2).is_subset(&points(&b1))
        );
    }

    #[test]
    fn pointwise_intersection_laws(a in facts(), b in facts(), c in facts()) {
        prop_assert!(pointwise_intersection(std::slice::from_ref(&a)).point_equivalent(&a));
        let abc = pointwise_intersection(&[a.clone(), b.clone(), c.clone()]);
        prop_assert_eq!(&abc, &pointwise_intersection(&[c.clone(), a.clone(), b.clone()]));
        let want: BTreeSet<_> = points(&a)
            .intersection(&points(&b))
            .filter(|x| points(&c).contains(*x))
            .cloned()
            .collect();
        prop_assert_eq!(points(&abc), want);
    }
}
