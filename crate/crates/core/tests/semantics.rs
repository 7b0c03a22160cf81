mod common;

use proptest::prelude::*;
use tempora::harness::random_instance;
use tempora::{
    answers_under, entails_fact, is_consistent, parse_instance, parse_query, EngineLimits,
    FactSet, GroundAtom, Interval, Program, RepairKind, RepairView, SemanticsKind, TemporalFact,
};

fn lim() -> EngineLimits {
    EngineLimits::default()
}

fn instance() -> impl Strategy<Value = (Program, FactSet)> {
    (any::<u64>(), 2usize..=4, 2usize..=5).prop_map(|(seed, atoms, rules)| random_instance(seed, atoms, 12, rules))
}

fn probe() -> impl Strategy<Value = TemporalFact> {
    (0usize..4, -2i64..16, 0i64..3).prop_map(|(i, a, len)| {
        TemporalFact::new(GroundAtom::new(&format!("P{i}"), &[]), Interval::closed(a, a + len).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn intersection_then_cqa_then_brave((p, d) in instance(), probes in prop::collection::vec(probe(), 5)) {
        for kind in RepairKind::ALL {
            let view = RepairView::new(kind, &d, &p, &lim()).unwrap();
            for f in &probes {
                let r = view.report(f).unwrap();
                prop_assert!(!r.intersection || r.cqa, "{} {}", kind, f);
                prop_assert!(!r.cqa || r.brave, "{} {}", kind, f);
            }
        }
    }

    #[test]
    fn consistent_data_collapses_semantics((p, d) in instance(), probes in prop::collection::vec(probe(), 5)) {
        prop_assume!(is_consistent(&p, &d, &lim()).unwrap());
        for kind in RepairKind::ALL {
            let view = RepairView::new(kind, &d, &p, &lim()).unwrap();
            for f in probes.iter().chain(d.iter()) {
                let classical = entails_fact(&p, &d, f, &lim()).unwrap();
                for sem in SemanticsKind::ALL {
                    prop_assert_eq!(view.entails(sem, f).unwrap(), classical);
                }
            }
        }
    }

    #[test]
    fn answers_agree_with_entailment((p, d) in instance(), i in 0usize..4) {
        let q = parse_query(&format!("P{i}@r")).unwrap();
        for kind in RepairKind::ALL {
            let view = RepairView::new(kind, &d, &p, &lim()).unwrap();
            for sem in [SemanticsKind::Cqa, SemanticsKind::Intersection] {
                let got = view.answers(sem, &q).unwrap();
                for a in got.iter().flat_map(|a| &a.intervals) {
                    let f = TemporalFact::new(GroundAtom::new(&format!("P{i}"), &[]), *a);
                    prop_assert!(view.entails(sem, &f).unwrap(), "{} {} {}", kind, sem, f);
                }
            }
        }
    }
}

#[test]
fn running_example_directional_failures() {
    let (p, d) = parse_instance(
        "PotFnhtr(x) :- Fever(x), boxminus(0,24] NoFever(x), diamondminus[0,4] GetBlood(x,y).
         FevEp(x) :- Fever(x), diamondminus[0,24] (NoFever(x) until {5} GetBlood(x,y)).
         bot :- Fever(x), NoFever(x).
         boxplus[0,inf) AntiDRisk(x) :- PositiveAntiD(x).",
        "PositiveAntiD(a)@{-90}. GetBlood(a,b)@[24,26]. NoFever(a)@[0,32].
         Fever(a)@[14,18]. Fever(a)@[29,34].",
    )
    .unwrap();
    let f = |s: &str| tempora::parse_fact(s).unwrap();
    let view = |k| RepairView::new(k, &d.facts, &p, &lim()).unwrap();
    let (s, i, pv) = (view(RepairKind::S), view(RepairKind::I), view(RepairKind::P));
    // Fever on [29,34] is an episode only in repairs that keep it whole.
    assert!(!s.entails(SemanticsKind::Brave, &f("FevEp(a)@{29}")).unwrap());
    assert!(i.entails(SemanticsKind::Brave, &f("FevEp(a)@[29,34]")).unwrap());
    // Points past the no-fever period survive every p-repair.
    assert!(pv.entails(SemanticsKind::Intersection, &f("FevEp(a)@[33,34]")).unwrap());
    assert!(!s.entails(SemanticsKind::Cqa, &f("FevEp(a)@[33,34]")).unwrap());
    for v in [&s, &i, &pv] {
        assert!(v.entails(SemanticsKind::Intersection, &f("AntiDRisk(a)@[-90,inf)")).unwrap());
    }
    let q = parse_query("PotFnhtr(?v)@r").unwrap();
    let brave = answers_under(SemanticsKind::Brave, RepairKind::P, &d.facts, &p, &q, &lim()).unwrap();
    assert_eq!(brave.len(), 1);
    assert!(brave[0].intervals.contains(&Interval::point(29)));
}
