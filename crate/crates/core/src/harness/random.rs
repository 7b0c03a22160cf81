use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::facts::{FactSet, GroundAtom, TemporalFact};
use crate::syntax::{Atom, Head, Literal, Program, Range, Rule};
use crate::time::Interval;

/// Most timepoints a random dataset covers, so that subset oracles over
/// its timepoints stay cheap.
pub const MAX_POINTS: usize = 12;

const MAX_RANGE: i64 = 4;

fn prop(i: usize) -> Atom {
    Atom {
        predicate: format!("P{i}").into(),
        args: Vec::new(),
    }
}

fn range(rng: &mut ChaCha8Rng) -> Range {
    let lo = rng.gen_range(0..=MAX_RANGE);
    let hi = rng.gen_range(lo..=MAX_RANGE);
    Range::closed(lo, hi).expect("nonnegative range")
}

/// A body literal over propositions `0..below`.
fn body_literal(rng: &mut ChaCha8Rng, below: usize) -> Literal {
    let atom = |rng: &mut ChaCha8Rng| Box::new(Literal::Atom(prop(rng.gen_range(0..below))));
    match rng.gen_range(0..7) {
        0 => *atom(rng),
        1 => Literal::DiamondMinus(range(rng), atom(rng)),
        2 => Literal::DiamondPlus(range(rng), atom(rng)),
        3 => Literal::BoxMinus(range(rng), atom(rng)),
        4 => Literal::BoxPlus(range(rng), atom(rng)),
        5 => Literal::Until(atom(rng), range(rng), atom(rng)),
        _ => Literal::Since(atom(rng), range(rng), atom(rng)),
    }
}

/// A reproducible propositional instance over `P0..P{n_atoms-1}` with data
/// in `[0, horizon]`.
///
/// Rules only derive `Pi` from propositions with smaller index, so the
/// program is non-recursive; every range lies within `[0,4]`. At least one
/// rule is a ⊥ rule.
pub fn random_instance(seed: u64, n_atoms: usize, horizon: i64, n_rules: usize) -> (Program, FactSet) {
    assert!((1..=5).contains(&n_atoms) && (0..=30).contains(&horizon));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rules = Vec::with_capacity(n_rules.max(1));
    for i in 0..n_rules.max(1) {
        let bot = i == 0 || n_atoms == 1 || rng.gen_bool(0.3);
        if bot {
            let len = rng.gen_range(1..=2);
            let body = (0..len).map(|_| body_literal(&mut rng, n_atoms)).collect();
            rules.push(Rule {
                head: Head::Bot,
                body,
            });
            continue;
        }
        let target = rng.gen_range(1..n_atoms);
        let head = match rng.gen_range(0..4) {
            0 => Literal::BoxPlus(range(&mut rng), Box::new(Literal::Atom(prop(target)))),
            1 => Literal::BoxMinus(range(&mut rng), Box::new(Literal::Atom(prop(target)))),
            _ => Literal::Atom(prop(target)),
        };
        let len = rng.gen_range(1..=2);
        let body = (0..len).map(|_| body_literal(&mut rng, target)).collect();
        rules.push(Rule {
            head: Head::Lit(head),
            body,
        });
    }
    rules.shuffle(&mut rng);

    let mut d = FactSet::new();
    let mut points = 0usize;
    let n_facts = rng.gen_range(1..=4);
    for _ in 0..n_facts {
        if points >= MAX_POINTS {
            break;
        }
        let a = rng.gen_range(0..=horizon);
        let len = rng.gen_range(0..=3).min(horizon - a);
        let len = len.min((MAX_POINTS - points - 1) as i64);
        points += len as usize + 1;
        let atom = GroundAtom::new(&format!("P{}", rng.gen_range(0..n_atoms)), &[]);
        d.insert(TemporalFact::new(atom, Interval::closed(a, a + len).unwrap()));
    }
    (Program::new(rules), d.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{classify_fragment, parse_dataset, parse_program};

    #[test]
    fn deterministic() {
        let a = random_instance(42, 4, 12, 4);
        let b = random_instance(42, 4, 12, 4);
        assert_eq!(a.0.to_string(), b.0.to_string());
        assert_eq!(a.1.to_string(), b.1.to_string());
    }

    #[test]
    fn round_trips_and_stays_small() {
        for seed in 0..100 {
            let (p, d) = random_instance(seed, 4, 12, 5);
            assert_eq!(parse_program(&p.to_string()).unwrap(), p, "seed {seed}");
            assert_eq!(parse_dataset(&d.to_string()).unwrap().facts, d);
            assert!(d.tp_expand().unwrap().len() <= MAX_POINTS);
            assert!(d.is_normal_form());
            let frag = classify_fragment(&p);
            assert!(frag.propositional && frag.non_recursive);
            assert!(p.rules.iter().any(|r| r.is_bot()));
        }
    }
}
