//! Brute-force oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use tempora::{
    EngineLimits, FactSet, GroundAtom, Interval, Program, Reasoner, TemporalFact,
};

/// Consistency of every subset of `items`, indexed by bitmask.
pub fn consistency_table(p: &Program, d: &FactSet, items: &[TemporalFact]) -> Vec<bool> {
    assert!(items.len() <= 16, "too many items for subset enumeration");
    let r = Reasoner::for_dataset(p, d, EngineLimits::default());
    (0u32..1 << items.len())
        .map(|m| {
            let s: FactSet = subset(items, m);
            r.is_consistent(&s).expect("consistency check")
        })
        .collect()
}

pub fn subset(items: &[TemporalFact], mask: u32) -> FactSet {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, f)| f.clone())
        .collect()
}

/// Masks of maximal consistent subsets.
pub fn maximal_consistent(table: &[bool], n: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|&m| table[m as usize] && (0..n).all(|i| m >> i & 1 == 1 || !table[(m | 1 << i) as usize]))
        .collect()
}

/// Masks of minimal inconsistent subsets.
pub fn minimal_inconsistent(table: &[bool], n: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|&m| !table[m as usize] && (0..n).all(|i| m >> i & 1 == 0 || table[(m & !(1 << i)) as usize]))
        .collect()
}

fn sorted(mut v: Vec<FactSet>) -> Vec<FactSet> {
    v.sort();
    v.dedup();
    v
}

/// Maximal consistent and minimal inconsistent subsets of the facts of `d`.
pub fn brute_s(p: &Program, d: &FactSet) -> (Vec<FactSet>, Vec<FactSet>) {
    let items: Vec<TemporalFact> = d.iter().cloned().collect();
    let table = consistency_table(p, d, &items);
    let n = items.len();
    (
        sorted(maximal_consistent(&table, n).into_iter().map(|m| subset(&items, m)).collect()),
        sorted(minimal_inconsistent(&table, n).into_iter().map(|m| subset(&items, m)).collect()),
    )
}

/// The same over the timepoints of `d`, each result normalized.
pub fn brute_p(p: &Program, d: &FactSet) -> (Vec<FactSet>, Vec<FactSet>) {
    let items: Vec<TemporalFact> = d.tp_expand().unwrap().into_iter().collect();
    let table = consistency_table(p, d, &items);
    let n = items.len();
    (
        sorted(
            maximal_consistent(&table, n)
                .into_iter()
                .map(|m| subset(&items, m).normalize())
                .collect(),
        ),
        sorted(
            minimal_inconsistent(&table, n)
                .into_iter()
                .map(|m| subset(&items, m).normalize())
                .collect(),
        ),
    )
}

/// All `(atom, t)` pairs of a bounded fact set.
pub fn points(b: &FactSet) -> BTreeSet<(GroundAtom, i64)> {
    b.iter()
        .flat_map(|f| f.interval.points().map(move |t| (f.atom.clone(), t)))
        .collect()
}

pub fn punctual(atom: &GroundAtom, t: i64) -> TemporalFact {
    TemporalFact::new(atom.clone(), Interval::point(t))
}

/// `d` with every point covered by some member of `family` removed.
pub fn minus_points(d: &FactSet, family: &[FactSet]) -> FactSet {
    let removed: BTreeSet<(GroundAtom, i64)> = family.iter().flat_map(points).collect();
    points(d)
        .into_iter()
        .filter(|x| !removed.contains(x))
        .map(|(a, t)| punctual(&a, t))
        .collect::<FactSet>()
        .normalize()
}
