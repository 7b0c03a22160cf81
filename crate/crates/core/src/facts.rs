//! Ground atoms, temporal facts, fact sets and the three inclusion orders.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::time::{Interval, IntervalSet};

pub type Symbol = Arc<str>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundAtom {
    pub predicate: Symbol,
    pub args: Vec<Symbol>,
}

impl GroundAtom {
    pub fn new(predicate: &str, args: &[&str]) -> Self {
        GroundAtom {
            predicate: Arc::from(predicate),
            args: args.iter().map(|a| Arc::from(*a)).collect(),
        }
    }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "({})", self.args.join(","))?;
        }
        Ok(())
    }
}

/// `atom@interval`. Ordering sorts by predicate, args, then endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalFact {
    pub atom: GroundAtom,
    pub interval: Interval,
}

impl TemporalFact {
    pub fn new(atom: GroundAtom, interval: Interval) -> Self {
        TemporalFact { atom, interval }
    }
}

impl fmt::Display for TemporalFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.atom, self.interval)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepairKind {
    S,
    I,
    P,
}

impl RepairKind {
    pub const ALL: [RepairKind; 3] = [RepairKind::S, RepairKind::I, RepairKind::P];

    pub fn as_str(self) -> &'static str {
        match self {
            RepairKind::S => "s",
            RepairKind::I => "i",
            RepairKind::P => "p",
        }
    }
}

impl fmt::Display for RepairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RepairKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "s" | "S" => Ok(RepairKind::S),
            "i" | "I" => Ok(RepairKind::I),
            "p" | "P" => Ok(RepairKind::P),
            other => Err(format!("unknown repair kind `{other}`")),
        }
    }
}

/// A finite set of temporal facts, iterated in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactSet {
    facts: BTreeSet<TemporalFact>,
}

impl FactSet {
    pub fn new() -> Self {
        FactSet::default()
    }

    pub fn insert(&mut self, fact: TemporalFact) -> bool {
        self.facts.insert(fact)
    }

    pub fn remove(&mut self, fact: &TemporalFact) -> bool {
        self.facts.remove(fact)
    }

    pub fn contains(&self, fact: &TemporalFact) -> bool {
        self.facts.contains(fact)
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, TemporalFact> {
        self.facts.iter()
    }

    pub fn is_subset(&self, other: &FactSet) -> bool {
        self.facts.is_subset(&other.facts)
    }

    pub fn union(&self, other: &FactSet) -> FactSet {
        self.facts.union(&other.facts).cloned().collect()
    }

    pub fn difference(&self, other: &FactSet) -> FactSet {
        self.facts.difference(&other.facts).cloned().collect()
    }

    pub fn is_bounded(&self) -> bool {
        self.facts.iter().all(|f| f.interval.is_bounded())
    }

    /// Every constant mentioned in an atom argument.
    pub fn constants(&self) -> BTreeSet<Symbol> {
        self.facts
            .iter()
            .flat_map(|f| f.atom.args.iter().cloned())
            .collect()
    }

    /// Per-atom union of all intervals.
    pub fn coverage(&self) -> BTreeMap<GroundAtom, IntervalSet> {
        let mut out: BTreeMap<GroundAtom, Vec<Interval>> = BTreeMap::new();
        for f in &self.facts {
            out.entry(f.atom.clone()).or_default().push(f.interval);
        }
        out.into_iter()
            .map(|(a, ivs)| (a, ivs.into_iter().collect()))
            .collect()
    }

    /// One fact per maximal interval of each atom's set.
    pub fn from_coverage(cov: &BTreeMap<GroundAtom, IntervalSet>) -> FactSet {
        cov.iter()
            .flat_map(|(a, set)| {
                set.iter()
                    .map(move |iv| TemporalFact::new(a.clone(), *iv))
            })
            .collect()
    }

    pub fn normalize(&self) -> FactSet {
        FactSet::from_coverage(&self.coverage())
    }

    pub fn is_normal_form(&self) -> bool {
        let mut prev: Option<&TemporalFact> = None;
        let mut group: Vec<&TemporalFact> = Vec::new();
        for f in &self.facts {
            if prev.map_or(true, |p| p.atom != f.atom) {
                group.clear();
            }
            if group.iter().any(|g| g.interval.mergeable(&f.interval)) {
                return false;
            }
            group.push(f);
            prev = Some(f);
        }
        true
    }

    /// True iff every timepoint of `fact` is covered by facts on its atom.
    pub fn models_fact(&self, fact: &TemporalFact) -> bool {
        let set: IntervalSet = self
            .facts
            .iter()
            .filter(|f| f.atom == fact.atom)
            .map(|f| f.interval)
            .collect();
        set.covers(&fact.interval)
    }

    /// The punctual expansion: one `α@{t}` per covered pair.
    pub fn tp_expand(&self) -> Result<FactSet> {
        if !self.is_bounded() {
            return Err(Error::UnboundedDataset);
        }
        let mut out = FactSet::new();
        for (atom, set) in self.coverage() {
            for t in set.points() {
                out.insert(TemporalFact::new(atom.clone(), Interval::point(t)));
            }
        }
        Ok(out)
    }

    /// Same atoms hold at the same timepoints.
    pub fn point_equivalent(&self, other: &FactSet) -> bool {
        self.coverage() == other.coverage()
    }
}

impl FromIterator<TemporalFact> for FactSet {
    fn from_iter<I: IntoIterator<Item = TemporalFact>>(iter: I) -> Self {
        FactSet {
            facts: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for FactSet {
    type Item = TemporalFact;
    type IntoIter = std::collections::btree_set::IntoIter<TemporalFact>;

    fn into_iter(self) -> Self::IntoIter {
        self.facts.into_iter()
    }
}

impl<'a> IntoIterator for &'a FactSet {
    type Item = &'a TemporalFact;
    type IntoIter = std::collections::btree_set::Iter<'a, TemporalFact>;

    fn into_iter(self) -> Self::IntoIter {
        self.facts.iter()
    }
}

impl Extend<TemporalFact> for FactSet {
    fn extend<I: IntoIterator<Item = TemporalFact>>(&mut self, iter: I) {
        self.facts.extend(iter)
    }
}

/// Dataset text: one `fact.` per line.
impl fmt::Display for FactSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fact in &self.facts {
            writeln!(f, "{fact}.")?;
        }
        Ok(())
    }
}

pub fn normalize(b: &FactSet) -> FactSet {
    b.normalize()
}

pub fn models_fact(b: &FactSet, f: &TemporalFact) -> bool {
    b.models_fact(f)
}

pub fn tp_expand(b: &FactSet) -> Result<FactSet> {
    b.tp_expand()
}

fn pointwise_included(b2: &FactSet, b1: &FactSet) -> bool {
    let cov = b1.coverage();
    b2.iter()
        .all(|f| cov.get(&f.atom).is_some_and(|s| s.covers(&f.interval)))
}

/// `b2 ⊑kind b1`.
pub fn subset_order(kind: RepairKind, b2: &FactSet, b1: &FactSet) -> bool {
    if !pointwise_included(b2, b1) {
        return false;
    }
    if kind == RepairKind::P {
        return true;
    }
    let at_most_one_inside = b1.iter().all(|outer| {
        b2.iter()
            .filter(|inner| {
                inner.atom == outer.atom && outer.interval.contains_interval(&inner.interval)
            })
            .take(2)
            .count()
            <= 1
    });
    if !at_most_one_inside {
        return false;
    }
    kind == RepairKind::I || b2.is_subset(b1)
}

/// `b2 ⊏kind b1`: for p, `⊑p` one way but not the other; for i and s,
/// `⊑kind` together with `⊏p`.
pub fn strict_subset_order(kind: RepairKind, b2: &FactSet, b1: &FactSet) -> bool {
    let strict_p = pointwise_included(b2, b1) && !pointwise_included(b1, b2);
    match kind {
        RepairKind::P => strict_p,
        _ => strict_p && subset_order(kind, b2, b1),
    }
}

/// Facts whose points are held by every member; the empty family yields
/// the empty set.
pub fn pointwise_intersection(family: &[FactSet]) -> FactSet {
    let Some((first, rest)) = family.split_first() else {
        return FactSet::new();
    };
    let mut acc = first.coverage();
    for b in rest {
        let cov = b.coverage();
        acc = acc
            .into_iter()
            .filter_map(|(atom, set)| {
                let other = cov.get(&atom)?;
                let meet = set.intersection(other);
                (!meet.is_empty()).then_some((atom, meet))
            })
            .collect();
    }
    FactSet::from_coverage(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fact(p: &str, a: i64, b: i64) -> TemporalFact {
        TemporalFact::new(GroundAtom::new(p, &[]), Interval::closed(a, b).unwrap())
    }

    fn fs(items: &[(&str, i64, i64)]) -> FactSet {
        items.iter().map(|&(p, a, b)| fact(p, a, b)).collect()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(fs(&[("P", 0, 4), ("P", 3, 7)]).normalize(), fs(&[("P", 0, 7)]));
        assert_eq!(fs(&[("P", 0, 2), ("P", 3, 5)]).normalize(), fs(&[("P", 0, 5)]));
        let distinct = fs(&[("P", 1, 2), ("Q", 1, 2)]);
        assert_eq!(distinct.normalize(), distinct);
    }

    #[test]
    fn normal_form_detects_nesting() {
        assert!(!fs(&[("P", 0, 4), ("P", 1, 2)]).is_normal_form());
        assert!(!fs(&[("P", 0, 10), ("P", 2, 3), ("P", 11, 12)]).is_normal_form());
        assert!(fs(&[("P", 0, 4), ("P", 6, 7), ("Q", 5, 5)]).is_normal_form());
    }

    #[test]
    fn models_fact_examples() {
        let b = fs(&[("P", 0, 4), ("P", 3, 7)]);
        assert!(b.models_fact(&fact("P", 2, 6)));
        assert!(!fs(&[("P", 0, 4), ("P", 6, 7)]).models_fact(&fact("P", 2, 6)));
        let ray = FactSet::from_iter([TemporalFact::new(
            GroundAtom::new("P", &[]),
            Interval::new(0.into(), crate::time::TimePoint::PosInf).unwrap(),
        )]);
        assert!(ray.models_fact(&fact("P", 1000, 1000)));
    }

    #[test]
    fn subset_order_examples() {
        let b = fs(&[("P", 0, 4), ("P", 3, 7)]);
        let split = fs(&[("P", 0, 1), ("P", 2, 5), ("P", 6, 7)]);
        assert!(subset_order(RepairKind::I, &split, &b));
        let nested = fs(&[("P", 0, 4), ("P", 1, 2)]);
        assert!(!subset_order(RepairKind::I, &nested, &nested));
        assert!(!subset_order(RepairKind::S, &nested, &nested));
        assert!(subset_order(RepairKind::P, &nested, &nested));
        let d = fs(&[("P", 0, 4), ("Q", 3, 3)]);
        assert!(subset_order(RepairKind::S, &fs(&[("P", 0, 4)]), &d));
    }

    #[test]
    fn strictness() {
        let d = fs(&[("P", 0, 4)]);
        assert!(strict_subset_order(RepairKind::I, &fs(&[("P", 1, 4)]), &d));
        assert!(!strict_subset_order(RepairKind::S, &fs(&[("P", 1, 4)]), &d));
        assert!(!strict_subset_order(RepairKind::P, &d, &d));
    }

    #[test]
    fn intersection_examples() {
        let r = pointwise_intersection(&[fs(&[("P", 0, 5)]), fs(&[("P", 3, 9)])]);
        assert_eq!(r, fs(&[("P", 3, 5)]));
        let r = pointwise_intersection(&[fs(&[("P", 0, 5), ("Q", 1, 1)]), fs(&[("P", 0, 5)])]);
        assert_eq!(r, fs(&[("P", 0, 5)]));
    }

    #[test]
    fn intersection_matches_pointwise_oracle() {
        let a = fs(&[("P", 0, 2), ("P", 5, 9)]);
        let b = fs(&[("P", 1, 6)]);
        let expected: FactSet = (0..=9)
            .filter(|&t| a.models_fact(&fact("P", t, t)) && b.models_fact(&fact("P", t, t)))
            .map(|t| fact("P", t, t))
            .collect();
        let got = pointwise_intersection(&[a, b]);
        assert_eq!(got, expected.normalize());
        assert_eq!(got, fs(&[("P", 1, 2), ("P", 5, 6)]));
    }

    #[test]
    fn tp_expand_examples() {
        assert_eq!(
            fs(&[("P", 0, 2)]).tp_expand().unwrap(),
            fs(&[("P", 0, 0), ("P", 1, 1), ("P", 2, 2)])
        );
        assert_eq!(fs(&[("P", 5, 5)]).tp_expand().unwrap(), fs(&[("P", 5, 5)]));
        let ray = FactSet::from_iter([TemporalFact::new(
            GroundAtom::new("P", &[]),
            Interval::new(0.into(), crate::time::TimePoint::PosInf).unwrap(),
        )]);
        assert_eq!(ray.tp_expand(), Err(Error::UnboundedDataset));
    }
}
