//! Inconsistency-tolerant query answering: brave, CQA and intersection
//! semantics over s-, i- and p-repairs, plus classical entailment.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::facts::{pointwise_intersection, FactSet, RepairKind, Symbol, TemporalFact};
use crate::reasoner::{answer_sets, answers_from_sets, answers_in, Answer, EngineLimits, Reasoner};
use crate::repairs::{RepairContext, DEFAULT_CAP};
use crate::syntax::{Program, Query};
use crate::time::{Interval, IntervalSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsKind {
    Classical,
    Brave,
    Cqa,
    Intersection,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 4] = [
        SemanticsKind::Classical,
        SemanticsKind::Brave,
        SemanticsKind::Cqa,
        SemanticsKind::Intersection,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsKind::Classical => "classical",
            SemanticsKind::Brave => "brave",
            SemanticsKind::Cqa => "cqa",
            SemanticsKind::Intersection => "intersection",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticsKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemanticsReport {
    pub brave: bool,
    pub cqa: bool,
    pub intersection: bool,
}

/// Semantics over the repairs of one kind, enumerated on first use.
pub struct RepairView {
    kind: RepairKind,
    ctx: RepairContext,
    repairs: OnceCell<Vec<FactSet>>,
    intersection: OnceCell<FactSet>,
}

impl RepairView {
    /// Fails with `NoRepairs` when even the empty dataset is inconsistent.
    pub fn new(kind: RepairKind, d: &FactSet, p: &Program, limits: &EngineLimits) -> Result<Self> {
        let ctx = RepairContext::new(p, d, *limits)?;
        if !ctx.reasoner().is_consistent(&FactSet::new())? {
            return Err(Error::NoRepairs);
        }
        Ok(RepairView {
            kind,
            ctx,
            repairs: OnceCell::new(),
            intersection: OnceCell::new(),
        })
    }

    fn reasoner(&self) -> &Reasoner {
        self.ctx.reasoner()
    }

    pub fn repairs(&self) -> Result<&[FactSet]> {
        if let Some(r) = self.repairs.get() {
            return Ok(r);
        }
        let r = self.ctx.enumerate_repairs(self.kind, DEFAULT_CAP)?;
        Ok(self.repairs.get_or_init(|| r))
    }

    pub fn intersection(&self) -> Result<&FactSet> {
        if let Some(i) = self.intersection.get() {
            return Ok(i);
        }
        let i = pointwise_intersection(self.repairs()?);
        Ok(self.intersection.get_or_init(|| i))
    }

    pub fn report(&self, f: &TemporalFact) -> Result<SemanticsReport> {
        Ok(SemanticsReport {
            brave: self.entails(SemanticsKind::Brave, f)?,
            cqa: self.entails(SemanticsKind::Cqa, f)?,
            intersection: self.entails(SemanticsKind::Intersection, f)?,
        })
    }

    pub fn entails(&self, sem: SemanticsKind, f: &TemporalFact) -> Result<bool> {
        match sem {
            SemanticsKind::Classical => self.reasoner().entails(self.ctx.dataset(), f),
            SemanticsKind::Brave => {
                for r in self.repairs()? {
                    if self.reasoner().entails(r, f)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            SemanticsKind::Cqa => {
                for r in self.repairs()? {
                    if !self.reasoner().entails(r, f)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            SemanticsKind::Intersection => self.reasoner().entails(self.intersection()?, f),
        }
    }

    pub fn answers(&self, sem: SemanticsKind, q: &Query) -> Result<Vec<Answer>> {
        match sem {
            SemanticsKind::Classical => self.reasoner().certain_answers(self.ctx.dataset(), q),
            SemanticsKind::Brave => {
                // Each interval must be witnessed by a single repair.
                let mut per: BTreeMap<Vec<Symbol>, Vec<Interval>> = BTreeMap::new();
                for r in self.repairs()? {
                    let m = self.reasoner().materialize(r)?;
                    for (tuple, set) in answer_sets(&m, q) {
                        per.entry(tuple).or_default().extend(set.iter().copied());
                    }
                }
                Ok(per
                    .into_iter()
                    .map(|(tuple, ivs)| Answer {
                        tuple,
                        intervals: maximal(ivs),
                    })
                    .collect())
            }
            SemanticsKind::Cqa => {
                let mut acc: Option<BTreeMap<Vec<Symbol>, IntervalSet>> = None;
                for r in self.repairs()? {
                    let m = self.reasoner().materialize(r)?;
                    let sets = answer_sets(&m, q);
                    acc = Some(match acc {
                        None => sets,
                        Some(prev) => prev
                            .into_iter()
                            .filter_map(|(t, s)| {
                                let both = s.intersection(sets.get(&t)?);
                                (!both.is_empty()).then_some((t, both))
                            })
                            .collect(),
                    });
                }
                Ok(answers_from_sets(acc.unwrap_or_default()))
            }
            SemanticsKind::Intersection => {
                let m = self.reasoner().materialize(self.intersection()?)?;
                Ok(answers_in(&m, q))
            }
        }
    }
}

/// Intervals not contained in another one of the list, sorted.
fn maximal(mut ivs: Vec<Interval>) -> Vec<Interval> {
    ivs.sort();
    ivs.dedup();
    ivs.iter()
        .filter(|a| !ivs.iter().any(|b| b != *a && b.contains_interval(a)))
        .copied()
        .collect()
}

pub fn entails_under(
    sem: SemanticsKind,
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    f: &TemporalFact,
    limits: &EngineLimits,
) -> Result<bool> {
    if sem == SemanticsKind::Classical {
        return Reasoner::for_dataset(p, d, *limits).entails(d, f);
    }
    RepairView::new(kind, d, p, limits)?.entails(sem, f)
}

pub fn answers_under(
    sem: SemanticsKind,
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    q: &Query,
    limits: &EngineLimits,
) -> Result<Vec<Answer>> {
    if sem == SemanticsKind::Classical {
        return Reasoner::for_dataset(p, d, *limits).certain_answers(d, q);
    }
    RepairView::new(kind, d, p, limits)?.answers(sem, q)
}

pub fn semantics_report(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    f: &TemporalFact,
    limits: &EngineLimits,
) -> Result<SemanticsReport> {
    RepairView::new(kind, d, p, limits)?.report(f)
}
