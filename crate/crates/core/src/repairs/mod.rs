//! Recognition, greedy generation and enumeration of s-, i- and p-repairs
//! and conflicts of bounded normal-form datasets.
//!
//! All three kinds reduce to a monotone consistency test over a finite
//! universe: facts of the dataset for `s`, its timepoints for `p`, and for
//! `i` one subinterval (or nothing) per dataset fact.

mod bits;
mod search;

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use bits::Bits;
use search::{dualize, grow};

use crate::error::{Error, Result};
use crate::facts::{pointwise_intersection, subset_order, FactSet, RepairKind, TemporalFact};
use crate::reasoner::{EngineLimits, Reasoner};
use crate::syntax::Program;
use crate::time::Interval;


pub const DEFAULT_CAP: usize = 100_000;

/// Per dataset fact, an optional closed subinterval.
type Choice = Vec<Option<(i64, i64)>>;

/// A point-level minimal inconsistent set as `(fact index, timepoint)`.
type PointSet = Vec<(usize, i64)>;

/// Shared state for repair computations over one program and dataset.
pub struct RepairContext {
    d: FactSet,
    facts: Vec<TemporalFact>,
    bounds: Vec<(i64, i64)>,
    ids: Vec<Option<usize>>,
    reasoner: Reasoner,
    /// First point element of each fact in the point universe.
    offset: Vec<usize>,
    n_points: usize,
    cache_s: RefCell<HashMap<Bits, bool>>,
    cache_p: RefCell<HashMap<Bits, bool>>,
    cache_i: RefCell<HashMap<Choice, bool>>,
}

impl RepairContext {
    /// Fails unless `d` is bounded and in normal form.
    pub fn new(p: &Program, d: &FactSet, limits: EngineLimits) -> Result<Self> {
        if !d.is_bounded() {
            return Err(Error::UnboundedDataset);
        }
        if !d.is_normal_form() {
            return Err(Error::NotNormalForm);
        }
        let reasoner = Reasoner::for_dataset(p, d, limits);
        let facts: Vec<TemporalFact> = d.iter().cloned().collect();
        let bounds: Vec<(i64, i64)> = facts
            .iter()
            .map(|f| f.interval.bounds().expect("bounded"))
            .collect();
        let ids = facts.iter().map(|f| reasoner.atom_id(&f.atom)).collect();
        let mut offset = Vec::with_capacity(facts.len());
        let mut n_points = 0usize;
        for &(lo, hi) in &bounds {
            offset.push(n_points);
            n_points += (hi - lo) as usize + 1;
        }
        Ok(RepairContext {
            d: d.clone(),
            facts,
            bounds,
            ids,
            reasoner,
            offset,
            n_points,
            cache_s: RefCell::default(),
            cache_p: RefCell::default(),
            cache_i: RefCell::default(),
        })
    }

    pub fn dataset(&self) -> &FactSet {
        &self.d
    }

    pub fn reasoner(&self) -> &Reasoner {
        &self.reasoner
    }

    fn consistent_parts(&self, parts: impl Iterator<Item = (usize, Interval)>) -> Result<bool> {
        self.reasoner
            .consistent_ids(parts.filter_map(|(j, iv)| self.ids[j].map(|id| (id, iv))))
    }

    fn consistent_s(&self, set: &Bits) -> Result<bool> {
        if let Some(&c) = self.cache_s.borrow().get(set) {
            return Ok(c);
        }
        let c = self.consistent_parts(set.iter().map(|j| (j, self.facts[j].interval)))?;
        self.cache_s.borrow_mut().insert(set.clone(), c);
        Ok(c)
    }

    fn point(&self, e: usize) -> (usize, i64) {
        let j = self.offset.partition_point(|&o| o <= e) - 1;
        (j, self.bounds[j].0 + (e - self.offset[j]) as i64)
    }

    fn point_index(&self, j: usize, t: i64) -> usize {
        self.offset[j] + (t - self.bounds[j].0) as usize
    }

    fn consistent_p(&self, set: &Bits) -> Result<bool> {
        if let Some(&c) = self.cache_p.borrow().get(set) {
            return Ok(c);
        }
        let c = self.consistent_parts(set.iter().map(|e| {
            let (j, t) = self.point(e);
            (j, Interval::point(t))
        }))?;
        self.cache_p.borrow_mut().insert(set.clone(), c);
        Ok(c)
    }

    fn consistent_i(&self, v: &Choice) -> Result<bool> {
        if let Some(&c) = self.cache_i.borrow().get(v) {
            return Ok(c);
        }
        let c = self.consistent_parts(v.iter().enumerate().filter_map(|(j, x)| {
            x.map(|(a, b)| (j, Interval::closed(a, b).expect("nonempty choice")))
        }))?;
        self.cache_i.borrow_mut().insert(v.clone(), c);
        Ok(c)
    }

    fn n(&self) -> usize {
        self.facts.len()
    }

    fn s_to_facts(&self, set: &Bits) -> FactSet {
        set.iter().map(|j| self.facts[j].clone()).collect()
    }

    fn p_to_facts(&self, set: &Bits) -> FactSet {
        set.iter()
            .map(|e| {
                let (j, t) = self.point(e);
                TemporalFact::new(self.facts[j].atom.clone(), Interval::point(t))
            })
            .collect::<FactSet>()
            .normalize()
    }

    fn i_to_facts(&self, v: &Choice) -> FactSet {
        v.iter()
            .enumerate()
            .filter_map(|(j, x)| {
                x.map(|(a, b)| {
                    TemporalFact::new(
                        self.facts[j].atom.clone(),
                        Interval::closed(a, b).expect("nonempty choice"),
                    )
                })
            })
            .collect()
    }

    /// Dataset facts of `r` as a set of indices, if `r ⊆ d`.
    fn s_of(&self, r: &FactSet) -> Option<Bits> {
        let mut b = Bits::empty(self.n());
        for f in r {
            let j = self.facts.binary_search(f).ok()?;
            b.insert(j);
        }
        Some(b)
    }

    /// Points of `d` covered by `r`, if `r ⊑p d`.
    fn p_of(&self, r: &FactSet) -> Option<Bits> {
        if !subset_order(RepairKind::P, r, &self.d) {
            return None;
        }
        let mut b = Bits::empty(self.n_points);
        let cov = r.coverage();
        for (j, f) in self.facts.iter().enumerate() {
            if let Some(set) = cov.get(&f.atom) {
                let (lo, hi) = self.bounds[j];
                for t in lo..=hi {
                    if set.contains(t) {
                        b.insert(self.point_index(j, t));
                    }
                }
            }
        }
        Some(b)
    }

    /// `r` as one subinterval per dataset fact, if `r ⊑i d`.
    fn i_of(&self, r: &FactSet) -> Option<Choice> {
        let mut v: Choice = vec![None; self.n()];
        for f in r {
            let j = self.facts.iter().position(|g| {
                g.atom == f.atom && g.interval.contains_interval(&f.interval)
            })?;
            if v[j].is_some() {
                return None;
            }
            v[j] = Some(f.interval.bounds()?);
        }
        Some(v)
    }

    /// Dataset fact indices: those named in `seed` first, then the rest in
    /// canonical order.
    fn order(&self, seed: Option<&[TemporalFact]>) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut seen = vec![false; self.n()];
        for f in seed.unwrap_or(&[]) {
            if let Ok(j) = self.facts.binary_search(f) {
                if !seen[j] {
                    seen[j] = true;
                    out.push(j);
                }
            }
        }
        out.extend((0..self.n()).filter(|&j| !seen[j]));
        out
    }

    fn point_order(&self, seed: Option<&[TemporalFact]>) -> Vec<usize> {
        self.order(seed)
            .into_iter()
            .flat_map(|j| {
                let (lo, hi) = self.bounds[j];
                (lo..=hi).map(move |t| (j, t))
            })
            .map(|(j, t)| self.point_index(j, t))
            .collect()
    }

    pub fn is_consistent(&self) -> Result<bool> {
        self.consistent_s(&Bits::full(self.n()))
    }

    pub fn recognize_repair(&self, kind: RepairKind, r: &FactSet) -> Result<bool> {
        if !r.is_normal_form() {
            return Ok(false);
        }
        match kind {
            RepairKind::S => {
                let Some(set) = self.s_of(r) else { return Ok(false) };
                if !self.consistent_s(&set)? {
                    return Ok(false);
                }
                for j in (0..self.n()).filter(|&j| !set.contains(j)) {
                    if self.consistent_s(&set.with(j))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            RepairKind::P => {
                let Some(set) = self.p_of(r) else { return Ok(false) };
                if !self.consistent_p(&set)? {
                    return Ok(false);
                }
                for e in (0..self.n_points).filter(|&e| !set.contains(e)) {
                    if self.consistent_p(&set.with(e))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            RepairKind::I => {
                let Some(v) = self.i_of(r) else { return Ok(false) };
                if !self.consistent_i(&v)? {
                    return Ok(false);
                }
                for cover in self.upper_covers(&v) {
                    if self.consistent_i(&cover)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Single-step enlargements within `d`: one endpoint moved outward by
    /// one, or one punctual fact added where `v` has nothing.
    fn upper_covers(&self, v: &Choice) -> Vec<Choice> {
        let mut out = Vec::new();
        for j in 0..self.n() {
            let (lo, hi) = self.bounds[j];
            match v[j] {
                Some((a, b)) => {
                    if a > lo {
                        let mut w = v.clone();
                        w[j] = Some((a - 1, b));
                        out.push(w);
                    }
                    if b < hi {
                        let mut w = v.clone();
                        w[j] = Some((a, b + 1));
                        out.push(w);
                    }
                }
                None => {
                    for t in lo..=hi {
                        let mut w = v.clone();
                        w[j] = Some((t, t));
                        out.push(w);
                    }
                }
            }
        }
        out
    }

    /// Single-step reductions: one endpoint moved inward by one, or a
    /// punctual fact dropped.
    fn lower_covers(v: &Choice) -> Vec<Choice> {
        let mut out = Vec::new();
        for (j, x) in v.iter().enumerate() {
            let Some((a, b)) = *x else { continue };
            if a == b {
                let mut w = v.clone();
                w[j] = None;
                out.push(w);
            } else {
                let mut w = v.clone();
                w[j] = Some((a + 1, b));
                out.push(w);
                let mut w = v.clone();
                w[j] = Some((a, b - 1));
                out.push(w);
            }
        }
        out
    }

    pub fn recognize_conflict(&self, kind: RepairKind, c: &FactSet) -> Result<bool> {
        if !c.is_normal_form() {
            return Ok(false);
        }
        match kind {
            RepairKind::S => {
                let Some(set) = self.s_of(c) else { return Ok(false) };
                if self.consistent_s(&set)? {
                    return Ok(false);
                }
                for j in set.iter() {
                    if !self.consistent_s(&set.without(j))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            RepairKind::P => {
                let Some(set) = self.p_of(c) else { return Ok(false) };
                if self.consistent_p(&set)? {
                    return Ok(false);
                }
                for e in set.iter() {
                    if !self.consistent_p(&set.without(e))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            RepairKind::I => {
                let Some(v) = self.i_of(c) else { return Ok(false) };
                if self.consistent_i(&v)? {
                    return Ok(false);
                }
                for lower in Self::lower_covers(&v) {
                    if !self.consistent_i(&lower)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Greedy repair following `seed` (then canonical order).
    pub fn generate_repair(&self, kind: RepairKind, seed: Option<&[TemporalFact]>) -> Result<FactSet> {
        match kind {
            RepairKind::S => {
                let mut test = |b: &Bits| self.consistent_s(b);
                let r = grow(&Bits::empty(self.n()), &self.order(seed), &mut test)?;
                Ok(self.s_to_facts(&r))
            }
            RepairKind::P => {
                let mut test = |b: &Bits| self.consistent_p(b);
                let r = grow(&Bits::empty(self.n_points), &self.point_order(seed), &mut test)?;
                Ok(self.p_to_facts(&r))
            }
            RepairKind::I => Ok(self.i_to_facts(&self.greedy_i_repair(seed)?)),
        }
    }

    /// Whole fact if possible; otherwise the earliest consistent start,
    /// extended as far right as consistency allows.
    fn greedy_i_repair(&self, seed: Option<&[TemporalFact]>) -> Result<Choice> {
        let mut v: Choice = vec![None; self.n()];
        for j in self.order(seed) {
            let (lo, hi) = self.bounds[j];
            v[j] = Some((lo, hi));
            if self.consistent_i(&v)? {
                continue;
            }
            v[j] = None;
            let mut start = None;
            for t in lo..=hi {
                v[j] = Some((t, t));
                if self.consistent_i(&v)? {
                    start = Some(t);
                    break;
                }
            }
            let Some(t1) = start else {
                v[j] = None;
                continue;
            };
            // Largest t2 with [t1,t2] consistent; consistency is monotone.
            let (mut ok, mut bad) = (t1, hi + 1);
            while bad - ok > 1 {
                let mid = ok + (bad - ok) / 2;
                v[j] = Some((t1, mid));
                if self.consistent_i(&v)? {
                    ok = mid;
                } else {
                    bad = mid;
                }
            }
            v[j] = Some((t1, ok));
        }
        Ok(v)
    }

    /// Greedy conflict following `seed`; `None` when `d` is consistent.
    pub fn generate_conflict(
        &self,
        kind: RepairKind,
        seed: Option<&[TemporalFact]>,
    ) -> Result<Option<FactSet>> {
        if self.is_consistent()? {
            return Ok(None);
        }
        Ok(Some(match kind {
            RepairKind::S => {
                let test = |b: &Bits| self.consistent_s(b);
                let mut full = Bits::full(self.n());
                for j in self.order(seed) {
                    if !test(&full.without(j))? {
                        full.remove(j);
                    }
                }
                self.s_to_facts(&full)
            }
            RepairKind::P => {
                let test = |b: &Bits| self.consistent_p(b);
                let mut full = Bits::full(self.n_points);
                for e in self.point_order(seed) {
                    if !test(&full.without(e))? {
                        full.remove(e);
                    }
                }
                self.p_to_facts(&full)
            }
            RepairKind::I => self.i_to_facts(&self.greedy_i_conflict(seed)?),
        }))
    }

    /// Drops facts that are not needed; otherwise binary-searches the
    /// latest inconsistent start, then the earliest inconsistent end.
    fn greedy_i_conflict(&self, seed: Option<&[TemporalFact]>) -> Result<Choice> {
        let mut v: Choice = self.bounds.iter().map(|&b| Some(b)).collect();
        for j in self.order(seed) {
            let (a, b) = v[j].expect("present");
            v[j] = None;
            if !self.consistent_i(&v)? {
                continue;
            }
            let (mut bad, mut ok) = (a, b + 1);
            while ok - bad > 1 {
                let mid = bad + (ok - bad) / 2;
                v[j] = Some((mid, b));
                if self.consistent_i(&v)? {
                    ok = mid;
                } else {
                    bad = mid;
                }
            }
            let t1 = bad;
            let (mut ok, mut bad) = (t1 - 1, b);
            while bad - ok > 1 {
                let mid = ok + (bad - ok) / 2;
                v[j] = Some((t1, mid));
                if self.consistent_i(&v)? {
                    ok = mid;
                } else {
                    bad = mid;
                }
            }
            v[j] = Some((t1, bad));
        }
        Ok(v)
    }

    fn dual(&self, kind: RepairKind, cap: usize) -> Result<(Vec<Bits>, Vec<Bits>)> {
        let d = match kind {
            RepairKind::S => dualize(self.n(), &mut |b: &Bits| self.consistent_s(b), cap)?,
            _ => dualize(self.n_points, &mut |b: &Bits| self.consistent_p(b), cap)?,
        };
        Ok((d.consistent, d.inconsistent))
    }

    fn facts_in(&self, kind: RepairKind, b: &Bits) -> FactSet {
        match kind {
            RepairKind::S => self.s_to_facts(b),
            _ => self.p_to_facts(b),
        }
    }

    pub fn enumerate_repairs(&self, kind: RepairKind, cap: usize) -> Result<Vec<FactSet>> {
        if self.is_consistent()? {
            return Ok(vec![self.d.clone()]);
        }
        match kind {
            RepairKind::S | RepairKind::P => Ok(sorted(
                self.dual(kind, cap)?
                    .0
                    .iter()
                    .map(|b| self.facts_in(kind, b)),
            )),
            RepairKind::I => {
                let (_, mus) = self.dual(RepairKind::P, cap)?;
                let mus: Vec<PointSet> = mus.iter().map(|b| self.points_of(b)).collect();
                let found = self.i_repairs(&mus, cap)?;
                let out = sorted(found.iter().map(|v| self.i_to_facts(v)));
                debug_assert!(out
                    .iter()
                    .all(|r| self.recognize_repair(RepairKind::I, r).unwrap_or(false)));
                Ok(out)
            }
        }
    }

    pub fn enumerate_conflicts(&self, kind: RepairKind, cap: usize) -> Result<Vec<FactSet>> {
        if self.is_consistent()? {
            return Ok(Vec::new());
        }
        match kind {
            RepairKind::S | RepairKind::P => Ok(sorted(
                self.dual(kind, cap)?
                    .1
                    .iter()
                    .map(|b| self.facts_in(kind, b)),
            )),
            RepairKind::I => {
                let (_, mus) = self.dual(RepairKind::P, cap)?;
                let hulls: BTreeSet<Choice> = mus.iter().map(|b| self.hull(b)).collect();
                let minimal: Vec<&Choice> = hulls
                    .iter()
                    .filter(|h| !hulls.iter().any(|g| g != *h && choice_le(g, h)))
                    .collect();
                let out = sorted(minimal.into_iter().map(|v| self.i_to_facts(v)));
                debug_assert!(out
                    .iter()
                    .all(|c| self.recognize_conflict(RepairKind::I, c).unwrap_or(false)));
                Ok(out)
            }
        }
    }

    fn points_of(&self, b: &Bits) -> PointSet {
        b.iter().map(|e| self.point(e)).collect()
    }

    /// Per fact, the smallest interval spanning the set's points there.
    fn hull(&self, b: &Bits) -> Choice {
        let mut v: Choice = vec![None; self.n()];
        for (j, t) in self.points_of(b) {
            v[j] = Some(match v[j] {
                None => (t, t),
                Some((a, c)) => (a.min(t), c.max(t)),
            });
        }
        v
    }

    /// All i-repairs, given every point-level minimal inconsistent set.
    ///
    /// A choice is consistent iff it contains none of `mus`. In an i-repair
    /// a start above the fact's start sits just after some conflict point,
    /// an end below the fact's end sits just before one, and a fact is left
    /// out only if all its points occur in conflicts; the search ranges over
    /// exactly those candidates.
    fn i_repairs(&self, mus: &[PointSet], cap: usize) -> Result<Vec<Choice>> {
        let n = self.n();
        let mut in_mus: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); n];
        for m in mus {
            for &(j, t) in m {
                in_mus[j].insert(t);
            }
        }
        let mut cands: Vec<Vec<Option<(i64, i64)>>> = Vec::with_capacity(n);
        for j in 0..n {
            let (lo, hi) = self.bounds[j];
            let pts = &in_mus[j];
            let starts: BTreeSet<i64> = std::iter::once(lo)
                .chain(pts.iter().map(|t| t + 1).filter(|&t| t <= hi))
                .collect();
            let ends: BTreeSet<i64> = std::iter::once(hi)
                .chain(pts.iter().map(|t| t - 1).filter(|&t| t >= lo))
                .collect();
            let mut c: Vec<Option<(i64, i64)>> = Vec::new();
            for &a in &starts {
                for &b in ends.range(a..) {
                    c.push(Some((a, b)));
                }
            }
            if pts.len() as i64 == hi - lo + 1 {
                c.push(None);
            }
            cands.push(c);
        }

        // Decide facts with conflict points first; a conflict is checked as
        // soon as its last fact is decided.
        let mut order: Vec<usize> = (0..n).filter(|&j| !in_mus[j].is_empty()).collect();
        order.extend((0..n).filter(|&j| in_mus[j].is_empty()));
        let mut pos = vec![0usize; n];
        for (k, &j) in order.iter().enumerate() {
            pos[j] = k;
        }
        let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (mi, m) in mus.iter().enumerate() {
            if let Some(last) = m.iter().map(|&(j, _)| pos[j]).max() {
                closing[last].push(mi);
            }
        }
        let mut by_point: HashMap<(usize, i64), Vec<usize>> = HashMap::new();
        for (mi, m) in mus.iter().enumerate() {
            for &p in m {
                by_point.entry(p).or_default().push(mi);
            }
        }

        let search = ISearch {
            mus,
            cands: &cands,
            order: &order,
            closing: &closing,
            by_point: &by_point,
            bounds: &self.bounds,
            cap,
        };
        let mut out = Vec::new();
        let mut v: Choice = vec![None; n];
        search.go(0, &mut v, &mut out)?;
        Ok(out)
    }

    pub fn repairs_intersection(&self, kind: RepairKind, cap: usize) -> Result<FactSet> {
        let reps = self.enumerate_repairs(kind, cap)?;
        if reps.is_empty() {
            return Err(Error::NoRepairs);
        }
        Ok(pointwise_intersection(&reps))
    }
}

fn contains_mus(v: &Choice, m: &PointSet) -> bool {
    m.iter()
        .all(|&(j, t)| v[j].is_some_and(|(a, b)| a <= t && t <= b))
}

/// Componentwise containment.
fn choice_le(a: &Choice, b: &Choice) -> bool {
    a.iter().zip(b).all(|(x, y)| match (x, y) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((a1, b1)), Some((a2, b2))) => a2 <= a1 && b1 <= b2,
    })
}

struct ISearch<'a> {
    mus: &'a [PointSet],
    cands: &'a [Vec<Option<(i64, i64)>>],
    order: &'a [usize],
    closing: &'a [Vec<usize>],
    by_point: &'a HashMap<(usize, i64), Vec<usize>>,
    bounds: &'a [(i64, i64)],
    cap: usize,
}

impl ISearch<'_> {
    fn go(&self, k: usize, v: &mut Choice, out: &mut Vec<Choice>) -> Result<()> {
        let Some(&j) = self.order.get(k) else {
            if self.maximal(v) {
                out.push(v.clone());
                if out.len() > self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
            }
            return Ok(());
        };
        for c in &self.cands[j] {
            v[j] = *c;
            if self.closing[k].iter().all(|&mi| !contains_mus(v, &self.mus[mi])) {
                self.go(k + 1, v, out)?;
            }
        }
        v[j] = None;
        Ok(())
    }

    /// Adding point `(j,t)` to `v` completes some conflict.
    fn blocked(&self, v: &Choice, j: usize, t: i64) -> bool {
        let Some(ms) = self.by_point.get(&(j, t)) else {
            return false;
        };
        ms.iter().any(|&mi| {
            self.mus[mi]
                .iter()
                .all(|&(k, s)| (k, s) == (j, t) || v[k].is_some_and(|(a, b)| a <= s && s <= b))
        })
    }

    fn maximal(&self, v: &Choice) -> bool {
        v.iter().enumerate().all(|(j, x)| {
            let (lo, hi) = self.bounds[j];
            match *x {
                Some((a, b)) => {
                    (a == lo || self.blocked(v, j, a - 1)) && (b == hi || self.blocked(v, j, b + 1))
                }
                None => (lo..=hi).all(|t| self.blocked(v, j, t)),
            }
        })
    }
}

fn sorted(it: impl Iterator<Item = FactSet>) -> Vec<FactSet> {
    let mut v: Vec<FactSet> = it.collect();
    v.sort();
    v.dedup();
    v
}

pub fn recognize_repair(
    kind: RepairKind,
    r: &FactSet,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
) -> Result<bool> {
    RepairContext::new(p, d, *limits)?.recognize_repair(kind, r)
}

pub fn recognize_conflict(
    kind: RepairKind,
    c: &FactSet,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
) -> Result<bool> {
    RepairContext::new(p, d, *limits)?.recognize_conflict(kind, c)
}

pub fn generate_repair(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
    seed_order: Option<&[TemporalFact]>,
) -> Result<FactSet> {
    RepairContext::new(p, d, *limits)?.generate_repair(kind, seed_order)
}

/// `Ok(None)` when `d` is consistent.
pub fn generate_conflict(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
) -> Result<Option<FactSet>> {
    RepairContext::new(p, d, *limits)?.generate_conflict(kind, None)
}

pub fn enumerate_repairs(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
    cap: usize,
) -> Result<Vec<FactSet>> {
    RepairContext::new(p, d, *limits)?.enumerate_repairs(kind, cap)
}

pub fn enumerate_conflicts(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
    cap: usize,
) -> Result<Vec<FactSet>> {
    RepairContext::new(p, d, *limits)?.enumerate_conflicts(kind, cap)
}

pub fn repairs_intersection(
    kind: RepairKind,
    d: &FactSet,
    p: &Program,
    limits: &EngineLimits,
) -> Result<FactSet> {
    RepairContext::new(p, d, *limits)?.repairs_intersection(kind, DEFAULT_CAP)
}
