//! Timepoints, intervals and interval unions over the integer timeline.
//!
//! Every [`Interval`] is stored in canonical closed form: finite endpoints are
//! always inclusive, infinite endpoints are always exclusive. Open brackets
//! are only accepted by [`Interval::with_brackets`], which shifts them onto
//! the neighbouring integer.

use std::cmp::{max, min};
use std::fmt;

/// An extended integer: `-inf < n < +inf` for every `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimePoint {
    NegInf,
    Int(i64),
    PosInf,
}

impl TimePoint {
    pub fn is_finite(self) -> bool {
        matches!(self, TimePoint::Int(_))
    }

    pub fn as_int(self) -> Option<i64> {
        match self {
            TimePoint::Int(n) => Some(n),
            _ => None,
        }
    }

    /// `self + k`, with infinities absorbing.
    pub fn plus(self, k: i64) -> TimePoint {
        match self {
            TimePoint::Int(n) => TimePoint::Int(n.saturating_add(k)),
            inf => inf,
        }
    }

    pub fn minus(self, k: i64) -> TimePoint {
        match self {
            TimePoint::Int(n) => TimePoint::Int(n.saturating_sub(k)),
            inf => inf,
        }
    }
}

impl From<i64> for TimePoint {
    fn from(n: i64) -> Self {
        TimePoint::Int(n)
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimePoint::NegInf => write!(f, "-inf"),
            TimePoint::Int(n) => write!(f, "{n}"),
            TimePoint::PosInf => write!(f, "inf"),
        }
    }
}

/// A nonempty set of consecutive integer timepoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: TimePoint,
    hi: TimePoint,
}

impl Interval {
    /// Builds `[lo, hi]`, returning `None` when it denotes no timepoint.
    /// Infinite endpoints are read as open.
    pub fn new(lo: TimePoint, hi: TimePoint) -> Option<Interval> {
        if lo == TimePoint::PosInf || hi == TimePoint::NegInf || lo > hi {
            return None;
        }
        Some(Interval { lo, hi })
    }

    /// Builds an interval from possibly open brackets, converting `(a,` to
    /// `[a+1,` and `,b)` to `,b-1]`.
    pub fn with_brackets(
        lo: TimePoint,
        lo_closed: bool,
        hi: TimePoint,
        hi_closed: bool,
    ) -> Option<Interval> {
        let lo = if lo.is_finite() && !lo_closed { lo.plus(1) } else { lo };
        let hi = if hi.is_finite() && !hi_closed { hi.minus(1) } else { hi };
        Interval::new(lo, hi)
    }

    pub fn closed(lo: i64, hi: i64) -> Option<Interval> {
        Interval::new(TimePoint::Int(lo), TimePoint::Int(hi))
    }

    pub fn point(t: i64) -> Interval {
        Interval {
            lo: TimePoint::Int(t),
            hi: TimePoint::Int(t),
        }
    }

    pub fn all() -> Interval {
        Interval {
            lo: TimePoint::NegInf,
            hi: TimePoint::PosInf,
        }
    }

    pub fn lo(&self) -> TimePoint {
        self.lo
    }

    pub fn hi(&self) -> TimePoint {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo.is_finite()
    }

    pub fn hi_closed(&self) -> bool {
        self.hi.is_finite()
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_punctual(&self) -> bool {
        self.lo.is_finite() && self.lo == self.hi
    }

    /// Finite endpoints as a pair, if both are finite.
    pub fn bounds(&self) -> Option<(i64, i64)> {
        Some((self.lo.as_int()?, self.hi.as_int()?))
    }

    /// Number of timepoints, `None` when unbounded.
    pub fn len(&self) -> Option<u64> {
        let (a, b) = self.bounds()?;
        Some((b - a) as u64 + 1)
    }

    pub fn contains(&self, t: i64) -> bool {
        self.lo <= TimePoint::Int(t) && TimePoint::Int(t) <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::new(max(self.lo, other.lo), min(self.hi, other.hi))
    }

    /// True when the union of the two point sets is itself an interval,
    /// i.e. they overlap or are adjacent integers apart.
    pub fn mergeable(&self, other: &Interval) -> bool {
        self.lo <= other.hi.plus(1) && other.lo <= self.hi.plus(1)
    }

    /// Timepoints of a bounded interval; empty for unbounded ones.
    pub fn points(&self) -> impl Iterator<Item = i64> {
        let (a, b) = self.bounds().unwrap_or((1, 0));
        a..=b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed() { '[' } else { '(' };
        let close = if self.hi_closed() { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

/// A finite union of intervals kept sorted, disjoint and non-adjacent.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalSet {
    ivs: Vec<Interval>,
}

impl IntervalSet {
    pub fn new() -> Self {
        IntervalSet { ivs: Vec::new() }
    }

    pub fn single(iv: Interval) -> Self {
        IntervalSet { ivs: vec![iv] }
    }

    pub fn all() -> Self {
        IntervalSet::single(Interval::all())
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ivs.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.ivs.iter()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.ivs
    }

    pub fn is_bounded(&self) -> bool {
        self.ivs.iter().all(Interval::is_bounded)
    }

    pub fn contains(&self, t: i64) -> bool {
        self.find(TimePoint::Int(t)).is_some()
    }

    /// Index of the interval containing `t`, if any.
    fn find(&self, t: TimePoint) -> Option<usize> {
        let idx = self.ivs.partition_point(|iv| iv.hi < t);
        (idx < self.ivs.len() && self.ivs[idx].lo <= t).then_some(idx)
    }

    /// The maximal interval of this set containing `t`.
    pub fn block_of(&self, t: i64) -> Option<Interval> {
        self.find(TimePoint::Int(t)).map(|i| self.ivs[i])
    }

    /// True iff every timepoint of `iv` belongs to the set.
    pub fn covers(&self, iv: &Interval) -> bool {
        match self.find(iv.lo()) {
            Some(i) => self.ivs[i].contains_interval(iv),
            None => false,
        }
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.ivs.iter().all(|iv| other.covers(iv))
    }

    /// Adds an interval, returning whether the set changed.
    pub fn insert(&mut self, iv: Interval) -> bool {
        if self.covers(&iv) {
            return false;
        }
        let mut merged = iv;
        let start = self.ivs.partition_point(|x| x.hi.plus(1) < iv.lo);
        let mut end = start;
        while end < self.ivs.len() && self.ivs[end].mergeable(&merged) {
            merged = Interval {
                lo: min(merged.lo, self.ivs[end].lo),
                hi: max(merged.hi, self.ivs[end].hi),
            };
            end += 1;
        }
        self.ivs.splice(start..end, std::iter::once(merged));
        true
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut all: Vec<Interval> = Vec::with_capacity(self.len() + other.len());
        all.extend_from_slice(&self.ivs);
        all.extend_from_slice(&other.ivs);
        IntervalSet::from_iter(all)
    }

    /// Adds every interval of `other`, returning whether the set changed.
    pub fn union_with(&mut self, other: &IntervalSet) -> bool {
        if other.is_subset(self) {
            return false;
        }
        *self = self.union(other);
        true
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.ivs.len() && j < other.ivs.len() {
            let (a, b) = (&self.ivs[i], &other.ivs[j]);
            if let Some(x) = a.intersect(b) {
                out.push(x);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { ivs: out }
    }

    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::new();
        let mut cursor = TimePoint::NegInf;
        for iv in &self.ivs {
            if let Some(gap) = Interval::new(cursor, iv.lo.minus(1)) {
                out.push(gap);
            }
            cursor = iv.hi.plus(1);
            if iv.hi == TimePoint::PosInf {
                return IntervalSet { ivs: out };
            }
        }
        if let Some(tail) = Interval::new(cursor, TimePoint::PosInf) {
            out.push(tail);
        }
        IntervalSet { ivs: out }
    }

    /// Applies `f` to every interval and re-normalizes the results.
    pub fn map<F>(&self, f: F) -> IntervalSet
    where
        F: FnMut(&Interval) -> Option<Interval>,
    {
        self.ivs.iter().filter_map(f).collect()
    }

    /// Reflects the set through zero (`t -> -t`).
    pub fn reflect(&self) -> IntervalSet {
        self.map(|iv| Interval::new(neg(iv.hi), neg(iv.lo)))
    }

    /// All timepoints of a bounded set.
    pub fn points(&self) -> impl Iterator<Item = i64> + '_ {
        self.ivs.iter().flat_map(Interval::points)
    }

    /// Finite endpoints, in order.
    pub fn finite_endpoints(&self) -> impl Iterator<Item = i64> + '_ {
        self.ivs
            .iter()
            .flat_map(|iv| [iv.lo.as_int(), iv.hi.as_int()])
            .flatten()
    }
}

pub(crate) fn neg(t: TimePoint) -> TimePoint {
    match t {
        TimePoint::NegInf => TimePoint::PosInf,
        TimePoint::PosInf => TimePoint::NegInf,
        TimePoint::Int(n) => TimePoint::Int(-n),
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = Interval>>(iter: I) -> Self {
        let mut ivs: Vec<Interval> = iter.into_iter().collect();
        ivs.sort();
        let mut out: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match out.last_mut() {
                Some(last) if last.mergeable(&iv) => last.hi = max(last.hi, iv.hi),
                _ => out.push(iv),
            }
        }
        IntervalSet { ivs: out }
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.ivs.iter()
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, iv) in self.ivs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}
