//! Temporal operators as transforms on interval sets.

use crate::syntax::Range;
use crate::time::{Interval, IntervalSet, TimePoint};

fn r_lo(r: &Range) -> i64 {
    r.lo()
}

fn r_hi(r: &Range) -> TimePoint {
    r.interval().hi()
}

/// `t - r` for a possibly infinite `r`.
fn sub(t: TimePoint, r: TimePoint) -> TimePoint {
    match r {
        TimePoint::Int(k) => t.minus(k),
        _ => match t {
            TimePoint::PosInf => TimePoint::PosInf,
            _ => TimePoint::NegInf,
        },
    }
}

/// `t + r` for a possibly infinite `r`.
fn add(t: TimePoint, r: TimePoint) -> TimePoint {
    match r {
        TimePoint::Int(k) => t.plus(k),
        _ => match t {
            TimePoint::NegInf => TimePoint::NegInf,
            _ => TimePoint::PosInf,
        },
    }
}

/// `{t : ∃s∈S, t−s∈ϱ}`.
pub fn diamond_minus(s: &IntervalSet, r: &Range) -> IntervalSet {
    s.map(|iv| Interval::new(iv.lo().plus(r_lo(r)), add(iv.hi(), r_hi(r))))
}

/// `{t : ∃s∈S, s−t∈ϱ}`.
pub fn diamond_plus(s: &IntervalSet, r: &Range) -> IntervalSet {
    s.map(|iv| Interval::new(sub(iv.lo(), r_hi(r)), iv.hi().minus(r_lo(r))))
}

/// `{t : t+ϱ ⊆ S}`.
pub fn box_plus(s: &IntervalSet, r: &Range) -> IntervalSet {
    s.map(|iv| {
        let hi = match r_hi(r) {
            TimePoint::Int(k) => iv.hi().minus(k),
            _ if iv.hi() == TimePoint::PosInf => TimePoint::PosInf,
            _ => return None,
        };
        Interval::new(iv.lo().minus(r_lo(r)), hi)
    })
}

/// `{t : t−ϱ ⊆ S}`.
pub fn box_minus(s: &IntervalSet, r: &Range) -> IntervalSet {
    s.map(|iv| {
        let lo = match r_hi(r) {
            TimePoint::Int(k) => iv.lo().plus(k),
            _ if iv.lo() == TimePoint::NegInf => TimePoint::NegInf,
            _ => return None,
        };
        Interval::new(lo, iv.hi().plus(r_lo(r)))
    })
}

/// Points `t` with a witness `t′∈B`, `t′−t∈ϱ`, and `A` on every integer
/// strictly between `t` and `t′`.
pub fn until(a: &IntervalSet, r: &Range, b: &IntervalSet) -> IntervalSet {
    let (r1, r2) = (r_lo(r), r_hi(r));
    let mut out: Vec<Interval> = Vec::new();

    // Witnesses whose predecessor lies in an A-block [lo,hi].
    for block in a {
        let Some(shifted) = Interval::new(block.lo().plus(1), block.hi().plus(1)) else {
            continue;
        };
        let part = b.intersection(&IntervalSet::single(shifted));
        let a_minus_1 = block.lo().minus(1);
        for w in &part {
            let t0 = w.lo().max(a_minus_1.plus(r1));
            if t0 > w.hi() {
                continue;
            }
            let lo = a_minus_1.max(sub(t0, r2));
            if let Some(iv) = Interval::new(lo, w.hi().minus(r1)) {
                out.push(iv);
            }
        }
    }

    // Witnesses with empty or non-A predecessor: the interior must be empty.
    if r1 <= 1 {
        let gap_after = a.complement().map(|iv| Interval::new(iv.lo().plus(1), iv.hi().plus(1)));
        let step = match r2 {
            TimePoint::Int(k) => k.min(1),
            _ => 1,
        };
        for w in &b.intersection(&gap_after) {
            if let Some(iv) = Interval::new(w.lo().minus(step), w.hi().minus(r1)) {
                out.push(iv);
            }
        }
    }
    out.into_iter().collect()
}

/// Mirror image of [`until`].
pub fn since(a: &IntervalSet, r: &Range, b: &IntervalSet) -> IntervalSet {
    until(&a.reflect(), r, &b.reflect()).reflect()
}
