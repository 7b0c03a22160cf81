//! Timepoint-by-timepoint fixpoint inside a finite window. Slow and simple;
//! used as a test oracle for the interval engine.

use std::collections::{BTreeMap, BTreeSet};

use super::reach;
use crate::error::{Error, Result};
use crate::facts::{FactSet, GroundAtom};
use crate::syntax::{ground_program, Head, Literal, Program, Range};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceModel {
    pub points: BTreeSet<(GroundAtom, i64)>,
    /// Whether some ⊥ rule fires inside the window.
    pub bot_fires: bool,
}

struct Window {
    lo: i64,
    hi: i64,
}

type State = BTreeMap<GroundAtom, BTreeSet<i64>>;

fn range_points(r: &Range) -> std::ops::RangeInclusive<i64> {
    r.lo()..=r.hi().expect("bounded range")
}

fn holds(l: &Literal, t: i64, s: &State, w: &Window) -> bool {
    let at = |l: &Literal, u: i64| u >= w.lo && u <= w.hi && holds(l, u, s, w);
    match l {
        Literal::Atom(a) => {
            let g = a.to_ground().expect("ground literal");
            s.get(&g).is_some_and(|p| p.contains(&t))
        }
        Literal::Top => true,
        Literal::BoxPlus(r, x) => range_points(r).all(|d| at(x, t + d)),
        Literal::BoxMinus(r, x) => range_points(r).all(|d| at(x, t - d)),
        Literal::DiamondPlus(r, x) => range_points(r).any(|d| at(x, t + d)),
        Literal::DiamondMinus(r, x) => range_points(r).any(|d| at(x, t - d)),
        Literal::Until(x, r, y) => range_points(r).any(|d| {
            at(y, t + d) && (t + 1..t + d).all(|u| at(x, u))
        }),
        Literal::Since(x, r, y) => range_points(r).any(|d| {
            at(y, t - d) && (t - d + 1..t).all(|u| at(x, u))
        }),
    }
}

fn assert_at(head: &Literal, t: i64, s: &mut State, w: &Window) -> Result<bool> {
    match head {
        Literal::Atom(a) => {
            if t < w.lo || t > w.hi {
                return Err(Error::WindowTooSmall(format!("{a} derived at {t}")));
            }
            let g = a.to_ground().expect("ground head");
            Ok(s.entry(g).or_default().insert(t))
        }
        Literal::Top => Ok(false),
        Literal::BoxPlus(r, x) => {
            let mut changed = false;
            for d in range_points(r) {
                changed |= assert_at(x, t + d, s, w)?;
            }
            Ok(changed)
        }
        Literal::BoxMinus(r, x) => {
            let mut changed = false;
            for d in range_points(r) {
                changed |= assert_at(x, t - d, s, w)?;
            }
            Ok(changed)
        }
        _ => unreachable!("non-deterministic head"),
    }
}

/// The least model of `p` and `d` restricted to `window`, computed one
/// timepoint at a time. Fails with `WindowTooSmall` when any point of the
/// model comes closer to the window boundary than the program's reach, so
/// a successful result is exact.
pub fn punctual_reference_model(
    p: &Program,
    d: &FactSet,
    window: (i64, i64),
) -> Result<ReferenceModel> {
    if p.has_unbounded_range() {
        return Err(Error::Unsupported(
            "the reference model needs bounded ranges".into(),
        ));
    }
    if !d.is_bounded() {
        return Err(Error::UnboundedDataset);
    }
    let w = Window {
        lo: window.0,
        hi: window.1,
    };
    let margin = p.literals().filter_map(reach).max().unwrap_or(0) + 1;

    let ground = ground_program(p, &d.constants());
    let mut state: State = BTreeMap::new();
    for f in d {
        for t in f.interval.points() {
            if t < w.lo || t > w.hi {
                return Err(Error::WindowTooSmall(format!("{f} lies outside the window")));
            }
            state.entry(f.atom.clone()).or_default().insert(t);
        }
    }

    loop {
        let mut changed = false;
        for rule in &ground.rules {
            let Head::Lit(h) = &rule.head else { continue };
            for t in w.lo..=w.hi {
                if rule.body.iter().all(|l| holds(l, t, &state, &w)) {
                    changed |= assert_at(h, t, &mut state, &w)?;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut points = BTreeSet::new();
    for (atom, ts) in &state {
        for &t in ts {
            if t - w.lo < margin || w.hi - t < margin {
                return Err(Error::WindowTooSmall(format!(
                    "{atom} holds at {t}, within {margin} of the window boundary"
                )));
            }
            points.insert((atom.clone(), t));
        }
    }
    let bot_fires = ground.rules.iter().any(|r| {
        r.is_bot() && (w.lo..=w.hi).any(|t| r.body.iter().all(|l| holds(l, t, &state, &w)))
    });
    Ok(ReferenceModel { points, bot_fires })
}
