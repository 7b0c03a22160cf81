//! Joint enumeration of maximal consistent and minimal inconsistent subsets
//! of a finite universe under a monotone consistency test.

use std::collections::HashSet;

use super::bits::Bits;
use crate::error::{Error, Result};

pub(crate) struct Dual {
    pub consistent: Vec<Bits>,
    pub inconsistent: Vec<Bits>,
}

/// Dualize and advance with an incrementally maintained hypergraph
/// transversal.
///
/// `cands` always holds the maximal independent sets of the conflicts found
/// so far. A consistent candidate is a maximal consistent set; an
/// inconsistent one shrinks to a new conflict, after which only the
/// candidates containing that conflict are split. Once every candidate is
/// consistent, both families are complete.
pub(crate) fn dualize(
    n: usize,
    consistent: &mut impl FnMut(&Bits) -> Result<bool>,
    cap: usize,
) -> Result<Dual> {
    if !consistent(&Bits::empty(n))? {
        return Ok(Dual {
            consistent: Vec::new(),
            inconsistent: vec![Bits::empty(n)],
        });
    }
    let mut edges: Vec<Bits> = Vec::new();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done: Vec<Bits> = Vec::new();
    let mut pending: Vec<Bits> = vec![Bits::full(n)];
    let mut seen: HashSet<Bits> = pending.iter().cloned().collect();

    while let Some(set) = pending.pop() {
        if consistent(&set)? {
            done.push(set);
            if done.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
            continue;
        }
        seen.remove(&set);
        let m = shrink(&set, consistent)?;
        let ei = edges.len();
        for v in m.iter() {
            incident[v].push(ei);
        }
        edges.push(m.clone());
        if edges.len() > cap {
            return Err(Error::CapExceeded { cap });
        }

        let mut split = vec![set];
        let mut keep = Vec::with_capacity(pending.len());
        for s in pending.drain(..) {
            if m.is_subset(&s) {
                seen.remove(&s);
                split.push(s);
            } else {
                keep.push(s);
            }
        }
        pending = keep;
        for s in split {
            for v in m.iter() {
                let j = s.without(v);
                if !seen.contains(&j) && is_maximal(&j, n, &edges, &incident) {
                    seen.insert(j.clone());
                    pending.push(j);
                }
            }
        }
    }
    Ok(Dual {
        consistent: done,
        inconsistent: edges,
    })
}

/// Every vertex outside `set` completes some edge with it.
fn is_maximal(set: &Bits, n: usize, edges: &[Bits], incident: &[Vec<usize>]) -> bool {
    (0..n).filter(|&u| !set.contains(u)).all(|u| {
        incident[u]
            .iter()
            .any(|&ei| edges[ei].without(u).is_subset(set))
    })
}

/// Deletion-based reduction of an inconsistent set to a minimal one.
pub(crate) fn shrink(set: &Bits, consistent: &mut impl FnMut(&Bits) -> Result<bool>) -> Result<Bits> {
    let mut cur = set.clone();
    let items: Vec<usize> = set.iter().collect();
    for i in items {
        let cand = cur.without(i);
        if !consistent(&cand)? {
            cur = cand;
        }
    }
    Ok(cur)
}

/// Greedy growth of a consistent set along `order`.
pub(crate) fn grow(
    start: &Bits,
    order: &[usize],
    consistent: &mut impl FnMut(&Bits) -> Result<bool>,
) -> Result<Bits> {
    let mut cur = start.clone();
    for &i in order {
        if cur.contains(i) {
            continue;
        }
        let cand = cur.with(i);
        if consistent(&cand)? {
            cur = cand;
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(n: usize, items: &[usize]) -> Bits {
        let mut b = Bits::empty(n);
        for &i in items {
            b.insert(i);
        }
        b
    }

    fn all_subsets(n: usize) -> Vec<Bits> {
        (0u32..1 << n)
            .map(|m| bits(n, &(0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>()))
            .collect()
    }

    /// Maximal consistent and minimal inconsistent sets by brute force.
    fn brute(n: usize, bad: &[Bits]) -> (Vec<Bits>, Vec<Bits>) {
        let all = all_subsets(n);
        let ok = |s: &Bits| !bad.iter().any(|b| b.is_subset(s));
        let mut mss: Vec<Bits> = all
            .iter()
            .filter(|s| ok(s) && (0..n).all(|i| s.contains(i) || !ok(&s.with(i))))
            .cloned()
            .collect();
        let mut mus: Vec<Bits> = all
            .iter()
            .filter(|s| !ok(s) && s.iter().all(|i| ok(&s.without(i))))
            .cloned()
            .collect();
        mss.sort();
        mus.sort();
        (mss, mus)
    }

    fn run(n: usize, bad: &[Bits], cap: usize) -> Result<(Vec<Bits>, Vec<Bits>)> {
        let mut test = |s: &Bits| Ok(!bad.iter().any(|b| b.is_subset(s)));
        let mut d = dualize(n, &mut test, cap)?;
        d.consistent.sort();
        d.inconsistent.sort();
        Ok((d.consistent, d.inconsistent))
    }

    #[test]
    fn matches_brute_force() {
        let n = 6;
        let cases = vec![
            vec![],
            vec![bits(n, &[0, 1])],
            vec![bits(n, &[0, 1]), bits(n, &[1, 2]), bits(n, &[2, 3, 4])],
            vec![bits(n, &[0]), bits(n, &[1, 2, 3]), bits(n, &[3, 4]), bits(n, &[4, 5, 0])],
            vec![bits(n, &[0, 1, 2]), bits(n, &[2, 3]), bits(n, &[1, 3, 5])],
            vec![bits(n, &[0, 1]), bits(n, &[2, 3, 4]), bits(n, &[1, 4]), bits(n, &[5])],
            vec![bits(n, &[0, 3]), bits(n, &[1, 4]), bits(n, &[2, 5])],
        ];
        for bad in cases {
            assert_eq!(run(n, &bad, 1000).unwrap(), brute(n, &bad));
        }
    }

    #[test]
    fn empty_inconsistent_set() {
        let (mss, mus) = run(3, &[Bits::empty(3)], 10).unwrap();
        assert!(mss.is_empty());
        assert_eq!(mus, vec![Bits::empty(3)]);
    }

    #[test]
    fn cap_is_enforced() {
        let n = 8;
        let bad: Vec<Bits> = (0..4).map(|k| bits(n, &[2 * k, 2 * k + 1])).collect();
        assert!(matches!(run(n, &bad, 15), Err(Error::CapExceeded { cap: 15 })));
        assert_eq!(run(n, &bad, 16).unwrap().0.len(), 16);
    }
}
