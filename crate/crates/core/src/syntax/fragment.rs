use std::collections::{BTreeMap, BTreeSet};

use super::ast::{Head, Literal, Program};
use crate::facts::Symbol;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FragmentReport {
    pub propositional: bool,
    pub core: bool,
    pub linear: bool,
    pub non_recursive: bool,
    pub diamondminus_only: bool,
}

pub fn classify_fragment(p: &Program) -> FragmentReport {
    let idb = p.intensional();
    let propositional = p
        .literals()
        .flat_map(|l| l.atoms())
        .all(|a| a.args.is_empty());

    // A one-literal ⊥ rule is read as `bot :- A, A`.
    let core = p.rules.iter().all(|r| match r.head {
        Head::Bot => r.body.len() <= 2,
        Head::Lit(_) => r.body.len() == 1,
    });
    let mentions_idb = |l: &Literal| l.atoms().iter().any(|a| idb.contains(&a.predicate));
    let linear = p.rules.iter().all(|r| match r.head {
        Head::Bot => r.body.len() <= 2,
        Head::Lit(_) => r.body.iter().filter(|l| mentions_idb(l)).count() <= 1,
    });

    let diamondminus_only = p.literals().all(|l| {
        let mut ok = true;
        l.visit(&mut |x| {
            if !matches!(x, Literal::Atom(_) | Literal::Top | Literal::DiamondMinus(..)) {
                ok = false;
            }
        });
        ok
    });

    FragmentReport {
        propositional,
        core,
        linear,
        non_recursive: !has_cycle(&dependency_graph(p)),
        diamondminus_only,
    }
}

/// Edges `body predicate -> head predicate`.
fn dependency_graph(p: &Program) -> BTreeMap<Symbol, BTreeSet<Symbol>> {
    let mut g: BTreeMap<Symbol, BTreeSet<Symbol>> = BTreeMap::new();
    for r in &p.rules {
        let Head::Lit(h) = &r.head else { continue };
        for head_atom in h.atoms() {
            for l in &r.body {
                for a in l.atoms() {
                    g.entry(a.predicate.clone())
                        .or_default()
                        .insert(head_atom.predicate.clone());
                }
            }
        }
    }
    g
}

fn has_cycle(g: &BTreeMap<Symbol, BTreeSet<Symbol>>) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }
    fn dfs(
        v: &Symbol,
        g: &BTreeMap<Symbol, BTreeSet<Symbol>>,
        marks: &mut BTreeMap<Symbol, Mark>,
    ) -> bool {
        match marks.get(v) {
            Some(Mark::Active) => return true,
            Some(Mark::Done) => return false,
            None => {}
        }
        marks.insert(v.clone(), Mark::Active);
        if let Some(next) = g.get(v) {
            for w in next {
                if dfs(w, g, marks) {
                    return true;
                }
            }
        }
        marks.insert(v.clone(), Mark::Done);
        false
    }
    let mut marks = BTreeMap::new();
    g.keys().any(|v| dfs(v, g, &mut marks))
}
