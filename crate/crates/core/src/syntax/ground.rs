use std::collections::{BTreeMap, BTreeSet};

use super::ast::{Head, Literal, Program, Rule, Term};
use crate::facts::Symbol;

/// All ground instances of every rule over `constants`. Variables are
/// enumerated in first-occurrence order, constants in sorted order.
pub fn ground_program(p: &Program, constants: &BTreeSet<Symbol>) -> Program {
    let consts: Vec<Symbol> = constants.iter().cloned().collect();
    let mut rules = Vec::new();
    for rule in &p.rules {
        let vars = rule.vars();
        if vars.is_empty() {
            rules.push(rule.clone());
            continue;
        }
        if consts.is_empty() {
            continue;
        }
        let mut idx = vec![0usize; vars.len()];
        'odometer: loop {
            let subst: BTreeMap<&Symbol, &Symbol> =
                vars.iter().zip(idx.iter().map(|&i| &consts[i])).collect();
            rules.push(substitute(rule, &subst));
            for k in (0..vars.len()).rev() {
                idx[k] += 1;
                if idx[k] < consts.len() {
                    continue 'odometer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    Program { rules }
}

fn substitute(rule: &Rule, subst: &BTreeMap<&Symbol, &Symbol>) -> Rule {
    let mut apply = |a: &super::ast::Atom| super::ast::Atom {
        predicate: a.predicate.clone(),
        args: a
            .args
            .iter()
            .map(|t| match t {
                Term::Var(v) => Term::Const((*subst[v]).clone()),
                c => c.clone(),
            })
            .collect(),
    };
    let head = match &rule.head {
        Head::Bot => Head::Bot,
        Head::Lit(l) => Head::Lit(l.map_atoms(&mut apply)),
    };
    let body: Vec<Literal> = rule.body.iter().map(|l| l.map_atoms(&mut apply)).collect();
    Rule { head, body }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;
    use std::sync::Arc;

    fn consts(names: &[&str]) -> BTreeSet<Symbol> {
        names.iter().map(|n| Arc::from(*n)).collect()
    }

    #[test]
    fn grounds_unary_rule() {
        let p = parse_program("bot :- P(x), Q(x).").unwrap();
        let g = ground_program(&p, &consts(&["a", "b"]));
        let text: Vec<String> = g.rules.iter().map(|r| r.to_string()).collect();
        assert_eq!(text, ["bot :- P(a), Q(a).", "bot :- P(b), Q(b)."]);
    }

    #[test]
    fn propositional_unchanged() {
        let p = parse_program("Q :- boxplus[0,2] P.\nbot :- Q, R.").unwrap();
        assert_eq!(ground_program(&p, &BTreeSet::new()), p);
    }

    #[test]
    fn cartesian_product() {
        let p = parse_program("R(x,y) :- P(x), P(y).").unwrap();
        let g = ground_program(&p, &consts(&["a", "b"]));
        assert_eq!(g.rules.len(), 4);
        assert!(g.rules.iter().all(Rule::is_ground));
        assert_eq!(g.rules[1].to_string(), "R(a,b) :- P(a), P(b).");
    }
}
