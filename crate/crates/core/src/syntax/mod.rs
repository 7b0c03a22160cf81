//! Concrete syntax for programs, datasets, facts and queries.
//!
//! ```text
//! FevEp(x) :- Fever(x), diamondminus[0,24] (NoFever(x) until {5} GetBlood(x,y)).
//! bot :- Fever(x), NoFever(x).
//! ```
//!
//! Argument identifiers in rules are constants when they occur in the
//! companion dataset (or an explicit [`Vocabulary`]) and variables otherwise.

mod ast;
mod fragment;
mod ground;
mod parser;

pub use ast::{Atom, Head, Literal, Program, Query, QueryTerm, Range, Rule, Term};
pub use fragment::{classify_fragment, FragmentReport};
pub use ground::ground_program;
pub use parser::{
    parse_dataset, parse_dataset_with, parse_fact, parse_instance, parse_program,
    parse_program_with, parse_query, ParsedDataset, Vocabulary,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ParseErrorKind;
    use crate::facts::{GroundAtom, TemporalFact};
    use crate::time::Interval;

    pub(crate) const EXAMPLE_PROGRAM: &str = "
        PotFnhtr(x) :- Fever(x), boxminus(0,24] NoFever(x), diamondminus[0,4] GetBlood(x,y).
        FevEp(x) :- Fever(x), diamondminus[0,24] (NoFever(x) until {5} GetBlood(x,y)).
        bot :- Fever(x), NoFever(x).
        boxplus[0,inf) AntiDRisk(x) :- PositiveAntiD(x).
    ";

    #[test]
    fn parses_fact() {
        let f = parse_fact("Fever(a)@[29,34].").unwrap();
        assert_eq!(
            f,
            TemporalFact::new(GroundAtom::new("Fever", &["a"]), Interval::closed(29, 34).unwrap())
        );
    }

    #[test]
    fn parses_bot_rule() {
        let p = parse_program("bot :- Fever(x), NoFever(x).").unwrap();
        let r = &p.rules[0];
        assert_eq!(r.head, Head::Bot);
        assert_eq!(r.body.len(), 2);
        assert_eq!(r.to_string(), "bot :- Fever(x), NoFever(x).");
    }

    #[test]
    fn unbound_head_variable_is_unsafe() {
        let e = parse_program("Q(x,y) :- boxplus[0,2] P(x).").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Safety);
        assert!(parse_program("Q(x) :- boxplus[0,2] P(x,y).").is_ok());
    }

    #[test]
    fn left_operand_does_not_bind() {
        let e = parse_program("Q(x) :- (P(x) until[0,2] R).").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Safety);
        let e = parse_program("Q(x) :- (R until[0,2] (P(x) since[0,1] R)).").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Safety);
        assert!(parse_program("Q(x) :- (P(x) until[0,2] R), S(x).").is_ok());
        assert!(parse_program("Q(x) :- (R until[0,2] P(x)).").is_ok());
    }

    #[test]
    fn example_program_round_trips() {
        let p = parse_program(EXAMPLE_PROGRAM).unwrap();
        assert_eq!(p.rules.len(), 4);
        let printed = p.to_string();
        assert!(printed.contains("boxminus[1,24] NoFever(x)"));
        assert!(printed.contains("(NoFever(x) until[5,5] GetBlood(x,y))"));
        assert_eq!(parse_program(&printed).unwrap(), p);
    }

    #[test]
    fn dataset_normalizes() {
        let d = parse_dataset("P@[0,2].\nP@[3,5].").unwrap();
        assert!(d.changed);
        assert_eq!(d.facts.to_string(), "P@[0,5].\n");
        let d = parse_dataset("P@[0,2].\nP@[4,5].").unwrap();
        assert!(!d.changed);
    }

    #[test]
    fn example_classification() {
        let r = classify_fragment(&parse_program(EXAMPLE_PROGRAM).unwrap());
        assert!(r.non_recursive);
        assert!(!r.core);
        assert!(!r.propositional);
        assert!(!r.diamondminus_only);
    }
}
