use std::fmt;
use std::str::FromStr;

use super::cnf::Cnf;
use crate::facts::{FactSet, GroundAtom, TemporalFact};
use crate::itsem::SemanticsKind;
use crate::syntax::{parse_program, Program};
use crate::time::Interval;

/// The SAT/UNSAT reductions for query entailment under s-repairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SatTarget {
    CqaS,
    BraveSNr,
    IntersectionSNr,
    BraveSLin,
    IntersectionSLin,
}

impl SatTarget {
    pub const ALL: [SatTarget; 5] = [
        SatTarget::CqaS,
        SatTarget::BraveSNr,
        SatTarget::IntersectionSNr,
        SatTarget::BraveSLin,
        SatTarget::IntersectionSLin,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SatTarget::CqaS => "cqa_s",
            SatTarget::BraveSNr => "brave_s_nr",
            SatTarget::IntersectionSNr => "intersection_s_nr",
            SatTarget::BraveSLin => "brave_s_lin",
            SatTarget::IntersectionSLin => "intersection_s_lin",
        }
    }

    pub fn semantics(self) -> SemanticsKind {
        match self {
            SatTarget::CqaS => SemanticsKind::Cqa,
            SatTarget::BraveSNr | SatTarget::BraveSLin => SemanticsKind::Brave,
            SatTarget::IntersectionSNr | SatTarget::IntersectionSLin => SemanticsKind::Intersection,
        }
    }

    /// Whether the target fact is entailed exactly when the formula is
    /// satisfiable (otherwise exactly when it is unsatisfiable).
    pub fn entailed_iff_sat(self) -> bool {
        self.semantics() == SemanticsKind::Brave
    }
}

impl fmt::Display for SatTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SatTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SatTarget::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown target `{s}`"))
    }
}

const CQA_S: &str = "
N'(v) :- diamondminus[0,inf) N(v).
P'(v) :- diamondminus[0,inf) P(v).
bot :- P'(v), N'(v).
Q :- diamondminus[0,inf) U.
bot :- P(v), U.
bot :- N(v), U.
";

const BRAVE_S_NR: &str = "
N'(v) :- diamondminus[0,inf) N(v).
N'(v) :- diamondplus[0,inf) N(v).
bot :- P(v), N'(v).
Q' :- (S until(0,inf) M).
S :- diamondminus[0,2) P(v).
S :- diamondminus[0,2) N(v).
";

const BRAVE_S_LIN: &str = "
N'(v) :- diamondminus[0,inf) N(v).
P'(v) :- diamondminus[0,inf) P(v).
bot :- P'(v), N'(v).
S :- F.
S :- P(v), diamondminus{2} S.
S :- N(v), diamondminus{2} S.
";

fn fact(pred: &str, args: &[&str], t: i64) -> TemporalFact {
    TemporalFact::new(GroundAtom::new(pred, args), Interval::point(t))
}

fn program(text: &str) -> Program {
    parse_program(text).expect("built-in program parses")
}

/// `P(vj)@{2k}` for positive and `N(vj)@{2k}` for negative occurrences of
/// `vj` in clause `k` (clauses numbered from 1).
fn clause_facts(phi: &Cnf) -> FactSet {
    let mut d = FactSet::new();
    for (k, c) in phi.clauses.iter().enumerate() {
        let t = 2 * (k as i64 + 1);
        for &l in c {
            let v = format!("v{}", l.unsigned_abs());
            d.insert(fact(if l > 0 { "P" } else { "N" }, &[&v], t));
        }
    }
    d
}

/// Program, dataset and target fact of the reduction for `target`.
pub fn satgen(target: SatTarget, phi: &Cnf) -> (Program, FactSet, TemporalFact) {
    let m = phi.clauses.len() as i64;
    let mut d = clause_facts(phi);
    match target {
        SatTarget::CqaS => {
            for k in 1..=m {
                d.insert(fact("U", &[], 2 * k));
            }
            (program(CQA_S), d, fact("Q", &[], 2 * m))
        }
        SatTarget::BraveSNr | SatTarget::IntersectionSNr => {
            d.insert(fact("M", &[], 2 * m + 2));
            if target == SatTarget::BraveSNr {
                return (program(BRAVE_S_NR), d, fact("Q'", &[], 2));
            }
            d.insert(fact("Q''", &[], 2));
            let p = program(&format!("{BRAVE_S_NR}bot :- Q', Q''.\n"));
            (p, d, fact("Q''", &[], 2))
        }
        SatTarget::BraveSLin | SatTarget::IntersectionSLin => {
            d.insert(fact("F", &[], 0));
            if target == SatTarget::BraveSLin {
                return (program(BRAVE_S_LIN), d, fact("S", &[], 2 * m));
            }
            d.insert(fact("S'", &[], 2 * m));
            let p = program(&format!("{BRAVE_S_LIN}bot :- S, S'.\n"));
            (p, d, fact("S'", &[], 2 * m))
        }
    }
}

/// Instances whose p-repairs or p-conflicts grow exponentially in `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpFamily {
    PRepair,
    PConflict,
    PConflictLin,
}

impl ExpFamily {
    pub const ALL: [ExpFamily; 3] = [ExpFamily::PRepair, ExpFamily::PConflict, ExpFamily::PConflictLin];

    pub fn as_str(self) -> &'static str {
        match self {
            ExpFamily::PRepair => "p_repair",
            ExpFamily::PConflict => "p_conflict",
            ExpFamily::PConflictLin => "p_conflict_lin",
        }
    }

    /// Right endpoint of the long `A` and `B` facts.
    pub fn bound(self, n: u32) -> i64 {
        match self {
            ExpFamily::PRepair | ExpFamily::PConflictLin => 1 << n,
            ExpFamily::PConflict => 1 << (n + 2),
        }
    }
}

impl fmt::Display for ExpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExpFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ExpFamily::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

const ALTERNATION: &str = "
A' :- diamondminus{1} A.
B' :- diamondminus{1} B.
bot :- A, B.
bot :- A, A'.
bot :- B, B'.
";

pub fn expfamily(which: ExpFamily, n: u32) -> (Program, FactSet) {
    assert!(n <= 4, "family size parameter too large");
    let b = which.bound(n);
    let span = |p: &str| TemporalFact::new(GroundAtom::new(p, &[]), Interval::closed(0, b).unwrap());
    let mut d: FactSet = [span("A"), span("B")].into_iter().collect();
    let p = match which {
        ExpFamily::PRepair => program(ALTERNATION),
        ExpFamily::PConflict => {
            d.insert(fact("S", &[], -1));
            d.insert(fact("E", &[], b));
            program(
                "C :- A, diamondplus{1} B.
                 C :- B, diamondplus{1} A.
                 bot :- S, (C until(0,inf) E).",
            )
        }
        ExpFamily::PConflictLin => {
            d.insert(fact("Q", &[], 0));
            d.insert(fact("P", &[], b));
            program(&format!(
                "{ALTERNATION}
                 Q' :- Q, A.
                 Q' :- Q, B.
                 Q :- diamondminus{{1}} Q'.
                 bot :- P, Q'."
            ))
        }
    };
    (p, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::classify_fragment;

    #[test]
    fn cqa_instance_shape() {
        let phi = Cnf::new(2, vec![vec![1, -2], vec![2]]).unwrap();
        let (p, d, f) = satgen(SatTarget::CqaS, &phi);
        assert_eq!(p.rules.len(), 6);
        assert_eq!(f.to_string(), "Q@[4,4]");
        let text: Vec<String> = d.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            text,
            vec!["N(v2)@[2,2]", "P(v1)@[2,2]", "P(v2)@[4,4]", "U@[2,2]", "U@[4,4]"]
        );
        assert!(d.is_normal_form());
    }

    #[test]
    fn fragments_of_reductions() {
        let phi = Cnf::new(1, vec![vec![1]]).unwrap();
        let frag = |t| classify_fragment(&satgen(t, &phi).0);
        let cqa = frag(SatTarget::CqaS);
        assert!(cqa.non_recursive && cqa.linear && cqa.core);
        assert!(frag(SatTarget::BraveSNr).non_recursive);
        assert!(frag(SatTarget::IntersectionSNr).non_recursive);
        for t in [SatTarget::BraveSLin, SatTarget::IntersectionSLin] {
            let r = frag(t);
            assert!(r.linear && r.diamondminus_only, "{t}");
        }
    }

    #[test]
    fn family_sizes() {
        let (_, d) = expfamily(ExpFamily::PRepair, 2);
        assert_eq!(d.to_string(), "A@[0,4].\nB@[0,4].\n");
        let (_, d) = expfamily(ExpFamily::PConflict, 1);
        assert_eq!(d.len(), 4);
        assert!(d.iter().any(|f| f.to_string() == "E@[8,8]"));
    }

    #[test]
    fn target_names() {
        for t in SatTarget::ALL {
            assert_eq!(t.as_str().parse::<SatTarget>().unwrap(), t);
        }
        for f in ExpFamily::ALL {
            assert_eq!(f.as_str().parse::<ExpFamily>().unwrap(), f);
        }
    }
}
