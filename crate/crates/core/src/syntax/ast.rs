use std::collections::BTreeSet;
use std::fmt;

use crate::facts::{GroundAtom, Symbol};
use crate::time::{Interval, TimePoint};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(Symbol),
    Const(Symbol),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) | Term::Const(v) => f.write_str(v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub predicate: Symbol,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| matches!(t, Term::Const(_)))
    }

    /// The ground atom, if every argument is a constant.
    pub fn to_ground(&self) -> Option<GroundAtom> {
        let args = self
            .args
            .iter()
            .map(|t| match t {
                Term::Const(c) => Some(c.clone()),
                Term::Var(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(GroundAtom {
            predicate: self.predicate.clone(),
            args,
        })
    }
}

impl From<&GroundAtom> for Atom {
    fn from(g: &GroundAtom) -> Self {
        Atom {
            predicate: g.predicate.clone(),
            args: g.args.iter().cloned().map(Term::Const).collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{t}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// An interval with non-negative endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Range(Interval);

impl Range {
    pub fn new(iv: Interval) -> Option<Range> {
        (iv.lo() >= TimePoint::Int(0)).then_some(Range(iv))
    }

    pub fn closed(lo: i64, hi: i64) -> Option<Range> {
        Range::new(Interval::closed(lo, hi)?)
    }

    pub fn at_least(lo: i64) -> Option<Range> {
        Range::new(Interval::new(TimePoint::Int(lo), TimePoint::PosInf)?)
    }

    pub fn interval(&self) -> Interval {
        self.0
    }

    pub fn lo(&self) -> i64 {
        self.0.lo().as_int().expect("range lower endpoint is finite")
    }

    /// Upper endpoint, `None` for `inf`.
    pub fn hi(&self) -> Option<i64> {
        self.0.hi().as_int()
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    Atom(Atom),
    Top,
    BoxPlus(Range, Box<Literal>),
    BoxMinus(Range, Box<Literal>),
    DiamondPlus(Range, Box<Literal>),
    DiamondMinus(Range, Box<Literal>),
    Until(Box<Literal>, Range, Box<Literal>),
    Since(Box<Literal>, Range, Box<Literal>),
}

impl Literal {
    /// No diamond, until or since anywhere inside.
    pub fn is_deterministic(&self) -> bool {
        match self {
            Literal::Atom(_) | Literal::Top => true,
            Literal::BoxPlus(_, l) | Literal::BoxMinus(_, l) => l.is_deterministic(),
            _ => false,
        }
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Literal::Atom(a) => out.push(a),
            Literal::Top => {}
            Literal::BoxPlus(_, l)
            | Literal::BoxMinus(_, l)
            | Literal::DiamondPlus(_, l)
            | Literal::DiamondMinus(_, l) => l.collect_atoms(out),
            Literal::Until(l, _, r) | Literal::Since(l, _, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Every range used by an operator, outermost first.
    pub fn ranges(&self) -> Vec<Range> {
        let mut out = Vec::new();
        self.visit(&mut |l| match l {
            Literal::BoxPlus(r, _)
            | Literal::BoxMinus(r, _)
            | Literal::DiamondPlus(r, _)
            | Literal::DiamondMinus(r, _)
            | Literal::Until(_, r, _)
            | Literal::Since(_, r, _) => out.push(*r),
            _ => {}
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut dyn FnMut(&Literal)) {
        f(self);
        match self {
            Literal::Atom(_) | Literal::Top => {}
            Literal::BoxPlus(_, l)
            | Literal::BoxMinus(_, l)
            | Literal::DiamondPlus(_, l)
            | Literal::DiamondMinus(_, l) => l.visit(f),
            Literal::Until(l, _, r) | Literal::Since(l, _, r) => {
                l.visit(f);
                r.visit(f);
            }
        }
    }

    /// Variables with at least one occurrence outside every left operand of
    /// until/since.
    pub fn binding_vars(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Literal::Atom(a) => {
                for t in &a.args {
                    if let Term::Var(v) = t {
                        out.insert(v.clone());
                    }
                }
            }
            Literal::Top => {}
            Literal::BoxPlus(_, l)
            | Literal::BoxMinus(_, l)
            | Literal::DiamondPlus(_, l)
            | Literal::DiamondMinus(_, l) => l.binding_vars(out),
            Literal::Until(_, _, r) | Literal::Since(_, _, r) => r.binding_vars(out),
        }
    }

    pub fn vars(&self, out: &mut Vec<Symbol>) {
        for a in self.atoms() {
            for t in &a.args {
                if let Term::Var(v) = t {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
            }
        }
    }

    /// Applies `f` to every atom, rebuilding the literal.
    pub fn map_atoms(&self, f: &mut dyn FnMut(&Atom) -> Atom) -> Literal {
        match self {
            Literal::Atom(a) => Literal::Atom(f(a)),
            Literal::Top => Literal::Top,
            Literal::BoxPlus(r, l) => Literal::BoxPlus(*r, Box::new(l.map_atoms(f))),
            Literal::BoxMinus(r, l) => Literal::BoxMinus(*r, Box::new(l.map_atoms(f))),
            Literal::DiamondPlus(r, l) => Literal::DiamondPlus(*r, Box::new(l.map_atoms(f))),
            Literal::DiamondMinus(r, l) => Literal::DiamondMinus(*r, Box::new(l.map_atoms(f))),
            Literal::Until(l, r, m) => {
                Literal::Until(Box::new(l.map_atoms(f)), *r, Box::new(m.map_atoms(f)))
            }
            Literal::Since(l, r, m) => {
                Literal::Since(Box::new(l.map_atoms(f)), *r, Box::new(m.map_atoms(f)))
            }
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Atom(a) => write!(f, "{a}"),
            Literal::Top => write!(f, "top"),
            Literal::BoxPlus(r, l) => write!(f, "boxplus{r} {l}"),
            Literal::BoxMinus(r, l) => write!(f, "boxminus{r} {l}"),
            Literal::DiamondPlus(r, l) => write!(f, "diamondplus{r} {l}"),
            Literal::DiamondMinus(r, l) => write!(f, "diamondminus{r} {l}"),
            Literal::Until(l, r, m) => write!(f, "({l} until{r} {m})"),
            Literal::Since(l, r, m) => write!(f, "({l} since{r} {m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Head {
    Bot,
    Lit(Literal),
}

impl fmt::Display for Head {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Head::Bot => write!(f, "bot"),
            Head::Lit(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: Head,
    pub body: Vec<Literal>,
}

impl Rule {
    pub fn is_bot(&self) -> bool {
        matches!(self.head, Head::Bot)
    }

    /// Variables in order of first occurrence, head first.
    pub fn vars(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        if let Head::Lit(h) = &self.head {
            h.vars(&mut out);
        }
        for l in &self.body {
            l.vars(&mut out);
        }
        out
    }

    pub fn is_ground(&self) -> bool {
        self.vars().is_empty()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :- ", self.head)?;
        for (i, l) in self.body.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ".")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program {
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Self {
        Program { rules }
    }

    /// Predicates occurring in some rule head.
    pub fn intensional(&self) -> BTreeSet<Symbol> {
        self.rules
            .iter()
            .filter_map(|r| match &r.head {
                Head::Lit(l) => Some(l.atoms().into_iter().map(|a| a.predicate.clone())),
                Head::Bot => None,
            })
            .flatten()
            .collect()
    }

    /// Largest finite range endpoint anywhere in the program.
    pub fn max_range_constant(&self) -> i64 {
        self.literals()
            .flat_map(|l| l.ranges())
            .map(|r| r.hi().unwrap_or(r.lo()))
            .max()
            .unwrap_or(0)
    }

    pub fn has_unbounded_range(&self) -> bool {
        self.literals()
            .flat_map(|l| l.ranges())
            .any(|r| r.hi().is_none())
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        self.rules.iter().flat_map(|r| {
            let head = match &r.head {
                Head::Lit(l) => Some(l),
                Head::Bot => None,
            };
            head.into_iter().chain(r.body.iter())
        })
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QueryTerm {
    /// A distinguished answer variable, written `?v`.
    Answer(Symbol),
    Const(Symbol),
}

/// `P(?v, c)@r`: find tuples for the answer variables and intervals for `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Query {
    pub predicate: Symbol,
    pub args: Vec<QueryTerm>,
    pub interval_var: Symbol,
}

impl Query {
    /// Distinct answer variables in order of first occurrence.
    pub fn answer_vars(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = Vec::new();
        for a in &self.args {
            if let QueryTerm::Answer(v) = a {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }

    /// Binds the answer variables of `atom`, if it matches the query shape.
    pub fn match_atom(&self, atom: &GroundAtom) -> Option<Vec<Symbol>> {
        if atom.predicate != self.predicate || atom.args.len() != self.args.len() {
            return None;
        }
        let vars = self.answer_vars();
        let mut binding: Vec<Option<Symbol>> = vec![None; vars.len()];
        for (qt, c) in self.args.iter().zip(&atom.args) {
            match qt {
                QueryTerm::Const(k) if k != c => return None,
                QueryTerm::Const(_) => {}
                QueryTerm::Answer(v) => {
                    let i = vars.iter().position(|x| x == v)?;
                    match &binding[i] {
                        Some(b) if b != c => return None,
                        _ => binding[i] = Some(c.clone()),
                    }
                }
            }
        }
        binding.into_iter().collect()
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                match a {
                    QueryTerm::Answer(v) => write!(f, "?{v}")?,
                    QueryTerm::Const(c) => write!(f, "{c}")?,
                }
            }
            write!(f, ")")?;
        }
        write!(f, "@{}", self.interval_var)
    }
}
