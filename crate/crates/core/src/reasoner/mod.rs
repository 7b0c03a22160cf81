//! Canonical-model materialization on interval representations.
//!
//! A [`Reasoner`] grounds and compiles a program once; it can then be
//! applied to many datasets over the same constants, which is what the
//! repair search does.

mod ops;
mod reference;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub use ops::{box_minus, box_plus, diamond_minus, diamond_plus, since, until};
pub use reference::{punctual_reference_model, ReferenceModel};

use crate::error::{Error, Result};
use crate::facts::{FactSet, GroundAtom, Symbol, TemporalFact};
use crate::syntax::{ground_program, Head, Literal, Program, Query, Range, Term};
use crate::time::{Interval, IntervalSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineLimits {
    pub max_iterations: usize,
    pub max_endpoint: i64,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits {
            max_iterations: 10_000,
            max_endpoint: 1_000_000,
        }
    }
}

/// Per ground atom, the set of timepoints where it holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalModel {
    atoms: BTreeMap<GroundAtom, IntervalSet>,
}

impl IntervalModel {
    pub fn get(&self, atom: &GroundAtom) -> Option<&IntervalSet> {
        self.atoms.get(atom)
    }

    pub fn holds(&self, atom: &GroundAtom, t: i64) -> bool {
        self.atoms.get(atom).is_some_and(|s| s.contains(t))
    }

    pub fn covers(&self, f: &TemporalFact) -> bool {
        self.atoms.get(&f.atom).is_some_and(|s| s.covers(&f.interval))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroundAtom, &IntervalSet)> {
        self.atoms.iter()
    }

    /// The model as a normal-form fact set.
    pub fn to_facts(&self) -> FactSet {
        FactSet::from_coverage(&self.atoms)
    }

    /// Eval of a ground literal.
    pub fn eval(&self, l: &Literal) -> IntervalSet {
        eval_with(l, &mut |a| {
            let g = a.to_ground().expect("literal must be ground");
            self.atoms.get(&g).cloned().unwrap_or_default()
        })
    }
}

impl fmt::Display for IntervalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_facts())
    }
}

fn eval_with(l: &Literal, atom: &mut dyn FnMut(&crate::syntax::Atom) -> IntervalSet) -> IntervalSet {
    match l {
        Literal::Atom(a) => atom(a),
        Literal::Top => IntervalSet::all(),
        Literal::BoxPlus(r, x) => box_plus(&eval_with(x, atom), r),
        Literal::BoxMinus(r, x) => box_minus(&eval_with(x, atom), r),
        Literal::DiamondPlus(r, x) => diamond_plus(&eval_with(x, atom), r),
        Literal::DiamondMinus(r, x) => diamond_minus(&eval_with(x, atom), r),
        Literal::Until(x, r, y) => until(&eval_with(x, atom), r, &eval_with(y, atom)),
        Literal::Since(x, r, y) => since(&eval_with(x, atom), r, &eval_with(y, atom)),
    }
}

/// The set of timepoints where the ground literal `l` holds in `m`.
pub fn eval_literal(m: &IntervalModel, l: &Literal) -> IntervalSet {
    m.eval(l)
}

/// Adds to `m` the minimal points making the deterministic `head` hold on
/// every point of `t_set`.
pub fn head_assert(m: &mut IntervalModel, head: &Literal, t_set: &IntervalSet) {
    match head {
        Literal::Atom(a) => {
            let g = a.to_ground().expect("head must be ground");
            m.atoms.entry(g).or_default().union_with(t_set);
        }
        Literal::Top => {}
        Literal::BoxPlus(r, l) => head_assert(m, l, &diamond_minus(t_set, r)),
        Literal::BoxMinus(r, l) => head_assert(m, l, &diamond_plus(t_set, r)),
        _ => panic!("head literal must be deterministic"),
    }
}

#[derive(Clone, Debug)]
enum CLit {
    Atom(usize),
    Top,
    BoxPlus(Range, Box<CLit>),
    BoxMinus(Range, Box<CLit>),
    DiamondPlus(Range, Box<CLit>),
    DiamondMinus(Range, Box<CLit>),
    Until(Box<CLit>, Range, Box<CLit>),
    Since(Box<CLit>, Range, Box<CLit>),
}

impl CLit {
    fn eval(&self, m: &[IntervalSet]) -> IntervalSet {
        match self {
            CLit::Atom(i) => m[*i].clone(),
            CLit::Top => IntervalSet::all(),
            CLit::BoxPlus(r, x) => box_plus(&x.eval(m), r),
            CLit::BoxMinus(r, x) => box_minus(&x.eval(m), r),
            CLit::DiamondPlus(r, x) => diamond_plus(&x.eval(m), r),
            CLit::DiamondMinus(r, x) => diamond_minus(&x.eval(m), r),
            CLit::Until(x, r, y) => until(&x.eval(m), r, &y.eval(m)),
            CLit::Since(x, r, y) => since(&x.eval(m), r, &y.eval(m)),
        }
    }

    fn atoms(&self, out: &mut Vec<usize>) {
        match self {
            CLit::Atom(i) => out.push(*i),
            CLit::Top => {}
            CLit::BoxPlus(_, x)
            | CLit::BoxMinus(_, x)
            | CLit::DiamondPlus(_, x)
            | CLit::DiamondMinus(_, x) => x.atoms(out),
            CLit::Until(x, _, y) | CLit::Since(x, _, y) => {
                x.atoms(out);
                y.atoms(out);
            }
        }
    }
}

#[derive(Clone, Debug)]
struct CRule {
    /// `None` for ⊥.
    head: Option<CLit>,
    body: Vec<CLit>,
    deps: Vec<usize>,
    source: String,
}

impl CRule {
    fn eval_body(&self, m: &[IntervalSet]) -> IntervalSet {
        let mut acc = IntervalSet::all();
        for l in &self.body {
            if acc.is_empty() {
                break;
            }
            acc = acc.intersection(&l.eval(m));
        }
        acc
    }
}

/// A compiled ground program.
#[derive(Clone, Debug)]
pub struct Reasoner {
    atoms: Vec<GroundAtom>,
    ids: HashMap<GroundAtom, usize>,
    rules: Vec<CRule>,
    bots: Vec<CRule>,
    limits: EngineLimits,
}

/// Outcome of a fixpoint run.
enum Run {
    Model(Vec<IntervalSet>),
    BotFired,
}

fn program_constants(p: &Program) -> BTreeSet<Symbol> {
    p.literals()
        .flat_map(|l| l.atoms())
        .flat_map(|a| a.args.iter())
        .filter_map(|t| match t {
            Term::Const(c) => Some(c.clone()),
            Term::Var(_) => None,
        })
        .collect()
}

impl Reasoner {
    /// Grounds `p` over `constants` together with the constants the
    /// program itself mentions.
    pub fn new(p: &Program, constants: &BTreeSet<Symbol>, limits: EngineLimits) -> Reasoner {
        let mut all = constants.clone();
        all.extend(program_constants(p));
        let ground = ground_program(p, &all);
        let mut r = Reasoner {
            atoms: Vec::new(),
            ids: HashMap::new(),
            rules: Vec::new(),
            bots: Vec::new(),
            limits,
        };
        for rule in &ground.rules {
            let body: Vec<CLit> = rule.body.iter().map(|l| r.compile(l)).collect();
            let mut deps = Vec::new();
            for l in &body {
                l.atoms(&mut deps);
            }
            deps.sort_unstable();
            deps.dedup();
            let compiled = CRule {
                head: match &rule.head {
                    Head::Bot => None,
                    Head::Lit(h) => Some(r.compile(h)),
                },
                body,
                deps,
                source: rule.to_string(),
            };
            if compiled.head.is_some() {
                r.rules.push(compiled);
            } else {
                r.bots.push(compiled);
            }
        }
        r
    }

    /// Grounds over the constants of `d`.
    pub fn for_dataset(p: &Program, d: &FactSet, limits: EngineLimits) -> Reasoner {
        Reasoner::new(p, &d.constants(), limits)
    }

    pub fn limits(&self) -> EngineLimits {
        self.limits
    }

    fn compile(&mut self, l: &Literal) -> CLit {
        match l {
            Literal::Atom(a) => {
                let g = a.to_ground().expect("grounded literal");
                CLit::Atom(self.intern(g))
            }
            Literal::Top => CLit::Top,
            Literal::BoxPlus(r, x) => CLit::BoxPlus(*r, Box::new(self.compile(x))),
            Literal::BoxMinus(r, x) => CLit::BoxMinus(*r, Box::new(self.compile(x))),
            Literal::DiamondPlus(r, x) => CLit::DiamondPlus(*r, Box::new(self.compile(x))),
            Literal::DiamondMinus(r, x) => CLit::DiamondMinus(*r, Box::new(self.compile(x))),
            Literal::Until(x, r, y) => {
                CLit::Until(Box::new(self.compile(x)), *r, Box::new(self.compile(y)))
            }
            Literal::Since(x, r, y) => {
                CLit::Since(Box::new(self.compile(x)), *r, Box::new(self.compile(y)))
            }
        }
    }

    fn intern(&mut self, g: GroundAtom) -> usize {
        if let Some(&i) = self.ids.get(&g) {
            return i;
        }
        let i = self.atoms.len();
        self.ids.insert(g.clone(), i);
        self.atoms.push(g);
        i
    }

    /// Index of an atom the program mentions; atoms the program never
    /// mentions cannot influence derivations.
    pub fn atom_id(&self, a: &GroundAtom) -> Option<usize> {
        self.ids.get(a).copied()
    }

    /// Asserts `head` on `t`, returning the ids of atoms that grew.
    fn assert_head(head: &CLit, t: &IntervalSet, m: &mut [IntervalSet], grown: &mut Vec<usize>) {
        match head {
            CLit::Atom(i) => {
                if m[*i].union_with(t) {
                    grown.push(*i);
                }
            }
            CLit::Top => {}
            CLit::BoxPlus(r, l) => Self::assert_head(l, &diamond_minus(t, r), m, grown),
            CLit::BoxMinus(r, l) => Self::assert_head(l, &diamond_plus(t, r), m, grown),
            _ => unreachable!("non-deterministic head"),
        }
    }

    fn initial(&self, facts: impl IntoIterator<Item = (usize, Interval)>) -> Vec<IntervalSet> {
        let mut per: Vec<Vec<Interval>> = vec![Vec::new(); self.atoms.len()];
        for (i, iv) in facts {
            per[i].push(iv);
        }
        per.into_iter().map(IntervalSet::from_iter).collect()
    }

    /// Least fixpoint. With `stop_on_bot`, returns as soon as some ⊥ body
    /// is nonempty; the model only grows, so the final model would fire it
    /// too.
    fn run(&self, mut m: Vec<IntervalSet>, stop_on_bot: bool) -> Result<Run> {
        let extent = m
            .iter()
            .flat_map(|s| s.finite_endpoints())
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0);
        let bound = (self.limits.max_endpoint as u64).saturating_add(extent);

        let n = self.atoms.len();
        // Step at which each atom last grew; rules re-run only when a
        // dependency grew after their last evaluation.
        let mut grew_at = vec![1u64; n];
        let mut rule_seen = vec![0u64; self.rules.len()];
        let mut bot_seen = vec![0u64; self.bots.len()];
        let mut step = 1u64;
        let mut grown = Vec::new();

        let dirty = |deps: &[usize], seen: u64, grew_at: &[u64]| {
            seen == 0 || deps.iter().any(|&d| grew_at[d] > seen)
        };

        for round in 0.. {
            if round >= self.limits.max_iterations {
                return Err(Error::Divergence(format!(
                    "no fixpoint after {} rounds",
                    self.limits.max_iterations
                )));
            }
            let mut changed = false;
            for (ri, rule) in self.rules.iter().enumerate() {
                if !dirty(&rule.deps, rule_seen[ri], &grew_at) {
                    continue;
                }
                step += 1;
                rule_seen[ri] = step;
                let t = rule.eval_body(&m);
                if t.is_empty() {
                    continue;
                }
                grown.clear();
                Self::assert_head(rule.head.as_ref().unwrap(), &t, &mut m, &mut grown);
                for &g in &grown {
                    grew_at[g] = step + 1;
                    changed = true;
                    if let Some(x) = m[g].finite_endpoints().find(|x| x.unsigned_abs() > bound) {
                        return Err(Error::Divergence(format!(
                            "endpoint {x} of {} exceeds the bound {bound} (rule `{}`)",
                            self.atoms[g], rule.source
                        )));
                    }
                }
                step += 1;
            }
            if stop_on_bot {
                for (bi, bot) in self.bots.iter().enumerate() {
                    if !dirty(&bot.deps, bot_seen[bi], &grew_at) {
                        continue;
                    }
                    step += 1;
                    bot_seen[bi] = step;
                    if !bot.eval_body(&m).is_empty() {
                        return Ok(Run::BotFired);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Run::Model(m))
    }

    fn bot_fires(&self, m: &[IntervalSet]) -> bool {
        self.bots.iter().any(|b| !b.eval_body(m).is_empty())
    }

    /// Consistency of the facts given by atom id.
    pub(crate) fn consistent_ids(
        &self,
        facts: impl IntoIterator<Item = (usize, Interval)>,
    ) -> Result<bool> {
        match self.run(self.initial(facts), true)? {
            Run::BotFired => Ok(false),
            Run::Model(m) => Ok(!self.bot_fires(&m)),
        }
    }

    fn ids_of<'a>(&'a self, d: &'a FactSet) -> impl Iterator<Item = (usize, Interval)> + 'a {
        d.iter()
            .filter_map(|f| self.atom_id(&f.atom).map(|i| (i, f.interval)))
    }

    pub fn is_consistent(&self, d: &FactSet) -> Result<bool> {
        self.consistent_ids(self.ids_of(d))
    }

    /// The least model of the program and `d`, ignoring ⊥ rules.
    pub fn materialize(&self, d: &FactSet) -> Result<IntervalModel> {
        let Run::Model(m) = self.run(self.initial(self.ids_of(d)), false)? else {
            unreachable!("bot rules are not evaluated during materialization")
        };
        let mut atoms: BTreeMap<GroundAtom, IntervalSet> = d.coverage();
        for (i, set) in m.into_iter().enumerate() {
            if !set.is_empty() {
                atoms.insert(self.atoms[i].clone(), set);
            }
        }
        Ok(IntervalModel { atoms })
    }

    /// Materializes and reports whether some ⊥ rule fires.
    pub fn materialize_checked(&self, d: &FactSet) -> Result<(IntervalModel, bool)> {
        let model = self.materialize(d)?;
        let m: Vec<IntervalSet> = self
            .atoms
            .iter()
            .map(|a| model.get(a).cloned().unwrap_or_default())
            .collect();
        let consistent = !self.bot_fires(&m);
        Ok((model, consistent))
    }

    /// Vacuously true on inconsistent input.
    pub fn entails(&self, d: &FactSet, f: &TemporalFact) -> Result<bool> {
        let (model, consistent) = self.materialize_checked(d)?;
        Ok(!consistent || model.covers(f))
    }

    /// Answers over a consistent dataset.
    pub fn certain_answers(&self, d: &FactSet, q: &Query) -> Result<Vec<Answer>> {
        let (model, consistent) = self.materialize_checked(d)?;
        if !consistent {
            return Err(Error::InconsistentInput(
                "certain answers need a consistent dataset".into(),
            ));
        }
        Ok(answers_in(&model, q))
    }
}

/// One query answer: a tuple and the maximal intervals on which it holds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Answer {
    pub tuple: Vec<Symbol>,
    pub intervals: Vec<Interval>,
}

/// Per answer tuple, the union of the sets of all matching atoms.
pub(crate) fn answer_sets(model: &IntervalModel, q: &Query) -> BTreeMap<Vec<Symbol>, IntervalSet> {
    let mut out: BTreeMap<Vec<Symbol>, IntervalSet> = BTreeMap::new();
    for (atom, set) in model.iter() {
        if let Some(tuple) = q.match_atom(atom) {
            if !set.is_empty() {
                out.entry(tuple).or_default().union_with(set);
            }
        }
    }
    out
}

pub(crate) fn answers_from_sets(sets: BTreeMap<Vec<Symbol>, IntervalSet>) -> Vec<Answer> {
    sets.into_iter()
        .filter(|(_, s)| !s.is_empty())
        .map(|(tuple, s)| Answer {
            tuple,
            intervals: s.intervals().to_vec(),
        })
        .collect()
}

pub(crate) fn answers_in(model: &IntervalModel, q: &Query) -> Vec<Answer> {
    answers_from_sets(answer_sets(model, q))
}

pub fn materialize(p: &Program, d: &FactSet, limits: &EngineLimits) -> Result<IntervalModel> {
    Reasoner::for_dataset(p, d, *limits).materialize(d)
}

pub fn is_consistent(p: &Program, d: &FactSet, limits: &EngineLimits) -> Result<bool> {
    Reasoner::for_dataset(p, d, *limits).is_consistent(d)
}

pub fn entails_fact(
    p: &Program,
    d: &FactSet,
    f: &TemporalFact,
    limits: &EngineLimits,
) -> Result<bool> {
    Reasoner::for_dataset(p, d, *limits).entails(d, f)
}

pub fn certain_answers(
    p: &Program,
    d: &FactSet,
    q: &Query,
    limits: &EngineLimits,
) -> Result<Vec<Answer>> {
    Reasoner::for_dataset(p, d, *limits).certain_answers(d, q)
}

/// Largest distance from `t` at which the truth of `l` at `t` can depend
/// on an atom, for bounded ranges.
pub(crate) fn reach(l: &Literal) -> Option<i64> {
    Some(match l {
        Literal::Atom(_) | Literal::Top => 0,
        Literal::BoxPlus(r, x)
        | Literal::BoxMinus(r, x)
        | Literal::DiamondPlus(r, x)
        | Literal::DiamondMinus(r, x) => r.hi()? + reach(x)?,
        Literal::Until(x, r, y) | Literal::Since(x, r, y) => r.hi()? + reach(x)?.max(reach(y)?),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::syntax::{parse_fact, parse_instance, parse_program, parse_query};

    pub(crate) const PROGRAM: &str = "
        PotFnhtr(x) :- Fever(x), boxminus(0,24] NoFever(x), diamondminus[0,4] GetBlood(x,y).
        FevEp(x) :- Fever(x), diamondminus[0,24] (NoFever(x) until {5} GetBlood(x,y)).
        bot :- Fever(x), NoFever(x).
        boxplus[0,inf) AntiDRisk(x) :- PositiveAntiD(x).
    ";
    pub(crate) const CONSISTENT: &str = "
        PositiveAntiD(a)@{-90}. GetBlood(a,b)@[24,26]. NoFever(a)@[0,29). Fever(a)@[29,34].
    ";
    pub(crate) const INCONSISTENT: &str = "
        PositiveAntiD(a)@{-90}. GetBlood(a,b)@[24,26]. NoFever(a)@[0,32].
        Fever(a)@[14,18]. Fever(a)@[29,34].
    ";

    fn load(data: &str) -> (Program, FactSet) {
        let (p, d) = parse_instance(PROGRAM, data).unwrap();
        (p, d.facts)
    }

    #[test]
    fn example_model() {
        let (p, d) = load(CONSISTENT);
        let m = materialize(&p, &d, &EngineLimits::default()).unwrap();
        let a = |pred: &str| GroundAtom::new(pred, &["a"]);
        assert_eq!(m.get(&a("FevEp")).unwrap().to_string(), "{[29,34]}");
        assert_eq!(m.get(&a("PotFnhtr")).unwrap().to_string(), "{[29,29]}");
        assert_eq!(m.get(&a("AntiDRisk")).unwrap().to_string(), "{[-90,inf)}");
    }

    #[test]
    fn empty_program_model_is_data() {
        let d = crate::syntax::parse_dataset("P@[0,3]. Q(a)@{7}.").unwrap().facts;
        let m = materialize(&Program::default(), &d, &EngineLimits::default()).unwrap();
        assert_eq!(m.to_facts(), d);
    }

    #[test]
    fn periodic_program_diverges() {
        let p = parse_program("P :- diamondminus{2} P.").unwrap();
        let d = crate::syntax::parse_dataset("P@{0}.").unwrap().facts;
        for rounds in 1..=5 {
            let limits = EngineLimits {
                max_iterations: rounds,
                max_endpoint: 1_000_000,
            };
            assert!(matches!(materialize(&p, &d, &limits), Err(Error::Divergence(_))));
        }
        let limits = EngineLimits {
            max_iterations: 100_000,
            max_endpoint: 100,
        };
        assert!(matches!(materialize(&p, &d, &limits), Err(Error::Divergence(_))));
        assert!(matches!(
            materialize(&p, &d, &EngineLimits::default()),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn periodic_rounds_add_one_point() {
        let p = parse_program("P :- diamondminus{2} P.").unwrap();
        let d = crate::syntax::parse_dataset("P@{0}.").unwrap().facts;
        let r = Reasoner::for_dataset(&p, &d, EngineLimits::default());
        let mut m = r.initial(r.ids_of(&d));
        for k in 1..=5 {
            let rule = &r.rules[0];
            let t = rule.eval_body(&m);
            let mut grown = Vec::new();
            Reasoner::assert_head(rule.head.as_ref().unwrap(), &t, &mut m, &mut grown);
            assert_eq!(m[0].len(), k + 1);
        }
    }

    #[test]
    fn consistency_examples() {
        let limits = EngineLimits::default();
        let (p, d) = load(INCONSISTENT);
        assert!(!is_consistent(&p, &d, &limits).unwrap());
        let (p, d) = load(CONSISTENT);
        assert!(is_consistent(&p, &d, &limits).unwrap());
        let (p, d) = parse_instance("bot :- P, Q.", "P@[0,4]. Q@[5,9].").unwrap();
        assert!(is_consistent(&p, &d.facts, &limits).unwrap());
    }

    #[test]
    fn entailment_examples() {
        let limits = EngineLimits::default();
        let (p, d) = load(CONSISTENT);
        let f = |s: &str| parse_fact(s).unwrap();
        assert!(entails_fact(&p, &d, &f("FevEp(a)@[29,34]"), &limits).unwrap());
        assert!(!entails_fact(&p, &d, &f("PotFnhtr(a)@{30}"), &limits).unwrap());
        let (p, d) = load(INCONSISTENT);
        assert!(entails_fact(&p, &d, &f("Nothing@{0}"), &limits).unwrap());
    }

    #[test]
    fn certain_answer_examples() {
        let limits = EngineLimits::default();
        let (p, d) = load(CONSISTENT);
        let ans = certain_answers(&p, &d, &parse_query("FevEp(?v)@r").unwrap(), &limits).unwrap();
        assert_eq!(ans.len(), 1);
        assert_eq!(&*ans[0].tuple[0], "a");
        assert_eq!(ans[0].intervals, vec![Interval::closed(29, 34).unwrap()]);
        let ans = certain_answers(&p, &d, &parse_query("AntiDRisk(?v)@r").unwrap(), &limits).unwrap();
        assert_eq!(ans[0].intervals[0].to_string(), "[-90,inf)");
        let empty = certain_answers(&p, &FactSet::new(), &parse_query("FevEp(?v)@r").unwrap(), &limits);
        assert_eq!(empty.unwrap(), vec![]);
        let (p, d) = load(INCONSISTENT);
        let err = certain_answers(&p, &d, &parse_query("FevEp(?v)@r").unwrap(), &limits);
        assert!(matches!(err, Err(Error::InconsistentInput(_))));
    }

    #[test]
    fn head_assert_examples() {
        let mut m = IntervalModel::default();
        let head = parse_program("boxplus[0,inf) AntiDRisk :- P.").unwrap();
        let Head::Lit(h) = &head.rules[0].head else { panic!() };
        head_assert(&mut m, h, &IntervalSet::single(Interval::point(-90)));
        assert_eq!(m.to_facts().to_string(), "AntiDRisk@[-90,inf).\n");

        let mut m = IntervalModel::default();
        let head = parse_program("boxminus{2} P :- Q.").unwrap();
        let Head::Lit(h) = &head.rules[0].head else { panic!() };
        head_assert(&mut m, h, &IntervalSet::single(Interval::point(10)));
        assert_eq!(m.to_facts().to_string(), "P@[8,8].\n");

        let mut m = IntervalModel::default();
        let l = Literal::Atom(crate::syntax::Atom::from(&GroundAtom::new("P", &[])));
        head_assert(&mut m, &l, &IntervalSet::single(Interval::closed(0, 3).unwrap()));
        assert_eq!(m.to_facts().to_string(), "P@[0,3].\n");
    }

    #[test]
    fn eval_literal_examples() {
        let d = crate::syntax::parse_dataset(
            "P@[0,10]. NoFever@[0,29]. GetBlood@[24,26]. A@{3}.",
        )
        .unwrap()
        .facts;
        let m = materialize(&Program::default(), &d, &EngineLimits::default()).unwrap();
        let lit = |s: &str| {
            let p = parse_program(&format!("H :- {s}.")).unwrap();
            p.rules[0].body[0].clone()
        };
        assert_eq!(eval_literal(&m, &lit("boxplus[0,2] P")).to_string(), "{[0,8]}");
        assert_eq!(
            eval_literal(&m, &lit("(NoFever until {5} GetBlood)")).to_string(),
            "{[19,21]}"
        );
        assert_eq!(
            eval_literal(&m, &lit("diamondminus[0,inf) A")).to_string(),
            "{[3,inf)}"
        );
        assert_eq!(eval_literal(&m, &Literal::Top), IntervalSet::all());
    }
}
