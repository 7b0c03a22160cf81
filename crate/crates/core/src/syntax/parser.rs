//! Hand-written lexer and recursive-descent parser.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::ast::{Atom, Head, Literal, Program, Query, QueryTerm, Range, Rule, Term};
use crate::error::{ParseError, ParseErrorKind};
use crate::facts::{FactSet, GroundAtom, Symbol, TemporalFact};
use crate::time::{Interval, TimePoint};

const KEYWORDS: &[&str] = &[
    "top",
    "bot",
    "boxplus",
    "boxminus",
    "diamondplus",
    "diamondminus",
    "until",
    "since",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    AnswerVar(String),
    Int(i64),
    LParen,
    RParen,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Comma,
    Dot,
    At,
    Implies,
    Minus,
    Plus,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::AnswerVar(s) => format!("`?{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::At => "`@`".into(),
            Tok::Implies => "`:-`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (sl, sc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '%' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let tok = if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                s.push(c);
                bump(&mut chars);
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                bump(&mut chars);
            }
            let n = s.parse::<i64>().map_err(|_| {
                ParseError::new(ParseErrorKind::Syntax, format!("integer `{s}` out of range"), sl, sc)
            })?;
            Tok::Int(n)
        } else if c == '?' {
            bump(&mut chars);
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                s.push(c);
                bump(&mut chars);
            }
            if s.is_empty() {
                return Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    "expected an identifier after `?`",
                    sl,
                    sc,
                ));
            }
            Tok::AnswerVar(s)
        } else if c == ':' {
            bump(&mut chars);
            if chars.peek() != Some(&'-') {
                return Err(ParseError::new(ParseErrorKind::Syntax, "expected `:-`", sl, sc));
            }
            bump(&mut chars);
            Tok::Implies
        } else {
            bump(&mut chars);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '@' => Tok::At,
                '-' => Tok::Minus,
                '+' => Tok::Plus,
                other => {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        format!("unexpected character `{other}`"),
                        sl,
                        sc,
                    ))
                }
            }
        };
        out.push(Spanned { tok, line: sl, col: sc });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// Names treated as constants, plus predicate arities seen so far.
#[derive(Clone, Debug, Default)]
pub struct Vocabulary {
    pub constants: BTreeSet<Symbol>,
    pub arities: BTreeMap<Symbol, usize>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Vocabulary::default()
    }

    pub fn with_constants<I, S>(constants: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Vocabulary {
            constants: constants.into_iter().map(|s| Arc::from(s.as_ref())).collect(),
            arities: BTreeMap::new(),
        }
    }
}

struct Parser<'v> {
    toks: Vec<Spanned>,
    pos: usize,
    vocab: &'v mut Vocabulary,
    interner: BTreeSet<Symbol>,
}

type PResult<T> = Result<T, ParseError>;

impl<'v> Parser<'v> {
    fn new(text: &str, vocab: &'v mut Vocabulary) -> PResult<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            vocab,
            interner: BTreeSet::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let s = &self.toks[self.pos];
        (s.line, s.col)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, kind: ParseErrorKind, msg: impl Into<String>) -> PResult<T> {
        let (l, c) = self.here();
        Err(ParseError::new(kind, msg, l, c))
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        self.err(
            ParseErrorKind::Syntax,
            format!("expected {expected}, found {}", self.peek().describe()),
        )
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn sym(&mut self, s: &str) -> Symbol {
        if let Some(x) = self.interner.get(s) {
            return x.clone();
        }
        let x: Symbol = Arc::from(s);
        self.interner.insert(x.clone());
        x
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.unexpected(what),
        }
    }

    fn check_arity(&mut self, pred: &Symbol, arity: usize, at: (usize, usize)) -> PResult<()> {
        match self.vocab.arities.get(pred) {
            Some(&n) if n != arity => Err(ParseError::new(
                ParseErrorKind::Arity,
                format!("predicate `{pred}` used with arity {arity} but previously with {n}"),
                at.0,
                at.1,
            )),
            Some(_) => Ok(()),
            None => {
                self.vocab.arities.insert(pred.clone(), arity);
                Ok(())
            }
        }
    }

    /// `name` or `name(arg, ...)`; arguments are handed to `arg`.
    fn atom_with<T>(
        &mut self,
        mut arg: impl FnMut(&mut Self) -> PResult<T>,
    ) -> PResult<(Symbol, Vec<T>)> {
        let at = self.here();
        let name = self.ident("a predicate name")?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                format!("keyword `{name}` cannot be used as a predicate"),
                at.0,
                at.1,
            ));
        }
        let pred = self.sym(&name);
        let mut args = Vec::new();
        if *self.peek() == Tok::LParen {
            self.next();
            loop {
                args.push(arg(self)?);
                match self.next() {
                    Tok::Comma => continue,
                    Tok::RParen => break,
                    _ => {
                        self.pos -= 1;
                        return self.unexpected("`,` or `)`");
                    }
                }
            }
        }
        self.check_arity(&pred, args.len(), at)?;
        Ok((pred, args))
    }

    fn ground_atom(&mut self) -> PResult<GroundAtom> {
        let (predicate, args) = self.atom_with(|p| {
            let s = p.ident("a constant")?;
            Ok(p.sym(&s))
        })?;
        Ok(GroundAtom { predicate, args })
    }

    fn rule_atom(&mut self) -> PResult<Atom> {
        let (predicate, args) = self.atom_with(|p| {
            let s = p.ident("a term")?;
            let s = p.sym(&s);
            Ok(if p.vocab.constants.contains(&s) {
                Term::Const(s)
            } else {
                Term::Var(s)
            })
        })?;
        Ok(Atom { predicate, args })
    }

    fn endpoint(&mut self) -> PResult<TimePoint> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(TimePoint::Int(n))
            }
            Tok::Ident(s) if s == "inf" => {
                self.next();
                Ok(TimePoint::PosInf)
            }
            Tok::Plus => {
                self.next();
                match self.peek().clone() {
                    Tok::Ident(s) if s == "inf" => {
                        self.next();
                        Ok(TimePoint::PosInf)
                    }
                    Tok::Int(n) => {
                        self.next();
                        Ok(TimePoint::Int(n))
                    }
                    _ => self.unexpected("`inf` or an integer"),
                }
            }
            Tok::Minus => {
                self.next();
                match self.peek().clone() {
                    Tok::Ident(s) if s == "inf" => {
                        self.next();
                        Ok(TimePoint::NegInf)
                    }
                    Tok::Int(n) => {
                        self.next();
                        Ok(TimePoint::Int(-n))
                    }
                    _ => self.unexpected("`inf` or an integer"),
                }
            }
            _ => self.unexpected("an interval endpoint"),
        }
    }

    fn interval(&mut self) -> PResult<Interval> {
        let at = self.here();
        let empty = |lo: TimePoint, hi: TimePoint| {
            ParseError::new(
                ParseErrorKind::EmptyInterval,
                format!("interval with endpoints {lo} and {hi} contains no integer"),
                at.0,
                at.1,
            )
        };
        match self.next() {
            Tok::LBrace => {
                let t = self.endpoint()?;
                self.expect(Tok::RBrace)?;
                match t {
                    TimePoint::Int(n) => Ok(Interval::point(n)),
                    _ => Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        "punctual interval needs a finite timepoint",
                        at.0,
                        at.1,
                    )),
                }
            }
            open @ (Tok::LBrack | Tok::LParen) => {
                let lo = self.endpoint()?;
                self.expect(Tok::Comma)?;
                let hi = self.endpoint()?;
                let close = self.next();
                let hi_closed = match close {
                    Tok::RBrack => true,
                    Tok::RParen => false,
                    _ => {
                        self.pos -= 1;
                        return self.unexpected("`]` or `)`");
                    }
                };
                let lo_closed = open == Tok::LBrack;
                if (!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed) {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        "infinite endpoints need a round bracket",
                        at.0,
                        at.1,
                    ));
                }
                if lo == TimePoint::PosInf || hi == TimePoint::NegInf {
                    return Err(empty(lo, hi));
                }
                Interval::with_brackets(lo, lo_closed, hi, hi_closed).ok_or_else(|| empty(lo, hi))
            }
            _ => {
                self.pos -= 1;
                self.unexpected("an interval")
            }
        }
    }

    fn range(&mut self) -> PResult<Range> {
        let at = self.here();
        let iv = self.interval()?;
        Range::new(iv).ok_or_else(|| {
            ParseError::new(
                ParseErrorKind::Syntax,
                format!("range {iv} has a negative endpoint"),
                at.0,
                at.1,
            )
        })
    }

    fn literal(&mut self) -> PResult<Literal> {
        match self.peek().clone() {
            Tok::Ident(k) if k == "top" => {
                self.next();
                Ok(Literal::Top)
            }
            Tok::Ident(k)
                if matches!(
                    k.as_str(),
                    "boxplus" | "boxminus" | "diamondplus" | "diamondminus"
                ) =>
            {
                self.next();
                let r = self.range()?;
                let inner = Box::new(self.literal()?);
                Ok(match k.as_str() {
                    "boxplus" => Literal::BoxPlus(r, inner),
                    "boxminus" => Literal::BoxMinus(r, inner),
                    "diamondplus" => Literal::DiamondPlus(r, inner),
                    _ => Literal::DiamondMinus(r, inner),
                })
            }
            Tok::LParen => {
                self.next();
                let left = Box::new(self.literal()?);
                let op = match self.peek().clone() {
                    Tok::Ident(k) if k == "until" || k == "since" => {
                        self.next();
                        k
                    }
                    _ => return self.unexpected("`until` or `since`"),
                };
                let r = self.range()?;
                let right = Box::new(self.literal()?);
                self.expect(Tok::RParen)?;
                Ok(if op == "until" {
                    Literal::Until(left, r, right)
                } else {
                    Literal::Since(left, r, right)
                })
            }
            Tok::Ident(k) if KEYWORDS.contains(&k.as_str()) => {
                self.err(ParseErrorKind::Syntax, format!("unexpected keyword `{k}`"))
            }
            Tok::Ident(_) => Ok(Literal::Atom(self.rule_atom()?)),
            _ => self.unexpected("a literal"),
        }
    }

    fn rule(&mut self) -> PResult<Rule> {
        let start = self.here();
        let head = match self.peek() {
            Tok::Ident(k) if k == "bot" => {
                self.next();
                Head::Bot
            }
            _ => {
                let lit = self.literal()?;
                if lit == Literal::Top {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        "`top` cannot be a rule head",
                        start.0,
                        start.1,
                    ));
                }
                if !lit.is_deterministic() {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        "rule heads may only use boxplus and boxminus",
                        start.0,
                        start.1,
                    ));
                }
                Head::Lit(lit)
            }
        };
        self.expect(Tok::Implies)?;
        let mut body = vec![self.literal()?];
        while *self.peek() == Tok::Comma {
            self.next();
            body.push(self.literal()?);
        }
        self.expect(Tok::Dot)?;
        let rule = Rule { head, body };
        check_safety(&rule, start)?;
        Ok(rule)
    }

    fn fact(&mut self) -> PResult<TemporalFact> {
        let atom = self.ground_atom()?;
        self.expect(Tok::At)?;
        let interval = self.interval()?;
        Ok(TemporalFact { atom, interval })
    }

    fn query(&mut self) -> PResult<Query> {
        let (predicate, args) = self.atom_with(|p| match p.next() {
            Tok::AnswerVar(v) => Ok(QueryTerm::Answer(p.sym(&v))),
            Tok::Ident(c) => Ok(QueryTerm::Const(p.sym(&c))),
            _ => {
                p.pos -= 1;
                p.unexpected("`?var` or a constant")
            }
        })?;
        self.expect(Tok::At)?;
        let iv = self.ident("an interval variable")?;
        let interval_var = self.sym(&iv);
        Ok(Query {
            predicate,
            args,
            interval_var,
        })
    }
}

fn check_safety(rule: &Rule, at: (usize, usize)) -> PResult<()> {
    let Head::Lit(head) = &rule.head else {
        return Ok(());
    };
    let mut head_vars = Vec::new();
    head.vars(&mut head_vars);
    let mut bound = BTreeSet::new();
    for l in &rule.body {
        l.binding_vars(&mut bound);
    }
    for v in head_vars {
        if !bound.contains(&v) {
            return Err(ParseError::new(
                ParseErrorKind::Safety,
                format!(
                    "head variable `{v}` is not bound in the body outside the left operand of until/since"
                ),
                at.0,
                at.1,
            ));
        }
    }
    Ok(())
}

/// A parsed dataset, normalized; `changed` reports whether normalization
/// altered the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDataset {
    pub facts: FactSet,
    pub changed: bool,
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    parse_program_with(text, &mut Vocabulary::new())
}

/// Parses rules, reading argument identifiers in `vocab.constants` as
/// constants and all others as variables.
pub fn parse_program_with(text: &str, vocab: &mut Vocabulary) -> Result<Program, ParseError> {
    let mut p = Parser::new(text, vocab)?;
    let mut rules = Vec::new();
    while !p.at_eof() {
        rules.push(p.rule()?);
    }
    Ok(Program { rules })
}

pub fn parse_dataset(text: &str) -> Result<ParsedDataset, ParseError> {
    parse_dataset_with(text, &mut Vocabulary::new())
}

pub fn parse_dataset_with(text: &str, vocab: &mut Vocabulary) -> Result<ParsedDataset, ParseError> {
    let mut p = Parser::new(text, vocab)?;
    let mut raw = Vec::new();
    while !p.at_eof() {
        raw.push(p.fact()?);
        p.expect(Tok::Dot)?;
    }
    let constants: Vec<Symbol> = raw.iter().flat_map(|f| f.atom.args.clone()).collect();
    vocab.constants.extend(constants);
    let input: FactSet = raw.iter().cloned().collect();
    let facts = input.normalize();
    let changed = facts != input || input.len() != raw.len();
    Ok(ParsedDataset { facts, changed })
}

/// Parses a dataset and a program together, so that dataset constants are
/// recognized in rules and arities agree across both texts.
pub fn parse_instance(
    program_text: &str,
    dataset_text: &str,
) -> Result<(Program, ParsedDataset), ParseError> {
    let mut vocab = Vocabulary::new();
    let data = parse_dataset_with(dataset_text, &mut vocab)?;
    let program = parse_program_with(program_text, &mut vocab)?;
    Ok((program, data))
}

fn single<T>(text: &str, f: impl FnOnce(&mut Parser) -> PResult<T>) -> Result<T, ParseError> {
    let mut vocab = Vocabulary::new();
    let mut p = Parser::new(text, &mut vocab)?;
    let out = f(&mut p)?;
    if *p.peek() == Tok::Dot {
        p.next();
    }
    if !p.at_eof() {
        return p.unexpected("end of input");
    }
    Ok(out)
}

/// One `atom@interval`, with an optional trailing dot.
pub fn parse_fact(text: &str) -> Result<TemporalFact, ParseError> {
    single(text, |p| p.fact())
}

/// One query such as `FevEp(?v)@r`.
pub fn parse_query(text: &str) -> Result<Query, ParseError> {
    single(text, |p| p.query())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_positions() {
        let toks = lex("P(a)@[0,1].\n  Q").unwrap();
        let q = toks.iter().find(|t| t.tok == Tok::Ident("Q".into())).unwrap();
        assert_eq!((q.line, q.col), (2, 3));
    }

    #[test]
    fn comments_are_skipped() {
        let p = parse_program("% heading\nQ :- P. % trailing\n").unwrap();
        assert_eq!(p.rules.len(), 1);
    }

    #[test]
    fn syntax_error_location() {
        let e = parse_program("Q :- P.\nR :- .").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
        assert_eq!((e.line, e.column), (2, 6));
    }

    #[test]
    fn rejects_closed_infinite_bracket() {
        let e = parse_fact("P@[0,inf]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn empty_interval_error() {
        assert_eq!(parse_fact("P@[5,3]").unwrap_err().kind, ParseErrorKind::EmptyInterval);
        assert_eq!(parse_fact("P@(1,2)").unwrap_err().kind, ParseErrorKind::EmptyInterval);
    }

    #[test]
    fn negative_range_rejected() {
        let e = parse_program("Q :- boxplus[-1,2] P.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn keywords_are_reserved() {
        assert!(parse_program("until :- P.").is_err());
        assert!(parse_fact("top@{1}").is_err());
    }

    #[test]
    fn non_deterministic_head_rejected() {
        assert!(parse_program("diamondplus[0,1] Q :- P.").is_err());
        assert!(parse_program("top :- P.").is_err());
    }

    #[test]
    fn dataset_constants_become_constants() {
        let (prog, data) = parse_instance("Q(x) :- P(x, a).", "P(b,a)@{1}.").unwrap();
        assert!(!data.changed);
        let atom = prog.rules[0].body[0].atoms()[0].clone();
        assert!(matches!(atom.args[0], Term::Var(_)));
        assert!(matches!(atom.args[1], Term::Const(_)));
    }

    #[test]
    fn arity_mismatch_across_files() {
        let e = parse_instance("Q :- P(x).", "P(a,b)@{1}.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Arity);
        assert_eq!((e.line, e.column), (1, 6));
    }

    #[test]
    fn query_parses() {
        let q = parse_query("FevEp(?v)@r").unwrap();
        assert_eq!(q.answer_vars().len(), 1);
        assert_eq!(q.to_string(), "FevEp(?v)@r");
    }

    #[test]
    fn primes_in_names() {
        let p = parse_program("Q' :- S, M.\nbot :- Q', Q''.").unwrap();
        assert_eq!(p.rules[1].to_string(), "bot :- Q', Q''.");
    }
}
