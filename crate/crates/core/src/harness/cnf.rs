use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ParseError, ParseErrorKind};

/// A CNF formula over variables `1..=num_vars`; literals are signed indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    /// Fails unless every clause is nonempty and mentions only known variables.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Cnf, String> {
        for c in &clauses {
            if c.is_empty() {
                return Err("empty clause".into());
            }
            if let Some(l) = c.iter().find(|l| **l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(format!("literal {l} out of range"));
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    /// Truth under a valuation given as a bitmask (bit `i` is variable `i+1`).
    pub fn eval(&self, valuation: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let bit = valuation >> (l.unsigned_abs() - 1) & 1 == 1;
                bit == (l > 0)
            })
        })
    }
}

/// DIMACS text.
impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::new(ParseErrorKind::Syntax, msg, line, 1)
}

/// Reads DIMACS: `c` comment lines, a `p cnf V C` header, then clauses of
/// signed integers each terminated by `0` (clauses may span lines).
pub fn parse_dimacs(text: &str) -> Result<Cnf, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut cur: Vec<i32> = Vec::new();
    let mut last_line = 1;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" || header.is_some() {
                return Err(syntax(ln, "bad `p cnf` header"));
            }
            let v = parts[2].parse().map_err(|_| syntax(ln, "bad variable count"))?;
            let c = parts[3].parse().map_err(|_| syntax(ln, "bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(syntax(ln, "clause before `p cnf` header"));
        };
        for tok in line.split_whitespace() {
            let l: i32 = tok.parse().map_err(|_| syntax(ln, format!("bad literal `{tok}`")))?;
            if l == 0 {
                if cur.is_empty() {
                    return Err(syntax(ln, "empty clause"));
                }
                clauses.push(std::mem::take(&mut cur));
            } else if l.unsigned_abs() as usize > nv {
                return Err(syntax(ln, format!("literal {l} exceeds {nv} variables")));
            } else {
                cur.push(l);
            }
        }
    }
    let Some((nv, nc)) = header else {
        return Err(syntax(last_line, "missing `p cnf` header"));
    };
    if !cur.is_empty() {
        clauses.push(cur);
    }
    if clauses.len() != nc {
        return Err(syntax(
            last_line,
            format!("header declares {nc} clauses, found {}", clauses.len()),
        ));
    }
    Ok(Cnf {
        num_vars: nv,
        clauses,
    })
}

/// Satisfiability by trying every valuation.
pub fn brute_sat(phi: &Cnf) -> bool {
    assert!(phi.num_vars <= 20, "too many variables for exhaustive search");
    (0u64..1 << phi.num_vars).any(|v| phi.eval(v))
}

/// A random CNF with up to `max_vars` variables and `max_clauses` clauses
/// of one to three distinct variables each.
pub fn random_cnf(seed: u64, max_vars: usize, max_clauses: usize) -> Cnf {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nv = rng.gen_range(1..=max_vars);
    let nc = rng.gen_range(1..=max_clauses);
    let clauses = (0..nc)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(nv));
            let mut vars: Vec<i32> = Vec::new();
            while vars.len() < width {
                let v = rng.gen_range(1..=nv as i32);
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            vars.into_iter()
                .map(|v| if rng.gen_bool(0.5) { v } else { -v })
                .collect()
        })
        .collect();
    Cnf {
        num_vars: nv,
        clauses,
    }
}
