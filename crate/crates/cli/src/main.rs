//! `tempora`: consistency checking, repairs, conflicts and
//! inconsistency-tolerant query answering for DatalogMTL files.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use tempora::harness::{parse_dimacs, satgen, SatTarget};
use tempora::syntax::{parse_dataset_with, parse_program_with, Vocabulary};
use tempora::{
    answers_under, classify_fragment, entails_under, is_consistent, parse_fact, parse_program,
    parse_query, Answer, EngineLimits, FactSet, ParseError, Program, RepairContext, RepairKind,
    SemanticsKind, TemporalFact, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "tempora", version, about = "Inconsistency-tolerant reasoning for DatalogMTL over the integers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit JSON (the default for every command except `normalize`).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text.
    #[arg(long, global = true)]
    text: bool,
    /// Round limit for materialization.
    #[arg(long = "max-iter", global = true, env = "TEMPORA_MAX_ITER", value_name = "N")]
    max_iter: Option<usize>,
    /// Largest finite endpoint materialization may produce.
    #[arg(long = "max-endpoint", global = true, env = "TEMPORA_MAX_ENDPOINT", value_name = "N")]
    max_endpoint: Option<i64>,
}

#[derive(Args)]
struct Input {
    /// Program file (.dmtl).
    #[arg(short = 'p', long = "program", value_name = "FILE")]
    program: PathBuf,
    /// Dataset file (.dmtd).
    #[arg(short = 'd', long = "dataset", value_name = "FILE")]
    dataset: PathBuf,
}

#[derive(Args)]
struct Query {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value = "classical")]
    semantics: SemanticsKind,
    #[arg(long, default_value = "s")]
    kind: RepairKind,
}

#[derive(Args)]
struct Enumerate {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value = "s")]
    kind: RepairKind,
    /// A single greedily generated result.
    #[arg(long, conflicts_with = "all")]
    one: bool,
    /// Every result, up to the cap (the default).
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Fact to prefer in greedy generation; repeat to give an order.
    #[arg(long = "seed", value_name = "FACT")]
    seed: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Is the dataset consistent with the program?
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Does a fact follow under the chosen semantics?
    Entail {
        #[command(flatten)]
        query: Query,
        /// A fact such as `P(a)@[0,3]`.
        fact: String,
    },
    /// Answers to a query such as `P(?x)@r`.
    Answers {
        #[command(flatten)]
        query: Query,
        query_text: String,
    },
    /// Repairs of the chosen kind.
    Repairs(Enumerate),
    /// Conflicts of the chosen kind.
    Conflicts(Enumerate),
    /// Rewrites a dataset in normal form.
    Normalize {
        #[arg(short = 'd', long = "dataset", value_name = "FILE")]
        dataset: PathBuf,
    },
    /// Syntactic fragments a program belongs to.
    Fragment {
        #[arg(short = 'p', long = "program", value_name = "FILE")]
        program: PathBuf,
    },
    /// Writes the instance reducing a DIMACS formula to query entailment.
    Satgen {
        #[arg(long)]
        target: SatTarget,
        /// Directory for the generated files.
        #[arg(short = 'o', long = "out-dir", default_value = ".")]
        out_dir: PathBuf,
        /// Base name of the generated files; defaults to the input's stem.
        #[arg(long)]
        name: Option<String>,
        dimacs: PathBuf,
    },
}

/// A parse error together with the file it came from.
#[derive(Debug)]
struct FileParseError {
    path: PathBuf,
    err: ParseError,
}

impl fmt::Display for FileParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path.display(), self.err)
    }
}

impl std::error::Error for FileParseError {}

/// A parse error in a command-line argument.
#[derive(Debug)]
struct ArgParseError {
    what: &'static str,
    err: ParseError,
}

impl fmt::Display for ArgParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.what, self.err)
    }
}

impl std::error::Error for ArgParseError {}

struct Report {
    json: Value,
    text: String,
    code: u8,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(input: &Input) -> anyhow::Result<(Program, FactSet)> {
    let mut vocab = Vocabulary::new();
    let data = parse_dataset_with(&read(&input.dataset)?, &mut vocab).map_err(|err| FileParseError {
        path: input.dataset.clone(),
        err,
    })?;
    let program = parse_program_with(&read(&input.program)?, &mut vocab).map_err(|err| FileParseError {
        path: input.program.clone(),
        err,
    })?;
    Ok((program, data.facts))
}

fn arg<T>(what: &'static str, r: Result<T, ParseError>) -> anyhow::Result<T> {
    r.map_err(|err| ArgParseError { what, err }.into())
}

fn facts_json(b: &FactSet) -> Value {
    Value::Array(b.iter().map(|f| Value::String(f.to_string())).collect())
}

fn answers_json(answers: &[Answer]) -> Value {
    Value::Array(
        answers
            .iter()
            .map(|a| {
                json!({
                    "tuple": a.tuple.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "intervals": a.intervals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn answers_text(answers: &[Answer]) -> String {
    answers
        .iter()
        .map(|a| {
            let tuple: Vec<&str> = a.tuple.iter().map(|s| &**s).collect();
            let ivs: Vec<String> = a.intervals.iter().map(|i| i.to_string()).collect();
            format!("({}) {}\n", tuple.join(", "), ivs.join(" "))
        })
        .collect()
}

fn flag(b: bool) -> u8 {
    if b {
        0
    } else {
        1
    }
}

fn enumerate(e: &Enumerate, repairs: bool, limits: EngineLimits) -> anyhow::Result<Report> {
    let (p, d) = load(&e.input)?;
    let ctx = RepairContext::new(&p, &d, limits)?;
    let items: Vec<FactSet> = if e.one {
        let seed: Vec<TemporalFact> = e
            .seed
            .iter()
            .map(|s| arg("seed fact", parse_fact(s)))
            .collect::<anyhow::Result<_>>()?;
        let seed = (!seed.is_empty()).then_some(seed.as_slice());
        if repairs {
            vec![ctx.generate_repair(e.kind, seed)?]
        } else {
            ctx.generate_conflict(e.kind, seed)?.into_iter().collect()
        }
    } else if repairs {
        ctx.enumerate_repairs(e.kind, e.cap)?
    } else {
        ctx.enumerate_conflicts(e.kind, e.cap)?
    };
    let label = if repairs { "repair" } else { "conflict" };
    let text = items
        .iter()
        .enumerate()
        .map(|(i, b)| format!("% {label} {}\n{b}", i + 1))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report {
        json: json!({
            "kind": e.kind.as_str(),
            "count": items.len(),
            "items": items.iter().map(facts_json).collect::<Vec<_>>(),
        }),
        text,
        // Repairs always exist; a conflict exists iff the data is inconsistent.
        code: flag(!items.is_empty()),
    })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let mut limits = EngineLimits::default();
    if let Some(n) = cli.max_iter {
        limits.max_iterations = n;
    }
    if let Some(n) = cli.max_endpoint {
        limits.max_endpoint = n;
    }
    match &cli.cmd {
        Cmd::Check { input } => {
            let (p, d) = load(input)?;
            let consistent = is_consistent(&p, &d, &limits)?;
            Ok(Report {
                json: json!({ "consistent": consistent }),
                text: format!("{}\n", if consistent { "consistent" } else { "inconsistent" }),
                code: flag(consistent),
            })
        }
        Cmd::Entail { query, fact } => {
            let (p, d) = load(&query.input)?;
            let f = arg("fact", parse_fact(fact))?;
            let entailed = entails_under(query.semantics, query.kind, &d, &p, &f, &limits)?;
            Ok(Report {
                json: json!({
                    "entailed": entailed,
                    "semantics": query.semantics.as_str(),
                    "kind": query.kind.as_str(),
                }),
                text: format!("{entailed}\n"),
                code: flag(entailed),
            })
        }
        Cmd::Answers { query, query_text } => {
            let (p, d) = load(&query.input)?;
            let q = arg("query", parse_query(query_text))?;
            let answers = answers_under(query.semantics, query.kind, &d, &p, &q, &limits)?;
            Ok(Report {
                json: answers_json(&answers),
                text: answers_text(&answers),
                code: flag(!answers.is_empty()),
            })
        }
        Cmd::Repairs(e) => enumerate(e, true, limits),
        Cmd::Conflicts(e) => enumerate(e, false, limits),
        Cmd::Normalize { dataset } => {
            let parsed = tempora::parse_dataset(&read(dataset)?).map_err(|err| FileParseError {
                path: dataset.clone(),
                err,
            })?;
            Ok(Report {
                json: json!({ "facts": facts_json(&parsed.facts), "changed": parsed.changed }),
                text: parsed.facts.to_string(),
                code: 0,
            })
        }
        Cmd::Fragment { program } => {
            let p = parse_program(&read(program)?).map_err(|err| FileParseError {
                path: program.clone(),
                err,
            })?;
            let f = classify_fragment(&p);
            Ok(Report {
                json: json!({
                    "propositional": f.propositional,
                    "core": f.core,
                    "linear": f.linear,
                    "non_recursive": f.non_recursive,
                    "diamondminus_only": f.diamondminus_only,
                }),
                text: format!(
                    "propositional: {}\ncore: {}\nlinear: {}\nnon_recursive: {}\ndiamondminus_only: {}\n",
                    f.propositional, f.core, f.linear, f.non_recursive, f.diamondminus_only
                ),
                code: 0,
            })
        }
        Cmd::Satgen {
            target,
            out_dir,
            name,
            dimacs,
        } => {
            let phi = parse_dimacs(&read(dimacs)?).map_err(|err| FileParseError {
                path: dimacs.clone(),
                err,
            })?;
            let (p, d, f) = satgen(*target, &phi);
            let stem = match name {
                Some(n) => n.clone(),
                None => dimacs
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "instance".into()),
            };
            fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;
            let program = out_dir.join(format!("{stem}.dmtl"));
            let dataset = out_dir.join(format!("{stem}.dmtd"));
            let fact = out_dir.join(format!("{stem}.fact"));
            for (path, body) in [
                (&program, p.to_string()),
                (&dataset, d.to_string()),
                (&fact, format!("{f}\n")),
            ] {
                fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?;
            }
            let entailed_when = if target.entailed_iff_sat() { "sat" } else { "unsat" };
            Ok(Report {
                json: json!({
                    "target": target.as_str(),
                    "semantics": target.semantics().as_str(),
                    "kind": "s",
                    "program": program.display().to_string(),
                    "dataset": dataset.display().to_string(),
                    "fact": f.to_string(),
                    "entailed_when": entailed_when,
                }),
                text: format!(
                    "{}\n{}\n{}\n{f} is {}-entailed iff the formula is {entailed_when}\n",
                    program.display(),
                    dataset.display(),
                    fact.display(),
                    target.semantics()
                ),
                code: 0,
            })
        }
    }
}

fn error_json(e: &anyhow::Error) -> Value {
    let (kind, location) = if let Some(fe) = e.downcast_ref::<FileParseError>() {
        (
            fe.err.kind.as_str(),
            json!({ "file": fe.path.display().to_string(), "line": fe.err.line, "column": fe.err.column }),
        )
    } else if let Some(ae) = e.downcast_ref::<ArgParseError>() {
        (
            ae.err.kind.as_str(),
            json!({ "argument": ae.what, "line": ae.err.line, "column": ae.err.column }),
        )
    } else if let Some(te) = e.downcast_ref::<tempora::Error>() {
        let loc = te
            .location()
            .map_or(Value::Null, |(line, column)| json!({ "line": line, "column": column }));
        (te.kind(), loc)
    } else if e.downcast_ref::<std::io::Error>().is_some() {
        ("io", Value::Null)
    } else {
        ("error", Value::Null)
    };
    json!({ "error": { "kind": kind, "message": format!("{e:#}"), "location": location } })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = match &cli.cmd {
        Cmd::Normalize { .. } => cli.json,
        _ => !cli.text,
    };
    match run(&cli) {
        Ok(report) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&error_json(&e)).expect("serializable"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
