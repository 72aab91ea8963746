//! Argument parsing and subcommand dispatch. Reports go to stdout as JSON;
//! diagnostics go to stderr.

use std::ffi::OsString;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use kgt_core::sclbounds::scl_interval;
use kgt_core::torsion::{bs_check, gt_order_search, roots_search};
use kgt_core::{classify, parse_jsj, Element, GroupSpec, SearchBounds};
use serde_json::{json, Value};

use crate::json;
use crate::suite;

#[derive(Debug, Parser)]
#[command(name = "kgt", version, about = "Word problems, conjugacy and generalized torsion in knot groups")]
pub struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a word.
    Normalize {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        word: String,
    },
    /// Whether two words are the same element.
    Equal {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// A conjugator `x` with `x^-1 left x = right`, if any.
    Conj {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Generalized torsion order search.
    Gentorsion {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = 3)]
        radius: usize,
    },
    /// Solutions of `x^n = word` within a ball.
    Roots {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
    /// Rational bounds on stable commutator length.
    Scl {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = 3)]
        radius: usize,
    },
    /// Checks `x^-1 y^m x = y^n`.
    Bs {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Classifies a JSJ description file.
    Classify {
        #[arg(long)]
        jsj: PathBuf,
    },
    /// Runs the built-in example and criteria suite.
    VerifyPaper,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Equal { .. } => "equal",
            Command::Conj { .. } => "conj",
            Command::Gentorsion { .. } => "gentorsion",
            Command::Roots { .. } => "roots",
            Command::Scl { .. } => "scl",
            Command::Bs { .. } => "bs",
            Command::Classify { .. } => "classify",
            Command::VerifyPaper => "verify-paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn element(group: GroupSpec, text: &str) -> Result<Element> {
    group
        .parse_element(text)
        .with_context(|| format!("cannot read `{text}` in {group}"))
}

/// Result payload and whether it counts as a verification success.
fn execute(command: &Command, seed: u64) -> Result<(Value, Value, bool)> {
    let out = match command {
        Command::Normalize { group, word } => {
            let g = element(*group, word)?;
            (json!({"group": group.to_string(), "word": word}), json::normal_form(&g), true)
        }
        Command::Equal { group, left, right } => {
            let (x, y) = (element(*group, left)?, element(*group, right)?);
            let result = json!({
                "equal": x.equals(&y)?,
                "left": json::element(&x),
                "right": json::element(&y),
            });
            (json!({"group": group.to_string(), "left": left, "right": right}), result, true)
        }
        Command::Conj { group, left, right } => {
            let (x, y) = (element(*group, left)?, element(*group, right)?);
            let found = x.conjugator_to(&y)?;
            let verified = match &found {
                Some(c) => x.conjugated_by(c)? == y,
                None => true,
            };
            let result = json!({
                "conjugate": found.is_some(),
                "conjugator": found.as_ref().map(json::element),
            });
            (json!({"group": group.to_string(), "left": left, "right": right}), result, verified)
        }
        Command::Gentorsion { group, word, max_order, radius } => {
            let g = element(*group, word)?;
            let cert = gt_order_search(&g, SearchBounds::new(*radius, *max_order)?)?;
            let inputs = json!({"group": group.to_string(), "word": word, "max_order": max_order, "radius": radius});
            (inputs, json::certificate(&cert), cert.verify(&g))
        }
        Command::Roots { group, word, n, radius } => {
            let g = element(*group, word)?;
            let roots = roots_search(&g, *n, *radius)?;
            let verified = roots.iter().all(|x| x.pow(i64::from(*n)) == g);
            let inputs = json!({"group": group.to_string(), "word": word, "n": n, "radius": radius});
            let result = json!({"count": roots.len(), "roots": roots.iter().map(json::element).collect::<Vec<_>>()});
            (inputs, result, verified)
        }
        Command::Scl { group, word, max_order, radius } => {
            let g = element(*group, word)?;
            let iv = scl_interval(&g, SearchBounds::new(*radius, *max_order)?)?;
            let inputs = json!({"group": group.to_string(), "word": word, "max_order": max_order, "radius": radius});
            (inputs, json::interval(&iv), true)
        }
        Command::Bs { group, x, y, m, n } => {
            let (gx, gy) = (element(*group, x)?, element(*group, y)?);
            let holds = bs_check(&gx, &gy, *m, *n)?;
            let inputs = json!({"group": group.to_string(), "x": x, "y": y, "m": m, "n": n});
            (inputs, json!({"holds": holds}), true)
        }
        Command::Classify { jsj } => {
            let text = std::fs::read_to_string(jsj).with_context(|| format!("cannot read {}", jsj.display()))?;
            let tree = parse_jsj(&text).with_context(|| jsj.display().to_string())?;
            let c = classify(&tree)?;
            (json!({"jsj": jsj.display().to_string()}), json::classification(&c), true)
        }
        Command::VerifyPaper => {
            let examples = suite::examples();
            let criteria = suite::criteria(seed);
            let passed = examples.iter().chain(&criteria).all(|c| c.passed);
            let encode = |cs: &[suite::Check]| -> Vec<Value> {
                cs.iter()
                    .map(|c| json!({"id": c.id, "title": c.title, "passed": c.passed, "detail": c.detail}))
                    .collect()
            };
            let result = json!({
                "passed": passed,
                "examples": encode(&examples),
                "criteria": encode(&criteria),
            });
            (json!({}), result, passed)
        }
    };
    Ok(out)
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    let name = cli.command.name();
    match execute(&cli.command, cli.seed) {
        Ok((inputs, result, verified)) => {
            let report = json!({
                "command": name,
                "inputs": inputs,
                "result": result,
                "seed": cli.seed,
            });
            let mut stdout = serde_json::to_string_pretty(&report).expect("serializable report");
            stdout.push('\n');
            let stderr = if verified { String::new() } else { format!("kgt {name}: verification failed\n") };
            Outcome {
                code: if verified { 0 } else { 1 },
                stdout,
                stderr,
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("kgt {name}: {e:#}\n"),
        },
    }
}

/// Runs `args` and parses the report, `Value::Null` when nothing was printed.
pub fn run_to_json<I, T>(args: I) -> (i32, Value)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

/// Classifies JSJ source text the way `kgt classify` does a file; returns
/// the classification object itself.
pub fn classify_source(file: &str, text: &str) -> (i32, Value) {
    match parse_jsj(text).map_err(|e| format!("{file}: {e}")).and_then(|t| classify(&t).map_err(|e| e.to_string())) {
        Ok(c) => (0, json::classification(&c)),
        Err(e) => (2, Value::String(e)),
    }
}
