//! `altmod <command> <input.json> [-o out.json] [--bound N]`
//!
//! Results go to standard output (or `-o`) as JSON, diagnostics to standard
//! error. Exit codes: 0 success, 1 domain error, 2 unreadable or invalid input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::ablattice::{GroupElement, Subgroup};
use crate::altmodule::AlternateModule;
use crate::document::{parse_certificate, parse_module, to_canonical_json, CertificateDocument, DocumentError};
use crate::embed::embed;
use crate::error::Error;
use crate::oracle::{brute_kernel, enumerate_subgroups, DEFAULT_CENSUS_BOUND};
use crate::symplectic::classify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Kernel generators and invariant factors.
    Kernel,
    /// One Lagrangian and the common Lagrangian order n.
    Lagrangian,
    /// B x B* normal form of a symplectic module.
    Classify,
    /// Embedding certificate into B x B* with |B| = n.
    Embed,
    /// Check an embedding certificate.
    Verify,
    /// Cross-check kernel and Lagrangians against brute force.
    Check,
}

#[derive(Debug, Parser)]
#[command(name = "altmod", version, about = "Finite alternate modules over Q/Z")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Module document (or certificate, for `verify`).
    pub input: PathBuf,
    /// Write the JSON result here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Largest group order the brute-force `check` will enumerate.
    #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
    pub bound: u64,
}

enum Failure {
    Parse(String),
    Domain(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            if !e.use_stderr() {
                let _ = write!(stdout, "{e}");
            }
            return code;
        }
    };
    execute(&args, stdout, stderr)
}

pub fn execute(args: &Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let text = match fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot read {}: {e}", args.input.display());
            return EXIT_PARSE;
        }
    };
    let (result, code) = match dispatch(args, &text) {
        Ok((value, ok)) => (value, if ok { EXIT_OK } else { EXIT_DOMAIN }),
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_PARSE;
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_DOMAIN;
        }
    };
    let body = to_canonical_json(&result);
    match &args.output {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_DOMAIN;
            }
        }
        None => {
            let _ = stdout.write_all(body.as_bytes());
        }
    }
    code
}

fn number(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn elements(xs: &[GroupElement]) -> Value {
    json!(xs.iter().map(|x| &x.0).collect::<Vec<_>>())
}

fn subgroup_json(s: &Subgroup) -> Value {
    json!({
        "generators": elements(s.gens()),
        "invariant_factors": s.invariant_factors(),
        "order": number(&s.cardinality()),
    })
}

/// The JSON result and whether the command succeeded.
fn dispatch(args: &Args, text: &str) -> Result<(Value, bool), Failure> {
    if args.command == Command::Verify {
        let doc = parse_certificate(text)?;
        let verdict = doc.verify()?;
        let value = if verdict.is_ok() {
            json!({ "verdict": "ok" })
        } else {
            let v: Vec<String> = verdict.violations.iter().map(|v| v.to_string()).collect();
            json!({ "verdict": "violations", "violations": v })
        };
        return Ok((value, verdict.is_ok()));
    }
    let m = parse_module(text)?;
    let value = match args.command {
        Command::Kernel => subgroup_json(&m.kernel()),
        Command::Lagrangian => {
            let mut v = subgroup_json(&m.find_lagrangian());
            v["n"] = number(&m.lagrangian_cardinal()?);
            v
        }
        Command::Classify => {
            let c = classify(&m)?;
            json!({
                "b_orders": c.b_orders,
                "isometry": c.isometry.matrix(),
            })
        }
        Command::Embed => serde_json::to_value(CertificateDocument::from_certificate(&embed(&m)?))
            .expect("certificate serializes"),
        Command::Check => return check_report(&m, args.bound),
        Command::Verify => unreachable!("handled above"),
    };
    Ok((value, true))
}

fn check_report(m: &AlternateModule, bound: u64) -> Result<(Value, bool), Failure> {
    let kernel = m.kernel();
    let brute = brute_kernel(m, bound)?;
    let n = m.lagrangian_cardinal()?;
    let census = enumerate_subgroups(m, bound)?;
    let lagrangian = m.find_lagrangian();
    let mut orders: Vec<usize> = census.maximal_isotropic().map(|e| e.order()).collect();
    orders.sort_unstable();
    orders.dedup();
    let kernel_agrees = kernel == brute;
    let orders_agree = orders.iter().all(|&o| BigUint::from(o) == n);
    let found = census
        .find(&lagrangian)
        .map(|e| e.maximal_isotropic)
        .unwrap_or(false);
    let agree = kernel_agrees && orders_agree && found;
    let value = json!({
        "kernel": {
            "computed": subgroup_json(&kernel),
            "brute_force": subgroup_json(&brute),
            "agree": kernel_agrees,
        },
        "lagrangian_cardinal": number(&n),
        "census": {
            "subgroups": census.subgroups.len(),
            "maximal_isotropic": census.maximal_isotropic().count(),
            "maximal_isotropic_orders": orders,
            "orders_equal_n": orders_agree,
        },
        "lagrangian": {
            "computed": subgroup_json(&lagrangian),
            "maximal_isotropic_in_census": found,
        },
        "agree": agree,
    });
    Ok((value, agree))
}
