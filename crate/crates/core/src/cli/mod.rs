//! The `wittzeta` command line.
//!
//! Results go to stdout as a single JSON document. Failures write an error
//! object to stderr and exit with
//!
//! | code | meaning |
//! |------|---------|
//! | 1 | a `check` suite failed |
//! | 2 | malformed input |
//! | 3 | integrality failure or inconsistent point counts |
//! | 4 | enumeration budget exceeded |
//! | 5 | precision shortfall |
//! | 6 | no rational function at the requested degree bound |

pub mod json;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arithgeom::{
    rational_reconstruct, sym_zeta, zeta, zeta_generating_series, VarietySpec,
};
use crate::checks;
use crate::error::{Error, Result};
use crate::ringcore::{EnumerationBudget, Integer};
use crate::witt::{ghost_inverse, teichmuller, WittVector};
use json::{error_object, ghost_from_json, ghost_to_json, witt_depth, JsonCoeff, RationalDoc};

#[derive(Debug, Parser)]
#[command(name = "wittzeta", version, about = "Big Witt vectors and zeta functions over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic in W_N(Z) or W_M(W_N(Z))
    Witt(WittArgs),
    /// Zeta function of a variety as a Witt vector
    Zeta {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'N', long = "precision")]
        precision: usize,
    },
    /// Zeta function of the n-th symmetric power
    Sym {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'N', long = "precision")]
        precision: usize,
    },
    /// Generating series sum_n Z(Sym^n X, t) u^n in W_M(W_N(Z))
    Series {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(short = 'M', long = "outer")]
        outer: usize,
        #[arg(short = 'N', long = "precision")]
        precision: usize,
    },
    /// Rational function matching a zeta function or Witt vector
    Reconstruct {
        /// Variety spec, JSON inline or a file path
        #[arg(long, conflicts_with = "series", required_unless_present = "series")]
        spec: Option<String>,
        /// Witt vector document, JSON inline or a file path
        #[arg(long)]
        series: Option<String>,
        /// t-precision when starting from a spec
        #[arg(short = 'N', long = "precision", requires = "spec")]
        precision: Option<usize>,
        #[arg(long)]
        dmax: usize,
    },
    /// Run a self-check suite, or `all`
    Check {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Args)]
pub struct SpecArg {
    /// Variety spec, JSON inline or a file path
    #[arg(long)]
    pub spec: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WittOp {
    Add,
    Mul,
    Neg,
    Teich,
    Ghost,
    Unghost,
    Frob,
}

#[derive(Debug, Args)]
pub struct WittArgs {
    pub op: WittOp,
    /// Teichmüller operand [a]; needs -N
    #[arg(long = "teich", allow_negative_numbers = true)]
    pub teich: Vec<String>,
    /// Witt vector operand document, JSON inline or a file path
    #[arg(long = "vec")]
    pub vec: Vec<String>,
    /// Ghost coordinates for `unghost`, a JSON array
    #[arg(long)]
    pub ghost: Option<String>,
    #[arg(short = 'N', long = "precision")]
    pub precision: Option<usize>,
    /// Frobenius index for `frob`
    #[arg(long, default_value_t = 1)]
    pub index: usize,
}

/// Inline JSON if it looks like JSON, otherwise the contents of that file.
fn load_document(arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("reading {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn load_spec(arg: &str) -> Result<VarietySpec> {
    let spec: VarietySpec = serde_json::from_value(load_document(arg)?)
        .map_err(|e| Error::Parse(format!("variety spec: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

enum Operand {
    Flat(WittVector<Integer>),
    Nested(WittVector<WittVector<Integer>>),
}

fn operands(args: &WittArgs) -> Result<Vec<Operand>> {
    let mut out = Vec::new();
    for a in &args.teich {
        let n = args
            .precision
            .ok_or_else(|| Error::InvalidArgument("--teich needs -N".into()))?;
        if n == 0 {
            return Err(Error::InvalidArgument("-N must be positive".into()));
        }
        let a: Integer = a
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("--teich {a}: {e}")))?;
        out.push(Operand::Flat(teichmuller(a, n)));
    }
    for v in &args.vec {
        let doc = load_document(v)?;
        let op = match witt_depth(&doc) {
            1 => Operand::Flat(WittVector::from_json(&doc)?),
            2 => Operand::Nested(WittVector::from_json(&doc)?),
            d => return Err(Error::InvalidArgument(format!("nesting depth {d} is not supported"))),
        };
        out.push(match (op, args.precision) {
            (Operand::Flat(w), Some(n)) => Operand::Flat(w.truncate(n)?),
            (Operand::Nested(w), Some(n)) => Operand::Nested(w.truncate(n)?),
            (op, None) => op,
        });
    }
    Ok(out)
}

fn unary<A: JsonCoeff>(op: WittOp, w: &WittVector<A>, index: usize) -> Result<Value> {
    Ok(match op {
        WittOp::Neg => w.witt_neg().to_json(),
        WittOp::Teich => w.to_json(),
        WittOp::Ghost => ghost_to_json(&w.ghost()),
        WittOp::Frob => w.frobenius(index)?.to_json(),
        _ => unreachable!("binary or ghost-input operation"),
    })
}

fn binary<A: JsonCoeff>(op: WittOp, a: &WittVector<A>, b: &WittVector<A>) -> Result<Value> {
    let n = a.precision().min(b.precision());
    let (a, b) = (a.truncate(n)?, b.truncate(n)?);
    Ok(match op {
        WittOp::Add => a.witt_add(&b).to_json(),
        WittOp::Mul => a.witt_mul(&b).to_json(),
        _ => unreachable!("unary operation"),
    })
}

fn cmd_witt(args: &WittArgs) -> Result<Value> {
    if args.op == WittOp::Unghost {
        let src = args
            .ghost
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("unghost needs --ghost".into()))?;
        let doc = load_document(src)?;
        let nested = doc
            .as_array()
            .and_then(|a| a.first())
            .is_some_and(Value::is_object);
        return Ok(if nested {
            ghost_inverse(&ghost_from_json::<WittVector<Integer>>(&doc)?)?.to_json()
        } else {
            ghost_inverse(&ghost_from_json::<Integer>(&doc)?)?.to_json()
        });
    }
    let ops = operands(args)?;
    let arity = match args.op {
        WittOp::Add | WittOp::Mul => 2,
        _ => 1,
    };
    if ops.len() != arity {
        return Err(Error::InvalidArgument(format!(
            "{:?} takes {arity} operand(s), got {}",
            args.op,
            ops.len()
        )));
    }
    if args.op == WittOp::Teich && args.teich.len() != 1 {
        return Err(Error::InvalidArgument("teich takes one --teich value".into()));
    }
    match (arity, &ops[..]) {
        (1, [Operand::Flat(w)]) => unary(args.op, w, args.index),
        (1, [Operand::Nested(w)]) => unary(args.op, w, args.index),
        (2, [Operand::Flat(a), Operand::Flat(b)]) => binary(args.op, a, b),
        (2, [Operand::Nested(a), Operand::Nested(b)]) => binary(args.op, a, b),
        _ => Err(Error::InvalidArgument(
            "operands live in different rings (W(Z) and W(W(Z)))".into(),
        )),
    }
}

/// Runs one parsed command, returning the result document and whether it
/// counts as success. Only a failed `check` suite returns `false`.
pub fn execute(cli: &Cli, budget: EnumerationBudget) -> Result<(Value, bool)> {
    Ok(match &cli.command {
        Command::Witt(args) => (cmd_witt(args)?, true),
        Command::Zeta { spec, precision } => {
            (zeta(&load_spec(&spec.spec)?, *precision, budget)?.to_json(), true)
        }
        Command::Sym { spec, n, precision } => {
            (sym_zeta(&load_spec(&spec.spec)?, *n, *precision, budget)?.to_json(), true)
        }
        Command::Series {
            spec,
            outer,
            precision,
        } => (
            zeta_generating_series(&load_spec(&spec.spec)?, *outer, *precision, budget)?.to_json(),
            true,
        ),
        Command::Reconstruct {
            spec,
            series,
            precision,
            dmax,
        } => {
            let w = match (spec, series) {
                (Some(s), _) => {
                    let n = precision.unwrap_or(2 * dmax.max(&1));
                    zeta(&load_spec(s)?, n, budget)?
                }
                (None, Some(s)) => WittVector::<Integer>::from_json(&load_document(s)?)?,
                (None, None) => unreachable!("clap requires one of --spec and --series"),
            };
            let rf = rational_reconstruct(&w, *dmax)?;
            (serde_json::to_value(RationalDoc::from(&rf)).expect("serializable"), true)
        }
        Command::Check { suite } => {
            let results = checks::run_suite(suite, budget).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown suite {suite:?}; expected one of {} or all",
                    checks::SUITES.join(", ")
                ))
            })??;
            let passed = results.iter().all(|r| r.passed);
            (json!({ "passed": passed, "suites": results }), passed)
        }
    })
}

fn exit_code(e: &Error) -> (i32, &'static str) {
    match e {
        Error::Parse(_) | Error::InvalidSpec(_) | Error::InvalidArgument(_) | Error::NonUnitConstant(_) => {
            (2, "malformed")
        }
        Error::Integrality { .. } | Error::InconsistentCounts { .. } => (3, "integrality"),
        Error::Budget { .. } => (4, "budget"),
        Error::Precision { .. } => (5, "precision"),
        Error::NoRationalSolution { .. } => (6, "no-solution"),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let obj = error_object(2, "malformed", e.to_string().trim());
            let _ = writeln!(err, "{obj}");
            return 2;
        }
    };
    let result = EnumerationBudget::from_env().and_then(|b| execute(&cli, b));
    match result {
        Ok((doc, passed)) => {
            let _ = writeln!(out, "{doc}");
            if passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let (code, kind) = exit_code(&e);
            let _ = writeln!(err, "{}", error_object(code, kind, &e.to_string()));
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("wittzeta").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn witt_examples() {
        let (code, out, err) = call(&["witt", "mul", "--teich", "2", "--teich", "3", "-N", "4"]);
        assert_eq!((code, err.as_str()), (0, ""));
        assert_eq!(out.trim(), r#"{"precision":4,"coeffs":["6","36","216","1296"]}"#);
        let (_, out, _) = call(&["witt", "ghost", "--teich", "3", "-N", "3"]);
        assert_eq!(out.trim(), r#"["3","9","27"]"#);
        let (_, out, _) = call(&["witt", "unghost", "--ghost", "[0,0,0]"]);
        assert_eq!(out.trim(), r#"{"precision":3,"coeffs":["0","0","0"]}"#);
        let (_, out, _) = call(&["witt", "teich", "--teich", "-2", "-N", "2"]);
        assert_eq!(out.trim(), r#"{"precision":2,"coeffs":["-2","4"]}"#);
    }

    #[test]
    fn zeta_and_sym() {
        let p1 = r#"{"type":"projective","dim":1,"q":2}"#;
        let (_, out, _) = call(&["zeta", "--spec", p1, "-N", "3"]);
        assert_eq!(out.trim(), r#"{"precision":3,"coeffs":["3","7","15"]}"#);
        let p2 = r#"{"type":"projective","dim":2,"q":2}"#;
        let (_, out, _) = call(&["sym", "--spec", p2, "-n", "2", "-N", "1"]);
        assert_eq!(out.trim(), r#"{"precision":1,"coeffs":["35"]}"#);
        let (_, out, _) = call(&["sym", "--spec", p2, "-n", "0", "-N", "3"]);
        assert_eq!(out.trim(), r#"{"precision":3,"coeffs":["1","1","1"]}"#);
    }

    #[test]
    fn reconstruct_prints_factored_form() {
        let p1 = r#"{"type":"projective","dim":1,"q":2}"#;
        let (code, out, _) = call(&["reconstruct", "--spec", p1, "-N", "8", "--dmax", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"num":["1"],"den":["1","-3","2"],"factored":"1/((1-t)(1-2t))"}"#);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["witt", "add", "--teich", "1"]).0, 2);
        assert_eq!(call(&["zeta", "--spec", "{\"type\":\"sphere\"}", "-N", "2"]).0, 2);
        let (code, _, err) = call(&["witt", "unghost", "--ghost", "[1,2]"]);
        assert_eq!(code, 3);
        assert!(err.contains("\"integrality\""));
        let counts = r#"{"type":"counts","q":2,"counts":[3,5]}"#;
        let (code, out, err) = call(&["zeta", "--spec", counts, "-N", "4"]);
        assert_eq!((code, out.as_str()), (5, ""));
        assert!(err.contains("requires 4"));
        let (code, _, _) = call(&["reconstruct", "--series", r#"{"precision":2,"coeffs":[1,5]}"#, "--dmax", "1"]);
        assert_eq!(code, 0);
        let (code, _, _) = call(&["bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn budget_exit_code() {
        let cli = Cli::try_parse_from([
            "wittzeta",
            "zeta",
            "--spec",
            r#"{"type":"elliptic","p":31,"a":1,"b":2}"#,
            "-N",
            "2",
        ])
        .unwrap();
        let err = execute(&cli, EnumerationBudget(10)).unwrap_err();
        assert_eq!(exit_code(&err).0, 4);
    }

    #[test]
    fn nested_operands() {
        let (_, nested, _) = call(&["series", "--spec", r#"{"type":"affine","dim":1,"q":2}"#, "-M", "2", "-N", "2"]);
        let (code, out, _) = call(&["witt", "add", "--vec", nested.trim(), "--vec", nested.trim()]);
        assert_eq!(code, 0);
        assert_eq!(witt_depth(&serde_json::from_str(&out).unwrap()), 2);
        let (code, _, _) = call(&["witt", "add", "--vec", nested.trim(), "--teich", "1", "-N", "2"]);
        assert_eq!(code, 2);
    }
}
