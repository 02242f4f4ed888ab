//! Command-line front end. [`run`] returns the process exit code:
//! 0 success, 1 verification failure, 2 parse or usage error, 3 rewrite
//! budget exceeded.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::adem::{admissible_basis, Normalizer, DEFAULT_STEP_BUDGET};
use crate::error::Error;
use crate::modules::{builtin, distinguish_theorem37, verify_axioms, GradedModule};
use crate::parse::{parse_poly, parse_sq};
use crate::poly::{
    act, adem_identities, classify_relations, default_var_name, extract_square, faithful_rank,
    total_sq, Stability,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "steenrod",
    version,
    about = "Mod-2 Steenrod algebra calculator"
)]
pub struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite an element into admissible form.
    Normalize {
        expr: String,
        /// Maximum number of Adem rewrites.
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        budget: u64,
    },
    /// List the admissible monomials of a degree.
    Basis {
        #[arg(long)]
        degree: u32,
    },
    /// Apply an element to a polynomial in F2[t1..tk].
    Act {
        #[arg(long)]
        op: String,
        #[arg(long)]
        on: String,
        /// Number of variables k; defaults to the largest index used.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Total square of a homogeneous polynomial in a fresh variable.
    TotalSquare {
        #[arg(long)]
        on: String,
        #[arg(long, default_value = "u")]
        var: String,
    },
    /// Re-derive relations from the double expansion on a degree-M class.
    DeriveAdem {
        #[arg(long)]
        degree: u32,
    },
    /// Check the axioms on a builtin module or a module file.
    Verify {
        #[arg(long)]
        module: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// Compare the admissible basis with the action on t1...td.
    Faithful {
        #[arg(long)]
        degree: u32,
    },
    /// Separate ΣCP² from S⁵ ∨ S³ with Sq².
    DistinguishPi4,
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            code: EXIT_OK,
            text,
            json,
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json values serialize")
                )
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            let code = error_code(&e);
            if cli.json {
                let doc = json!({ "error": e.to_string(), "exit_code": code });
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("json values serialize")
                );
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Normalize { expr, budget } => normalize_cmd(expr, *budget),
        Command::Basis { degree } => Ok(basis_cmd(*degree)),
        Command::Act { op, on, vars } => act_cmd(op, on, *vars),
        Command::TotalSquare { on, var } => total_square_cmd(on, var),
        Command::DeriveAdem { degree } => derive_cmd(*degree),
        Command::Verify { module, max_degree } => verify_cmd(module, *max_degree),
        Command::Faithful { degree } => Ok(faithful_cmd(*degree)),
        Command::DistinguishPi4 => Ok(pi4_cmd()),
    }
}

fn normalize_cmd(expr: &str, budget: u64) -> Result<Outcome, Error> {
    let e = parse_sq(expr)?;
    let nf = Normalizer::with_budget(budget).normalize(&e)?;
    Ok(Outcome::ok(
        format!("{nf}\n"),
        json!({
            "input": e.to_string(),
            "normal_form": nf.to_string(),
            "terms": nf.words().map(|w| w.exponents().to_vec()).collect::<Vec<_>>(),
            "degree": nf.homogeneous_degree(),
        }),
    ))
}

fn basis_cmd(d: u32) -> Outcome {
    let basis = admissible_basis(d);
    let text: String = basis.iter().map(|w| format!("{w}\n")).collect();
    let words: Vec<Value> = basis
        .iter()
        .map(|w| json!({ "word": w.to_string(), "exponents": w.exponents(), "excess": w.excess() }))
        .collect();
    Outcome::ok(
        text,
        json!({ "degree": d, "dimension": basis.len(), "basis": words }),
    )
}

fn act_cmd(op: &str, on: &str, vars: Option<usize>) -> Result<Outcome, Error> {
    let e = parse_sq(op)?;
    let p = parse_poly(on)?;
    let k = vars.unwrap_or(p.max_var());
    if p.max_var() > k {
        return Err(Error::parse(
            0,
            format!(
                "polynomial uses t{} but only {k} variables were declared",
                p.max_var()
            ),
        ));
    }
    let r = act(&e, &p);
    Ok(Outcome::ok(
        format!("{r}\n"),
        json!({ "op": e.to_string(), "on": p.to_string(), "vars": k, "result": r.to_string() }),
    ))
}

fn total_square_cmd(on: &str, var: &str) -> Result<Outcome, Error> {
    let p = parse_poly(on)?;
    let valid = var.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        return Err(Error::parse(0, format!("`{var}` is not a variable name")));
    }
    let u = match var.strip_prefix('t').and_then(|s| s.parse::<usize>().ok()) {
        Some(j) => j,
        None => p.max_var() + 1,
    };
    let total = total_sq(&p, u)?;
    let names = |j: usize| {
        if j == u {
            var.to_string()
        } else {
            default_var_name(j)
        }
    };
    let m = p.homogeneous_degree().unwrap_or(0);
    let squares: Vec<Value> = (0..=m)
        .map(|i| json!({ "i": i, "value": extract_square(&total, u, m, i).to_string() }))
        .collect();
    let shown = total.display_with(&names).to_string();
    Ok(Outcome::ok(
        format!("{shown}\n"),
        json!({ "on": p.to_string(), "degree": m, "var": var, "total": shown, "squares": squares }),
    ))
}

fn derive_cmd(m: u32) -> Result<Outcome, Error> {
    let identities = adem_identities(m);
    let classified = classify_relations(m);
    let mut normalizer = Normalizer::default();
    let mut text = String::new();
    let mut rels = Vec::new();
    for r in &classified {
        let nf = normalizer.normalize(&r.relation)?;
        let min_excess = nf.words().map(|w| w.excess()).min();
        let certified = match r.stability {
            Stability::Stable => nf.is_zero(),
            Stability::Unstable => nf.words().all(|w| w.excess() > m),
        };
        let tag = match r.stability {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
        };
        text.push_str(&format!(
            "{} = 0    [{tag}; normal form {nf}]\n",
            r.relation
        ));
        rels.push(json!({
            "relation": r.relation.to_string(),
            "degree": r.degree,
            "stability": r.stability,
            "normal_form": nf.to_string(),
            "min_excess": min_excess,
            "certified": certified,
        }));
    }
    let ok = rels.iter().all(|r| r["certified"] == Value::Bool(true));
    Ok(Outcome {
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
        text,
        json: json!({
            "class_degree": m,
            "identities": identities,
            "relations": rels,
            "stable": classified.iter().filter(|r| r.stability == Stability::Stable).count(),
            "certified": ok,
        }),
    })
}

fn load_module(source: &str) -> Result<GradedModule, Error> {
    match builtin(source) {
        Ok(m) => Ok(m),
        Err(e) => {
            let path = Path::new(source);
            if path.is_file() {
                GradedModule::load(path)
            } else {
                Err(e)
            }
        }
    }
}

fn verify_cmd(source: &str, max_degree: u32) -> Result<Outcome, Error> {
    let m = load_module(source)?;
    let report = verify_axioms(&m, max_degree);
    let mut text = format!("{}: ", report.module);
    if report.passed() {
        let n: usize = report.checked.values().sum();
        text.push_str(&format!(
            "all axioms hold through degree {max_degree} ({n} checks)\n"
        ));
    } else {
        text.push_str(&format!("{} failures\n", report.failures.len()));
        for f in &report.failures {
            text.push_str(&format!(
                "  {:?}: {}: expected {}, got {}\n",
                f.axiom, f.instance, f.expected, f.actual
            ));
        }
    }
    Ok(Outcome {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY
        },
        text,
        json: json!({ "passed": report.passed(), "report": report }),
    })
}

fn faithful_cmd(d: u32) -> Outcome {
    let dim = admissible_basis(d).len();
    let rank = faithful_rank(d);
    let ok = rank == dim;
    Outcome {
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
        text: format!("degree {d}: {dim} admissible monomials, action rank {rank}\n"),
        json: json!({ "degree": d, "basis_size": dim, "rank": rank, "faithful": ok }),
    }
}

fn pi4_cmd() -> Outcome {
    let r = distinguish_theorem37();
    let mut text = String::new();
    for c in &r.conclusion {
        text.push_str(c);
        text.push('\n');
    }
    Outcome {
        code: if r.distinct { EXIT_OK } else { EXIT_VERIFY },
        text,
        json: serde_json::to_value(&r).expect("report serializes"),
    }
}
