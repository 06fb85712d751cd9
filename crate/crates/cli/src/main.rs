//! `inqmt`: evaluate InqL formulas on teams, translate them, and check, audit
//! and reduce derivations of the display calculus.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use inqmt::calculus::{audit_soundness, check_report, CalculusError};
use inqmt::cutelim::reduce_all;
use inqmt::selftest::{self, Level};
use inqmt::syntax::{parse_inql, parse_script, print_script, Derivation, InqFormula};
use inqmt::teams::{self, Context, TeamError};
use inqmt::translate::{flatten, tau_c, tau_i};

#[derive(Parser)]
#[command(name = "inqmt", version, disable_version_flag = true, about = "Inquisitive logic: team semantics and a two-sorted display calculus")]
struct Cli {
    /// Variables, comma-separated, in the order used for world bit strings.
    #[arg(short = 'V', long = "vars", global = true, value_name = "VARS")]
    vars: Option<String>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Print version.
    #[arg(long, action = clap::ArgAction::Version)]
    version: Option<bool>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Does the team support the formula?
    Eval {
        formula: String,
        /// Team as a braced list of worlds, e.g. {10,01}.
        #[arg(long)]
        team: String,
    },
    /// Is the formula supported by every team?
    Valid { formula: String },
    /// Flatness, compared with equivalence to the flattening and to the double negation.
    Flat { formula: String },
    /// Print the General translation (and the Flat one for classical formulas).
    Translate { formula: String },
    /// Check every step of a proof script.
    Check {
        #[arg(long)]
        script: PathBuf,
    },
    /// Check every step of a proof script for soundness in the team algebras.
    Audit {
        #[arg(long)]
        script: PathBuf,
        /// Random assignments when exhaustive enumeration is too large.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
    /// Apply principal cut reductions and print the rewritten script.
    Reduce {
        #[arg(long)]
        script: PathBuf,
        #[arg(long, default_value_t = 100)]
        fuel: usize,
    },
    /// Run the bundled self-checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

/// Process outcome, mapped to the exit status.
enum Outcome {
    Yes,
    No,
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<TeamError> for Failure {
    fn from(e: TeamError) -> Self {
        match e {
            TeamError::TooManyVariables { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CalculusError> for Failure {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::Team(t) => t.into(),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn formula(src: &str) -> Result<InqFormula, Failure> {
    parse_inql(src).map_err(|e| usage(format!("cannot parse formula '{src}': {e}")))
}

fn context(vars: &Option<String>, a: &InqFormula) -> Result<Context, Failure> {
    let ctx = match vars {
        Some(list) => Context::parse(list)?,
        None => {
            let vs = a.variables();
            let vs = if vs.is_empty() { vec!["p".to_string()] } else { vs };
            Context::new(&vs)?
        }
    };
    for v in a.variables() {
        if ctx.index_of(&v).is_none() {
            return Err(usage(format!("variable '{v}' is not among -V {}", ctx.vars().join(","))));
        }
    }
    Ok(ctx)
}

fn read_script(path: &Path) -> Result<Derivation, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_script(&src).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn verdict(b: bool) -> Outcome {
    if b {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let js = cli.json;
    match cli.command {
        Command::Eval { formula: src, team } => {
            let a = formula(&src)?;
            let ctx = context(&cli.vars, &a)?;
            let t = ctx.parse_team(&team)?;
            let holds = teams::support(&ctx, t, &a)?;
            emit(
                js,
                json!({"formula": a.to_string(), "team": ctx.format_team(t), "vars": ctx.vars(), "supported": holds}),
                format!("{}\n", if holds { "supported" } else { "not supported" }),
            );
            Ok(verdict(holds))
        }
        Command::Valid { formula: src } => {
            let a = formula(&src)?;
            let ctx = context(&cli.vars, &a)?;
            let cx = teams::counterexample(&ctx, &a)?;
            let text = match cx {
                None => "valid\n".to_string(),
                Some(t) => format!("not valid: counterexample team {}\n", ctx.format_team(t)),
            };
            emit(
                js,
                json!({"formula": a.to_string(), "vars": ctx.vars(), "valid": cx.is_none(),
                       "counterexample": cx.map(|t| ctx.format_team(t))}),
                text,
            );
            Ok(verdict(cx.is_none()))
        }
        Command::Flat { formula: src } => {
            let a = formula(&src)?;
            let ctx = context(&cli.vars, &a)?;
            let flat = teams::is_flat(&ctx, &a)?;
            let f = flatten(&a);
            let by_f = teams::equivalent(&ctx, &a, &f)?;
            let by_nn = teams::equivalent(&ctx, &a, &InqFormula::neg(InqFormula::neg(a.clone())))?;
            let text = format!(
                "flat: {flat}\nequivalent to flattening {f}: {by_f}\nequivalent to double negation: {by_nn}\n"
            );
            emit(
                js,
                json!({"formula": a.to_string(), "vars": ctx.vars(), "flat": flat, "flattening": f.to_string(),
                       "equivalent_to_flattening": by_f, "equivalent_to_double_negation": by_nn}),
                text,
            );
            Ok(verdict(flat))
        }
        Command::Translate { formula: src } => {
            let a = formula(&src)?;
            let general = tau_i(&a);
            let flat = tau_c(&a).ok();
            let mut text = format!("{general}\n");
            if let Some(c) = &flat {
                text.push_str(&format!("flat: {c}\n"));
            }
            emit(
                js,
                json!({"formula": a.to_string(), "general": general.to_string(), "flat": flat.map(|c| c.to_string())}),
                text,
            );
            Ok(Outcome::Yes)
        }
        Command::Check { script } => {
            let d = read_script(&script)?;
            let report = check_report(&d);
            let mut text = report.render();
            text.push_str(if report.ok() { "derivation checks\n" } else { "derivation does NOT check\n" });
            emit(js, json!({"ok": report.ok(), "report": report}), text);
            Ok(verdict(report.ok()))
        }
        Command::Audit { script, samples } => {
            let d = read_script(&script)?;
            let nvars = match &cli.vars {
                Some(list) => Context::parse(list)?.nvars(),
                None => 1,
            };
            let report = audit_soundness(&d, nvars, samples, 0)?;
            emit(js, json!({"ok": report.ok(), "report": report}), report.render());
            Ok(verdict(report.ok()))
        }
        Command::Reduce { script, fuel } => {
            let d = read_script(&script)?;
            let check = check_report(&d);
            if !check.ok() {
                let text = format!("{}input does not check; nothing reduced\n", check.render());
                emit(js, json!({"ok": false, "report": check}), text);
                return Ok(Outcome::No);
            }
            let (out, report) = reduce_all(&d, fuel);
            let script_out = print_script(&out);
            let text = format!("{script_out}\n{}", report.render());
            emit(js, json!({"script": script_out, "report": report}), text);
            Ok(Outcome::Yes)
        }
        Command::Selftest { level } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let report = selftest::run(level).map_err(|e| usage(e.to_string()))?;
            emit(js, json!({"ok": report.ok(), "report": report}), report.render());
            if let (false, Some((s, c))) = (js, report.first_failure()) {
                eprintln!("first failure: {} / {}", s.name, c.name);
            }
            Ok(verdict(report.ok()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::from(0),
        Ok(Outcome::No) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run 'inqmt --help' for usage");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
