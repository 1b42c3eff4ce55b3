//! The `ybe` command line. Every command reads solution documents (`-` is
//! stdin) and writes JSON to stdout.
//!
//! Exit codes: 0 success, 1 I/O, parse or usage errors, 2 failed checks
//! (`validate` on a non-solution, `sweep` with a counterexample to an
//! asserted claim, or an input that is not a solution).

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::corpus;
use crate::enumerate::{enumerate_with, EnumerateOptions, ENUMERATION_CAP, ENUMERATION_LIMIT};
use crate::error::Error;
use crate::json::{parse_doc, read_solution, write_solution, write_tower, SolutionDoc};
use crate::retract::{
    multipermutation_level, retract_classes, rho_classes, strong_level, tower, RetractMode,
};
use crate::solution::{validate_table, Solution};
use crate::structure::{check_defining_relations, eval_word, Word};
use crate::sweep::{sweep, Claim, Filter, SweepOptions, SWEEP_CAP};
use crate::twisted::{check_cyclic_generators, search_gtu, GtuMode};

#[derive(Debug, Parser)]
#[command(
    name = "ybe",
    version,
    about = "Finite involutive solutions of the Yang-Baxter equation"
)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms; exit 2 if any fails.
    Validate { file: PathBuf },
    /// Orbits, group, retraction levels.
    Analyze { file: PathBuf },
    /// Iterate a retraction operator.
    Retract {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Ret)]
        mode: ModeArg,
        /// Print every step, input first.
        #[arg(long)]
        trace: bool,
    },
    /// Search for a generalized twisted-union split.
    Twisted {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GtuArg::Auto)]
        mode: GtuArg,
    },
    /// Evaluate words in the structure group or check its relations.
    Structure {
        file: PathBuf,
        /// A word such as "x1 x3 x2^-1".
        #[arg(
            long,
            conflicts_with = "check_relations",
            required_unless_present = "check_relations"
        )]
        eval: Option<String>,
        #[arg(long)]
        check_relations: bool,
    },
    /// List all square-free solutions on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// One document per line instead of a JSON array.
        #[arg(long)]
        jsonl: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Allow n above the default cap, up to the hard limit.
        #[arg(long)]
        force: bool,
    },
    /// Run a named claim over all enumerated solutions up to n-max.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        claim: String,
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
    },
    /// Print a relabeling taking A to B, or null.
    Iso { a: PathBuf, b: PathBuf },
    /// Built-in solutions.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
    Emit { name: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Ret,
    Rho,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GtuArg {
    Auto,
    General,
    Squarefree,
}

/// A command failure with its exit code.
struct Fail {
    code: i32,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match e {
            Error::NotInvolutive(_)
            | Error::NotNondegenerate(_)
            | Error::BraidFails(_)
            | Error::CriterionFails(_) => 2,
            _ => 1,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Fail {
        Fail {
            code: 1,
            message: e.to_string(),
        }
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs with the process arguments and returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Fail> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Fail {
            code: 1,
            message: format!("{}: {e}", path.display()),
        })
    }
}

fn load(path: &PathBuf) -> Result<Solution, Fail> {
    Ok(read_solution(&read_input(path)?)?)
}

fn emit(out: Out, value: &impl Serialize, pretty: bool) -> Result<(), Fail> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("output serializes");
    writeln!(out, "{text}")?;
    Ok(())
}

fn emit_raw(out: Out, compact: &str, pretty: bool) -> Result<(), Fail> {
    if pretty {
        let v: serde_json::Value = serde_json::from_str(compact).expect("valid JSON");
        emit(out, &v, true)
    } else {
        writeln!(out, "{compact}")?;
        Ok(())
    }
}

fn checked_cap(n: usize, default: usize, force: bool, what: &str) -> Result<usize, Fail> {
    if n <= default {
        return Ok(default);
    }
    if !force {
        return Err(Fail {
            code: 1,
            message: format!("{what} with n = {n} exceeds the default cap {default}; pass --force"),
        });
    }
    if n > ENUMERATION_LIMIT {
        return Err(Fail {
            code: 1,
            message: format!("{what} with n = {n} exceeds the hard limit {ENUMERATION_LIMIT}"),
        });
    }
    eprintln!("warning: {what} with n = {n} is above the default cap {default} and may be slow");
    Ok(n)
}

fn dispatch(cli: &Cli, out: Out) -> Result<i32, Fail> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Validate { file } => {
            let table = parse_doc(&read_input(file)?)?.to_table()?;
            let report = validate_table(&table);
            emit(out, &report, pretty)?;
            Ok(if report.is_solution() { 0 } else { 2 })
        }
        Command::Analyze { file } => {
            let s = load(file)?;
            emit(out, &analyze(&s)?, pretty)?;
            Ok(0)
        }
        Command::Retract { file, mode, trace } => {
            let s = load(file)?;
            let mode = match mode {
                ModeArg::Ret => RetractMode::Ret,
                ModeArg::Rho => RetractMode::Rho,
            };
            let steps = tower(&s, mode)?;
            if *trace {
                emit_raw(out, &write_tower(&steps), pretty)?;
            } else {
                emit_raw(
                    out,
                    &write_solution(steps.last().expect("non-empty")),
                    pretty,
                )?;
            }
            Ok(0)
        }
        Command::Twisted { file, mode } => {
            let s = load(file)?;
            let mode = match mode {
                GtuArg::Auto => GtuMode::for_solution(&s),
                GtuArg::General => GtuMode::General,
                GtuArg::Squarefree => GtuMode::SquareFree,
            };
            emit(out, &twisted(&s, mode)?, pretty)?;
            Ok(0)
        }
        Command::Structure {
            file,
            eval,
            check_relations,
        } => {
            let s = load(file)?;
            if *check_relations {
                emit(out, &check_defining_relations(&s)?.is_ok(), pretty)?;
            } else {
                let word: Word = eval.as_deref().unwrap_or("").parse()?;
                emit(out, &eval_word(&s, &word)?, pretty)?;
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            up_to_iso,
            jsonl,
            threads,
            force,
        } => {
            let cap = checked_cap(*n, ENUMERATION_CAP, *force, "enumeration")?;
            let opts = EnumerateOptions {
                up_to_iso: *up_to_iso,
                threads: *threads,
                cap,
            };
            let all = enumerate_with(*n, &opts)?;
            if *jsonl {
                for s in &all {
                    writeln!(out, "{}", write_solution(s))?;
                }
            } else {
                let docs: Vec<SolutionDoc> = all.iter().map(SolutionDoc::from_solution).collect();
                emit(out, &docs, pretty)?;
            }
            Ok(0)
        }
        Command::Sweep {
            n_max,
            claim,
            filter,
            up_to_iso,
            threads,
            force,
        } => {
            let claim: Claim = claim.parse()?;
            let filter: Filter = filter.parse()?;
            let cap = checked_cap(*n_max, SWEEP_CAP, *force, "sweep")?;
            let report = sweep(&SweepOptions {
                claim,
                n_max: *n_max,
                filter,
                up_to_iso: *up_to_iso,
                threads: *threads,
                cap,
            })?;
            emit(out, &report, pretty)?;
            Ok(if report.holds() { 0 } else { 2 })
        }
        Command::Iso { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let map = a.is_isomorphic(&b).map(|p| p.to_one_based());
            emit(out, &map, pretty)?;
            Ok(0)
        }
        Command::Corpus { action } => {
            match action {
                CorpusAction::List => emit(out, &corpus::names(), pretty)?,
                CorpusAction::Emit { name } => {
                    emit_raw(out, &write_solution(&corpus::lookup(name)?), pretty)?
                }
            }
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    square_free: bool,
    trivial: bool,
    orbit_count: usize,
    orbits: Vec<Vec<usize>>,
    group_order: usize,
    abelian: bool,
    cyclic_generators: bool,
    retract_class_count: usize,
    rho_class_count: usize,
    multipermutation_level: Option<usize>,
    strong_level: Option<usize>,
}

fn analyze(s: &Solution) -> Result<Analysis, Fail> {
    let orbits = s.orbits();
    let group = s.iyb_group();
    Ok(Analysis {
        n: s.n(),
        square_free: s.is_square_free(),
        trivial: s.is_trivial(),
        orbit_count: orbits.num_classes(),
        orbits: orbits.to_one_based(),
        group_order: group.order()?,
        abelian: group.is_abelian(),
        cyclic_generators: check_cyclic_generators(s),
        retract_class_count: retract_classes(s).num_classes(),
        rho_class_count: rho_classes(s).num_classes(),
        multipermutation_level: multipermutation_level(s)?,
        strong_level: strong_level(s)?,
    })
}

fn twisted(s: &Solution, mode: GtuMode) -> Result<serde_json::Value, Fail> {
    let search = search_gtu(s, mode)?;
    let (y, z) = match &search.decomposition {
        Some(d) => (json!(one_based(&d.y)), json!(one_based(&d.z))),
        None => (json!(null), json!(null)),
    };
    let witness = match &search.decomposition {
        Some(_) => json!(null),
        None => search
            .candidates
            .first()
            .map(|c| {
                json!({
                    "Y": one_based(&c.y),
                    "Z": one_based(&c.z),
                    "violation": c.violations.first(),
                })
            })
            .unwrap_or(json!(null)),
    };
    Ok(json!({
        "decomposable": search.decomposition.is_some(),
        "Y": y,
        "Z": z,
        "mode": mode,
        "ordered": true,
        "witness": witness,
        "candidates": search.candidates,
    }))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}
