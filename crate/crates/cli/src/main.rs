//! `mondec`: decompose monomial ideals from the command line.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mondec_core::bench::{run_suite, to_csv, Suite};
use mondec_core::incremental::{incremental_decompose_with, IncrementalOptions, InsertionOrder};
use mondec_core::io::{emit_components, emit_ideal, parse_components, parse_ideal};
use mondec_core::oracle::{components_generate_with_budget, decompose_oracle, DEFAULT_BUDGET};
use mondec_core::random::{gen_random, RandomIdeal};
use mondec_core::recursive::decompose_recursive;
use mondec_core::trace::render_trace;
use mondec_core::{Algorithm, ComponentSet, Error, GeneratorSet};
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "mondec",
    version,
    about = "Irreducible decomposition of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose an ideal file, or every `*.ideal` file in a directory.
    Decompose {
        #[arg(long, value_enum, default_value_t = Algo::Incremental)]
        algo: Algo,
        /// Per-step JSON lines on stderr (incremental only).
        #[arg(long)]
        trace: bool,
        /// Operation counts and timing on stderr.
        #[arg(long)]
        stats: bool,
        /// Insert generators in file order instead of lex order.
        #[arg(long)]
        input_order: bool,
        /// Cell budget for the oracle.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        input: PathBuf,
        /// Output file, or output directory in batch mode. Defaults to stdout,
        /// or to the input directory in batch mode.
        output: Option<PathBuf>,
    },
    /// Check that a component file decomposes an ideal file.
    Verify {
        components: PathBuf,
        ideal: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Write a seeded random ideal.
    Gen {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        maxdeg: u64,
        #[arg(long)]
        seed: u64,
        /// No two generators share a nonzero degree in any variable.
        #[arg(long)]
        generic: bool,
        output: PathBuf,
    },
    /// Run a benchmark sweep and write one CSV row per engine and instance.
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Recursive,
    Incremental,
    Oracle,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Recursive => Algorithm::Recursive,
            Algo::Incremental => Algorithm::Incremental,
            Algo::Oracle => Algorithm::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    GenericSweep,
    NongenericSweep,
}

/// Failures mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Verify(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn with_path(path: &Path) -> impl Fn(Failure) -> Failure + '_ {
    move |f| match f {
        Failure::Verify(m) => Failure::Verify(format!("{}: {m}", path.display())),
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
        Failure::Budget(m) => Failure::Budget(format!("{}: {m}", path.display())),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

struct DecomposeOpts {
    algo: Algo,
    trace: bool,
    stats: bool,
    order: InsertionOrder,
    budget: u64,
}

/// Decompose one ideal, returning the component set plus whatever trace and
/// stats text was asked for.
fn run_one(g: &GeneratorSet, o: &DecomposeOpts) -> Result<(ComponentSet, String), Failure> {
    let mut diag = String::new();
    let start = Instant::now();
    let (comps, ops, peak) = match o.algo {
        Algo::Incremental => {
            let run = incremental_decompose_with(
                g,
                IncrementalOptions {
                    order: o.order,
                    record_steps: o.trace,
                    check_max_merge: false,
                },
            )?;
            if o.trace {
                diag.push_str(&render_trace(&run.steps, &run.artinian)?);
            }
            let peak = run.peak();
            (run.components, Some(run.ops), Some(peak))
        }
        Algo::Recursive => {
            let run = decompose_recursive(g)?;
            (run.components, Some(run.ops), None)
        }
        Algo::Oracle => (decompose_oracle(g, o.budget)?, None, None),
    };
    if o.stats {
        let _ = write!(
            diag,
            "algo={} n={} p={} l={} wall_ns={}",
            Algorithm::from(o.algo),
            g.n(),
            g.minimalized().len(),
            comps.len(),
            start.elapsed().as_nanos()
        );
        if let Some(ops) = ops {
            let _ = write!(diag, " ops={ops}");
        }
        if let Some(peak) = peak {
            let _ = write!(diag, " peak_t={peak}");
        }
        diag.push('\n');
    }
    Ok((comps, diag))
}

fn decompose_file(path: &Path, o: &DecomposeOpts) -> Result<(String, String), Failure> {
    let g = parse_ideal(&read(path)?).map_err(|e| with_path(path)(e.into()))?;
    let (comps, diag) = run_one(&g, o).map_err(with_path(path))?;
    Ok((emit_components(&comps), diag))
}

fn decompose(input: &Path, output: Option<&Path>, o: &DecomposeOpts) -> Result<(), Failure> {
    if o.trace && !matches!(o.algo, Algo::Incremental) {
        return Err(Failure::Usage("--trace needs --algo incremental".into()));
    }
    if !input.is_dir() {
        let (text, diag) = decompose_file(input, o)?;
        eprint!("{diag}");
        return match output {
            Some(out) => write(out, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        };
    }

    let out_dir = output.unwrap_or(input);
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Usage(format!("{}: {e}", out_dir.display())))?;
    let mut files: Vec<PathBuf> = fs::read_dir(input)
        .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
        .collect();
    files.sort();

    let results: Vec<(PathBuf, Result<(), Failure>)> = files
        .par_iter()
        .map(|path| {
            let res = decompose_file(path, o).and_then(|(text, diag)| {
                let stem = path.file_stem().unwrap_or_default();
                let target = out_dir.join(stem).with_extension("components");
                write(&target, &text)?;
                if !diag.is_empty() {
                    eprint!("{}: {diag}", path.display());
                }
                Ok(())
            });
            (path.clone(), res)
        })
        .collect();

    let mut failed = 0;
    let mut code = 0;
    for (_, res) in results {
        if let Err(f) = res {
            eprintln!("error: {}", f.message());
            failed += 1;
            code = code.max(f.code());
        }
    }
    let msg = format!("{failed} of {} file(s) failed", files.len());
    match code {
        0 => Ok(()),
        1 => Err(Failure::Verify(msg)),
        3 => Err(Failure::Budget(msg)),
        _ => Err(Failure::Usage(msg)),
    }
}

fn verify(components: &Path, ideal: &Path, budget: u64) -> Result<(), Failure> {
    let c = parse_components(&read(components)?).map_err(|e| with_path(components)(e.into()))?;
    let g = parse_ideal(&read(ideal)?).map_err(|e| with_path(ideal)(e.into()))?;
    if c.n() != g.n() {
        return Err(Failure::Usage(format!(
            "component file has {} variables, ideal file has {}",
            c.n(),
            g.n()
        )));
    }
    if !c.is_antichain() {
        return Err(Failure::Verify("components are not an antichain".into()));
    }
    if !components_generate_with_budget(&c, &g, budget)? {
        return Err(Failure::Verify(
            "the components do not intersect to the ideal".into(),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose {
            algo,
            trace,
            stats,
            input_order,
            budget,
            input,
            output,
        } => {
            let opts = DecomposeOpts {
                algo,
                trace,
                stats,
                order: if input_order {
                    InsertionOrder::AsGiven
                } else {
                    InsertionOrder::Lex
                },
                budget,
            };
            decompose(&input, output.as_deref(), &opts)
        }
        Command::Verify {
            components,
            ideal,
            budget,
        } => {
            verify(&components, &ideal, budget)?;
            println!("ok");
            Ok(())
        }
        Command::Gen {
            vars,
            gens,
            maxdeg,
            seed,
            generic,
            output,
        } => {
            let g = gen_random(RandomIdeal {
                n: vars,
                p: gens,
                maxdeg,
                seed,
                generic,
            })?;
            write(&output, &emit_ideal(&g))
        }
        Command::Bench { suite, out } => {
            let suite = match suite {
                SuiteArg::GenericSweep => Suite::GenericSweep,
                SuiteArg::NongenericSweep => Suite::NongenericSweep,
            };
            let records = run_suite(suite)?;
            write(&out, &to_csv(&records))?;
            // the incremental bound only holds for generic input
            let outside: Vec<_> = records
                .iter()
                .filter(|r| suite == Suite::GenericSweep || r.algorithm == "recursive")
                .filter(|r| !r.within_envelope())
                .collect();
            for r in &outside {
                eprintln!(
                    "{} {}: ratio {:.3} exceeds {}",
                    r.instance_id,
                    r.algorithm,
                    r.ratio(),
                    r.envelope()
                );
            }
            if outside.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verify(format!(
                    "{} record(s) outside the envelope",
                    outside.len()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
