use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{ArgGroup, Parser, Subcommand};

use mlsb::instance_tools::{bench, write_csv, BenchOptions, BenchSpec};
use mlsb::{
    brute_force_optimum, decompose, exact_solve, generate, is_biconnected, load_instance, mvca,
    GeneratorConfig, LabelSet, LabelledGraph, Mode, SolveError, SolverOutcome,
};

const EXIT_INFEASIBLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mlsb",
    version,
    about = "Minimum labelling spanning bi-connected subgraph solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components, blocks, bridges and cut vertices of G(L)
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated label ids; defaults to every label
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<usize>>,
    },
    /// Run the exact search or the MVCA greedy
    #[command(group(ArgGroup::new("method").required(true).args(["exact", "mvca"])))]
    Solve {
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        mvca: bool,
        #[arg(long, default_value = "mlsb")]
        mode: Mode,
        #[arg(long)]
        input: PathBuf,
        /// Time limit for the exact search, in seconds
        #[arg(long)]
        timeout: Option<f64>,
        /// Print one line per greedy iteration before the report
        #[arg(long)]
        trace: bool,
        /// Report time_ms=0 so output is reproducible
        #[arg(long)]
        no_time: bool,
    },
    /// Enumerate label subsets by size (at most 20 labels)
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "mlsb")]
        mode: Mode,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        no_time: bool,
    },
    /// Write a seeded random instance
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        seed: u64,
        /// Embed a Hamiltonian cycle so all labels together are bi-connected
        #[arg(long)]
        feasible: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare exact and MVCA over a TOML sweep, writing CSV
    Bench {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "mlsb")]
        mode: Mode,
        #[arg(long)]
        no_time: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn read_instance(path: &Path) -> Result<LabelledGraph, ExitCode> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format_args!("cannot read {}: {e}", path.display())))?;
    load_instance(&text).map_err(|e| usage(format_args!("{}: {e}", path.display())))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run_decompose(input: &Path, labels: Option<Vec<usize>>) -> Result<ExitCode, ExitCode> {
    let g = read_instance(input)?;
    let set = match labels {
        None => g.all_labels(),
        Some(ls) => {
            if let Some(bad) = ls.iter().find(|&&l| l >= g.label_count()) {
                return Err(usage(format_args!("label {bad} out of range")));
            }
            LabelSet::from_labels(g.label_count(), ls)
        }
    };
    let sub = g.induced_subgraph(&set);
    let d = decompose(&sub);
    print!(
        "biconnected={}\nblock_count={}\nbridges={}\ncomponent_count={}\ncut_vertices={}\n",
        is_biconnected(&sub),
        d.block_count(),
        join(d.bridges.iter().map(|(u, v)| format!("{u}-{v}"))),
        d.component_count,
        join(&d.cut_vertices),
    );
    Ok(ExitCode::SUCCESS)
}

fn finish(
    result: Result<SolverOutcome, SolveError>,
    with_time: bool,
    q: usize,
    mode: Mode,
) -> ExitCode {
    match result {
        Ok(o) => {
            print!("{}", o.report(with_time));
            if o.feasible {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INFEASIBLE)
            }
        }
        Err(SolveError::TimeLimitExceeded(partial)) => {
            print!("{}", partial.report(with_time));
            println!("timed_out=true");
            ExitCode::from(EXIT_TIMEOUT)
        }
        Err(SolveError::Infeasible(_)) => {
            let o = SolverOutcome {
                labels: LabelSet::empty(q),
                size: 0,
                feasible: false,
                nodes_explored: 0,
                elapsed_ms: 0,
                mode,
                method: mlsb::Method::Mvca,
            };
            print!("{}", o.report(with_time));
            ExitCode::from(EXIT_INFEASIBLE)
        }
        Err(e) => usage(e),
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Decompose { input, labels } => run_decompose(&input, labels),
        Command::Solve {
            exact,
            mvca: _,
            mode,
            input,
            timeout,
            trace,
            no_time,
        } => {
            let g = read_instance(&input)?;
            let result = if exact {
                let limit = match timeout {
                    Some(s) => Some(
                        Duration::try_from_secs_f64(s)
                            .map_err(|_| usage("timeout must be a non-negative number"))?,
                    ),
                    None => None,
                };
                exact_solve(&g, mode, limit)
            } else {
                mvca(&g, mode).map(|(outcome, t)| {
                    if trace {
                        for line in t.lines() {
                            println!("{line}");
                        }
                    }
                    outcome
                })
            };
            Ok(finish(result, !no_time, g.label_count(), mode))
        }
        Command::Oracle {
            input,
            mode,
            max_size,
            no_time,
        } => {
            let g = read_instance(&input)?;
            let result = brute_force_optimum(&g, mode, max_size);
            Ok(finish(result, !no_time, g.label_count(), mode))
        }
        Command::Generate {
            n,
            m,
            q,
            seed,
            feasible,
            out,
        } => {
            let config = GeneratorConfig {
                n,
                m,
                q,
                seed,
                guarantee_feasible: feasible,
            };
            let g = generate(&config).map_err(usage)?;
            fs::write(&out, g.to_text())
                .map_err(|e| usage(format_args!("cannot write {}: {e}", out.display())))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            spec,
            out,
            mode,
            no_time,
        } => {
            let text = fs::read_to_string(&spec)
                .map_err(|e| usage(format_args!("cannot read {}: {e}", spec.display())))?;
            let spec = BenchSpec::from_toml(&text).map_err(usage)?;
            let time_limit = match spec.timeout_secs {
                Some(s) => Some(
                    Duration::try_from_secs_f64(s)
                        .map_err(|_| usage("timeout_secs must be a non-negative number"))?,
                ),
                None => None,
            };
            let opts = BenchOptions {
                mode,
                time_limit,
                record_time: !no_time,
            };
            let rows = bench(&spec.instances, spec.repetitions, &opts);
            let csv = write_csv(&rows).map_err(usage)?;
            fs::write(&out, csv)
                .map_err(|e| usage(format_args!("cannot write {}: {e}", out.display())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
