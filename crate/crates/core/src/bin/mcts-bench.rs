//! `mcts-bench`: generate instances, solve them, validate solution files and
//! run seeded benchmark grids.
//!
//! Exit codes: 0 success, 1 infeasible or failed validation, 2 usage, 3 internal.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use mcts_combopt::bench::{run_grid, BenchConfig, BenchError, LoadedInstance, ProblemKind};
use mcts_combopt::knapsack::{KnapsackInstance, KnapsackSolution};
use mcts_combopt::qcsp::{check_original, QcspInstance, QcspSolution};
use mcts_combopt::SearchParams;

#[derive(Parser)]
#[command(
    name = "mcts-bench",
    version,
    about = "Monte Carlo tree search for QCSP and 0-1 knapsack"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Qcsp,
    Spanner,
    Exp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Qcsp,
    Knapsack,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Qcsp => ProblemKind::Qcsp,
            ProblemArg::Knapsack => ProblemKind::Knapsack,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance to --out (or standard output).
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Number of cranes (qcsp).
        #[arg(long)]
        m: Option<usize>,
        /// Capacity as a fraction of total weight (spanner).
        #[arg(long)]
        f: Option<f64>,
        /// Capacity override (spanner, exp).
        #[arg(long)]
        c: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one instance and print `objective,root_bound,gap_percent,seconds,iterations,exhausted`.
    Solve {
        instance: PathBuf,
        /// Problem kind; inferred from the extension (.qcsp, .kp) when absent.
        #[arg(long, value_enum)]
        problem: Option<ProblemArg>,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 10.0)]
        time: f64,
        #[arg(long, default_value_t = 10)]
        beam: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deterministic mode: stop after this many iterations instead of timing out.
        #[arg(long)]
        max_iterations: Option<u64>,
        /// Where to write the solution file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file's claimed objective and feasibility.
    Validate {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long, value_enum)]
        problem: Option<ProblemArg>,
    },
    /// Run the seeded (instance, beam, time) grid described by a config file.
    Bench {
        config: PathBuf,
        /// Overrides the config's run count.
        #[arg(long)]
        runs: Option<u64>,
        /// Overrides the config's iteration limit (deterministic mode).
        #[arg(long)]
        max_iterations: Option<u64>,
        /// Where to write the CSV (standard output by default).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Rejected(String),
    Usage(String),
    Internal(String),
}

// unreadable or malformed inputs are the caller's problem
impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate {
            family,
            n,
            m,
            f,
            c,
            seed,
            out,
        } => {
            let text = generate(family, n, m, f, c, seed)?;
            emit(out.as_deref(), &text)
        }
        Command::Solve {
            instance,
            problem,
            time,
            beam,
            seed,
            max_iterations,
            out,
        } => {
            let kind = resolve_kind(problem, &instance)?;
            let loaded = LoadedInstance::load(kind, &instance)?;
            let params = match max_iterations {
                Some(k) => SearchParams::iterations(k, beam, seed),
                None => {
                    let budget = Duration::try_from_secs_f64(time)
                        .map_err(|_| Failure::Usage(format!("invalid --time {time}")))?;
                    SearchParams::timed(budget, beam, seed)
                }
            };
            let outcome = loaded.solve(&params).map_err(|e| Failure::Usage(e.to_string()))?;
            let Some(solution) = &outcome.solution_file else {
                return Err(Failure::Rejected("no feasible solution found".into()));
            };
            if let Some(path) = &out {
                write_file(path, solution)?;
            }
            println!("{}", outcome.summary_row(max_iterations.is_none()));
            Ok(())
        }
        Command::Validate {
            instance,
            solution,
            problem,
        } => {
            let kind = resolve_kind(problem, &instance)?;
            let loaded = LoadedInstance::load(kind, &instance)?;
            let text = read_file(&solution)?;
            let verdict = match &loaded {
                LoadedInstance::Qcsp(inst) => validate_qcsp(inst, &text),
                LoadedInstance::Knapsack(inst) => validate_knapsack(inst, &text),
            };
            match verdict {
                Ok(summary) => {
                    println!("ok: {summary}");
                    Ok(())
                }
                Err(report) => Err(Failure::Rejected(report)),
            }
        }
        Command::Bench {
            config,
            runs,
            max_iterations,
            out,
        } => {
            let mut cfg = BenchConfig::parse(&read_file(&config)?)?;
            if let Some(r) = runs {
                if r == 0 {
                    return Err(Failure::Usage("--runs must be positive".into()));
                }
                cfg.runs = r;
            }
            if let Some(k) = max_iterations {
                cfg.max_iterations = Some(k);
            }
            let base = config.parent().unwrap_or(Path::new("."));
            let instances = cfg
                .instances
                .iter()
                .map(|p| {
                    let path = base.join(p);
                    LoadedInstance::load(cfg.problem, &path).map(|inst| (p.display().to_string(), inst))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let grid = run_grid(&cfg, &instances);
            emit(out.as_deref(), &grid.to_csv())
        }
    }
}

fn generate(
    family: Family,
    n: usize,
    m: Option<usize>,
    f: Option<f64>,
    c: Option<i64>,
    seed: u64,
) -> Result<String, Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
    let with_capacity = |inst: KnapsackInstance| match c {
        Some(capacity) => KnapsackInstance::new(inst.items_in_input_order(), capacity),
        None => Ok(inst),
    };
    match family {
        Family::Qcsp => {
            let m = m.ok_or_else(|| Failure::Usage("--m is required for the qcsp family".into()))?;
            QcspInstance::generate(n, m, seed)
                .map(|i| i.serialize())
                .map_err(|e| usage(&e))
        }
        Family::Spanner => {
            let f = f.unwrap_or(0.5);
            KnapsackInstance::spanner(n, f, seed)
                .and_then(with_capacity)
                .map(|i| i.serialize())
                .map_err(|e| usage(&e))
        }
        Family::Exp => KnapsackInstance::exp(n, seed)
            .and_then(with_capacity)
            .map(|i| i.serialize())
            .map_err(|e| usage(&e)),
    }
}

fn validate_qcsp(inst: &QcspInstance, text: &str) -> Result<String, String> {
    let sol = QcspSolution::parse(text).map_err(|e| format!("invalid solution file: {e}"))?;
    let schedule = match check_original(inst, &sol.sigma) {
        Err(e) => return Err(format!("invalid: {e}")),
        Ok(Err(violation)) => return Err(format!("infeasible: {violation}")),
        Ok(Ok(schedule)) => schedule,
    };
    if schedule.makespan != sol.makespan {
        return Err(format!(
            "objective mismatch\n- claimed makespan {}\n+ recomputed makespan {}",
            sol.makespan, schedule.makespan
        ));
    }
    Ok(format!("makespan {}", schedule.makespan))
}

fn validate_knapsack(inst: &KnapsackInstance, text: &str) -> Result<String, String> {
    let sol = KnapsackSolution::parse(text).map_err(|e| format!("invalid solution file: {e}"))?;
    let (profit, weight) = sol.evaluate(inst).map_err(|e| format!("invalid: {e}"))?;
    if weight > inst.capacity() {
        return Err(format!(
            "infeasible: weight {weight} exceeds capacity {}",
            inst.capacity()
        ));
    }
    if profit != sol.profit {
        return Err(format!(
            "objective mismatch\n- claimed profit {}\n+ recomputed profit {profit}",
            sol.profit
        ));
    }
    Ok(format!("profit {profit}, weight {weight}"))
}

fn resolve_kind(problem: Option<ProblemArg>, path: &Path) -> Result<ProblemKind, Failure> {
    if let Some(p) = problem {
        return Ok(p.into());
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("qcsp") => Ok(ProblemKind::Qcsp),
        Some("kp" | "knapsack") => Ok(ProblemKind::Knapsack),
        _ => Err(Failure::Usage(format!(
            "cannot tell the problem kind of {}; pass --problem",
            path.display()
        ))),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
