use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use crate::engine::{SearchParams, Sense};

use super::{BenchConfig, LoadedInstance, ProblemKind, RunOutcome};

pub const CELL_HEADER: &str = "kind,instance,beam,time,runs,feasible_runs,mean_objective,best_objective,worst_objective,mean_gap_percent,mean_seconds,mean_iterations,exhausted_runs,errors";
pub const GRID_HEADER: &str = CELL_HEADER;

/// Aggregate of all seeded runs of one (instance, beam, time) cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub instance: String,
    pub beam: usize,
    pub time: Duration,
    pub runs: u64,
    pub objectives: Vec<i64>,
    pub mean_gap_percent: Option<f64>,
    pub mean_seconds: f64,
    pub mean_iterations: f64,
    pub exhausted_runs: u64,
    pub errors: Vec<String>,
    sense: Sense,
}

impl CellSummary {
    pub fn mean_objective(&self) -> Option<f64> {
        mean(self.objectives.iter().map(|&o| o as f64))
    }

    pub fn best_objective(&self) -> Option<i64> {
        self.objectives
            .iter()
            .copied()
            .reduce(|a, b| if self.sense.improves(b, a) { b } else { a })
    }

    pub fn worst_objective(&self) -> Option<i64> {
        self.objectives
            .iter()
            .copied()
            .reduce(|a, b| if self.sense.improves(a, b) { b } else { a })
    }
}

/// Average over instances of the per-cell means for one (beam, time) setting.
#[derive(Clone, Debug, PartialEq)]
pub struct GridAverage {
    pub beam: usize,
    pub time: Duration,
    pub instances: usize,
    pub mean_objective: Option<f64>,
    pub mean_gap_percent: Option<f64>,
    pub mean_seconds: f64,
    pub mean_iterations: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridResult {
    pub cells: Vec<CellSummary>,
    pub averages: Vec<GridAverage>,
    /// Whether seconds columns are meaningful (false in iteration-bounded mode).
    pub timed: bool,
}

/// Runs `runs` seeds (`seed_base + i`) for every (instance, beam, time).
/// Work is spread over `config.jobs` threads; output order follows the
/// config regardless.
pub fn run_grid(config: &BenchConfig, instances: &[(String, LoadedInstance)]) -> GridResult {
    let mut tasks = Vec::new();
    for (index, _) in instances.iter().enumerate() {
        for &beam in &config.beams {
            for &time in &config.times {
                for run in 0..config.runs {
                    tasks.push((index, beam, time, config.seed_base + run));
                }
            }
        }
    }

    let results: Mutex<Vec<Option<Result<RunOutcome, String>>>> = Mutex::new(vec![None; tasks.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..config.jobs.max(1) {
            scope.spawn(|| loop {
                let slot = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(index, beam, time, seed)) = tasks.get(slot) else {
                    break;
                };
                let params = SearchParams {
                    time_budget: time,
                    beam_width: beam,
                    seed,
                    max_iterations: config.max_iterations,
                    pruning: true,
                };
                let outcome = instances[index].1.solve(&params).map_err(|e| e.to_string());
                results.lock().expect("no worker panics while holding the lock")[slot] = Some(outcome);
            });
        }
    });
    let results = results.into_inner().expect("workers finished");

    let sense = match config.problem {
        ProblemKind::Qcsp => Sense::Minimize,
        ProblemKind::Knapsack => Sense::Maximize,
    };
    let mut cells = Vec::new();
    let mut cursor = 0;
    for (name, _) in instances {
        for &beam in &config.beams {
            for &time in &config.times {
                let chunk = &results[cursor..cursor + config.runs as usize];
                cursor += config.runs as usize;
                cells.push(summarize(name, beam, time, sense, chunk));
            }
        }
    }

    let mut averages = Vec::new();
    for &beam in &config.beams {
        for &time in &config.times {
            let group: Vec<&CellSummary> = cells.iter().filter(|c| c.beam == beam && c.time == time).collect();
            averages.push(GridAverage {
                beam,
                time,
                instances: group.len(),
                mean_objective: mean(group.iter().filter_map(|c| c.mean_objective())),
                mean_gap_percent: mean(group.iter().filter_map(|c| c.mean_gap_percent)),
                mean_seconds: mean(group.iter().map(|c| c.mean_seconds)).unwrap_or(0.0),
                mean_iterations: mean(group.iter().map(|c| c.mean_iterations)).unwrap_or(0.0),
            });
        }
    }

    GridResult {
        cells,
        averages,
        timed: config.max_iterations.is_none(),
    }
}

fn summarize(
    name: &str,
    beam: usize,
    time: Duration,
    sense: Sense,
    chunk: &[Option<Result<RunOutcome, String>>],
) -> CellSummary {
    let mut objectives = Vec::new();
    let mut gaps = Vec::new();
    let mut seconds = Vec::new();
    let mut iterations = Vec::new();
    let mut exhausted_runs = 0;
    let mut errors = Vec::new();
    for result in chunk {
        match result.as_ref().expect("every task ran") {
            Ok(run) => {
                if let Some(o) = run.objective {
                    objectives.push(o);
                } else {
                    errors.push("no feasible solution".to_string());
                }
                gaps.extend(run.gap_percent());
                seconds.push(run.seconds);
                iterations.push(run.iterations as f64);
                exhausted_runs += u64::from(run.exhausted);
            }
            Err(e) => errors.push(e.clone()),
        }
    }
    CellSummary {
        instance: name.to_string(),
        beam,
        time,
        runs: chunk.len() as u64,
        objectives,
        mean_gap_percent: mean(gaps.into_iter()),
        mean_seconds: mean(seconds.into_iter()).unwrap_or(0.0),
        mean_iterations: mean(iterations.into_iter()).unwrap_or(0.0),
        exhausted_runs,
        errors,
        sense,
    }
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    (count > 0).then(|| sum / count as f64)
}

fn opt<T: std::fmt::Display>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

impl GridResult {
    /// One `cell` row per (instance, beam, time), then one `grid_average` row
    /// per (beam, time), under [`CELL_HEADER`].
    pub fn to_csv(&self) -> String {
        let seconds = |s: f64| if self.timed { format!("{s:.3}") } else { "-".to_string() };
        let mut out = String::new();
        let _ = writeln!(out, "{CELL_HEADER}");
        for c in &self.cells {
            let _ = writeln!(
                out,
                "cell,{},{},{},{},{},{},{},{},{},{},{:.1},{},{}",
                csv_field(&c.instance),
                c.beam,
                c.time.as_secs_f64(),
                c.runs,
                c.objectives.len(),
                opt(c.mean_objective().map(|v| format!("{v:.3}"))),
                opt(c.best_objective()),
                opt(c.worst_objective()),
                opt(c.mean_gap_percent.map(|v| format!("{v:.4}"))),
                seconds(c.mean_seconds),
                c.mean_iterations,
                c.exhausted_runs,
                csv_field(&c.errors.join("; ")),
            );
        }
        for a in &self.averages {
            let _ = writeln!(
                out,
                "grid_average,*,{},{},{},,{},,,{},{},{:.1},,",
                a.beam,
                a.time.as_secs_f64(),
                a.instances,
                opt(a.mean_objective.map(|v| format!("{v:.3}"))),
                opt(a.mean_gap_percent.map(|v| format!("{v:.4}"))),
                seconds(a.mean_seconds),
                a.mean_iterations,
            );
        }
        out
    }
}
