//! Experiment harness: loading instances of either problem, single solves
//! with a one-line summary, and the seeded multi-run grid.

mod config;
mod grid;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::engine::{solve, Problem, SearchParams, SolveError, SolveReport};
use crate::knapsack::{KnapsackError, KnapsackInstance, KnapsackSolution};
use crate::qcsp::{QcspError, QcspInstance, QcspSolution};

pub use config::BenchConfig;
pub use grid::{run_grid, CellSummary, GridAverage, GridResult, CELL_HEADER, GRID_HEADER};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Qcsp {
        path: String,
        #[source]
        source: QcspError,
    },
    #[error("{path}: {source}")]
    Knapsack {
        path: String,
        #[source]
        source: KnapsackError,
    },
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("unknown problem kind {0:?} (expected qcsp or knapsack)")]
    UnknownProblem(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    Qcsp,
    Knapsack,
}

impl FromStr for ProblemKind {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qcsp" => Ok(ProblemKind::Qcsp),
            "knapsack" => Ok(ProblemKind::Knapsack),
            other => Err(BenchError::UnknownProblem(other.to_string())),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemKind::Qcsp => "qcsp",
            ProblemKind::Knapsack => "knapsack",
        })
    }
}

/// An instance of either supported problem.
#[derive(Clone, Debug, PartialEq)]
pub enum LoadedInstance {
    Qcsp(QcspInstance),
    Knapsack(KnapsackInstance),
}

impl LoadedInstance {
    pub fn parse(kind: ProblemKind, text: &str, origin: &str) -> Result<Self, BenchError> {
        match kind {
            ProblemKind::Qcsp => {
                QcspInstance::parse(text)
                    .map(LoadedInstance::Qcsp)
                    .map_err(|source| BenchError::Qcsp {
                        path: origin.to_string(),
                        source,
                    })
            }
            ProblemKind::Knapsack => KnapsackInstance::parse(text)
                .map(LoadedInstance::Knapsack)
                .map_err(|source| BenchError::Knapsack {
                    path: origin.to_string(),
                    source,
                }),
        }
    }

    pub fn load(kind: ProblemKind, path: &Path) -> Result<Self, BenchError> {
        let origin = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| BenchError::Io {
            path: origin.clone(),
            source,
        })?;
        Self::parse(kind, &text, &origin)
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            LoadedInstance::Qcsp(_) => ProblemKind::Qcsp,
            LoadedInstance::Knapsack(_) => ProblemKind::Knapsack,
        }
    }

    pub fn solve(&self, params: &SearchParams) -> Result<RunOutcome, SolveError> {
        match self {
            LoadedInstance::Qcsp(inst) => {
                let report = solve(inst, params)?;
                let solution = report.best_objective.map(|makespan| {
                    QcspSolution {
                        makespan,
                        sigma: report.best_solution.clone(),
                    }
                    .serialize()
                });
                Ok(RunOutcome::from_report(&report, solution))
            }
            LoadedInstance::Knapsack(inst) => {
                let report = solve(inst, params)?;
                let solution = report
                    .best_objective
                    .map(|_| KnapsackSolution::from_sorted(inst, &report.best_solution).serialize());
                Ok(RunOutcome::from_report(&report, solution))
            }
        }
    }

    /// Objective and feasibility of the heuristic alone, run from the root.
    pub fn standalone_heuristic(&self) -> (i64, bool) {
        match self {
            LoadedInstance::Qcsp(inst) => {
                let (_, objective, feasible) = inst.standalone_heuristic();
                (objective, feasible)
            }
            LoadedInstance::Knapsack(inst) => {
                let (_, objective, feasible) = inst.standalone_heuristic();
                (objective, feasible)
            }
        }
    }
}

/// Problem-independent digest of one solve.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub objective: Option<i64>,
    pub root_bound: Option<i64>,
    pub seconds: f64,
    pub iterations: u64,
    pub exhausted: bool,
    /// Solution file contents, if a feasible solution was found.
    pub solution_file: Option<String>,
    /// Canonical report serialization (no timings).
    pub canonical_report: String,
}

impl RunOutcome {
    fn from_report<V: serde::Serialize>(report: &SolveReport<V, i64>, solution_file: Option<String>) -> Self {
        RunOutcome {
            objective: report.best_objective,
            root_bound: report.root_bound,
            seconds: report.elapsed_seconds(),
            iterations: report.iterations_completed + report.iterations_pruned,
            exhausted: report.exhausted,
            solution_file,
            canonical_report: report.to_canonical_json(),
        }
    }

    pub fn gap_percent(&self) -> Option<f64> {
        gap_percent(self.objective?, self.root_bound?)
    }

    /// `objective,root_bound,gap_percent,seconds,iterations,exhausted`.
    /// With `timed == false` the seconds field is `-` so that iteration-bounded
    /// runs print identically.
    pub fn summary_row(&self, timed: bool) -> String {
        let objective = self.objective.map(|o| o.to_string()).unwrap_or_default();
        let bound = self.root_bound.map(|b| b.to_string()).unwrap_or_default();
        let gap = self.gap_percent().map(|g| format!("{g:.4}")).unwrap_or_default();
        let seconds = if timed {
            format!("{:.3}", self.seconds)
        } else {
            "-".to_string()
        };
        format!(
            "{objective},{bound},{gap},{seconds},{},{}",
            self.iterations, self.exhausted
        )
    }
}

pub const SUMMARY_HEADER: &str = "objective,root_bound,gap_percent,seconds,iterations,exhausted";

/// `100 * |objective - bound| / |bound|`; undefined for a zero bound.
pub fn gap_percent(objective: i64, bound: i64) -> Option<f64> {
    (bound != 0).then(|| 100.0 * (objective - bound).unsigned_abs() as f64 / bound.unsigned_abs() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_is_sense_free() {
        assert_eq!(gap_percent(110, 100), Some(10.0));
        assert_eq!(gap_percent(90, 100), Some(10.0));
        assert_eq!(gap_percent(5, 0), None);
    }

    #[test]
    fn toy_summary_row() {
        let toy = LoadedInstance::Qcsp(QcspInstance::toy());
        let outcome = toy.solve(&SearchParams::iterations(200, 10, 0)).unwrap();
        assert_eq!(outcome.objective, Some(11));
        assert_eq!(outcome.root_bound, Some(9));
        let row = outcome.summary_row(false);
        assert!(row.starts_with("11,9,22.2222,-,"), "{row}");
        assert_eq!(
            outcome.solution_file.as_deref().map(|s| s.lines().next().unwrap()),
            Some("11")
        );
    }

    #[test]
    fn problem_kind_parsing() {
        assert_eq!("qcsp".parse::<ProblemKind>().unwrap(), ProblemKind::Qcsp);
        assert!("tsp".parse::<ProblemKind>().is_err());
    }
}
