//! Quay crane scheduling with non-crossing constraints.
//!
//! The search runs over the relaxation that only fixes which crane handles
//! which bay (`sigma`); for a fixed `sigma` the move-ASAP schedule is
//! makespan-optimal for the relaxation. Candidate answers are then filtered
//! through [`is_original_feasible`], which restores the spacing constraints.

mod instance;
mod schedule;
mod state;

use thiserror::Error;

use crate::engine::{Problem, Sense};

pub use instance::QcspInstance;
pub use schedule::{
    check_original, check_sigma, earliest_time_full, is_original_feasible, makespan, EarliestTimes, Schedule, Violation,
};
pub use state::QcspState;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QcspError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance has no bays")]
    NoBays,
    #[error("instance has no cranes")]
    NoCranes,
    #[error("{cranes} cranes do not fit on {bays} bays")]
    TooManyCranes { bays: usize, cranes: usize },
    #[error("bay {bay} has a non-positive processing time")]
    NonPositiveTime { bay: usize },
    #[error("assignment covers {found} bays, instance has {expected}")]
    SigmaLength { expected: usize, found: usize },
    #[error("bay {bay} assigned to crane {crane}, only {cranes} cranes exist")]
    CraneOutOfRange { bay: usize, crane: usize, cranes: usize },
}

impl QcspError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        QcspError::Parse {
            line,
            message: message.into(),
        }
    }
}

impl Problem for QcspInstance {
    type Value = usize;
    type State = QcspState;
    type Objective = i64;

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    fn depth(&self) -> usize {
        self.bays()
    }

    fn root_state(&self) -> QcspState {
        QcspState::root(self)
    }

    fn reduced_domain(&self, state: &QcspState, level: usize) -> Vec<usize> {
        debug_assert_eq!(state.level(), level);
        state.reduced_domain(self)
    }

    fn apply_value(&self, state: &QcspState, crane: usize) -> QcspState {
        state.pushed(self, crane)
    }

    fn bound(&self, state: &QcspState) -> i64 {
        state.lower_bound(self)
    }

    fn heuristic_complete(&self, state: &QcspState) -> Vec<usize> {
        state.greedy_completion(self)
    }

    fn objective(&self, sigma: &[usize]) -> i64 {
        makespan(self, sigma).expect("engine builds complete assignments")
    }

    fn is_original_feasible(&self, sigma: &[usize]) -> bool {
        is_original_feasible(self, sigma)
    }
}

/// A crane assignment with its claimed makespan, as stored in solution files:
/// `"makespan\nsigma_0 ... sigma_{n-1}\n"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcspSolution {
    pub makespan: i64,
    pub sigma: Vec<usize>,
}

impl QcspSolution {
    pub fn serialize(&self) -> String {
        let sigma: Vec<String> = self.sigma.iter().map(usize::to_string).collect();
        format!("{}\n{}\n", self.makespan, sigma.join(" "))
    }

    pub fn parse(text: &str) -> Result<Self, QcspError> {
        let mut lines = text.lines();
        let makespan = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| QcspError::parse(1, "expected the makespan"))?;
        let sigma = lines
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| QcspError::parse(2, format!("bad crane index {t:?}")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Ok(QcspSolution { makespan, sigma })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solution_file_round_trip() {
        let sol = QcspSolution {
            makespan: 11,
            sigma: vec![0, 1, 0, 1],
        };
        assert_eq!(sol.serialize(), "11\n0 1 0 1\n");
        assert_eq!(QcspSolution::parse(&sol.serialize()).unwrap(), sol);
        assert!(QcspSolution::parse("x\n0\n").is_err());
    }

    #[test]
    fn toy_heuristic_from_root() {
        let toy = QcspInstance::toy();
        let (sigma, objective, _) = toy.standalone_heuristic();
        assert_eq!(sigma.len(), 4);
        assert!(objective >= 9);
        assert_eq!(objective, makespan(&toy, &sigma).unwrap());
    }
}
