//! 0-1 knapsack.
//!
//! Items are searched in non-increasing profit/weight order, one binary
//! decision per item with `false` enumerated first. The bound is Dantzig's LP
//! bound, floored (profits are integers), and the simulation policy is the
//! plain greedy fill.

mod instance;
mod state;

use thiserror::Error;

use crate::engine::{Problem, Sense};

pub use instance::{exp_group_base, Item, KnapsackInstance};
pub use state::{DantzigBound, KnapsackState};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnapsackError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance has no items")]
    NoItems,
    #[error("capacity must be positive, got {0}")]
    NonPositiveCapacity(i64),
    #[error("item {index} has a non-positive profit or weight")]
    NonPositiveItem { index: usize },
    #[error("item {index} weighs {weight}, more than the capacity {capacity}")]
    ItemTooHeavy { index: usize, weight: i64, capacity: i64 },
    #[error("all items fit together (total weight {total} <= capacity {capacity})")]
    EverythingFits { total: i128, capacity: i64 },
    #[error("{0}")]
    Generator(String),
    #[error("selection covers {found} items, instance has {expected}")]
    SelectionLength { expected: usize, found: usize },
}

impl KnapsackError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        KnapsackError::Parse {
            line,
            message: message.into(),
        }
    }
}

impl Problem for KnapsackInstance {
    type Value = bool;
    type State = KnapsackState;
    type Objective = i64;

    fn sense(&self) -> Sense {
        Sense::Maximize
    }

    fn depth(&self) -> usize {
        self.len()
    }

    fn root_state(&self) -> KnapsackState {
        KnapsackState::root(self)
    }

    fn reduced_domain(&self, state: &KnapsackState, level: usize) -> Vec<bool> {
        debug_assert_eq!(state.level(), level);
        state.reduced_domain(self)
    }

    fn apply_value(&self, state: &KnapsackState, take: bool) -> KnapsackState {
        state.pushed(self, take)
    }

    fn bound(&self, state: &KnapsackState) -> i64 {
        state.dantzig_bound(self).floor()
    }

    fn heuristic_complete(&self, state: &KnapsackState) -> Vec<bool> {
        state.greedy_completion(self)
    }

    fn objective(&self, x: &[bool]) -> i64 {
        self.evaluate(x).0
    }

    fn is_original_feasible(&self, x: &[bool]) -> bool {
        x.len() == self.len() && self.evaluate(x).1 <= self.capacity()
    }
}

/// Solution file contents: `"profit\nbits\n"`, bits in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackSolution {
    pub profit: i64,
    /// Selection in input order.
    pub take: Vec<bool>,
}

impl KnapsackSolution {
    /// Builds the file form of a selection given in ratio order.
    pub fn from_sorted(instance: &KnapsackInstance, x: &[bool]) -> Self {
        KnapsackSolution {
            profit: instance.evaluate(x).0,
            take: instance.to_input_order(x),
        }
    }

    pub fn serialize(&self) -> String {
        let bits: String = self.take.iter().map(|&t| if t { '1' } else { '0' }).collect();
        format!("{}\n{}\n", self.profit, bits)
    }

    pub fn parse(text: &str) -> Result<Self, KnapsackError> {
        let mut lines = text.lines();
        let profit = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| KnapsackError::parse(1, "expected the profit"))?;
        let take = lines
            .next()
            .unwrap_or("")
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(KnapsackError::parse(2, format!("bad bit {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KnapsackSolution { profit, take })
    }

    /// Recomputed `(profit, weight)` of this selection.
    pub fn evaluate(&self, instance: &KnapsackInstance) -> Result<(i64, i64), KnapsackError> {
        if self.take.len() != instance.len() {
            return Err(KnapsackError::SelectionLength {
                expected: instance.len(),
                found: self.take.len(),
            });
        }
        Ok(instance.evaluate(&instance.from_input_order(&self.take)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_heuristic_is_six() {
        let inst = KnapsackInstance::two_item_fixture();
        let (x, profit, feasible) = inst.standalone_heuristic();
        assert_eq!((x, profit, feasible), (vec![true, false], 6, true));
        assert_eq!(inst.bound(&inst.root_state()), 9);
    }

    #[test]
    fn solution_file_uses_input_order() {
        let inst = KnapsackInstance::parse("2 8\n5 5\n6 5\n").unwrap();
        let sol = KnapsackSolution::from_sorted(&inst, &[true, false]);
        assert_eq!(sol.serialize(), "6\n01\n");
        let back = KnapsackSolution::parse(&sol.serialize()).unwrap();
        assert_eq!(back.evaluate(&inst).unwrap(), (6, 5));
        assert!(KnapsackSolution::parse("6\n0x\n").is_err());
    }
}
