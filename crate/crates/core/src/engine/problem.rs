use std::fmt;

use super::sense::{Objective, Sense};

/// What a combinatorial problem has to provide to be searched by the engine.
///
/// The search space tree fixes one decision variable per level, in order
/// `0..depth()`. States are built incrementally from the root by
/// [`Problem::apply_value`]; the engine never asks the problem to undo a
/// move, it re-derives states from the root on every iteration.
///
/// Two soundness requirements are the implementor's responsibility:
///
/// * [`Problem::bound`] must be a valid bound over every completion of the
///   state: a lower bound when minimizing, an upper bound when maximizing.
/// * [`Problem::reduced_domain`] may only drop values whose removal keeps at
///   least one optimal completion reachable.
pub trait Problem {
    type Value: Copy + Eq + fmt::Debug;
    type State: Clone;
    type Objective: Objective;

    fn sense(&self) -> Sense;

    /// Number of decision variables, i.e. the depth of the search space tree.
    fn depth(&self) -> usize;

    fn root_state(&self) -> Self::State;

    /// Values to try for the variable at `level`, in enumeration order.
    fn reduced_domain(&self, state: &Self::State, level: usize) -> Vec<Self::Value>;

    fn apply_value(&self, state: &Self::State, value: Self::Value) -> Self::State;

    fn bound(&self, state: &Self::State) -> Self::Objective;

    /// Heuristic simulation policy. Returns the values for the remaining
    /// levels (the suffix after the state's prefix).
    fn heuristic_complete(&self, state: &Self::State) -> Vec<Self::Value>;

    /// Objective of a complete decision sequence.
    fn objective(&self, solution: &[Self::Value]) -> Self::Objective;

    /// Whether a complete decision sequence is a valid answer. Problems
    /// searched through a relaxation use this to reject relaxed-only
    /// solutions.
    fn is_original_feasible(&self, solution: &[Self::Value]) -> bool;

    /// The heuristic run standalone from the root, with its objective and
    /// feasibility.
    fn standalone_heuristic(&self) -> (Vec<Self::Value>, Self::Objective, bool) {
        let solution = self.heuristic_complete(&self.root_state());
        let objective = self.objective(&solution);
        let feasible = self.is_original_feasible(&solution);
        (solution, objective, feasible)
    }
}
