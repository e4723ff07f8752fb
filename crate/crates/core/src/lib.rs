//! Anytime Monte Carlo tree search for combinatorial optimization.
//!
//! The [`engine`] module holds the generic search. Problems plug in through
//! [`engine::Problem`]; two adapters ship with the crate:
//!
//! * [`qcsp`]: quay crane scheduling with non-crossing constraints
//!   (minimize makespan), searched over its crane-assignment relaxation.
//! * [`knapsack`]: the 0-1 knapsack problem (maximize profit).
//!
//! [`oracles`] contains exact, deliberately naive solvers used to check the
//! adapters, and [`bench`] is the experiment harness behind the
//! `mcts-bench` binary.

pub mod bench;
pub mod engine;
pub mod knapsack;
pub mod oracles;
pub mod qcsp;

pub use engine::{solve, Problem, SearchParams, Sense, SolveReport};
