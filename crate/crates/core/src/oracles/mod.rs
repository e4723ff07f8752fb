//! Exact reference solvers for checking the adapters on small instances.
//!
//! Nothing here uses the adapters' bounds or domain reductions; makespans
//! come from the plain dynamic program, which the tick simulator checks in
//! turn. Every oracle refuses inputs above its size guard rather than
//! running forever.

mod knapsack;
mod qcsp;
mod tick;

use thiserror::Error;

pub use knapsack::{knapsack_dp, knapsack_pareto, KnapsackOptimum, KNAPSACK_DP_GUARD, KNAPSACK_PARETO_GUARD};
pub use qcsp::{qcsp_brute_force, QcspOptima, QCSP_BRUTE_FORCE_GUARD};
pub use tick::{tick_simulate, tick_simulator, TickTrace, TICK_GUARD};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{oracle} refuses: size {size} exceeds guard {limit}")]
    GuardExceeded {
        oracle: &'static str,
        size: u128,
        limit: u128,
    },
    #[error(transparent)]
    Qcsp(#[from] crate::qcsp::QcspError),
}
