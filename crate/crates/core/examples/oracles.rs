//! Exact reference answers: full enumeration for QCSP (with a tick-by-tick
//! crane simulation deciding feasibility) and dynamic programs for knapsack.
//!
//!     cargo run --release --example oracles

use mcts_combopt::knapsack::KnapsackInstance;
use mcts_combopt::oracles::{knapsack_dp, knapsack_pareto, qcsp_brute_force, tick_simulate};
use mcts_combopt::qcsp::QcspInstance;
use mcts_combopt::{solve, SearchParams};

fn main() {
    let inst = QcspInstance::generate(9, 3, 11).unwrap();
    let optima = qcsp_brute_force(&inst).unwrap();
    println!("qcsp {:?}, 3 cranes", inst.processing());
    println!(
        "  relaxation optimum {} at {:?}",
        optima.relax_optimum, optima.relax_argmin
    );
    println!(
        "  valid-schedule optimum {:?} at {:?}",
        optima.original_optimum, optima.original_argmin
    );

    let sigma = optima.original_argmin.clone().unwrap();
    let trace = tick_simulate(&inst, &sigma).unwrap();
    println!("  simulated starts {:?}, makespan {}", trace.start, trace.makespan);
    let report = solve(&inst, &SearchParams::iterations(5_000, 100, 0)).unwrap();
    println!("  search finds {:?}", report.best_objective);

    let small = KnapsackInstance::spanner(25, 0.4, 2).unwrap();
    match knapsack_dp(&small) {
        Ok(opt) => println!("knapsack dp optimum {}", opt.profit),
        Err(e) => println!("knapsack dp: {e}"),
    }
    println!("knapsack pareto optimum {}", knapsack_pareto(&small).unwrap());
}
