//! Four bays, two cranes: the schedule table, the root bound, and a short
//! search that finds the optimal makespan.
//!
//!     cargo run --example toy_qcsp

use std::time::Duration;

use mcts_combopt::qcsp::{check_original, earliest_time_full, QcspInstance};
use mcts_combopt::{solve, Problem, SearchParams};

fn main() {
    let toy = QcspInstance::toy();
    println!("processing times {:?}, {} cranes", toy.processing(), toy.cranes());

    let sigma = [0, 1, 0, 1];
    let table = earliest_time_full(&toy, &sigma).unwrap();
    println!("earliest free times for sigma = {sigma:?}:");
    for k in 0..toy.cranes() {
        let row: Vec<i64> = (0..toy.bays()).map(|b| table.get(k, b)).collect();
        println!("  crane {k}: {row:?}");
    }
    println!("makespan {}", table.makespan());

    let schedule = check_original(&toy, &sigma).unwrap().expect("valid crane schedule");
    for (b, crane) in sigma.iter().enumerate() {
        println!(
            "  bay {b}: crane {crane} works [{}, {})",
            schedule.start[b], schedule.completion[b]
        );
    }

    println!("root lower bound {}", toy.bound(&toy.root_state()));
    let (greedy, span, _) = toy.standalone_heuristic();
    println!("bound-greedy heuristic alone: {greedy:?} -> {span}");

    let report = solve(&toy, &SearchParams::timed(Duration::from_secs(1), 10, 0)).unwrap();
    println!(
        "search: {:?} -> {:?} after {} iterations (tree exhausted: {})",
        report.best_solution,
        report.best_objective,
        report.iterations_completed + report.iterations_pruned,
        report.exhausted
    );
}
