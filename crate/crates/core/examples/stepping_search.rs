//! Driving the search one iteration at a time and looking at the tree.
//!
//!     cargo run --example stepping_search

use mcts_combopt::engine::{IterationOutcome, NodeStatus, Search};
use mcts_combopt::qcsp::QcspInstance;

fn main() {
    let inst = QcspInstance::generate(10, 3, 4).unwrap();
    let mut search = Search::new(&inst, 7);
    for i in 1..=40 {
        if search.exhausted() {
            println!("tree exhausted after {} iterations", i - 1);
            break;
        }
        match search.run_iteration() {
            IterationOutcome::CompletedFeasible { objective, .. } => println!("{i:>3}: makespan {objective}"),
            IterationOutcome::CompletedInfeasible { objective } => {
                println!("{i:>3}: relaxed makespan {objective}, not a valid schedule")
            }
            IterationOutcome::Aborted => println!("{i:>3}: pruned"),
        }
        if i == 20 {
            search.apply_beam(1, 1);
            println!("     narrowed depth 1 to a single node");
        }
    }

    let tree = search.tree();
    let active = tree.nodes().filter(|(_, n)| n.status == NodeStatus::Active).count();
    println!("{} nodes created, {active} still active", tree.len());
    println!("incumbent {:?}", search.incumbent());
}
