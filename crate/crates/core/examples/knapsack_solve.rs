//! Solve a strongly correlated spanner instance and compare against the root
//! Dantzig bound and an exact optimum.
//!
//!     cargo run --release --example knapsack_solve -- [n] [f] [seconds]

use std::time::Duration;

use mcts_combopt::knapsack::{KnapsackInstance, KnapsackSolution, KnapsackState};
use mcts_combopt::oracles::knapsack_pareto;
use mcts_combopt::{solve, Problem, SearchParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(200, |a| a.parse().expect("n"));
    let f: f64 = args.next().map_or(0.5, |a| a.parse().expect("f"));
    let secs: f64 = args.next().map_or(2.0, |a| a.parse().expect("seconds"));

    let inst = KnapsackInstance::spanner(n, f, 1).unwrap();
    let root = KnapsackState::root(&inst).dantzig_bound(&inst);
    let (_, greedy, _) = inst.standalone_heuristic();
    println!(
        "n={n} capacity={} greedy={greedy} dantzig={:.1}",
        inst.capacity(),
        root.to_f64()
    );

    let report = solve(&inst, &SearchParams::timed(Duration::from_secs_f64(secs), 10, 0)).unwrap();
    let best = report.best_objective.unwrap();
    println!(
        "mcts: {best} after {} iterations, {} improvements",
        report.iterations_completed,
        report.improvements.len()
    );
    match knapsack_pareto(&inst) {
        Ok(opt) => println!(
            "exact optimum {opt} (gap {:.4}%)",
            100.0 * (opt - best) as f64 / opt as f64
        ),
        Err(e) => println!("no exact optimum: {e}"),
    }

    let file = KnapsackSolution::from_sorted(&inst, &report.best_solution);
    let chosen = file.take.iter().filter(|&&t| t).count();
    println!("{chosen} of {n} items packed");
}
