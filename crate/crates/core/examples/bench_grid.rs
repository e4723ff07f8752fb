//! A small experiment grid in iteration-bounded mode, so the CSV is the same
//! on every machine.
//!
//!     cargo run --release --example bench_grid

use std::time::Duration;

use mcts_combopt::bench::{run_grid, BenchConfig, LoadedInstance, ProblemKind};
use mcts_combopt::qcsp::QcspInstance;

fn main() {
    let instances: Vec<(String, LoadedInstance)> = (0..3)
        .map(|seed| {
            let inst = QcspInstance::generate(16, 4, seed).unwrap();
            (format!("ship{seed}"), LoadedInstance::Qcsp(inst))
        })
        .collect();
    let config = BenchConfig {
        problem: ProblemKind::Qcsp,
        instances: Vec::new(),
        beams: vec![1, 10, 100],
        times: vec![Duration::from_secs(10), Duration::from_secs(100)],
        runs: 5,
        seed_base: 0,
        max_iterations: Some(2_000),
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    print!("{}", run_grid(&config, &instances).to_csv());
}
