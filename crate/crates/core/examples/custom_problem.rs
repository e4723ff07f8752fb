//! Plugging a new problem into the engine: assign jobs to two machines to
//! minimize the makespan, with a simple load-based bound and a
//! least-loaded-machine heuristic.
//!
//!     cargo run --example custom_problem

use mcts_combopt::{solve, Problem, SearchParams, Sense};

struct TwoMachines {
    jobs: Vec<i64>,
}

#[derive(Clone)]
struct Loads([i64; 2], usize);

impl Problem for TwoMachines {
    type Value = usize;
    type State = Loads;
    type Objective = i64;

    fn sense(&self) -> Sense {
        Sense::Minimize
    }

    fn depth(&self) -> usize {
        self.jobs.len()
    }

    fn root_state(&self) -> Loads {
        Loads([0, 0], 0)
    }

    fn reduced_domain(&self, state: &Loads, _level: usize) -> Vec<usize> {
        // machines are interchangeable until one has work
        if state.0 == [0, 0] {
            vec![0]
        } else {
            vec![0, 1]
        }
    }

    fn apply_value(&self, state: &Loads, machine: usize) -> Loads {
        let mut next = state.clone();
        next.0[machine] += self.jobs[state.1];
        next.1 += 1;
        next
    }

    fn bound(&self, state: &Loads) -> i64 {
        let rest: i64 = self.jobs[state.1..].iter().sum();
        let total = state.0[0] + state.0[1] + rest;
        state.0[0].max(state.0[1]).max((total + 1) / 2)
    }

    fn heuristic_complete(&self, state: &Loads) -> Vec<usize> {
        let mut loads = state.0;
        self.jobs[state.1..]
            .iter()
            .map(|&p| {
                let m = usize::from(loads[1] < loads[0]);
                loads[m] += p;
                m
            })
            .collect()
    }

    fn objective(&self, solution: &[usize]) -> i64 {
        let mut loads = [0, 0];
        for (&m, &p) in solution.iter().zip(&self.jobs) {
            loads[m] += p;
        }
        loads[0].max(loads[1])
    }

    fn is_original_feasible(&self, _: &[usize]) -> bool {
        true
    }
}

fn main() {
    let problem = TwoMachines {
        jobs: vec![3, 3, 2, 2, 2],
    };
    let (_, greedy, _) = problem.standalone_heuristic();
    let report = solve(&problem, &SearchParams::iterations(500, 20, 0)).unwrap();
    println!(
        "greedy {greedy}, search {:?} with {:?}",
        report.best_objective, report.best_solution
    );
    println!("bound at the root {:?}", report.root_bound);
}
