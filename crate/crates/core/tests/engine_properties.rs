use proptest::prelude::*;

use mcts_combopt::engine::{rank_scores, IterationOutcome, Search, ROOT};
use mcts_combopt::knapsack::{Item, KnapsackInstance};
use mcts_combopt::oracles::{knapsack_dp, qcsp_brute_force};
use mcts_combopt::qcsp::QcspInstance;
use mcts_combopt::{solve, Problem, SearchParams, Sense};

fn knapsack() -> impl Strategy<Value = KnapsackInstance> {
    (2usize..14, 20i64..300).prop_flat_map(|(n, c)| {
        prop::collection::vec((1i64..100, 1i64..=c), n).prop_filter_map("violates standing assumptions", move |raw| {
            KnapsackInstance::new(raw.into_iter().map(|(p, w)| Item::new(p, w)).collect(), c).ok()
        })
    })
}

fn qcsp() -> impl Strategy<Value = QcspInstance> {
    (1usize..8, 1usize..4, any::<u64>()).prop_map(|(n, m, seed)| QcspInstance::generate(n, m.min(n), seed).unwrap())
}

/// A small self-contained problem: choose digits 0..3 at each of `weights`
/// positions, minimizing `sum w_i * (d_i - target_i)^2`. Bound is the cost so
/// far. Every assignment is feasible except those using digit 3 twice.
struct Digits {
    weights: Vec<i64>,
    target: Vec<i64>,
}

impl Problem for Digits {
    type Value = i64;
    type State = Vec<i64>;
    type Objective = i64;

    fn sense(&self) -> Sense {
        Sense::Minimize
    }
    fn depth(&self) -> usize {
        self.weights.len()
    }
    fn root_state(&self) -> Vec<i64> {
        Vec::new()
    }
    fn reduced_domain(&self, _: &Vec<i64>, _: usize) -> Vec<i64> {
        vec![0, 1, 2, 3]
    }
    fn apply_value(&self, state: &Vec<i64>, value: i64) -> Vec<i64> {
        let mut next = state.clone();
        next.push(value);
        next
    }
    fn bound(&self, state: &Vec<i64>) -> i64 {
        self.objective(state)
    }
    fn heuristic_complete(&self, state: &Vec<i64>) -> Vec<i64> {
        vec![0; self.depth() - state.len()]
    }
    fn objective(&self, solution: &[i64]) -> i64 {
        solution
            .iter()
            .zip(&self.weights)
            .zip(&self.target)
            .map(|((d, w), t)| w * (d - t) * (d - t))
            .sum()
    }
    fn is_original_feasible(&self, solution: &[i64]) -> bool {
        solution.iter().filter(|&&d| d == 3).count() <= 1
    }
}

fn digits_optimum(p: &Digits) -> i64 {
    let n = p.depth();
    (0..4usize.pow(n as u32))
        .filter_map(|code| {
            let x: Vec<i64> = (0..n).map(|i| (code / 4usize.pow(i as u32) % 4) as i64).collect();
            p.is_original_feasible(&x).then(|| p.objective(&x))
        })
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn never_worse_than_the_heuristic(inst in knapsack(), k in 1u64..40, w in 1usize..8, seed in any::<u64>()) {
        let (_, greedy, _) = inst.standalone_heuristic();
        let report = solve(&inst, &SearchParams::iterations(k, w, seed)).unwrap();
        prop_assert!(report.best_objective.unwrap() >= greedy);
    }

    #[test]
    fn one_iteration_is_the_heuristic(inst in qcsp(), seed in any::<u64>()) {
        let (solution, objective, feasible) = inst.standalone_heuristic();
        let report = solve(&inst, &SearchParams::iterations(1, 10, seed)).unwrap();
        prop_assert_eq!(report.iterations_completed + report.iterations_pruned, 1);
        if feasible {
            prop_assert_eq!(report.best_objective, Some(objective));
            prop_assert_eq!(report.best_solution, solution);
        } else {
            prop_assert_eq!(report.best_objective, None);
        }
    }

    #[test]
    fn incumbent_only_improves(inst in knapsack(), seed in any::<u64>()) {
        let report = solve(&inst, &SearchParams::iterations(200, 3, seed)).unwrap();
        for pair in report.improvements.windows(2) {
            prop_assert!(pair[1].objective > pair[0].objective);
            prop_assert!(pair[1].iteration > pair[0].iteration);
        }
        prop_assert_eq!(report.improvements.last().map(|i| i.objective), report.best_objective);
    }

    #[test]
    fn visits_add_up(inst in qcsp(), seed in any::<u64>(), steps in 1usize..200) {
        let mut search = Search::new(&inst, seed);
        for _ in 0..steps {
            if search.exhausted() {
                break;
            }
            search.run_iteration();
        }
        for (_, node) in search.tree().nodes() {
            let through: u64 = node.edges.iter().flatten().map(|e| e.visits).sum();
            prop_assert_eq!(node.visits, node.terminal_visits + through);
        }
    }

    #[test]
    fn aborted_iterations_leave_statistics_alone(inst in knapsack(), seed in any::<u64>()) {
        let mut search = Search::new(&inst, seed);
        for _ in 0..300 {
            if search.exhausted() {
                break;
            }
            let before = search.tree().node(ROOT).visits;
            let outcome = search.run_iteration();
            let after = search.tree().node(ROOT).visits;
            match outcome {
                IterationOutcome::Aborted => prop_assert_eq!(before, after),
                _ => prop_assert_eq!(before + 1, after),
            }
        }
    }

    /// Without beam narrowing the search is exact: once the tree is used up
    /// the incumbent is optimal, so pruning never discarded the optimum.
    #[test]
    fn exhaustion_without_beam_is_optimal(inst in knapsack(), seed in any::<u64>()) {
        let mut search = Search::new(&inst, seed);
        while !search.exhausted() {
            search.run_iteration();
        }
        let optimum = knapsack_dp(&inst).unwrap().profit;
        prop_assert_eq!(search.incumbent().map(|(_, o)| o), Some(optimum));
    }

    #[test]
    fn exhaustion_finds_qcsp_optimum(inst in qcsp(), seed in any::<u64>()) {
        let mut search = Search::new(&inst, seed);
        while !search.exhausted() {
            search.run_iteration();
        }
        let optimum = qcsp_brute_force(&inst).unwrap().original_optimum;
        prop_assert_eq!(search.incumbent().map(|(_, o)| o), optimum);
    }

    #[test]
    fn pruning_changes_speed_not_answers(
        weights in prop::collection::vec(1i64..9, 1..6),
        target in prop::collection::vec(0i64..4, 6),
        seed in any::<u64>(),
    ) {
        let p = Digits { target: target[..weights.len()].to_vec(), weights };
        let optimum = digits_optimum(&p);
        for pruning in [true, false] {
            let mut search = Search::new(&p, seed).with_pruning(pruning);
            while !search.exhausted() {
                search.run_iteration();
            }
            prop_assert_eq!(search.incumbent().map(|(_, o)| o), Some(optimum));
        }
    }

    #[test]
    fn ranks_ignore_affine_rescaling(
        averages in prop::collection::vec(-1e6f64..1e6, 1..12),
        scale in 0.001f64..1000.0,
        shift in -1e6f64..1e6,
    ) {
        let moved: Vec<f64> = averages.iter().map(|a| a * scale + shift).collect();
        // rescaling can merge near-equal values; only compare when order is kept
        let order = |v: &[f64]| {
            let mut idx: Vec<usize> = (0..v.len()).collect();
            idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
            idx
        };
        prop_assume!(order(&averages) == order(&moved));
        prop_assume!(averages.windows(2).all(|w| w[0] != w[1]) && moved.windows(2).all(|w| w[0] != w[1]));
        for sense in [Sense::Minimize, Sense::Maximize] {
            let a = rank_scores(&averages, sense);
            prop_assert_eq!(&a, &rank_scores(&moved, sense));
            prop_assert!((a.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn bad_parameters_are_rejected() {
    let toy = QcspInstance::toy();
    assert!(solve(&toy, &SearchParams::iterations(0, 10, 0)).is_err());
    assert!(solve(&toy, &SearchParams::iterations(10, 0, 0)).is_err());
}

#[test]
fn max_iterations_caps_the_total() {
    let inst = QcspInstance::generate(30, 4, 2).unwrap();
    for k in [1, 7, 30, 31, 100] {
        let report = solve(&inst, &SearchParams::iterations(k, 10, 0)).unwrap();
        let total: u64 = report.iterations_per_stage.iter().sum();
        assert!(total <= k, "k={k} total={total}");
        assert_eq!(total, report.iterations_completed + report.iterations_pruned);
    }
}
