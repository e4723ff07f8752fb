use proptest::prelude::*;

use mcts_combopt::oracles::{qcsp_brute_force, tick_simulate};
use mcts_combopt::qcsp::{
    check_original, earliest_time_full, is_original_feasible, makespan, QcspError, QcspInstance, QcspState, Violation,
};
use mcts_combopt::Problem;

/// Instance plus an arbitrary assignment for it.
fn assigned(max_n: usize, max_m: usize) -> impl Strategy<Value = (QcspInstance, Vec<usize>)> {
    (1..=max_n, 1..=max_m, any::<u64>()).prop_flat_map(|(n, m, seed)| {
        let m = m.min(n);
        let inst = QcspInstance::generate(n, m, seed).unwrap();
        (Just(inst), prop::collection::vec(0..m, n))
    })
}

fn reduced_optimum(inst: &QcspInstance, state: &QcspState, prefix: &mut Vec<usize>) -> Option<i64> {
    if prefix.len() == inst.bays() {
        return is_original_feasible(inst, prefix).then(|| makespan(inst, prefix).unwrap());
    }
    let domain = state.reduced_domain(inst);
    assert!(!domain.is_empty(), "empty domain at {prefix:?}");
    domain
        .into_iter()
        .filter_map(|crane| {
            prefix.push(crane);
            let found = reduced_optimum(inst, &state.pushed(inst, crane), prefix);
            prefix.pop();
            found
        })
        .min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn incremental_columns_match_the_full_table((inst, sigma) in assigned(12, 5)) {
        let table = earliest_time_full(&inst, &sigma).unwrap();
        let mut state = QcspState::root(&inst);
        for (b, &k) in sigma.iter().enumerate() {
            state.push(&inst, k);
            prop_assert_eq!(state.column(), &table.column(b)[..]);
        }
        prop_assert_eq!(state.lower_bound(&inst), table.makespan());
    }

    #[test]
    fn bound_never_exceeds_a_completion((inst, sigma) in assigned(12, 5), cut in 0usize..12) {
        let span = makespan(&inst, &sigma).unwrap();
        let mut state = QcspState::root(&inst);
        for &k in &sigma[..cut.min(sigma.len())] {
            state.push(&inst, k);
        }
        prop_assert!(state.lower_bound(&inst) <= span);
    }

    #[test]
    fn columns_stay_sorted((inst, sigma) in assigned(12, 5)) {
        let mut state = QcspState::root(&inst);
        for &k in &sigma {
            state.push(&inst, k);
            let sorted = state.column().windows(2).all(|w| w[0] >= w[1]);
            prop_assert!(sorted);
        }
    }

    #[test]
    fn feasibility_agrees_with_tick_simulation((inst, sigma) in assigned(6, 3)) {
        let trace = tick_simulate(&inst, &sigma).unwrap();
        prop_assert_eq!(is_original_feasible(&inst, &sigma), trace.feasible());
        if trace.feasible() {
            let schedule = check_original(&inst, &sigma).unwrap().unwrap();
            prop_assert_eq!(schedule.makespan, trace.makespan);
            prop_assert_eq!(&schedule.start, &trace.start);
            prop_assert_eq!(&schedule.completion, &trace.completion);
        }
    }

    #[test]
    fn move_asap_schedules_never_cross((inst, sigma) in assigned(8, 4)) {
        let verdict = check_original(&inst, &sigma).unwrap();
        let crossed = matches!(verdict, Err(Violation::Crossing { .. }));
        prop_assert!(!crossed);
    }

    #[test]
    fn reduced_tree_keeps_an_optimum(n in 1usize..8, m in 1usize..4, seed in any::<u64>()) {
        let inst = QcspInstance::generate(n, m.min(n), seed).unwrap();
        let oracle = qcsp_brute_force(&inst).unwrap().original_optimum;
        prop_assert_eq!(reduced_optimum(&inst, &QcspState::root(&inst), &mut Vec::new()), oracle);
    }

    #[test]
    fn heuristic_follows_the_reduced_domain(n in 1usize..20, m in 1usize..6, seed in any::<u64>()) {
        let inst = QcspInstance::generate(n, m.min(n), seed).unwrap();
        let (sigma, objective, _) = inst.standalone_heuristic();
        let mut state = QcspState::root(&inst);
        for &k in &sigma {
            prop_assert!(state.reduced_domain(&inst).contains(&k));
            state.push(&inst, k);
        }
        prop_assert_eq!(objective, makespan(&inst, &sigma).unwrap());
        prop_assert!(objective >= inst.bound(&inst.root_state()));
    }

    #[test]
    fn instance_round_trip(n in 1usize..40, m in 1usize..8, seed in any::<u64>()) {
        let inst = QcspInstance::generate(n, m.min(n), seed).unwrap();
        let text = inst.serialize();
        let back = QcspInstance::parse(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
        prop_assert!(inst.processing().iter().all(|p| (30..=100).contains(p)));
    }
}

#[test]
fn toy_instance_values() {
    let toy = QcspInstance::toy();
    assert_eq!(makespan(&toy, &[0, 1, 0, 1]).unwrap(), 11);
    let optima = qcsp_brute_force(&toy).unwrap();
    assert_eq!(optima.original_optimum, Some(11));
    assert_eq!(toy.bound(&toy.root_state()), 9);
}

#[test]
fn single_crane_bound_is_exact() {
    let inst = QcspInstance::new(vec![4, 7, 2], 1).unwrap();
    assert_eq!(inst.bound(&inst.root_state()), 13);
    assert_eq!(inst.standalone_heuristic().1, 13);
}

#[test]
fn malformed_input_is_an_error() {
    assert!(matches!(
        QcspInstance::parse("2 3\n1 1\n"),
        Err(QcspError::TooManyCranes { .. })
    ));
    assert!(QcspInstance::parse("2 1\n1 x\n").is_err());
    assert!(QcspInstance::parse("").is_err());
    assert!(makespan(&QcspInstance::toy(), &[0, 1]).is_err());
    assert!(makespan(&QcspInstance::toy(), &[0, 1, 2, 0]).is_err());
}
