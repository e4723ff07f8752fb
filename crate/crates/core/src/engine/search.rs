use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::problem::Problem;
use super::select::{select_child, ChildStats};
use super::sense::{Objective, Sense};
use super::tree::{NodeId, SearchTree, ROOT};

#[derive(Debug, Error, PartialEq)]
pub enum SolveError {
    #[error("beam width must be positive")]
    ZeroBeamWidth,
    #[error("time budget must be positive and finite, got {0:?}")]
    BadTimeBudget(Duration),
    #[error("max iterations must be positive")]
    ZeroIterations,
    #[error("problem has no decision variables")]
    EmptyProblem,
}

/// Budget and shape of one solve.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchParams {
    pub time_budget: Duration,
    pub beam_width: usize,
    pub seed: u64,
    /// When set, stages are counted in iterations instead of wall time:
    /// each stage gets `ceil(max_iterations / depth)` iterations and the
    /// whole solve stops after `max_iterations`.
    pub max_iterations: Option<u64>,
    /// Bound-based pruning; switching it off is only useful for testing.
    pub pruning: bool,
}

impl SearchParams {
    pub fn timed(time_budget: Duration, beam_width: usize, seed: u64) -> Self {
        SearchParams {
            time_budget,
            beam_width,
            seed,
            max_iterations: None,
            pruning: true,
        }
    }

    pub fn iterations(max_iterations: u64, beam_width: usize, seed: u64) -> Self {
        SearchParams {
            time_budget: Duration::from_secs(1),
            beam_width,
            seed,
            max_iterations: Some(max_iterations),
            pruning: true,
        }
    }

    pub fn without_pruning(mut self) -> Self {
        self.pruning = false;
        self
    }

    fn validate(&self) -> Result<(), SolveError> {
        if self.beam_width == 0 {
            return Err(SolveError::ZeroBeamWidth);
        }
        if self.max_iterations == Some(0) {
            return Err(SolveError::ZeroIterations);
        }
        if self.max_iterations.is_none() && self.time_budget.is_zero() {
            return Err(SolveError::BadTimeBudget(self.time_budget));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum IterationOutcome<V, O> {
    CompletedFeasible {
        solution: Vec<V>,
        objective: O,
    },
    CompletedInfeasible {
        objective: O,
    },
    /// Stopped by a bound or by a node with nothing left to explore.
    Aborted,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Improvement<O> {
    pub iteration: u64,
    pub objective: O,
}

/// Result of [`solve`]. Wall-clock timings are kept out of the serialized
/// form so that iteration-bounded runs serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport<V, O> {
    pub sense: Sense,
    /// Empty when no original-feasible solution was found.
    pub best_solution: Vec<V>,
    pub best_objective: Option<O>,
    pub root_bound: Option<O>,
    pub iterations_completed: u64,
    pub iterations_pruned: u64,
    pub infeasible_completions: u64,
    pub exhausted: bool,
    pub nodes_created: usize,
    pub iterations_per_stage: Vec<u64>,
    pub improvements: Vec<Improvement<O>>,
    #[serde(skip)]
    pub stage_elapsed: Vec<f64>,
}

impl<V, O> SolveReport<V, O> {
    pub fn found_solution(&self) -> bool {
        self.best_objective.is_some()
    }

    pub fn elapsed_seconds(&self) -> f64 {
        self.stage_elapsed.iter().sum()
    }
}

impl<V: Serialize, O: Serialize> SolveReport<V, O> {
    /// Canonical JSON form, free of timing data.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Incremental MCTS over a [`Problem`]. [`solve`] drives this; it is public so
/// that callers can step iterations and inspect the tree.
pub struct Search<'p, P: Problem> {
    problem: &'p P,
    tree: SearchTree<P::Value, P::Objective>,
    rng: ChaCha8Rng,
    pruning: bool,
    incumbent: Option<(Vec<P::Value>, P::Objective)>,
    improvements: Vec<Improvement<P::Objective>>,
    iterations: u64,
    completed: u64,
    pruned: u64,
    infeasible: u64,
}

impl<'p, P: Problem> Search<'p, P> {
    /// The generator is ChaCha8 seeded with `seed_from_u64(seed)`.
    pub fn new(problem: &'p P, seed: u64) -> Self {
        Search {
            problem,
            tree: SearchTree::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            pruning: true,
            incumbent: None,
            improvements: Vec::new(),
            iterations: 0,
            completed: 0,
            pruned: 0,
            infeasible: 0,
        }
    }

    pub fn with_pruning(mut self, pruning: bool) -> Self {
        self.pruning = pruning;
        self
    }

    pub fn tree(&self) -> &SearchTree<P::Value, P::Objective> {
        &self.tree
    }

    pub fn incumbent(&self) -> Option<(&[P::Value], P::Objective)> {
        self.incumbent.as_ref().map(|(s, o)| (s.as_slice(), *o))
    }

    pub fn exhausted(&self) -> bool {
        self.tree.root_deleted()
    }

    pub fn iterations(&self) -> u64 {
        self.iterations
    }

    fn prunes(&self, bound: P::Objective) -> bool {
        match &self.incumbent {
            Some((_, best)) if self.pruning => self.problem.sense().bound_cannot_improve(bound, *best),
            _ => false,
        }
    }

    /// One selection / expansion / simulation / backpropagation pass.
    pub fn run_iteration(&mut self) -> IterationOutcome<P::Value, P::Objective> {
        assert!(!self.exhausted(), "iteration on an exhausted tree");
        self.iterations += 1;
        let problem = self.problem;
        let depth = problem.depth();

        let mut node = ROOT;
        let mut state = problem.root_state();
        let mut prefix: Vec<P::Value> = Vec::with_capacity(depth);
        let mut path: Vec<(NodeId, usize)> = Vec::with_capacity(depth);

        loop {
            if self.tree.node(node).visits == 0 {
                // newly reached: expansion point
                let bound = problem.bound(&state);
                self.tree.node_mut(node).store_bound(bound);
                if self.prunes(bound) {
                    return self.abort_at(node);
                }
                break;
            }
            let stored = self.tree.node(node).bound().expect("visited nodes carry a bound");
            if self.prunes(stored) {
                return self.abort_at(node);
            }
            let level = self.tree.node(node).depth;
            if level == depth {
                return self.abort_at(node);
            }
            if self.tree.node(node).edges.is_none() {
                let values = problem.reduced_domain(&state, level);
                self.tree.set_edges(node, values);
            }
            let Some(slot) = self.select(node) else {
                return self.abort_at(node);
            };
            let edge = &self.tree.node(node).edges.as_ref().expect("edges set above")[slot];
            let value = edge.value;
            let child = edge.child;
            state = problem.apply_value(&state, value);
            prefix.push(value);
            path.push((node, slot));
            node = match child {
                Some(child) => child,
                None => self.tree.materialize_child(node, slot),
            };
        }

        let suffix = problem.heuristic_complete(&state);
        prefix.extend(suffix);
        let solution = prefix;
        debug_assert_eq!(solution.len(), depth);
        let objective = problem.objective(&solution);
        let feasible = problem.is_original_feasible(&solution);

        self.backpropagate(&path, node, objective.to_f64());
        self.completed += 1;
        if self.tree.node(node).depth == depth {
            // a complete assignment has nothing further to explore
            self.tree.delete_cascade(node);
        }

        if !feasible {
            self.infeasible += 1;
            return IterationOutcome::CompletedInfeasible { objective };
        }
        let improves = match &self.incumbent {
            None => true,
            Some((_, best)) => problem.sense().improves(objective, *best),
        };
        if improves {
            self.incumbent = Some((solution.clone(), objective));
            self.improvements.push(Improvement {
                iteration: self.iterations,
                objective,
            });
        }
        IterationOutcome::CompletedFeasible { solution, objective }
    }

    fn abort_at(&mut self, node: NodeId) -> IterationOutcome<P::Value, P::Objective> {
        self.tree.delete_cascade(node);
        self.pruned += 1;
        IterationOutcome::Aborted
    }

    fn select(&mut self, node: NodeId) -> Option<usize> {
        let available = self.tree.available_edges(node);
        let parent = self.tree.node(node);
        let edges = parent.edges.as_ref()?;
        let children: Vec<ChildStats> = available
            .iter()
            .map(|&slot| match edges[slot].average() {
                Some(avg) => ChildStats::visited(edges[slot].visits, avg),
                None => ChildStats::unvisited(),
            })
            .collect();
        let pick = select_child(parent.visits, &children, self.problem.sense(), &mut self.rng)?;
        Some(available[pick])
    }

    fn backpropagate(&mut self, path: &[(NodeId, usize)], end: NodeId, objective: f64) {
        for &(node, slot) in path {
            let n = self.tree.node_mut(node);
            n.visits += 1;
            n.edges.as_mut().expect("path edges exist")[slot].record(objective);
        }
        let last = self.tree.node_mut(end);
        last.visits += 1;
        last.terminal_visits += 1;
    }

    /// Restricts `depth` to the `width` most promising nodes.
    pub fn apply_beam(&mut self, depth: usize, width: usize) {
        let sense = self.problem.sense();
        self.tree.apply_beam(depth, width, |a, b| sense.best_first(a, b));
    }

    pub fn into_report(
        self,
        iterations_per_stage: Vec<u64>,
        stage_elapsed: Vec<f64>,
    ) -> SolveReport<P::Value, P::Objective> {
        let exhausted = self.exhausted();
        let (best_solution, best_objective) = match self.incumbent {
            Some((s, o)) => (s, Some(o)),
            None => (Vec::new(), None),
        };
        SolveReport {
            sense: self.problem.sense(),
            best_solution,
            best_objective,
            root_bound: self.tree.node(ROOT).bound(),
            iterations_completed: self.completed,
            iterations_pruned: self.pruned,
            infeasible_completions: self.infeasible,
            exhausted,
            nodes_created: self.tree.len(),
            iterations_per_stage,
            improvements: self.improvements,
            stage_elapsed,
        }
    }
}

/// Runs the staged search: `depth` stages of `time_budget / depth` each,
/// narrowing depth `i` to the beam after stage `i`. Stops early once the root
/// has been deleted.
pub fn solve<P: Problem>(
    problem: &P,
    params: &SearchParams,
) -> Result<SolveReport<P::Value, P::Objective>, SolveError> {
    params.validate()?;
    let depth = problem.depth();
    if depth == 0 {
        return Err(SolveError::EmptyProblem);
    }
    let mut search = Search::new(problem, params.seed).with_pruning(params.pruning);
    let mut per_stage = Vec::with_capacity(depth);
    let mut elapsed = Vec::with_capacity(depth);
    let start = Instant::now();

    let stage_quota = params.max_iterations.map(|max| max.div_ceil(depth as u64));

    for stage in 1..=depth {
        let stage_start = Instant::now();
        let deadline = start + params.time_budget.mul_f64(stage as f64 / depth as f64);
        let mut done = 0u64;
        while !search.exhausted() {
            let keep_going = match (stage_quota, params.max_iterations) {
                (Some(quota), Some(max)) => done < quota && search.iterations() < max,
                _ => search.iterations() == 0 || Instant::now() < deadline,
            };
            if !keep_going {
                break;
            }
            search.run_iteration();
            done += 1;
        }
        search.apply_beam(stage, params.beam_width);
        per_stage.push(done);
        elapsed.push(stage_start.elapsed().as_secs_f64());
        if search.exhausted() {
            break;
        }
    }

    Ok(search.into_report(per_stage, elapsed))
}
