//! Problem-agnostic anytime Monte Carlo tree search.
//!
//! Each iteration descends the partial tree with [`select_child`], adds one
//! node, checks its bound against the incumbent, completes the solution with
//! the problem's heuristic, and backpropagates the objective. The solve runs
//! in one stage per decision variable and narrows each depth to a beam once
//! its stage ends.

mod problem;
mod search;
mod select;
mod sense;
mod tree;

pub use problem::Problem;
pub use search::{solve, Improvement, IterationOutcome, Search, SearchParams, SolveError, SolveReport};
pub use select::{rank_scores, select_child, uct_value, ChildStats};
pub use sense::{Objective, Sense};
pub use tree::{Edge, Node, NodeId, NodeStatus, SearchTree, ROOT};
