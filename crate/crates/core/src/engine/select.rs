//! Child selection: rank-normalized exploitation term plus the UCB1
//! exploration term, with a uniform draw over unvisited children.

use rand::Rng;

use super::sense::Sense;

/// Statistics of one selectable child, as seen from its parent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChildStats {
    pub visits: u64,
    /// Mean objective over the completed iterations through this child.
    /// Ignored when `visits == 0`.
    pub average: f64,
}

impl ChildStats {
    pub fn unvisited() -> Self {
        ChildStats {
            visits: 0,
            average: f64::NAN,
        }
    }

    pub fn visited(visits: u64, average: f64) -> Self {
        ChildStats { visits, average }
    }
}

/// Normalized rank scores for visited children, indexed like `averages`.
///
/// Children are ranked from bad to good (rank 1 is the worst average; for a
/// minimization problem that is the highest one). Equal averages are ranked
/// by position, the earlier one getting the lower rank. The score of a child
/// is its rank divided by the rank sum `k(k+1)/2`, so scores sum to one.
///
/// # Panics
///
/// Panics if `averages` is empty; callers must take the unvisited branch.
pub fn rank_scores(averages: &[f64], sense: Sense) -> Vec<f64> {
    assert!(!averages.is_empty(), "rank_scores needs at least one visited child");
    let k = averages.len();
    let mut order: Vec<usize> = (0..k).collect();
    // stable sort keeps position order among ties
    order.sort_by(|&a, &b| sense.worst_first(averages[a], averages[b]));
    let rank_sum = (k * (k + 1) / 2) as f64;
    let mut scores = vec![0.0; k];
    for (position, &child) in order.iter().enumerate() {
        scores[child] = (position + 1) as f64 / rank_sum;
    }
    scores
}

/// `normalized_score + sqrt(2 ln(parent_visits) / child_visits)`.
///
/// # Panics
///
/// Panics if `child_visits == 0`.
pub fn uct_value(parent_visits: u64, child_visits: u64, normalized_score: f64) -> f64 {
    assert!(child_visits > 0, "uct_value is undefined for unvisited children");
    let exploration = (2.0 * (parent_visits as f64).ln() / child_visits as f64).sqrt();
    normalized_score + exploration
}

/// Picks one of `children` (all assumed selectable) and returns its index.
///
/// With probability `k1 / (k1 + k2)` a uniformly random unvisited child is
/// returned, where `k1` and `k2` count unvisited and visited children.
/// Otherwise the visited child with the largest [`uct_value`] wins, ties going
/// to the earliest index. Returns `None` when `children` is empty.
pub fn select_child<R: Rng + ?Sized>(
    parent_visits: u64,
    children: &[ChildStats],
    sense: Sense,
    rng: &mut R,
) -> Option<usize> {
    if children.is_empty() {
        return None;
    }
    let unvisited: Vec<usize> = (0..children.len()).filter(|&i| children[i].visits == 0).collect();
    let visited: Vec<usize> = (0..children.len()).filter(|&i| children[i].visits > 0).collect();

    let draw = rng.gen_range(0..children.len());
    if draw < unvisited.len() {
        return Some(unvisited[draw]);
    }
    Some(best_visited(parent_visits, children, &visited, sense))
}

fn best_visited(parent_visits: u64, children: &[ChildStats], visited: &[usize], sense: Sense) -> usize {
    let averages: Vec<f64> = visited.iter().map(|&i| children[i].average).collect();
    let scores = rank_scores(&averages, sense);
    let mut best = visited[0];
    let mut best_value = f64::NEG_INFINITY;
    for (slot, &i) in visited.iter().enumerate() {
        let value = uct_value(parent_visits, children[i].visits, scores[slot]);
        if value > best_value {
            best = i;
            best_value = value;
        }
    }
    best
}
