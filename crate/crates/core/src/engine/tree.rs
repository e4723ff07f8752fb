//! Arena-backed partial search tree.
//!
//! Nodes are never freed during a solve. Deletion and beam narrowing only flip
//! a status flag; traversal skips anything that is not [`NodeStatus::Active`].

use serde::Serialize;

pub type NodeId = usize;

pub const ROOT: NodeId = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NodeStatus {
    Active,
    /// Pruned by a bound, exhausted, or lost all of its children.
    Deleted,
    /// Fell outside the beam at its depth.
    BeamDropped,
}

/// Link from a parent to one value of its reduced domain.
#[derive(Clone, Debug)]
pub struct Edge<V> {
    pub value: V,
    /// Materialized on first selection.
    pub child: Option<NodeId>,
    pub visits: u64,
    mean: f64,
}

impl<V> Edge<V> {
    fn new(value: V) -> Self {
        Edge {
            value,
            child: None,
            visits: 0,
            mean: 0.0,
        }
    }

    /// Mean objective over completed iterations that used this edge.
    pub fn average(&self) -> Option<f64> {
        (self.visits > 0).then_some(self.mean)
    }

    pub(crate) fn record(&mut self, objective: f64) {
        self.visits += 1;
        self.mean += (objective - self.mean) / self.visits as f64;
    }
}

#[derive(Clone, Debug)]
pub struct Node<V, O> {
    pub parent: Option<(NodeId, usize)>,
    pub depth: usize,
    pub visits: u64,
    /// Completed iterations that ended here (expansion followed by simulation).
    pub terminal_visits: u64,
    /// `None` until the node is first descended through.
    pub edges: Option<Vec<Edge<V>>>,
    stored_bound: Option<O>,
    pub status: NodeStatus,
}

impl<V, O: Copy> Node<V, O> {
    pub fn bound(&self) -> Option<O> {
        self.stored_bound
    }

    /// Stores the bound computed at expansion. A bound is written once.
    pub(crate) fn store_bound(&mut self, bound: O) {
        debug_assert!(self.stored_bound.is_none(), "stored bound is immutable");
        if self.stored_bound.is_none() {
            self.stored_bound = Some(bound);
        }
    }

    pub fn is_active(&self) -> bool {
        self.status == NodeStatus::Active
    }
}

#[derive(Clone, Debug)]
pub struct SearchTree<V, O> {
    nodes: Vec<Node<V, O>>,
    by_depth: Vec<Vec<NodeId>>,
    /// Depths `1..=beamed_depth` have been narrowed; no new node may appear there.
    beamed_depth: usize,
}

impl<V: Copy, O: Copy> SearchTree<V, O> {
    pub fn new() -> Self {
        let root = Node {
            parent: None,
            depth: 0,
            visits: 0,
            terminal_visits: 0,
            edges: None,
            stored_bound: None,
            status: NodeStatus::Active,
        };
        SearchTree {
            nodes: vec![root],
            by_depth: vec![vec![ROOT]],
            beamed_depth: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node<V, O> {
        &self.nodes[id]
    }

    pub(crate) fn node_mut(&mut self, id: NodeId) -> &mut Node<V, O> {
        &mut self.nodes[id]
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node<V, O>)> {
        self.nodes.iter().enumerate()
    }

    pub fn nodes_at_depth(&self, depth: usize) -> &[NodeId] {
        self.by_depth.get(depth).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn beamed_depth(&self) -> usize {
        self.beamed_depth
    }

    pub fn root_deleted(&self) -> bool {
        !self.nodes[ROOT].is_active()
    }

    /// The edge into `id`, if it is not the root.
    pub fn incoming_edge(&self, id: NodeId) -> Option<&Edge<V>> {
        let (parent, slot) = self.nodes[id].parent?;
        self.nodes[parent].edges.as_ref().map(|edges| &edges[slot])
    }

    pub(crate) fn set_edges(&mut self, id: NodeId, values: Vec<V>) {
        self.nodes[id].edges = Some(values.into_iter().map(Edge::new).collect());
    }

    /// Whether the traversal may still enter the child behind `edge`.
    /// `child_depth` is the depth the child has or would have.
    pub fn edge_available(&self, edge: &Edge<V>, child_depth: usize) -> bool {
        match edge.child {
            Some(child) => self.nodes[child].is_active(),
            None => child_depth > self.beamed_depth,
        }
    }

    /// Indices of the edges of `id` that the traversal may still enter.
    pub fn available_edges(&self, id: NodeId) -> Vec<usize> {
        let node = &self.nodes[id];
        match &node.edges {
            None => Vec::new(),
            Some(edges) => (0..edges.len())
                .filter(|&slot| self.edge_available(&edges[slot], node.depth + 1))
                .collect(),
        }
    }

    pub(crate) fn materialize_child(&mut self, parent: NodeId, slot: usize) -> NodeId {
        let depth = self.nodes[parent].depth + 1;
        let id = self.nodes.len();
        let status = if depth <= self.beamed_depth {
            NodeStatus::BeamDropped
        } else {
            NodeStatus::Active
        };
        self.nodes.push(Node {
            parent: Some((parent, slot)),
            depth,
            visits: 0,
            terminal_visits: 0,
            edges: None,
            stored_bound: None,
            status,
        });
        if self.by_depth.len() <= depth {
            self.by_depth.resize_with(depth + 1, Vec::new);
        }
        self.by_depth[depth].push(id);
        let edges = self.nodes[parent]
            .edges
            .as_mut()
            .expect("parent edges exist before a child is materialized");
        edges[slot].child = Some(id);
        id
    }

    /// Marks `id` deleted, then deletes every ancestor left without an
    /// available child. Returns `true` if the root was deleted.
    pub(crate) fn delete_cascade(&mut self, id: NodeId) -> bool {
        let mut current = id;
        self.nodes[current].status = NodeStatus::Deleted;
        while let Some((parent, _)) = self.nodes[current].parent {
            if !self.nodes[parent].is_active() || !self.available_edges(parent).is_empty() {
                break;
            }
            self.nodes[parent].status = NodeStatus::Deleted;
            current = parent;
        }
        self.root_deleted()
    }

    /// Whether `id` and all of its ancestors are active. Nodes below a
    /// dropped or deleted node keep their own status but can never be
    /// entered again.
    pub fn reachable(&self, id: NodeId) -> bool {
        let mut current = id;
        loop {
            let node = &self.nodes[current];
            if !node.is_active() {
                return false;
            }
            match node.parent {
                Some((parent, _)) => current = parent,
                None => return true,
            }
        }
    }

    /// Narrows `depth` to the `width` best reachable visited nodes, ranked by the
    /// average on their incoming edge (ties by creation order). Everything
    /// else at that depth, including children that were never created,
    /// becomes unreachable.
    pub(crate) fn apply_beam(
        &mut self,
        depth: usize,
        width: usize,
        better_first: impl Fn(f64, f64) -> std::cmp::Ordering,
    ) {
        if depth == 0 {
            return;
        }
        let mut candidates: Vec<(NodeId, f64)> = self
            .nodes_at_depth(depth)
            .iter()
            .copied()
            .filter(|&id| self.reachable(id))
            .filter_map(|id| self.incoming_edge(id).and_then(Edge::average).map(|avg| (id, avg)))
            .collect();
        // stable sort: creation order breaks ties
        candidates.sort_by(|a, b| better_first(a.1, b.1));
        let dropped: Vec<NodeId> = candidates.iter().skip(width).map(|&(id, _)| id).collect();
        for id in dropped {
            self.nodes[id].status = NodeStatus::BeamDropped;
        }
        for &id in self.by_depth.get(depth).into_iter().flatten() {
            let node = &mut self.nodes[id];
            if node.is_active() && node.visits == 0 {
                node.status = NodeStatus::BeamDropped;
            }
        }
        self.beamed_depth = self.beamed_depth.max(depth);
    }
}

impl<V: Copy, O: Copy> Default for SearchTree<V, O> {
    fn default() -> Self {
        Self::new()
    }
}
