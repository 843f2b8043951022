//! Minor models and exhaustive minor enumeration.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{canonical_form, CanonicalForm, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest host order for which [`enumerate_minors`] runs.
pub const MINOR_ENUMERATION_LIMIT: usize = 9;

/// A minor model: disjoint connected branch sets of the host, plus the edges
/// of the minor (pairs of branch-set indices, each backed by a host edge).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
    pub model_edges: Vec<(usize, usize)>,
}

impl MinorWitness {
    /// The trivial model of `g`: singleton branch sets and every edge.
    pub fn identity(g: &Graph) -> Self {
        MinorWitness {
            branch_sets: (0..g.n()).map(VertexSet::singleton).collect(),
            model_edges: g.edges().collect(),
        }
    }

    /// The graph this model realizes.
    pub fn minor(&self) -> Result<Graph> {
        Graph::from_edges(self.branch_sets.len(), self.model_edges.iter().copied())
    }

    pub fn is_identity_of(&self, host: &Graph) -> bool {
        *self == MinorWitness::identity(host)
    }

    /// Checks disjointness, connectivity, simplicity and that every model edge
    /// is backed by a host edge.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let mut used = VertexSet::EMPTY;
        for (i, &b) in self.branch_sets.iter().enumerate() {
            host.check_set(b)?;
            if b.is_empty() {
                return Err(Error::Inconsistent(format!("branch set {i} is empty")));
            }
            if b.intersects(used) {
                return Err(Error::Inconsistent(format!("branch set {i} overlaps an earlier one")));
            }
            if !host.is_connected_set(b) {
                return Err(Error::Inconsistent(format!("branch set {i} = {b} is not connected")));
            }
            used |= b;
        }
        let mut seen = HashSet::new();
        for &(i, j) in &self.model_edges {
            let (i, j) = (i.min(j), i.max(j));
            if i == j || j >= self.branch_sets.len() {
                return Err(Error::Inconsistent(format!("model edge ({i},{j}) is a loop or out of range")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::Inconsistent(format!("model edge ({i},{j}) repeated")));
            }
            if !host.neighborhood_of_set(self.branch_sets[i]).intersects(self.branch_sets[j]) {
                return Err(Error::Inconsistent(format!(
                    "branch sets {i} and {j} are not adjacent in the host"
                )));
            }
        }
        Ok(())
    }
}

struct State {
    graph: Graph,
    branch_sets: Vec<VertexSet>,
}

impl State {
    fn witness(&self) -> MinorWitness {
        MinorWitness {
            branch_sets: self.branch_sets.clone(),
            model_edges: self.graph.edges().collect(),
        }
    }
}

/// Streams every proper minor of the host with at least `n - max_order_drop`
/// vertices, one per isomorphism class, each with a model. The null graph is
/// included when `max_order_drop >= n`.
pub struct MinorStream {
    stack: Vec<State>,
    seen: HashSet<CanonicalForm>,
    min_order: usize,
    pending: Vec<(Graph, MinorWitness)>,
}

/// Exhaustive minor enumeration by deletion and contraction with canonical
/// memoization. Fails with a resource error above [`MINOR_ENUMERATION_LIMIT`].
pub fn enumerate_minors(g: &Graph, max_order_drop: usize) -> Result<MinorStream> {
    if g.n() > MINOR_ENUMERATION_LIMIT {
        return Err(Error::Resource(format!(
            "full minor enumeration is limited to {MINOR_ENUMERATION_LIMIT} vertices; \
             the host has {} (the number of minors grows super-exponentially)",
            g.n()
        )));
    }
    let mut seen = HashSet::new();
    seen.insert(canonical_form(g).0);
    Ok(MinorStream {
        stack: vec![State {
            graph: g.clone(),
            branch_sets: (0..g.n()).map(VertexSet::singleton).collect(),
        }],
        seen,
        min_order: g.n().saturating_sub(max_order_drop),
        pending: Vec::new(),
    })
}

impl MinorStream {
    fn expand(&mut self, state: State) {
        let g = &state.graph;
        let mut children = Vec::new();
        for (u, v) in g.edges() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            children.push(State {
                graph: h,
                branch_sets: state.branch_sets.clone(),
            });
        }
        if g.n() > self.min_order {
            for v in 0..g.n() {
                let mut sets = state.branch_sets.clone();
                sets.remove(v);
                children.push(State {
                    graph: g.delete_vertex(v),
                    branch_sets: sets,
                });
            }
            for (u, v) in g.edges() {
                let mut sets = state.branch_sets.clone();
                let merged = sets[v];
                sets[u] |= merged;
                sets.remove(v);
                children.push(State {
                    graph: g.merge_into(u, v),
                    branch_sets: sets,
                });
            }
        }
        for child in children {
            if self.seen.insert(canonical_form(&child.graph).0) {
                self.pending.push((child.graph.clone(), child.witness()));
                self.stack.push(child);
            }
        }
    }

    /// Number of distinct minors discovered so far (including the host).
    pub fn discovered(&self) -> usize {
        self.seen.len()
    }
}

impl Iterator for MinorStream {
    type Item = (Graph, MinorWitness);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(item) = self.pending.pop() {
                return Some(item);
            }
            let state = self.stack.pop()?;
            self.expand(state);
        }
    }
}
