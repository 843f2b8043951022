//! Dense simple graphs on at most 64 vertices.
//!
//! Every vertex row is a single [`VertexSet`], so neighborhood algebra,
//! induced subgraphs and connectivity sweeps are word operations.

mod canon;
mod clique;
mod flow;
mod minor;
pub mod named;
mod set;

pub use canon::{canonical_form, CanonicalForm};
pub use clique::{independence_number, max_clique, max_independent_set};
pub use flow::{disjoint_paths_between_sets, local_connectivity, vertex_connectivity_at_least};
pub use minor::{enumerate_minors, MinorStream, MinorWitness, MINOR_ENUMERATION_LIMIT};
pub use set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::input(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let g = Graph {
            n: rows.len(),
            adj: rows,
        };
        if g.n > MAX_VERTICES {
            return Err(Error::input("too many vertices"));
        }
        g.validate()?;
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )))
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex set {s} is not contained in 0..{}",
                self.n
            )))
        }
    }

    /// Adds `uv`; no-op when already present. Panics on `u == v`.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn neighbors_closed(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// Vertices outside `s` adjacent to some member of `s`.
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out |= self.adj[v];
        }
        out - s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within).len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    /// Number of edges with at least one endpoint in `t`.
    pub fn rho(&self, t: VertexSet) -> usize {
        let inside = self.edges_within(t);
        let crossing: usize = t.iter().map(|v| (self.adj[v] - t).len()).sum();
        inside + crossing
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all - self.adj[v] - VertexSet::singleton(v)).collect(),
        }
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in increasing order of
    /// original label. The returned map sends new labels to original ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Same vertex labels, but only the edges with both ends in `s`.
    pub fn restrict(&self, s: VertexSet) -> Graph {
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| if s.contains(v) { self.adj[v] & s } else { VertexSet::EMPTY })
                .collect(),
        }
    }

    /// Contracts the edge `uv`. The merged vertex takes label `min(u, v)`;
    /// labels above `max(u, v)` shift down by one. Loops and parallel edges
    /// are dropped.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::input(format!("{{{u},{v}}} is not an edge")));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        Ok(self.merge_into(keep, drop))
    }

    /// Identifies `drop` into `keep` regardless of adjacency and removes `drop`.
    pub(crate) fn merge_into(&self, keep: usize, drop: usize) -> Graph {
        let relabel = |w: usize| if w > drop { w - 1 } else { w };
        let mut rows = vec![VertexSet::EMPTY; self.n - 1];
        for w in 0..self.n {
            if w == drop {
                continue;
            }
            let mut row = self.adj[w];
            if w == keep {
                row = (row | self.adj[drop]).without(keep).without(drop);
            } else if row.contains(drop) {
                row = row.without(drop).with(keep);
            }
            rows[relabel(w)] = row.iter().map(relabel).collect();
        }
        Graph {
            n: self.n - 1,
            adj: rows,
        }
    }

    /// Deletes vertex `v`; labels above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep = self.vertices().without(v);
        self.induced(keep).expect("subset of own vertices").0
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.reach(VertexSet::singleton(start), within);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    /// All vertices of `within` reachable from `seed` inside `within`.
    pub fn reach(&self, seed: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = seed & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next &= within - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(VertexSet::singleton(v), s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Shortest path from `s` to `t` using only vertices of `within`
    /// (endpoints included automatically). Ties resolve toward smaller labels.
    pub fn shortest_path(&self, s: usize, t: usize, within: VertexSet) -> Option<Vec<usize>> {
        let within = within.with(s).with(t);
        if s == t {
            return Some(vec![s]);
        }
        let mut parent = [usize::MAX; MAX_VERTICES];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = vec![s];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.adj[v] & (within - seen) {
                    seen.insert(w);
                    parent[w] = v;
                    if w == t {
                        let mut path = vec![t];
                        let mut cur = t;
                        while cur != s {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    next.push(w);
                }
            }
            frontier = next;
        }
        None
    }

    /// Breadth-first distances from `source` inside `within`; `usize::MAX` marks unreachable.
    pub fn distances(&self, source: VertexSet, within: VertexSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut seen = source & within;
        for v in seen {
            dist[v] = 0;
        }
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next &= within - seen;
            for v in next {
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            rows[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph {
            n: self.n,
            adj: rows,
        }
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges.collect::<Vec<_>>())
    }

    /// Checks symmetry, irreflexivity and range.
    pub fn validate(&self) -> Result<()> {
        let all = self.vertices();
        for v in 0..self.n {
            let row = self.adj[v];
            if !row.is_subset(all) {
                return Err(Error::Inconsistent(format!("row {v} leaves the vertex range")));
            }
            if row.contains(v) {
                return Err(Error::Inconsistent(format!("loop at {v}")));
            }
            for w in row {
                if !self.adj[w].contains(v) {
                    return Err(Error::Inconsistent(format!("edge {v}->{w} not symmetric")));
                }
            }
        }
        Ok(())
    }
}

/// Compact serialized form: vertex count plus edge list.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}
