//! Standard small graphs used as fixtures throughout the crate.

use super::{Graph, VertexSet};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n within range");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n).expect("n within range")
}

/// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Petersen graph: outer cycle 0..5, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("valid Petersen graph")
}

/// `K_n` minus the matching `{0,1}, {2,3}, ...` with `m` edges.
pub fn complete_minus_matching(n: usize, m: usize) -> Graph {
    assert!(2 * m <= n);
    let mut g = complete(n);
    for i in 0..m {
        g.remove_edge(2 * i, 2 * i + 1);
    }
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).expect("n within range");
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Adds a vertex adjacent to every existing vertex; it becomes the last label.
pub fn with_universal_vertex(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::from_edges(n + 1, edges).expect("n within range")
}

/// The vertex set `{0, ..., n-1}` as a convenience for fixtures.
pub fn first(n: usize) -> VertexSet {
    VertexSet::full(n)
}
