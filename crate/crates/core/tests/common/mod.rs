#![allow(dead_code)]

use std::collections::BTreeSet;

use knitweave::graph::canonical_form;
use knitweave::{Graph, VertexSet};

/// One representative per isomorphism class on `n` vertices, for every
/// `n ≤ max_n`, grown by attaching a new vertex to every neighbor subset.
pub fn census(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0).unwrap()]];
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        for g in &levels[n - 1] {
            for mask in 0u64..(1 << (n - 1)) {
                let mut h = Graph::empty(n).unwrap();
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, n - 1);
                    }
                }
                seen.insert(canonical_form(&h).0);
            }
        }
        levels.push(seen.into_iter().map(|c| c.to_graph()).collect());
    }
    levels
}

/// Known class counts for orders 0 through 7.
pub const CENSUS_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

fn simple_paths(g: &Graph, t: usize, avoid: VertexSet, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    if last == t {
        out.push(path.clone());
        return;
    }
    for w in g.neighbors(last).iter() {
        if avoid.contains(w) || path.contains(&w) {
            continue;
        }
        path.push(w);
        simple_paths(g, t, avoid, path, out);
        path.pop();
    }
}

/// Every simple `s`–`t` path avoiding `avoid`.
pub fn all_paths(g: &Graph, s: usize, t: usize, avoid: VertexSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    simple_paths(g, t, avoid, &mut vec![s], &mut out);
    out
}

/// Naive two-pair linkage: try every path for the first pair, then search
/// for the second in what remains.
pub fn naive_two_linked(g: &Graph, (s1, t1): (usize, usize), (s2, t2): (usize, usize)) -> bool {
    let others = VertexSet::from_iter([s2, t2]);
    all_paths(g, s1, t1, others).iter().any(|p| {
        let used: VertexSet = p.iter().copied().collect();
        !all_paths(g, s2, t2, used).is_empty()
    })
}

/// All systems of two disjoint pairs on `0..n`, each unordered system once.
pub fn two_pair_systems(n: usize) -> Vec<[(usize, usize); 2]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in a + 1..n {
                for d in c + 1..n {
                    if c != b && d != b {
                        out.push([(a, b), (c, d)]);
                    }
                }
            }
        }
    }
    out
}
