//! Exact vertex-disjoint paths by backtracking over induced paths.
//!
//! Only chordless paths are tried: any solution can be shortcut to one whose
//! paths are induced, and shortcutting only frees vertices. Adjacent pairs are
//! joined by their edge up front for the same reason.

use std::collections::HashSet;

use super::{Linkage, TerminalSpec};
use crate::error::{Error, Result};
use crate::graph::{disjoint_paths_between_sets, Graph, VertexSet};

/// Vertex-disjoint paths joining every pair of `spec`, avoiding
/// `spec.forbidden` and every other terminal. `max_path_len` caps the number
/// of vertices per path. Returns `None` when no linkage exists.
pub fn disjoint_paths(g: &Graph, spec: &TerminalSpec, max_path_len: Option<usize>) -> Result<Option<Linkage>> {
    spec.check_against(g)?;
    if spec.parts.iter().any(|p| p.len() != 2) {
        return Err(Error::input("disjoint_paths takes pairs only; use knit for singleton parts"));
    }
    let pairs: Vec<(usize, usize)> = spec.parts.iter().map(|p| (p.first().unwrap(), p.last().unwrap())).collect();
    Ok(link_pairs(g, &pairs, g.vertices() - spec.terminals() - spec.forbidden, max_path_len))
}

/// Core solver: `free` holds the vertices paths may use as interior.
pub(crate) fn link_pairs(
    g: &Graph,
    pairs: &[(usize, usize)],
    free: VertexSet,
    max_path_len: Option<usize>,
) -> Option<Linkage> {
    let cap = max_path_len.unwrap_or(usize::MAX);
    let mut paths: Vec<Option<Vec<usize>>> = vec![None; pairs.len()];
    let mut open = Vec::new();
    for (i, &(s, t)) in pairs.iter().enumerate() {
        if g.has_edge(s, t) {
            if cap < 2 {
                return None;
            }
            paths[i] = Some(vec![s, t]);
        } else {
            open.push(i);
        }
    }
    // fewest shortest paths first; ties by input position
    let mut keyed: Vec<(u64, usize)> = open
        .iter()
        .map(|&i| (count_shortest_paths(g, pairs[i].0, pairs[i].1, free), i))
        .collect();
    keyed.sort();
    let order: Vec<usize> = keyed.into_iter().map(|(_, i)| i).collect();

    let mut search = Search {
        g,
        pairs: order.iter().map(|&i| pairs[i]).collect(),
        free,
        cap,
        failed: HashSet::new(),
        stack: Vec::new(),
    };
    if !search.solve(0, VertexSet::EMPTY) {
        return None;
    }
    for (path, &i) in search.stack.into_iter().zip(&order) {
        paths[i] = Some(path);
    }
    Some(Linkage {
        paths: paths.into_iter().map(|p| p.expect("every pair linked")).collect(),
    })
}

/// Number of shortest `s`-`t` paths with interior in `free`, saturating.
fn count_shortest_paths(g: &Graph, s: usize, t: usize, free: VertexSet) -> u64 {
    let within = free.with(s).with(t);
    let mut counts = vec![0u64; g.n()];
    counts[s] = 1;
    let mut seen = VertexSet::singleton(s);
    let mut frontier = VertexSet::singleton(s);
    while !frontier.is_empty() && !seen.contains(t) {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= g.neighbors(v);
        }
        next &= within - seen;
        for w in next {
            counts[w] = (g.neighbors(w) & frontier)
                .iter()
                .fold(0u64, |acc, v| acc.saturating_add(counts[v]));
        }
        // only t may terminate a path; it never relays
        seen |= next;
        frontier = next.without(t);
    }
    counts[t]
}

struct Search<'a> {
    g: &'a Graph,
    pairs: Vec<(usize, usize)>,
    free: VertexSet,
    cap: usize,
    failed: HashSet<(usize, u64)>,
    stack: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn solve(&mut self, idx: usize, used: VertexSet) -> bool {
        if idx == self.pairs.len() {
            return true;
        }
        if self.failed.contains(&(idx, used.bits())) {
            return false;
        }
        let avail = self.free - used;
        if !self.feasible(idx, avail) {
            self.failed.insert((idx, used.bits()));
            return false;
        }
        let (s, t) = self.pairs[idx];
        if idx + 1 == self.pairs.len() {
            // checked reachable within the cap by `feasible`
            let path = self.g.shortest_path(s, t, avail).expect("feasibility checked");
            self.stack.push(path);
            return true;
        }
        let dist = self.g.distances(VertexSet::singleton(t), avail.with(t));
        let mut path = vec![s];
        if self.extend(idx, used, avail, &dist, &mut path, VertexSet::singleton(s)) {
            return true;
        }
        self.failed.insert((idx, used.bits()));
        false
    }

    /// Depth-first extension of an induced path ending at `path.last()`.
    fn extend(
        &mut self,
        idx: usize,
        used: VertexSet,
        avail: VertexSet,
        dist: &[usize],
        path: &mut Vec<usize>,
        on_path: VertexSet,
    ) -> bool {
        let (_, t) = self.pairs[idx];
        let last = *path.last().unwrap();
        let row = self.g.neighbors(last);
        if row.contains(t) {
            path.push(t);
            let interior: VertexSet = path[1..path.len() - 1].iter().collect();
            self.stack.push(path.clone());
            if self.solve(idx + 1, used | interior) {
                return true;
            }
            self.stack.pop();
            path.pop();
            return false;
        }
        let before_last = on_path.without(last);
        let mut next: Vec<usize> = (row & (avail - on_path))
            .iter()
            .filter(|&w| {
                dist[w] != usize::MAX
                    && path.len() + 1 + dist[w] <= self.cap
                    && self.g.neighbors(w).is_disjoint(before_last)
            })
            .collect();
        next.sort_by_key(|&w| (dist[w], w));
        for w in next {
            path.push(w);
            if self.extend(idx, used, avail, dist, path, on_path.with(w)) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Necessary conditions for the pairs from `idx` on: each pair is joined
    /// within the cap, and the pairs admit simultaneous disjoint routing from
    /// their first ends to their second ends.
    fn feasible(&self, idx: usize, avail: VertexSet) -> bool {
        let mut sources = VertexSet::EMPTY;
        let mut sinks = VertexSet::EMPTY;
        for &(s, t) in &self.pairs[idx..] {
            let d = self.g.distances(VertexSet::singleton(s), avail.with(s).with(t))[t];
            if d == usize::MAX || d + 1 > self.cap {
                return false;
            }
            sources.insert(s);
            sinks.insert(t);
        }
        let m = self.pairs.len() - idx;
        m < 2 || disjoint_paths_between_sets(self.g, sources, sinks, avail, m).len() == m
    }
}
