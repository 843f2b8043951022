//! Block systems `C = C_0 ∪ … ∪ C_4` for a nine-terminal knitting problem.
//!
//! `C_0` is the avoided vertex `u_0`. Each pair block is either the vertex
//! set of an induced path joining its terminals or just the two terminals.
//! Construction places the pairs in some order; at positions 1–3 a pair gets
//! a path of at most five vertices avoiding `u_0`, the earlier blocks and all
//! later terminals whenever one exists, and position 4 always keeps the bare
//! pair. Over every order and every admissible path choice we maximize the
//! number of connected blocks, then minimize `|C|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_paths_between_sets, Graph, VertexSet};

/// Vertex cap for paths chosen during construction.
pub const PATH_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub host: Graph,
    /// `blocks[i]` lists `C_i` in path order from `u_i` to `v_i`; a
    /// disconnected block is `[u_i, v_i]`; `blocks[0] = [u_0]`.
    pub blocks: Vec<Vec<usize>>,
}

impl Configuration {
    pub fn u(&self, i: usize) -> usize {
        self.blocks[i][0]
    }

    pub fn v(&self, i: usize) -> usize {
        *self.blocks[i].last().unwrap()
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.blocks[i].iter().collect()
    }

    /// `C`.
    pub fn vertices(&self) -> VertexSet {
        self.blocks.iter().flatten().collect()
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_connected(&self, i: usize) -> bool {
        self.host.is_connected_set(self.block(i))
    }

    /// `s`: the number of connected blocks among `C_1 … C_4`.
    pub fn connected_count(&self) -> usize {
        (1..5).filter(|&i| self.is_connected(i)).count()
    }

    /// Checks disjointness, the induced-path shape of connected blocks and
    /// the ordering (connected blocks first, by nondecreasing size).
    pub fn validate(&self) -> Result<()> {
        let h = &self.host;
        if self.blocks.len() != 5 || self.blocks[0].len() != 1 {
            return Err(Error::Inconsistent("configuration needs C_0 = {u_0} and four pair blocks".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                h.check_vertex(v)?;
                if seen.contains(v) {
                    return Err(Error::Inconsistent(format!("vertex {v} appears twice (block {i})")));
                }
                seen.insert(v);
            }
            if i == 0 {
                continue;
            }
            if block.len() < 2 {
                return Err(Error::Inconsistent(format!("block {i} has fewer than two vertices")));
            }
            if self.is_connected(i) {
                if !is_induced_path(h, block) {
                    return Err(Error::Inconsistent(format!("block {i} = {block:?} is not an induced path")));
                }
            } else if block.len() != 2 {
                return Err(Error::Inconsistent(format!("disconnected block {i} is not a bare pair")));
            }
        }
        let mut last = (false, 0);
        for i in 1..5 {
            let key = (!self.is_connected(i), if self.is_connected(i) { self.blocks[i].len() } else { 0 });
            if key < last {
                return Err(Error::Inconsistent(format!("block {i} breaks the connected-then-size order")));
            }
            last = key;
        }
        Ok(())
    }

    /// Reorders blocks 1–4: connected blocks by size, then disconnected pairs,
    /// each group keeping its current relative order.
    fn normalize(&mut self) {
        let h = &self.host;
        let mut rest: Vec<Vec<usize>> = self.blocks.drain(1..).collect();
        rest.sort_by_key(|b| {
            let connected = h.is_connected_set(b.iter().collect());
            (!connected, if connected { b.len() } else { 0 })
        });
        self.blocks.extend(rest);
    }
}

fn is_induced_path(h: &Graph, path: &[usize]) -> bool {
    let set: VertexSet = path.iter().collect();
    path.iter().enumerate().all(|(k, &v)| {
        let mut expect = VertexSet::EMPTY;
        if k > 0 {
            expect.insert(path[k - 1]);
        }
        if k + 1 < path.len() {
            expect.insert(path[k + 1]);
        }
        h.neighbors(v) & set == expect
    })
}

/// Shortcuts a path to an induced path on a subset of its vertices with the
/// same ends: from each vertex jump to its furthest later neighbor.
pub(crate) fn shortcut(h: &Graph, path: &[usize]) -> Vec<usize> {
    let mut out = vec![path[0]];
    let mut k = 0;
    while k + 1 < path.len() {
        let next = (k + 1..path.len())
            .rev()
            .find(|&m| h.has_edge(path[k], path[m]))
            .expect("consecutive path vertices are adjacent");
        out.push(path[next]);
        k = next;
    }
    out
}

/// Induced `u`-`v` paths with interior in `allowed` and at most `cap`
/// vertices, sorted by length then lexicographically.
pub(crate) fn induced_paths(h: &Graph, u: usize, v: usize, allowed: VertexSet, cap: usize) -> Vec<Vec<usize>> {
    fn rec(h: &Graph, v: usize, allowed: VertexSet, cap: usize, path: &mut Vec<usize>, on: VertexSet, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if h.has_edge(last, v) {
            path.push(v);
            out.push(path.clone());
            path.pop();
            return;
        }
        if path.len() + 1 >= cap {
            return;
        }
        let before = on.without(last);
        for w in h.neighbors(last) & (allowed - on) {
            if h.neighbors(w).is_disjoint(before) {
                path.push(w);
                rec(h, v, allowed, cap, path, on.with(w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    let allowed = allowed.without(u).without(v);
    rec(h, v, allowed, cap, &mut vec![u], VertexSet::singleton(u), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Builds the optimal configuration for terminals
/// `[u_0, u_1, v_1, u_2, v_2, u_3, v_3, u_4, v_4]`.
pub fn build_configuration(h: &Graph, terminals: &[usize]) -> Result<Configuration> {
    if terminals.len() != 9 {
        return Err(Error::input("a configuration needs exactly 9 terminals"));
    }
    let all: VertexSet = terminals.iter().collect();
    if all.len() != 9 {
        return Err(Error::input("terminals must be distinct"));
    }
    h.check_set(all)?;
    let pairs: Vec<(usize, usize)> = (0..4).map(|i| (terminals[1 + 2 * i], terminals[2 + 2 * i])).collect();
    let mut best = Best {
        score: None,
        blocks: Vec::new(),
    };
    for order in permutations4() {
        let placed: Vec<(usize, usize)> = order.iter().map(|&i| pairs[i]).collect();
        let mut blocks = vec![vec![terminals[0]]];
        let used = VertexSet::singleton(terminals[0]);
        search(h, &placed, 0, used, &mut blocks, 0, 1, &mut best);
    }
    let mut cfg = Configuration {
        host: h.clone(),
        blocks: best.blocks,
    };
    cfg.normalize();
    cfg.validate()?;
    Ok(cfg)
}

struct Best {
    /// (connected blocks, -|C|)
    score: Option<(usize, i64)>,
    blocks: Vec<Vec<usize>>,
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    h: &Graph,
    placed: &[(usize, usize)],
    pos: usize,
    used: VertexSet,
    blocks: &mut Vec<Vec<usize>>,
    connected: usize,
    size: usize,
    best: &mut Best,
) {
    let last_adjacent = usize::from(h.has_edge(placed[3].0, placed[3].1));
    if pos == 3 {
        let score = (connected + last_adjacent, -((size + 2) as i64));
        if best.score.is_none_or(|b| score > b) {
            best.score = Some(score);
            blocks.push(vec![placed[3].0, placed[3].1]);
            best.blocks = blocks.clone();
            blocks.pop();
        }
        return;
    }
    if let Some((best_conn, best_size)) = best.score {
        let remaining = 3 - pos;
        let max_conn = connected + remaining + last_adjacent;
        let min_size = (size + 2 * (remaining + 1)) as i64;
        if max_conn < best_conn || (max_conn == best_conn && -min_size <= best_size) {
            return;
        }
    }
    let (u, v) = placed[pos];
    let later: VertexSet = placed[pos + 1..].iter().flat_map(|&(a, b)| [a, b]).collect();
    let allowed = h.vertices() - used - later;
    let candidates = induced_paths(h, u, v, allowed, PATH_CAP);
    if candidates.is_empty() {
        blocks.push(vec![u, v]);
        search(h, placed, pos + 1, used.with(u).with(v), blocks, connected, size + 2, best);
        blocks.pop();
        return;
    }
    for path in candidates {
        let set: VertexSet = path.iter().collect();
        let len = path.len();
        blocks.push(path);
        search(h, placed, pos + 1, used | set, blocks, connected + 1, size + len, best);
        blocks.pop();
    }
}

/// The `(x, y)`-reroute of blocks `i` and `j`: `y`, interior to the connected
/// block `C_i` between `z_1` and `z_2`, is replaced there by the outside
/// vertex `x`, and the disconnected pair `C_j` is joined by a path whose only
/// vertex of `C` besides its ends is `y`. Both new blocks are shortcut to
/// induced paths and the blocks are renumbered.
pub fn reroute(cfg: &Configuration, x: usize, y: usize, i: usize, j: usize) -> Result<Configuration> {
    const OP: &str = "reroute";
    let h = &cfg.host;
    h.check_vertex(x)?;
    h.check_vertex(y)?;
    if !(1..5).contains(&i) || !(1..5).contains(&j) || i == j {
        return Err(Error::precondition(OP, "i and j must be distinct pair blocks in 1..=4"));
    }
    if !cfg.is_connected(i) {
        return Err(Error::precondition(OP, format!("C_{i} is not connected")));
    }
    let path = &cfg.blocks[i];
    let Some(k) = path.iter().position(|&w| w == y).filter(|&k| k > 0 && k + 1 < path.len()) else {
        return Err(Error::precondition(OP, format!("y = {y} is not an interior vertex of C_{i}")));
    };
    let (z1, z2) = (path[k - 1], path[k + 1]);
    if cfg.is_connected(j) {
        return Err(Error::precondition(OP, format!("C_{j} is not a disconnected pair")));
    }
    let c = cfg.vertices();
    if c.contains(x) {
        return Err(Error::precondition(OP, format!("x = {x} lies in C (x ∉ C violated)")));
    }
    if !h.has_edge(x, z1) || !h.has_edge(x, z2) {
        return Err(Error::precondition(OP, format!("x = {x} is not adjacent to both {z1} and {z2}")));
    }
    let Some(through) = path_through(h, cfg.u(j), cfg.v(j), y, h.vertices() - c.with(x)) else {
        return Err(Error::precondition(
            OP,
            format!("no ({}, {})-path has y = {y} as its only internal vertex in C", cfg.u(j), cfg.v(j)),
        ));
    };
    let mut new_i = path.clone();
    new_i[k] = x;
    let mut out = cfg.clone();
    out.blocks[i] = shortcut(h, &new_i);
    out.blocks[j] = shortcut(h, &through);
    out.normalize();
    out.validate()?;
    Ok(out)
}

/// A `u`-`v` path through `y` whose other internal vertices lie in `free`.
fn path_through(h: &Graph, u: usize, v: usize, y: usize, free: VertexSet) -> Option<Vec<usize>> {
    let ends = VertexSet::singleton(u).with(v);
    let sinks = h.neighbors(y) & (free | ends);
    let paths = disjoint_paths_between_sets(h, ends, sinks, free - VertexSet::singleton(y), 2);
    if paths.len() < 2 {
        return None;
    }
    let (from_u, from_v) = if paths[0][0] == u { (&paths[0], &paths[1]) } else { (&paths[1], &paths[0]) };
    let mut out = from_u.clone();
    out.push(y);
    out.extend(from_v.iter().rev());
    Some(out)
}

/// Every `(x, y, i, j)` for which [`reroute`] applies.
pub fn reroute_options(cfg: &Configuration) -> Vec<(usize, usize, usize, usize)> {
    let h = &cfg.host;
    let c = cfg.vertices();
    let mut out = Vec::new();
    for j in (1..5).filter(|&j| !cfg.is_connected(j)) {
        for i in (1..5).filter(|&i| cfg.is_connected(i)) {
            let path = &cfg.blocks[i];
            for k in 1..path.len().saturating_sub(1) {
                let y = path[k];
                let xs = h.neighbors(path[k - 1]) & (h.neighbors(path[k + 1]) - c);
                for x in xs {
                    if path_through(h, cfg.u(j), cfg.v(j), y, h.vertices() - c.with(x)).is_some() {
                        out.push((x, y, i, j));
                    }
                }
            }
        }
    }
    out
}

/// `s_i = |N(a) ∩ N(b) ∩ C_i| − |C_i − (N(a) ∪ N(b))|`; `closed` uses
/// `N[a] ∪ N[b]` in the second term. Requires `a, b ∉ C_i`, under which the
/// two spellings agree.
pub fn s_value(cfg: &Configuration, a: usize, b: usize, i: usize, closed: bool) -> Result<i64> {
    let h = &cfg.host;
    h.check_vertex(a)?;
    h.check_vertex(b)?;
    if i >= cfg.blocks.len() {
        return Err(Error::input(format!("block index {i} out of range")));
    }
    let ci = cfg.block(i);
    if ci.contains(a) || ci.contains(b) {
        return Err(Error::input(format!("a = {a} and b = {b} must lie outside C_{i}")));
    }
    let (na, nb) = if closed {
        (h.neighbors(a).with(a), h.neighbors(b).with(b))
    } else {
        (h.neighbors(a), h.neighbors(b))
    };
    let common = (h.neighbors(a) & h.neighbors(b) & ci).len() as i64;
    let missed = (ci - (na | nb)).len() as i64;
    Ok(common - missed)
}
