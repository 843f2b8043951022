//! Unit vertex-capacity max-flow (Menger) on the split-vertex network.

use std::collections::VecDeque;

use super::{Graph, VertexSet};

const INF: i32 = i32::MAX / 4;

struct Network {
    size: usize,
    cap: Vec<i32>,
}

impl Network {
    fn new(size: usize) -> Self {
        Network {
            size,
            cap: vec![0; size * size],
        }
    }

    #[inline]
    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.cap[a * self.size + b] += c;
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut parent = vec![usize::MAX; self.size];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            let row = &self.cap[a * self.size..(a + 1) * self.size];
            for (b, &c) in row.iter().enumerate() {
                if c > 0 && parent[b] == usize::MAX {
                    parent[b] = a;
                    if b == sink {
                        let mut cur = sink;
                        while cur != source {
                            let prev = parent[cur];
                            self.cap[prev * self.size + cur] -= 1;
                            self.cap[cur * self.size + prev] += 1;
                            cur = prev;
                        }
                        return true;
                    }
                    queue.push_back(b);
                }
            }
        }
        false
    }

    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    /// Residual capacity of `a -> b` below its original value means flow.
    fn flow_on(&self, original: &[i32], a: usize, b: usize) -> bool {
        let idx = a * self.size + b;
        original[idx] > 0 && self.cap[idx] < original[idx]
    }
}

#[inline]
fn vin(v: usize) -> usize {
    2 * v
}

#[inline]
fn vout(v: usize) -> usize {
    2 * v + 1
}

/// Builds the split network restricted to `within`; returns (network, source, sink).
fn split_network(g: &Graph, within: VertexSet, cap_of: impl Fn(usize) -> i32) -> (Network, usize, usize) {
    let n = g.n();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = Network::new(2 * n + 2);
    for v in within {
        net.add(vin(v), vout(v), cap_of(v));
        for w in g.neighbors(v) & within {
            net.add(vout(v), vin(w), INF);
        }
    }
    (net, source, sink)
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths inside `within`
/// (`s`, `t` distinct), capped at `limit`. Adjacent endpoints count the direct
/// edge as one path.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, within: VertexSet, limit: usize) -> usize {
    let within = within.with(s).with(t);
    let (mut net, source, sink) = split_network(g, within, |v| if v == s || v == t { INF } else { 1 });
    // the direct edge would otherwise carry unbounded flow
    let direct = g.has_edge(s, t);
    if direct {
        net.cap[vout(s) * net.size + vin(t)] = 0;
        net.cap[vout(t) * net.size + vin(s)] = 0;
    }
    net.add(source, vin(s), INF);
    net.add(vout(t), sink, INF);
    let extra = usize::from(direct);
    if limit <= extra {
        return limit;
    }
    extra + net.max_flow(source, sink, limit - extra)
}

/// True when `g` is `k`-vertex-connected: more than `k` vertices and no
/// vertex cut of fewer than `k` vertices.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() <= k {
        return false;
    }
    let all = g.vertices();
    for s in 0..g.n() {
        for t in all - g.neighbors(s) - VertexSet::full(s + 1) {
            if local_connectivity(g, s, t, all, k) < k {
                return false;
            }
        }
    }
    true
}

/// A maximum family of vertex-disjoint paths inside `within`, each starting in
/// `sources` and ending in `sinks` with no other vertex from either set.
/// At most `limit` paths are returned. Paths of one vertex occur for members
/// of `sources ∩ sinks`.
pub fn disjoint_paths_between_sets(
    g: &Graph,
    sources: VertexSet,
    sinks: VertexSet,
    within: VertexSet,
    limit: usize,
) -> Vec<Vec<usize>> {
    let within = within | sources | sinks;
    let n = g.n();
    let (mut net, source, sink) = split_network(g, within, |_| 1);
    for s in sources {
        net.add(source, vin(s), 1);
    }
    for t in sinks {
        net.add(vout(t), sink, 1);
    }
    let original = net.cap.clone();
    let flow = net.max_flow(source, sink, limit);

    // decompose: follow out-vertices through saturated arcs
    let mut used = vec![false; net.size * net.size];
    let mut paths = Vec::with_capacity(flow);
    for s in sources {
        if !net.flow_on(&original, source, vin(s)) {
            continue;
        }
        let mut walk = vec![s];
        let mut cur = s;
        loop {
            if sinks.contains(cur) && net.flow_on(&original, vout(cur), sink) {
                break;
            }
            let next = (0..n).find(|&w| {
                let idx = vout(cur) * net.size + vin(w);
                !used[idx] && net.flow_on(&original, vout(cur), vin(w))
            });
            let Some(w) = next else { break };
            used[vout(cur) * net.size + vin(w)] = true;
            walk.push(w);
            cur = w;
        }
        paths.push(trim(walk, sources, sinks));
    }
    paths
}

/// Shortens a source-to-sink walk so only its first vertex is a source and
/// only its last vertex is a sink.
fn trim(walk: Vec<usize>, sources: VertexSet, sinks: VertexSet) -> Vec<usize> {
    let first_sink = walk.iter().position(|&v| sinks.contains(v)).unwrap_or(walk.len() - 1);
    let head = &walk[..=first_sink];
    let last_source = head.iter().rposition(|&v| sources.contains(v)).unwrap_or(0);
    head[last_source..].to_vec()
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn connectivity_of_standard_graphs() {
        assert!(vertex_connectivity_at_least(&complete(6), 5));
        assert!(!vertex_connectivity_at_least(&complete(6), 6));
        assert!(vertex_connectivity_at_least(&cycle(7), 2));
        assert!(!vertex_connectivity_at_least(&cycle(7), 3));
        assert!(vertex_connectivity_at_least(&petersen(), 3));
        assert!(!vertex_connectivity_at_least(&petersen(), 4));
        assert!(!vertex_connectivity_at_least(&path(4), 2));
    }

    #[test]
    fn local_connectivity_counts_direct_edge() {
        let g = complete(5);
        assert_eq!(local_connectivity(&g, 0, 1, g.vertices(), 10), 4);
        let c = cycle(6);
        assert_eq!(local_connectivity(&c, 0, 3, c.vertices(), 10), 2);
    }

    #[test]
    fn set_paths_are_disjoint_and_trimmed() {
        let g = petersen();
        let sources: VertexSet = [0, 1, 2].into_iter().collect();
        let sinks: VertexSet = [5, 6, 7, 8, 9].into_iter().collect();
        let paths = disjoint_paths_between_sets(&g, sources, sinks, g.vertices(), 10);
        assert_eq!(paths.len(), 3);
        let mut seen = VertexSet::EMPTY;
        for p in &paths {
            assert!(sources.contains(p[0]));
            assert!(sinks.contains(*p.last().unwrap()));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            for &v in p {
                assert!(!seen.contains(v));
                seen.insert(v);
            }
            assert!(p[1..].iter().all(|&v| !sources.contains(v)));
            assert!(p[..p.len() - 1].iter().all(|&v| !sinks.contains(v)));
        }
    }
}
