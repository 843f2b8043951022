//! Linking pairs by edges or common neighbors, and the common-neighbor
//! certificates for linkedness that follow from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{Linkage, TerminalSpec};

fn common(l: &Graph, x: usize, y: usize) -> usize {
    (l.neighbors(x) & l.neighbors(y)).len()
}

fn check_order(l: &Graph, k: usize) -> Result<()> {
    if l.n() < 2 * k + 1 {
        return Err(Error::input(format!("needs at least 2k + 1 = {} vertices, the graph has {}", 2 * k + 1, l.n())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyOutcome {
    /// Paths in the order of the spec's pairs.
    pub linkage: Option<Linkage>,
    /// The order in which pairs were linked.
    pub ordering: Vec<(usize, usize)>,
    /// The first pair with no usable edge or common neighbor.
    pub failed_pair: Option<(usize, usize)>,
    /// Whether every nonadjacent pair at position `i` (from 1) has at least
    /// `2k − 2 + i` (knitted: `2k − 1 + i`) common neighbors.
    pub schedule_met: bool,
}

/// Links the pairs of `spec` one at a time by an edge or a common neighbor
/// that avoids every terminal, earlier interior vertices and (when
/// `knitted_variant`) the forbidden set. Adjacent pairs go first, then the
/// others by ascending common-neighbor count.
pub fn greedy_link(l: &Graph, spec: &TerminalSpec, knitted_variant: bool) -> Result<GreedyOutcome> {
    spec.check_against(l)?;
    let pairs = spec.pair_list();
    let k = pairs.len();
    check_order(l, k)?;
    let mut ordering: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(u, v)| l.has_edge(u, v)).collect();
    let mut loose: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(u, v)| !l.has_edge(u, v)).collect();
    loose.sort_by_key(|&(u, v)| common(l, u, v));
    ordering.extend(loose);

    let slack = if knitted_variant { 1 } else { 2 };
    let schedule_met = ordering
        .iter()
        .enumerate()
        .all(|(i, &(u, v))| l.has_edge(u, v) || common(l, u, v) + slack > 2 * k + i);

    let mut blocked = spec.terminals();
    if knitted_variant {
        blocked |= spec.forbidden;
    }
    let mut paths = Vec::with_capacity(k);
    for &(u, v) in &ordering {
        if l.has_edge(u, v) {
            paths.push(vec![u, v]);
            continue;
        }
        match (l.neighbors(u) & (l.neighbors(v) - blocked)).first() {
            Some(w) => {
                blocked.insert(w);
                paths.push(vec![u, w, v]);
            }
            None => {
                return Ok(GreedyOutcome {
                    linkage: None,
                    ordering,
                    failed_pair: Some((u, v)),
                    schedule_met,
                })
            }
        }
    }
    let by_pair = pairs
        .iter()
        .map(|p| paths[ordering.iter().position(|q| q == p).expect("every pair is ordered")].clone())
        .collect();
    let linkage = Linkage { paths: by_pair };
    let avoid = if knitted_variant { spec.forbidden | spec.singletons() } else { spec.singletons() };
    linkage.validate(l, &pairs, avoid)?;
    Ok(GreedyOutcome {
        linkage: Some(linkage),
        ordering,
        failed_pair: None,
        schedule_met,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonNeighborVerdict {
    pub holds: bool,
    pub bound: usize,
    /// Least nonadjacent pair below the bound, with its count.
    pub violation: Option<(usize, usize, usize)>,
}

/// Whether every nonadjacent pair has at least `3k − 2` (knitted: `3k − 1`)
/// common neighbors, which makes `l` `k`-linked (knitted: `(2, …, 2, 1)`-knitted
/// with `k` twos).
pub fn common_neighbor_certificate(l: &Graph, k: usize, knitted_variant: bool) -> Result<CommonNeighborVerdict> {
    if k < 3 {
        return Err(Error::input(format!("k = {k} must be at least 3")));
    }
    check_order(l, k)?;
    let bound = 3 * k - if knitted_variant { 1 } else { 2 };
    let violation = nonadjacent_pairs(l, l.vertices())
        .map(|(x, y)| (x, y, common(l, x, y)))
        .find(|&(_, _, c)| c < bound);
    Ok(CommonNeighborVerdict {
        holds: violation.is_none(),
        bound,
        violation,
    })
}

fn nonadjacent_pairs(l: &Graph, within: VertexSet) -> impl Iterator<Item = (usize, usize)> + '_ {
    within
        .iter()
        .flat_map(move |x| (within - l.neighbors(x) - VertexSet::full(x + 1)).iter().map(move |y| (x, y)))
}

/// How to read the second condition of the single-vertex certificate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairReading {
    /// Every nonadjacent `x, y ∈ V − v` has the bound on `|N(x) ∩ N(y)|`.
    #[default]
    XY,
    /// Literal wording: `v` and each such `x` (and `y`) have the bound.
    VX,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UncommonVerdict {
    pub holds: bool,
    /// `2k − 1` (knitted: `2k`) for non-neighbors of `v`.
    pub first_bound: usize,
    /// `3k − 2` (knitted: `3k − 1`) for nonadjacent pairs avoiding `v`.
    pub second_bound: usize,
    /// `(tier, x, y, count)` for the first failing check.
    pub violation: Option<(u8, usize, usize, usize)>,
}

/// Single-vertex variant: non-neighbors `x` of `v` share at least `2k − 1`
/// (`2k`) neighbors with `v`, and nonadjacent pairs in `V − v` meet the
/// `3k − 2` (`3k − 1`) bound under `reading`.
pub fn uncommon_neighbor_certificate(
    l: &Graph,
    v: usize,
    k: usize,
    knitted_variant: bool,
    reading: PairReading,
) -> Result<UncommonVerdict> {
    l.check_vertex(v)?;
    if k < 3 {
        return Err(Error::input(format!("k = {k} must be at least 3")));
    }
    check_order(l, k)?;
    let extra = usize::from(knitted_variant);
    let first_bound = 2 * k - 1 + extra;
    let second_bound = 3 * k - 2 + extra;
    let outside = l.vertices() - l.neighbors(v).with(v);
    let first = outside
        .iter()
        .map(|x| (1u8, v, x, common(l, v, x)))
        .find(|&(_, _, _, c)| c < first_bound);
    let second = || {
        nonadjacent_pairs(l, l.vertices().without(v)).find_map(|(x, y)| match reading {
            PairReading::XY => Some((2u8, x, y, common(l, x, y))).filter(|t| t.3 < second_bound),
            PairReading::VX => [x, y]
                .into_iter()
                .map(|z| (2u8, v, z, common(l, v, z)))
                .find(|t| t.3 < second_bound),
        })
    };
    let violation = first.or_else(second);
    Ok(UncommonVerdict {
        holds: violation.is_none(),
        first_bound,
        second_bound,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::solver::disjoint_paths;

    #[test]
    fn adjacent_pairs_use_edges() {
        let g = complete(8);
        let spec = TerminalSpec::pairs(&[(0, 1), (2, 3), (4, 5)], VertexSet::EMPTY).unwrap();
        let out = greedy_link(&g, &spec, false).unwrap();
        assert!(out.linkage.unwrap().paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn matched_clique_links_through_common_neighbors() {
        let g = complete_minus_matching(11, 5);
        let spec = TerminalSpec::pairs(&[(0, 1), (2, 3), (4, 5)], VertexSet::EMPTY).unwrap();
        let out = greedy_link(&g, &spec, false).unwrap();
        assert!(out.schedule_met);
        let linkage = out.linkage.unwrap();
        assert!(linkage.paths.iter().all(|p| p.len() == 3));
        let v = common_neighbor_certificate(&g, 3, false).unwrap();
        assert!(v.holds && v.bound == 7);
    }

    #[test]
    fn tightest_pair_goes_first() {
        // (0,1) has exactly 2k − 1 = 5 common neighbors, the others 10
        let mut g = complete(12);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v);
        }
        for w in 7..12 {
            g.remove_edge(0, w);
        }
        assert_eq!(common(&g, 0, 1), 5);
        let spec = TerminalSpec::pairs(&[(2, 3), (0, 1), (4, 5)], VertexSet::EMPTY).unwrap();
        let out = greedy_link(&g, &spec, false).unwrap();
        assert_eq!(out.ordering, vec![(0, 1), (2, 3), (4, 5)]);
        assert!(out.schedule_met);
        out.linkage.unwrap().validate(&g, &spec.pair_list(), VertexSet::EMPTY).unwrap();
        assert!(disjoint_paths(&g, &spec, None).unwrap().is_some());
    }

    #[test]
    fn certificates_on_small_graphs() {
        assert!(common_neighbor_certificate(&complete(7), 3, false).unwrap().holds);
        let c8 = common_neighbor_certificate(&cycle(8), 3, false).unwrap();
        assert!(!c8.holds);
        assert_eq!(c8.violation, Some((0, 2, 1)));
        assert!(common_neighbor_certificate(&complete(6), 3, false).is_err());
        for reading in [PairReading::XY, PairReading::VX] {
            assert!(uncommon_neighbor_certificate(&complete(8), 0, 3, true, reading).unwrap().holds);
            let sparse = uncommon_neighbor_certificate(&cycle(9), 0, 3, false, reading).unwrap();
            assert_eq!(sparse.violation.unwrap().0, 1);
        }
    }

    #[test]
    fn readings_differ() {
        // v = 0 universal; among the rest, 1 and 2 are nonadjacent with few
        // common neighbors, while v shares many neighbors with each
        let mut g = complete(10);
        g.remove_edge(1, 2);
        for w in 3..9 {
            g.remove_edge(1, w);
        }
        let xy = uncommon_neighbor_certificate(&g, 0, 3, false, PairReading::XY).unwrap();
        let vx = uncommon_neighbor_certificate(&g, 0, 3, false, PairReading::VX).unwrap();
        assert!(!xy.holds);
        assert_eq!(xy.violation, Some((2, 1, 2, 2)));
        assert!(!vx.holds);
        assert_eq!(vx.violation.unwrap().2, 1);
    }
}
