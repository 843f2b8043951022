//! Claims about the `s_i` quantities of a nine-terminal configuration,
//! checked exhaustively over all admissible `(a, b)` and `(a, a′, b, b′)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity_at_least, Graph, VertexSet};
use crate::solver::{reroute_options, s_value, Configuration};

/// The individual conclusions under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SiClaim {
    /// A disconnected block has `s_i ≤ 0`.
    DisconnectedBlockNonPositive,
    /// Neighbors of `a` (and of `b`) on a path block are at most two steps apart.
    NeighborsClusterOnPath,
    /// `−|C_i| ≤ s_i ≤ min(|C_i|, 6 − |C_i|)` on a path block.
    PathBlockBounds,
    /// `Σ_{i≠j} s_i ≥ d(a) + d(b) − (|H| − 2) + t_a + t_b`.
    SumLowerBound,
    /// `s_i ≠ 3` when both sides are 2-connected components and few vertices lie outside them.
    NeverThree,
    /// Two pairs: `s_i + s_i′ ∈ {3, 4}` and `|C_i| ∈ {2, 3}`.
    PairSumRange,
    /// Two pairs: a three-vertex block with a vertex of `A` complete to it has its middle vertex anticomplete to `B`.
    MiddleAnticomplete,
    /// Two pairs: `s_i + s_i′ = 4` forces both to be 2 with all four vertices complete to the block's ends.
    SumFourStructure,
}

impl SiClaim {
    pub const ALL: [SiClaim; 8] = [
        SiClaim::DisconnectedBlockNonPositive,
        SiClaim::NeighborsClusterOnPath,
        SiClaim::PathBlockBounds,
        SiClaim::SumLowerBound,
        SiClaim::NeverThree,
        SiClaim::PairSumRange,
        SiClaim::MiddleAnticomplete,
        SiClaim::SumFourStructure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SiClaim::DisconnectedBlockNonPositive => "disconnected-block-non-positive",
            SiClaim::NeighborsClusterOnPath => "neighbors-cluster-on-path",
            SiClaim::PathBlockBounds => "path-block-bounds",
            SiClaim::SumLowerBound => "sum-lower-bound",
            SiClaim::NeverThree => "never-three",
            SiClaim::PairSumRange => "pair-sum-range",
            SiClaim::MiddleAnticomplete => "middle-anticomplete",
            SiClaim::SumFourStructure => "sum-four-structure",
        }
    }
}

/// Which sides `(A*, B*)` are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sides {
    /// The components `A`, `B` of `u_j`, `v_j` in `H − (C − {u_j, v_j})`.
    Components,
    /// `A_j = N(u_j) − C` and `B_j = N(v_j) − C`.
    Neighborhoods,
}

/// One evaluated instance of a claim, enough to recompute it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiWitness {
    pub claim: SiClaim,
    pub j: usize,
    pub sides: Sides,
    pub i: usize,
    pub a: usize,
    pub b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<usize>,
    pub detail: String,
}

/// Everything fixed once `j` and the side choice are.
struct Frame<'a> {
    cfg: &'a Configuration,
    j: usize,
    sides: Sides,
    c: VertexSet,
    comp_a: VertexSet,
    comp_b: VertexSet,
    star_a: VertexSet,
    star_b: VertexSet,
    /// `A ≠ B`.
    separated: bool,
    /// `H[A]` and `H[B]` are 2-connected.
    components_2connected: bool,
    /// `H[A*]` and `H[B*]` are 2-connected.
    stars_2connected: bool,
    /// `|H − (A ∪ B)| ≤ δ(H) − 2`.
    small_rest: bool,
    /// No reroute applies.
    stable: bool,
}

fn two_connected(h: &Graph, s: VertexSet) -> bool {
    let (sub, _) = h.induced(s).expect("subset of the host");
    vertex_connectivity_at_least(&sub, 2)
}

impl<'a> Frame<'a> {
    fn new(cfg: &'a Configuration, j: usize, sides: Sides, stable: bool) -> Self {
        let h = &cfg.host;
        let c = cfg.vertices();
        let (uj, vj) = (cfg.u(j), cfg.v(j));
        let free = h.vertices() - (c - VertexSet::singleton(uj).with(vj));
        let comp_a = h.reach(VertexSet::singleton(uj), free);
        let comp_b = h.reach(VertexSet::singleton(vj), free);
        let (star_a, star_b) = match sides {
            Sides::Components => (comp_a, comp_b),
            Sides::Neighborhoods => (h.neighbors(uj) - c, h.neighbors(vj) - c),
        };
        let components_2connected = two_connected(h, comp_a) && two_connected(h, comp_b);
        let stars_2connected = match sides {
            Sides::Components => components_2connected,
            Sides::Neighborhoods => two_connected(h, star_a) && two_connected(h, star_b),
        };
        let rest = (h.vertices() - (comp_a | comp_b)).len() as i64;
        Frame {
            cfg,
            j,
            sides,
            c,
            comp_a,
            comp_b,
            star_a,
            star_b,
            separated: comp_a != comp_b,
            components_2connected,
            stars_2connected,
            small_rest: rest <= h.min_degree().unwrap_or(0) as i64 - 2,
            stable,
        }
    }

    /// Choices of `a` (or `a′`): `A* − u_j`, outside `C`.
    fn a_choices(&self) -> VertexSet {
        self.star_a - self.c
    }

    fn b_choices(&self) -> VertexSet {
        self.star_b - self.c
    }

    fn others(&self) -> impl Iterator<Item = usize> + '_ {
        (0..5).filter(move |&i| i != self.j)
    }

    fn s(&self, a: usize, b: usize, i: usize, closed: bool) -> i64 {
        s_value(self.cfg, a, b, i, closed).expect("a, b lie outside C")
    }

    /// Single-pair claims for `(a, b)`; claims whose preconditions fail are
    /// not visited.
    fn single(&self, a: usize, b: usize, mut visit: impl FnMut(SiClaim, usize, bool, String)) {
        let h = &self.cfg.host;
        for i in self.others() {
            let block = &self.cfg.blocks[i];
            let ci = self.cfg.block(i);
            let si = self.s(a, b, i, false);
            if !self.cfg.is_connected(i) {
                visit(SiClaim::DisconnectedBlockNonPositive, i, si <= 0, format!("s_{i} = {si}"));
                continue;
            }
            for x in [a, b] {
                let positions: Vec<usize> = (0..block.len()).filter(|&k| h.has_edge(x, block[k])).collect();
                // the outermost two neighbors are the farthest apart
                let ok = positions.first().zip(positions.last()).is_none_or(|(lo, hi)| hi - lo <= 2);
                visit(
                    SiClaim::NeighborsClusterOnPath,
                    i,
                    ok,
                    format!("{x} sees positions {positions:?} of C_{i}"),
                );
            }
            let len = ci.len() as i64;
            let ok = -len <= si && si <= len.min(6 - len);
            visit(SiClaim::PathBlockBounds, i, ok, format!("s_{i} = {si}, |C_{i}| = {len}"));
            if self.sides == Sides::Components
                && self.components_2connected
                && self.small_rest
                && self.separated
                && self.stable
            {
                visit(SiClaim::NeverThree, i, si != 3, format!("s_{i} = {si}"));
            }
        }
        if self.separated {
            let sum: i64 = self.others().map(|i| self.s(a, b, i, false)).sum();
            let t_a = (self.star_a - self.c - h.neighbors(a).with(a)).len() as i64;
            let t_b = (self.star_b - self.c - h.neighbors(b).with(b)).len() as i64;
            let bound = h.degree(a) as i64 + h.degree(b) as i64 - (h.n() as i64 - 2) + t_a + t_b;
            visit(SiClaim::SumLowerBound, self.j, sum >= bound, format!("Σ s_i = {sum} < {bound}"));
        }
    }

    /// Two-pair claims for distinct `a, a′, b, b′`.
    fn double(&self, a: usize, a2: usize, b: usize, b2: usize, mut visit: impl FnMut(SiClaim, usize, bool, String)) {
        let h = &self.cfg.host;
        let allowed = (self.sides == Sides::Neighborhoods || self.stars_2connected) && self.separated && self.stable;
        if !allowed {
            return;
        }
        for i in self.others() {
            let si = self.s(a, b, i, true);
            let si2 = self.s(a2, b2, i, true);
            if si + si2 < 3 || si < si2 {
                continue;
            }
            let block = &self.cfg.blocks[i];
            let len = block.len();
            let sum = si + si2;
            visit(
                SiClaim::PairSumRange,
                i,
                (3..=4).contains(&sum) && (2..=3).contains(&len),
                format!("s_{i} + s_{i}′ = {si} + {si2}, |C_{i}| = {len}"),
            );
            if len == 3 {
                let ci = self.cfg.block(i);
                if self.comp_a.iter().any(|w| ci.is_subset(h.neighbors(w))) {
                    let middle = block[1];
                    visit(
                        SiClaim::MiddleAnticomplete,
                        i,
                        h.neighbors(middle).is_disjoint(self.comp_b),
                        format!("middle vertex {middle} meets B"),
                    );
                }
            }
            if sum == 4 {
                let ends = VertexSet::singleton(block[0]).with(block[len - 1]);
                let complete = [a, a2, b, b2].iter().all(|&x| ends.is_subset(h.neighbors(x)));
                visit(
                    SiClaim::SumFourStructure,
                    i,
                    si == 2 && si2 == 2 && complete,
                    format!("s_{i} = {si}, s_{i}′ = {si2}, ends complete: {complete}"),
                );
            }
        }
    }
}

/// Per-claim check counts and the violated instances of one configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiTally {
    pub checks: BTreeMap<SiClaim, usize>,
    pub violations: Vec<SiWitness>,
}

impl SiTally {
    fn record(&mut self, w: SiWitness, holds: bool) {
        *self.checks.entry(w.claim).or_default() += 1;
        if !holds {
            self.violations.push(w);
        }
    }

    pub fn total_checks(&self) -> usize {
        self.checks.values().sum()
    }
}

/// Blocks `j` the claims apply to: the disconnected pair blocks.
fn eligible_blocks(cfg: &Configuration) -> impl Iterator<Item = usize> + '_ {
    (1..5).filter(|&j| !cfg.is_connected(j))
}

/// Checks every claim over every admissible choice of `j`, sides, `i` and
/// vertices.
pub fn check_si_claims(cfg: &Configuration) -> SiTally {
    let mut tally = SiTally::default();
    let stable = reroute_options(cfg).is_empty();
    for j in eligible_blocks(cfg) {
        for sides in [Sides::Components, Sides::Neighborhoods] {
            let frame = Frame::new(cfg, j, sides, stable);
            let (xs, ys) = (frame.a_choices(), frame.b_choices());
            for a in xs {
                for b in ys.without(a) {
                    frame.single(a, b, |claim, i, holds, detail| {
                        let w = SiWitness {
                            claim,
                            j,
                            sides,
                            i,
                            a,
                            b,
                            a2: None,
                            b2: None,
                            detail,
                        };
                        tally.record(w, holds)
                    });
                }
            }
            for a in xs {
                for a2 in xs - VertexSet::full(a + 1) {
                    for b in ys - VertexSet::singleton(a).with(a2) {
                        for b2 in ys - VertexSet::singleton(a).with(a2).with(b) {
                            // (a, b) and (a′, b′) are ordered: both orders are visited
                            for (x, x2) in [(a, a2), (a2, a)] {
                                frame.double(x, x2, b, b2, |claim, i, holds, detail| {
                                    let w = SiWitness {
                                        claim,
                                        j,
                                        sides,
                                        i,
                                        a: x,
                                        b,
                                        a2: Some(x2),
                                        b2: Some(b2),
                                        detail,
                                    };
                                    tally.record(w, holds)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    tally
}

/// Recomputes one witnessed instance and returns whether the claim fails
/// there. Errors when the witness does not describe an admissible instance.
pub fn witness_fails(cfg: &Configuration, w: &SiWitness) -> Result<bool> {
    if !eligible_blocks(cfg).any(|j| j == w.j) {
        return Err(Error::Inconsistent(format!("C_{} is not a disconnected pair block", w.j)));
    }
    let frame = Frame::new(cfg, w.j, w.sides, reroute_options(cfg).is_empty());
    let (xs, ys) = (frame.a_choices(), frame.b_choices());
    let mut found = None;
    let mut capture = |claim: SiClaim, i: usize, holds: bool, _: String| {
        if claim == w.claim && i == w.i && found != Some(false) {
            found = Some(holds);
        }
    };
    match (w.a2, w.b2) {
        (None, None) => {
            if !xs.contains(w.a) || !ys.contains(w.b) || w.a == w.b {
                return Err(Error::Inconsistent("witness vertices are not admissible".into()));
            }
            frame.single(w.a, w.b, &mut capture);
        }
        (Some(a2), Some(b2)) => {
            let four: VertexSet = [w.a, a2, w.b, b2].iter().collect();
            if four.len() != 4 || !xs.contains(w.a) || !xs.contains(a2) || !ys.contains(w.b) || !ys.contains(b2) {
                return Err(Error::Inconsistent("witness vertices are not admissible".into()));
            }
            frame.double(w.a, a2, w.b, b2, &mut capture);
        }
        _ => return Err(Error::Inconsistent("witness must give both a′ and b′ or neither".into())),
    }
    match found {
        Some(holds) => Ok(!holds),
        None => Err(Error::Inconsistent(format!("claim {:?} does not apply to the witness", w.claim))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::build_configuration;

    #[test]
    fn separated_pair_produces_checks() {
        // u_1 = 1 and v_1 = 2 sit in two triangles joined only through the
        // other terminals, so C_1 stays a disconnected pair
        let mut h = Graph::empty(15).unwrap();
        for (u, v) in [(1, 9), (1, 10), (9, 10), (2, 11), (2, 12), (11, 12), (9, 3), (11, 4)] {
            h.add_edge(u, v);
        }
        for (u, v) in [(3, 4), (5, 6), (7, 8), (13, 14), (0, 13)] {
            h.add_edge(u, v);
        }
        let cfg = build_configuration(&h, &[0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert!(cfg.blocks.iter().skip(1).any(|b| b.len() == 2 && !h.has_edge(b[0], b[1])));
        let tally = check_si_claims(&cfg);
        assert!(tally.total_checks() > 0);
        assert!(tally.violations.is_empty(), "{:?}", tally.violations);
        assert!(tally.checks.contains_key(&SiClaim::SumLowerBound));
    }
}
