//! Dense closed neighborhoods and the search for small knitted subgraphs
//! inside them.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::common_neighbor_certificate;
use crate::error::{Error, Result};
use crate::graph::{max_clique, Graph, VertexSet};
use crate::solver::{is_k_linked, knit, partitions_with_pairs, SystemMode, TerminalSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DenseCase {
    I,
    Ii,
    Iii,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseNeighborhoodReport {
    /// The center `v` when the graph is a closed neighborhood `N[v]`.
    pub vertex: Option<usize>,
    pub case: DenseCase,
    pub n_h: usize,
    pub delta_h: usize,
    /// Vertices of degree exactly `⌊p/2⌋`.
    pub low_degree_vertices: VertexSet,
}

/// First of the three density conditions `h` meets for `p`:
/// (i) `n ≤ p`, `δ ≥ ⌊p/2⌋ + 1`; (ii) `n ≤ p − 2`, `δ ≥ ⌊p/2⌋`, at most two
/// vertices of degree `⌊p/2⌋` and those nonadjacent; (iii) `n ≤ p − 4`,
/// `δ ≥ ⌊p/2⌋`.
pub fn dense_conditions(h: &Graph, p: usize) -> DenseNeighborhoodReport {
    let n = h.n();
    let half = p / 2;
    let delta = h.min_degree().unwrap_or(0);
    let low: VertexSet = h.vertices().iter().filter(|&v| h.degree(v) == half).collect();
    let case = if n == 0 {
        DenseCase::None
    } else if n <= p && delta > half {
        DenseCase::I
    } else if n + 2 <= p && delta >= half && low.len() <= 2 && h.is_independent(low) {
        DenseCase::Ii
    } else if n + 4 <= p && delta >= half {
        DenseCase::Iii
    } else {
        DenseCase::None
    };
    DenseNeighborhoodReport {
        vertex: None,
        case,
        n_h: n,
        delta_h: delta,
        low_degree_vertices: low,
    }
}

/// The least `v ∉ s` whose closed neighborhood meets a density condition.
pub fn find_dense_neighborhood(l: &Graph, s: VertexSet, p: usize) -> Result<Option<DenseNeighborhoodReport>> {
    l.check_set(s)?;
    for v in l.vertices() - s {
        let (h, _) = l.induced(l.neighbors(v).with(v))?;
        let mut report = dense_conditions(&h, p);
        if report.case != DenseCase::None {
            report.vertex = Some(v);
            return Ok(Some(report));
        }
    }
    Ok(None)
}

/// The subgraph the density conditions promise for each supported `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// `(2, 2, 2, 1)`-knitted.
    Knitted3,
    /// 4-linked.
    Linked4,
    /// `(2, 2, 2, 2, 1)`-knitted.
    Knitted4,
}

impl Target {
    pub fn for_p(p: usize) -> Result<Target> {
        match p {
            18 => Ok(Target::Knitted3),
            30 => Ok(Target::Linked4),
            42 => Ok(Target::Knitted4),
            _ => Err(Error::input(format!("p = {p} must be 18, 30 or 42"))),
        }
    }

    pub fn pairs(self) -> usize {
        match self {
            Target::Knitted3 => 3,
            Target::Linked4 | Target::Knitted4 => 4,
        }
    }

    pub fn with_singleton(self) -> bool {
        self != Target::Linked4
    }

    pub fn terminals(self) -> usize {
        2 * self.pairs() + usize::from(self.with_singleton())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Knitted1Status {
    /// A clique or common-neighbor certificate, spot-validated.
    Certified,
    /// No certificate, but every sampled terminal system was solved.
    SampledPass,
    NotFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Clique,
    CommonNeighbors,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Knitted1Verdict {
    pub status: Knitted1Status,
    pub target: Target,
    pub route: Option<Route>,
    /// Vertex set of the subgraph found.
    pub witness: Option<VertexSet>,
    pub systems_checked: usize,
    /// Terminal systems a candidate failed on; for a certified candidate
    /// these would contradict the certificate.
    pub failures: Vec<TerminalSpec>,
}

/// Searches `h` for the subgraph promised for `p`: a large enough clique,
/// then a candidate (the whole graph, a closed neighborhood, or a core) with
/// a common-neighbor certificate, then a candidate passing `samples` random
/// terminal systems. Certified candidates are also checked on `samples`
/// systems, and exhaustively when they have at most 12 vertices.
pub fn knitted1_check(h: &Graph, p: usize, samples: usize, seed: u64) -> Result<Knitted1Verdict> {
    let target = Target::for_p(p)?;
    if dense_conditions(h, p).case == DenseCase::None {
        return Err(Error::input(format!("graph meets none of the density conditions for p = {p}")));
    }
    if !h.vertices().iter().any(|v| h.degree(v) + 1 == h.n()) {
        return Err(Error::input("graph has no universal vertex"));
    }
    let mut verdict = Knitted1Verdict {
        status: Knitted1Status::NotFound,
        target,
        route: None,
        witness: None,
        systems_checked: 0,
        failures: Vec::new(),
    };
    let need = target.terminals();

    let clique = max_clique(h);
    if clique.len() >= need {
        let witness: VertexSet = clique.iter().take(need).collect();
        return finish(h, witness, Route::Clique, target, samples, seed, verdict);
    }

    let candidates = candidates(h, need);
    for &c in &candidates {
        let (sub, _) = h.induced(c)?;
        if common_neighbor_certificate(&sub, target.pairs(), target.with_singleton())?.holds {
            return finish(h, c, Route::CommonNeighbors, target, samples, seed, verdict);
        }
    }
    for (i, &c) in candidates.iter().enumerate() {
        let (checked, failures) = spot_check(h, c, target, samples, seed.wrapping_add(i as u64))?;
        verdict.systems_checked += checked;
        if failures.is_empty() && checked > 0 {
            verdict.status = Knitted1Status::SampledPass;
            verdict.route = Some(Route::Sampled);
            verdict.witness = Some(c);
            verdict.failures.clear();
            return Ok(verdict);
        }
        if verdict.failures.is_empty() {
            verdict.failures = failures;
        }
    }
    Ok(verdict)
}

fn finish(
    h: &Graph,
    witness: VertexSet,
    route: Route,
    target: Target,
    samples: usize,
    seed: u64,
    mut verdict: Knitted1Verdict,
) -> Result<Knitted1Verdict> {
    let (checked, failures) = spot_check(h, witness, target, samples, seed)?;
    let (exhaustive_checked, exhaustive_failures) = if witness.len() <= 12 { exhaustive_check(h, witness, target)? } else { (0, Vec::new()) };
    verdict.systems_checked = checked + exhaustive_checked;
    verdict.failures = failures.into_iter().chain(exhaustive_failures).collect();
    verdict.route = Some(route);
    verdict.witness = Some(witness);
    if verdict.failures.is_empty() {
        verdict.status = Knitted1Status::Certified;
    } else {
        return Err(Error::Inconsistent(format!(
            "{route:?} certificate on {witness} failed {} terminal systems",
            verdict.failures.len()
        )));
    }
    Ok(verdict)
}

/// `h` itself, each closed neighborhood, then each core reached by peeling
/// minimum-degree vertices; deduplicated, at least `need` vertices.
fn candidates(h: &Graph, need: usize) -> Vec<VertexSet> {
    let mut out = vec![h.vertices()];
    for v in h.vertices() {
        out.push(h.neighbors(v).with(v));
    }
    let mut core = h.vertices();
    while core.len() > need {
        let v = core.iter().min_by_key(|&v| (h.degree_in(v, core), v)).expect("nonempty core");
        core.remove(v);
        out.push(core);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|c| c.len() >= need && seen.insert(*c));
    out
}

fn relabel(spec: &TerminalSpec, map: &[usize]) -> TerminalSpec {
    TerminalSpec {
        parts: spec.parts.iter().map(|p| p.iter().map(|v| map[v]).collect()).collect(),
        forbidden: spec.forbidden.iter().map(|v| map[v]).collect(),
    }
}

/// Random terminal systems of `target` on `within`, solved exactly.
fn spot_check(h: &Graph, within: VertexSet, target: Target, samples: usize, seed: u64) -> Result<(usize, Vec<TerminalSpec>)> {
    let (sub, map) = h.induced(within)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..sub.n()).collect();
    let systems: Vec<TerminalSpec> = (0..samples)
        .map(|_| {
            order.shuffle(&mut rng);
            let mut parts: Vec<VertexSet> = order[..2 * target.pairs()]
                .chunks(2)
                .map(|c| VertexSet::from_iter([c[0], c[1]]))
                .collect();
            if target.with_singleton() {
                parts.push(VertexSet::singleton(order[2 * target.pairs()]));
            }
            TerminalSpec {
                parts,
                forbidden: VertexSet::EMPTY,
            }
        })
        .collect();
    let failures: Vec<TerminalSpec> = systems
        .par_iter()
        .map(|spec| knit(&sub, spec).map(|k| (spec, k.is_some())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(spec, _)| relabel(spec, &map))
        .collect();
    Ok((systems.len(), failures))
}

/// Every terminal system of `target` on `within`.
fn exhaustive_check(h: &Graph, within: VertexSet, target: Target) -> Result<(usize, Vec<TerminalSpec>)> {
    let (sub, map) = h.induced(within)?;
    if !target.with_singleton() {
        let v = is_k_linked(&sub, target.pairs(), SystemMode::Exhaustive)?;
        let failures = v
            .counterexample
            .map(|sys| relabel(&TerminalSpec::pairs(&sys, VertexSet::EMPTY).expect("distinct pairs"), &map))
            .into_iter()
            .collect();
        return Ok((v.systems_checked, failures));
    }
    let sets = subsets_of_size(sub.n(), target.terminals());
    let results: Vec<(usize, Option<TerminalSpec>)> = sets
        .par_iter()
        .map(|&s| {
            let parts = partitions_with_pairs(s, target.pairs());
            let bad = parts
                .iter()
                .map(|p| TerminalSpec {
                    parts: p.clone(),
                    forbidden: VertexSet::EMPTY,
                })
                .find(|spec| knit(&sub, spec).map_or(true, |k| k.is_none()));
            (parts.len(), bad)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().filter_map(|r| r.1).map(|s| relabel(&s, &map)).collect();
    Ok((checked, failures))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == k).map(VertexSet::from_bits).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn classification_examples() {
        assert_eq!(dense_conditions(&complete(16), 18).case, DenseCase::I);
        let mut k14 = complete(14);
        k14.remove_edge(0, 1);
        let r = dense_conditions(&k14, 18);
        assert_eq!((r.case, r.n_h, r.delta_h), (DenseCase::I, 14, 12));
        // 10-regular circulant on 29 vertices
        let mut g = Graph::empty(29).unwrap();
        for v in 0..29 {
            for d in 1..=5 {
                g.add_edge(v, (v + d) % 29);
            }
        }
        assert_eq!(dense_conditions(&g, 30).case, DenseCase::None);
    }

    #[test]
    fn case_two_needs_nonadjacent_low_vertices() {
        // p = 10, n = 8: vertices 0 and 1 have degree 5, the rest at least 6
        let mut g = complete(8);
        for (u, v) in [(0, 1), (0, 2), (1, 3)] {
            g.remove_edge(u, v);
        }
        let r = dense_conditions(&g, 10);
        assert_eq!((r.case, r.low_degree_vertices), (DenseCase::Ii, VertexSet::from_iter([0, 1])));
        let mut g = complete(8);
        for (u, v) in [(0, 2), (0, 3), (1, 4), (1, 5)] {
            g.remove_edge(u, v);
        }
        assert_eq!(dense_conditions(&g, 10).case, DenseCase::None);
    }

    #[test]
    fn clique_neighborhood_found() {
        let r = find_dense_neighborhood(&complete(8), VertexSet::EMPTY, 8).unwrap().unwrap();
        assert_eq!((r.vertex, r.case), (Some(0), DenseCase::I));
        assert!(find_dense_neighborhood(&cycle(12), VertexSet::EMPTY, 8).unwrap().is_none());
    }

    #[test]
    fn clique_route_certifies() {
        let v = knitted1_check(&complete(16), 18, 20, 1).unwrap();
        assert_eq!(v.status, Knitted1Status::Certified);
        assert_eq!(v.route, Some(Route::Clique));
        assert_eq!(v.witness.unwrap().len(), 7);
        assert!(knitted1_check(&complete(9), 42, 5, 1).is_err());
    }
}
