//! Falsification campaigns: the `s_i` claim sweep and the 4-linkage pipeline.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::format::{parse_graph6, write_graph6};
use super::generate::{gen_min_degree, gen_separated_host};
use super::lemma::check_si_claims;
use super::report::{Certificate, Counterexample, ExperimentReport, InstanceRecord, Verdict};
use crate::certify::{dense_conditions, find_dense_neighborhood, greedy_link, knitted1_check, DenseCase, Knitted1Status, Route, Target};
use crate::error::{Error, Result};
use crate::graph::{disjoint_paths_between_sets, named, Graph, VertexSet};
use crate::solver::{build_configuration, Linkage, TerminalSpec};
use crate::structure::{is_p_massed, minimize_pair, MinimizeOptions};

/// Environment variable capping campaign parallelism.
pub const THREADS_VAR: &str = "KNITWEAVE_THREADS";

/// A rayon pool sized by `KNITWEAVE_THREADS` when set.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("{THREADS_VAR} = `{v}` is not a thread count")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Resource(e.to_string()))
}

/// Per-instance seed, independent of scheduling.
fn instance_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<f64> {
    timing.then(|| start.elapsed().as_secs_f64() * 1e3)
}

/// Where sweep hosts come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HostFamily {
    /// [`gen_min_degree`] with random terminals.
    MinDegree,
    /// [`gen_separated_host`] with its own terminals.
    Separated,
    /// [`gen_separated_host`] in its dense form.
    DenseSeparated,
    /// Cycling through the three families above.
    Mixed,
}

/// Parameters of the `s_i` claim sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiCampaign {
    pub samples: usize,
    pub seed: u64,
    /// Host orders, inclusive; at least 9.
    pub sizes: (usize, usize),
    /// Minimum degrees passed to the generator, inclusive; clamped below `n`.
    pub degrees: (usize, usize),
    pub family: HostFamily,
    pub timing: bool,
}

impl Default for SiCampaign {
    fn default() -> Self {
        SiCampaign {
            samples: 100,
            seed: 0,
            sizes: (12, 20),
            degrees: (3, 12),
            family: HostFamily::Mixed,
            timing: true,
        }
    }
}

/// Samples hosts and terminals from `params.family`, builds the optimal
/// configuration and checks every `s_i` claim over all
/// admissible vertex choices. Violations become counterexamples.
pub fn campaign_lemma_si(params: &SiCampaign) -> Result<ExperimentReport> {
    let (lo, hi) = params.sizes;
    if lo < 9 || lo > hi || hi > 64 {
        return Err(Error::input(format!("host orders {lo}..={hi} must satisfy 9 ≤ lo ≤ hi ≤ 64")));
    }
    if params.degrees.0 > params.degrees.1 {
        return Err(Error::input("degree range is empty"));
    }
    let pool = thread_pool()?;
    let results: Vec<(InstanceRecord, Vec<Counterexample>)> = pool.install(|| {
        (0..params.samples)
            .into_par_iter()
            .map(|index| si_instance(params, index))
            .collect::<Result<_>>()
    })?;
    let (instances, counterexamples): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    Ok(ExperimentReport::assemble(
        "lemma-si",
        params.seed,
        json!({
            "samples": params.samples,
            "sizes": params.sizes,
            "degrees": params.degrees,
            "family": params.family,
        }),
        instances,
        counterexamples.into_iter().flatten().collect(),
    ))
}

fn si_instance(params: &SiCampaign, index: usize) -> Result<(InstanceRecord, Vec<Counterexample>)> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(params.seed, index));
    let family = match params.family {
        HostFamily::Mixed => [HostFamily::MinDegree, HostFamily::Separated, HostFamily::DenseSeparated][index % 3],
        f => f,
    };
    let (g, terminals, descriptor) = if family != HostFamily::MinDegree {
        let dense = family == HostFamily::DenseSeparated;
        let (g, terminals) = gen_separated_host(rng.random(), dense)?;
        let kind = if dense { "dense separated" } else { "separated" };
        let descriptor = format!("{kind} host n = {}, terminals {terminals:?}", g.n());
        (g, terminals, descriptor)
    } else {
        let n = rng.random_range(params.sizes.0..=params.sizes.1);
        let delta = rng.random_range(params.degrees.0..=params.degrees.1).min(n - 1);
        let g = gen_min_degree(n, delta, rng.random())?;
        let terminals: Vec<usize> = index::sample(&mut rng, n, 9).into_vec();
        let descriptor = format!("min-degree host n = {n}, δ ≥ {delta}, terminals {terminals:?}");
        (g, terminals, descriptor)
    };
    let cfg = build_configuration(&g, &terminals)?;
    let tally = check_si_claims(&cfg);
    let graph6 = write_graph6(&g);
    let verdict = if !tally.violations.is_empty() {
        Verdict::Violation
    } else if tally.total_checks() == 0 {
        Verdict::Vacuous
    } else {
        Verdict::Pass
    };
    let counterexamples = tally
        .violations
        .iter()
        .map(|w| Counterexample {
            instance: index,
            graph6: graph6.clone(),
            certificate: Certificate::SiClaim {
                terminals: terminals.clone(),
                witness: w.clone(),
            },
        })
        .collect();
    let record = InstanceRecord {
        index,
        descriptor,
        graph6,
        verdict,
        checks: tally.checks.iter().map(|(c, &k)| (c.name().to_string(), k)).collect(),
        certificate: None,
        wall_ms: elapsed_ms(start, params.timing),
    };
    Ok((record, counterexamples))
}

/// Connectivity parameter of the pipeline: 30-massed pairs, 4-linked targets.
pub const PIPELINE_P: usize = 30;

/// Stage-by-stage evidence that the pipeline linked the pairs of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineCertificate {
    pub terminals: VertexSet,
    pub pairs: Vec<(usize, usize)>,
    /// The minimized pair, with `original[v]` the host label of vertex `v`.
    pub minimized_graph6: String,
    pub minimized_terminals: VertexSet,
    pub original: Vec<usize>,
    /// Center of the dense neighborhood, in minimized labels.
    pub center: usize,
    pub case: DenseCase,
    /// The certified subgraph, in minimized labels.
    pub witness: VertexSet,
    pub route: Route,
    /// Disjoint paths from `S` into the witness, in host labels.
    pub connectors: Vec<Vec<usize>>,
    /// The final linkage of the pairs, in host labels.
    pub linkage: Linkage,
}

/// Checks each stage of a pipeline certificate against the host `g`.
pub fn validate_pipeline(g: &Graph, cert: &PipelineCertificate) -> Result<()> {
    let bad = |m: &str| Err(Error::Inconsistent(format!("pipeline certificate: {m}")));
    if !is_p_massed(g, cert.terminals, PIPELINE_P)?.satisfied {
        return bad("the host pair is not massed");
    }
    let l = parse_graph6(&cert.minimized_graph6)?;
    if cert.original.len() != l.n() || cert.original.iter().any(|&v| v >= g.n()) {
        return bad("label map does not fit the graphs");
    }
    let image: VertexSet = cert.original.iter().collect();
    if image.len() != l.n() {
        return bad("label map is not injective");
    }
    let mapped_terminals: VertexSet = cert.minimized_terminals.iter().map(|v| cert.original[v]).collect();
    if mapped_terminals != cert.terminals {
        return bad("minimized terminals are not the host terminals");
    }
    // only edges inside the terminals may have been added
    for (x, y) in l.edges() {
        let both = cert.minimized_terminals.contains(x) && cert.minimized_terminals.contains(y);
        if !both && !g.has_edge(cert.original[x], cert.original[y]) {
            return bad("minimized graph has an edge the host lacks");
        }
    }
    if !is_p_massed(&l, cert.minimized_terminals, PIPELINE_P)?.satisfied {
        return bad("the minimized pair is not massed");
    }
    if cert.minimized_terminals.contains(cert.center) {
        return bad("the dense center is a terminal");
    }
    let closed = l.neighbors_closed(cert.center)?;
    let (h, _) = l.induced(closed)?;
    let case = dense_conditions(&h, PIPELINE_P).case;
    if case == DenseCase::None || case != cert.case {
        return bad("the center's neighborhood does not meet the recorded density condition");
    }
    if !cert.witness.is_subset(closed) {
        return bad("the witness leaves the dense neighborhood");
    }
    let need = Target::Linked4.terminals();
    let (w_graph, _) = l.induced(cert.witness)?;
    let certified = match cert.route {
        Route::Clique => cert.witness.len() >= need && l.is_clique(cert.witness),
        Route::CommonNeighbors => crate::certify::common_neighbor_certificate(&w_graph, 4, false)?.holds,
        Route::Sampled => false,
    };
    if !certified {
        return bad("the witness carries no 4-linkage certificate");
    }
    let targets: VertexSet = cert.witness.iter().map(|v| cert.original[v]).collect();
    let mut seen = VertexSet::EMPTY;
    for path in &cert.connectors {
        let set: VertexSet = path.iter().collect();
        let ok = set.len() == path.len()
            && cert.terminals.contains(path[0])
            && targets.contains(*path.last().expect("nonempty"))
            && path.windows(2).all(|e| g.has_edge(e[0], e[1]))
            && set.is_disjoint(seen);
        if !ok {
            return bad("connectors are not disjoint paths from S into the witness");
        }
        seen |= set;
    }
    if cert.connectors.len() != cert.terminals.len() {
        return bad("not every terminal has a connector");
    }
    let covered: VertexSet = cert.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    if covered != cert.terminals || cert.pairs.len() * 2 != cert.terminals.len() {
        return bad("pairs do not partition the terminals");
    }
    cert.linkage.validate(g, &cert.pairs, VertexSet::EMPTY)
}

fn stage_failed(stage: &str, reason: impl Into<String>) -> (Verdict, Option<PipelineCertificate>) {
    (
        Verdict::StageFailed {
            stage: stage.to_string(),
            reason: reason.into(),
        },
        None,
    )
}

/// Runs every stage on `(g, S)` with the given pairing of `S`: massed check,
/// relaxed minimization, dense neighborhood, certified 4-linked subgraph,
/// connectors from `S` into it, and greedy linking of the connector ends in
/// what is left of `g`.
pub fn pipeline_instance(
    g: &Graph,
    pairs: &[(usize, usize)],
    samples: usize,
    seed: u64,
) -> Result<(Verdict, Option<PipelineCertificate>)> {
    let s: VertexSet = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    TerminalSpec::pairs(pairs, VertexSet::EMPTY)?.check_against(g)?;
    if s.len() != 8 {
        return Err(Error::input("the pipeline links exactly four pairs"));
    }
    let massed = is_p_massed(g, s, PIPELINE_P)?;
    if !massed.satisfied {
        let reason = if massed.density_holds {
            format!("separation {:?} is too dense on its far side", massed.violating_separation)
        } else {
            format!("ρ(V − S) = {} is at most {}/2", massed.rho_value, massed.threshold.num)
        };
        return Ok(stage_failed("massed", reason));
    }
    let options = MinimizeOptions {
        allow_knitted: true,
        ..MinimizeOptions::default()
    };
    let min = minimize_pair(g, s, PIPELINE_P, s.len(), &options)?;
    let l = &min.graph;
    let Some(dense) = find_dense_neighborhood(l, min.terminals, PIPELINE_P)? else {
        return Ok(stage_failed("dense-neighborhood", "no vertex outside S has a dense closed neighborhood"));
    };
    let center = dense.vertex.expect("found neighborhoods name their center");
    let closed = l.neighbors_closed(center)?;
    let (h, h_map) = l.induced(closed)?;
    let verdict = knitted1_check(&h, PIPELINE_P, samples, seed)?;
    let (Knitted1Status::Certified, Some(route), Some(local)) = (verdict.status, verdict.route, verdict.witness) else {
        return Ok(stage_failed("knitted1", format!("status {:?}", verdict.status)));
    };
    let witness: VertexSet = local.iter().map(|v| h_map[v]).collect();
    let targets: VertexSet = witness.iter().map(|v| min.original[v]).collect();

    let connectors = disjoint_paths_between_sets(g, s, targets, g.vertices(), s.len());
    if connectors.len() < s.len() {
        return Ok(stage_failed("connectors", format!("only {} disjoint S-witness paths", connectors.len())));
    }
    // the connector interiors and starts are used up; their ends remain
    let mut used = VertexSet::EMPTY;
    let mut end_of = [usize::MAX; 64];
    for path in &connectors {
        let last = *path.last().expect("nonempty");
        used |= path[..path.len() - 1].iter().collect::<VertexSet>();
        end_of[path[0]] = last;
    }
    let remaining = g.vertices() - used;
    let (rest, rest_map) = g.induced(remaining)?;
    let mut local_of = [usize::MAX; 64];
    for (i, &v) in rest_map.iter().enumerate() {
        local_of[v] = i;
    }
    let end_pairs: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (local_of[end_of[a]], local_of[end_of[b]])).collect();
    let spec = TerminalSpec::pairs(&end_pairs, VertexSet::EMPTY)?;
    let outcome = greedy_link(&rest, &spec, false)?;
    let Some(inner) = outcome.linkage else {
        return Ok(stage_failed("link", format!("greedy linking failed at {:?}", outcome.failed_pair)));
    };
    let connector_of = |t: usize| connectors.iter().find(|p| p[0] == t).expect("every terminal has a connector");
    let paths = pairs
        .iter()
        .zip(&inner.paths)
        .map(|(&(a, b), mid)| {
            let mut path = connector_of(a).clone();
            path.pop();
            let mut mid: Vec<usize> = mid.iter().map(|&v| rest_map[v]).collect();
            if mid[0] != end_of[a] {
                mid.reverse();
            }
            path.extend(mid);
            let mut tail = connector_of(b).clone();
            tail.pop();
            path.extend(tail.iter().rev());
            path
        })
        .collect();
    let cert = PipelineCertificate {
        terminals: s,
        pairs: pairs.to_vec(),
        minimized_graph6: write_graph6(l),
        minimized_terminals: min.terminals,
        original: min.original.clone(),
        center,
        case: dense.case,
        witness,
        route,
        connectors,
        linkage: Linkage { paths },
    };
    validate_pipeline(g, &cert)?;
    Ok((Verdict::Pass, Some(cert)))
}

/// Parameters of the pipeline replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineCampaign {
    pub samples: usize,
    pub seed: u64,
    /// Terminal systems sampled inside each certified subgraph.
    pub spot_checks: usize,
    pub timing: bool,
}

impl Default for PipelineCampaign {
    fn default() -> Self {
        PipelineCampaign {
            samples: 2,
            seed: 0,
            spot_checks: 20,
            timing: true,
        }
    }
}

/// The pipeline host for instance `index`: `K_32`, then `K_33` minus a
/// 16-edge matching, then complete graphs on 32 to 34 vertices minus a
/// random matching, with a random pairing of eight random terminals.
pub fn pipeline_fixture(seed: u64, index: usize) -> (Graph, Vec<(usize, usize)>, String) {
    let fixed = [(0, 1), (2, 3), (4, 5), (6, 7)].to_vec();
    match index {
        0 => (named::complete(32), fixed, "K_32".into()),
        1 => (named::complete_minus_matching(33, 16), fixed, "K_33 minus a 16-edge matching".into()),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, index));
            let n = rng.random_range(32..=34);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let m = rng.random_range(0..=n / 2);
            let mut g = named::complete(n);
            for e in order[..2 * m].chunks(2) {
                g.remove_edge(e[0], e[1]);
            }
            order.shuffle(&mut rng);
            let pairs = order[..8].chunks(2).map(|c| (c[0], c[1])).collect();
            (g, pairs, format!("K_{n} minus a random {m}-edge matching"))
        }
    }
}

/// Runs [`pipeline_instance`] on [`pipeline_fixture`] hosts.
pub fn campaign_pipeline_4linked(params: &PipelineCampaign) -> Result<ExperimentReport> {
    let pool = thread_pool()?;
    let instances: Vec<InstanceRecord> = pool.install(|| {
        (0..params.samples)
            .into_par_iter()
            .map(|index| {
                let start = Instant::now();
                let (g, pairs, descriptor) = pipeline_fixture(params.seed, index);
                let (verdict, cert) =
                    pipeline_instance(&g, &pairs, params.spot_checks, instance_seed(params.seed, index))?;
                let mut checks = BTreeMap::new();
                if cert.is_some() {
                    checks.insert("stages".to_string(), 6);
                }
                Ok(InstanceRecord {
                    index,
                    descriptor: format!("{descriptor}, pairs {pairs:?}"),
                    graph6: write_graph6(&g),
                    verdict,
                    checks,
                    certificate: cert.map(|c| Certificate::Pipeline(Box::new(c))),
                    wall_ms: elapsed_ms(start, params.timing),
                })
            })
            .collect::<Result<_>>()
    })?;
    Ok(ExperimentReport::assemble(
        "pipeline-4linked",
        params.seed,
        json!({ "samples": params.samples, "spot_checks": params.spot_checks }),
        instances,
        Vec::new(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_campaign() {
        let params = SiCampaign {
            samples: 0,
            ..SiCampaign::default()
        };
        let report = campaign_lemma_si(&params).unwrap();
        assert!(report.instances.is_empty());
        report.revalidate().unwrap();
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let params = SiCampaign {
            samples: 6,
            seed: 3,
            timing: false,
            ..SiCampaign::default()
        };
        let a = campaign_lemma_si(&params).unwrap().to_json().unwrap();
        let b = campaign_lemma_si(&params).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        ExperimentReport::from_json(&a).unwrap();
    }

    #[test]
    fn sparse_host_fails_at_massed_stage() {
        let g = named::complete_minus_matching(20, 10);
        let (verdict, cert) = pipeline_instance(&g, &[(0, 2), (1, 3), (4, 6), (5, 7)], 5, 0).unwrap();
        assert!(cert.is_none());
        assert!(matches!(verdict, Verdict::StageFailed { ref stage, .. } if stage == "massed"));
    }
}
