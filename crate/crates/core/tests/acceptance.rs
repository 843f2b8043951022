//! Acceptance suite: one pass/fail line per criterion. Runs without the
//! libtest harness so the lines always reach the output.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use knitweave::certify::{
    common_neighbor_certificate, easy_connectivity_threshold, greedy_link, knitted1_check, main_theorem_table,
    mader_threshold, Knitted1Status,
};
use knitweave::coloring::{is_contraction_critical, recombine};
use knitweave::graph::named::{complete, cycle};
use knitweave::harness::{
    campaign_lemma_si, campaign_pipeline_4linked, gen_dense_neighborhood, gen_min_degree, parse_graph6,
    recombination_fixture, write_graph6, Certificate, ExperimentReport, PipelineCampaign, SiCampaign, Verdict,
    FIXTURE_T,
};
use knitweave::graph::independence_number;
use knitweave::solver::{disjoint_paths, is_profile_knitted, TerminalSpec};
use knitweave::{Graph, VertexSet};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("took {spent:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn k9_profile_knitted() -> Outcome {
    let start = Instant::now();
    let g = complete(9);
    let v = is_profile_knitted(&g, g.vertices(), &[2, 2, 2, 2, 1]).map_err(|e| e.to_string())?;
    within(Duration::from_secs(10), start)?;
    if !v.knitted {
        return Err(format!("counterexample partition {:?}", v.counterexample));
    }
    let (parts, knit) = v.example.ok_or("no example knit")?;
    knit.validate(&g, &TerminalSpec::new(parts, VertexSet::EMPTY).unwrap())
        .map_err(|e| e.to_string())?;
    Ok(format!("{} partitions, {:.2?}", v.partitions_checked, start.elapsed()))
}

fn threshold_pins() -> Outcome {
    let mut bad = Vec::new();
    for (t, want) in [(8, 18), (9, 34), (10, 66)] {
        let got = easy_connectivity_threshold(t).map_err(|e| e.to_string())?;
        if got != want {
            bad.push(format!("connectivity threshold t={t}: {got} != {want}"));
        }
        let via_general = mader_threshold(t - 1, t - 3).map_err(|e| e.to_string())?;
        if via_general != want {
            bad.push(format!("separator threshold ({}, {}): {via_general} != {want}", t - 1, t - 3));
        }
    }
    for (k, want) in [(17, 8), (28, 8), (29, 9), (40, 9), (41, 10), (90, 10)] {
        let got = main_theorem_table(k).map_err(|e| e.to_string())?;
        if got != want {
            bad.push(format!("table k={k}: {got} != {want}"));
        }
    }
    if bad.is_empty() {
        Ok("all pins exact".into())
    } else {
        Err(bad.join("; "))
    }
}

fn solver_matches_oracle(census: &[Vec<Graph>]) -> Outcome {
    let start = Instant::now();
    let (checked, disagreements): (usize, Vec<String>) = census
        .par_iter()
        .flat_map(|level| level.par_iter())
        .map(|g| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for [p, q] in common::two_pair_systems(g.n()) {
                let spec = TerminalSpec::pairs(&[p, q], VertexSet::EMPTY).unwrap();
                let found = disjoint_paths(g, &spec, None).unwrap();
                if let Some(l) = &found {
                    if let Err(e) = l.validate(g, &[p, q], VertexSet::EMPTY) {
                        bad.push(format!("{} {p:?} {q:?}: invalid linkage: {e}", write_graph6(g)));
                    }
                }
                if found.is_some() != common::naive_two_linked(g, p, q) {
                    bad.push(format!("{} {p:?} {q:?}", write_graph6(g)));
                }
                checked += 1;
            }
            (checked, bad)
        })
        .reduce(|| (0, Vec::new()), |mut a, b| {
            a.0 += b.0;
            a.1.extend(b.1);
            a
        });
    within(Duration::from_secs(600), start)?;
    if !disagreements.is_empty() {
        return Err(format!("{} disagreements, first {}", disagreements.len(), disagreements[0]));
    }
    let graphs: usize = census.iter().map(Vec::len).sum();
    Ok(format!("{graphs} graphs, {checked} systems, 0 disagreements, {:.1?}", start.elapsed()))
}

/// A clique on 11 to 14 vertices thinned by random edge deletions that keep
/// at least 7 common neighbors on every nonadjacent pair.
fn thinned_clique(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(11..=14);
    let mut g = complete(n);
    for _ in 0..3 * n {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u == v || !g.has_edge(u, v) {
            continue;
        }
        g.remove_edge(u, v);
        let ok = [u, v].iter().all(|&x| {
            g.vertices()
                .iter()
                .filter(|&y| y != x && !g.has_edge(x, y))
                .all(|y| (g.neighbors(x) & g.neighbors(y)).len() >= 7)
        });
        if !ok {
            g.add_edge(u, v);
        }
    }
    g
}

fn greedy_on_dense_fixtures() -> Outcome {
    let mut failures = Vec::new();
    let mut removed = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = thinned_clique(&mut rng);
        removed += g.n() * (g.n() - 1) / 2 - g.edge_count();
        if !common_neighbor_certificate(&g, 3, false).unwrap().holds {
            return Err(format!("fixture {seed} misses the common-neighbor bound"));
        }
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = order[..6].chunks(2).map(|c| (c[0], c[1])).collect();
        let spec = TerminalSpec::pairs(&pairs, VertexSet::EMPTY).unwrap();
        match greedy_link(&g, &spec, false) {
            Ok(out) if out.linkage.is_some() && out.schedule_met => {}
            Ok(out) => failures.push(format!("seed {seed}: failed at {:?}", out.failed_pair)),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(format!("500 instances, {removed} edges removed in total, 0 failures"))
    } else {
        Err(format!("{} failures, first {}", failures.len(), failures[0]))
    }
}

fn contraction_criticality() -> Outcome {
    let start = Instant::now();
    for k in 1..=5 {
        let v = is_contraction_critical(&complete(k), k).map_err(|e| e.to_string())?;
        if !v.critical {
            return Err(format!("K_{k} reported not {k}-critical"));
        }
    }
    let c5 = cycle(5);
    let v = is_contraction_critical(&c5, 3).map_err(|e| e.to_string())?;
    if v.critical {
        return Err("C_5 reported 3-critical".into());
    }
    let w = v.failing_minor.ok_or("no witness for C_5")?;
    w.validate(&c5).map_err(|e| e.to_string())?;
    let minor = w.minor().map_err(|e| e.to_string())?;
    if minor.n() != 3 || minor.edge_count() != 3 {
        return Err(format!("witness minor is not K_3: {}", write_graph6(&minor)));
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("K_1..K_5 critical, C_5 has a K_3 minor, {:.2?}", start.elapsed()))
}

fn recombination_engine() -> Outcome {
    let failures: Vec<String> = (0..500u64)
        .into_par_iter()
        .filter_map(|seed| {
            let f = match recombination_fixture(seed) {
                Ok(f) => f,
                Err(e) => return Some(format!("seed {seed}: fixture: {e}")),
            };
            let g = &f.gluing.graph;
            let s = f.gluing.separator();
            let (gs, _) = g.induced(s).unwrap();
            if independence_number(&gs) != s.len() - FIXTURE_T {
                return Some(format!("seed {seed}: separator independence number off"));
            }
            let spare = f.plan.palette_size - f.plan.p() - 1;
            if spare < (1 << (FIXTURE_T - 1)) - 1 {
                return Some(format!("seed {seed}: only {spare} spare colors"));
            }
            match recombine(&f.gluing, &f.plan, &f.phi2prime) {
                Ok(c) if !c.is_proper(g) => Some(format!("seed {seed}: improper result")),
                Ok(c) if c.palette_size != f.plan.palette_size || c.colors.iter().any(|&x| x >= c.palette_size) => {
                    Some(format!("seed {seed}: palette exceeded"))
                }
                Ok(c) if s.iter().any(|v| c.colors[v] != f.phi2prime.colors[v]) => {
                    Some(format!("seed {seed}: disagrees with the second coloring on S"))
                }
                Ok(_) => None,
                Err(e) => Some(format!("seed {seed}: {e}")),
            }
        })
        .collect();
    if failures.is_empty() {
        Ok("500 fixtures recombined properly".into())
    } else {
        Err(format!("{} failures, first {}", failures.len(), failures[0]))
    }
}

fn si_sweep() -> Outcome {
    let report = campaign_lemma_si(&SiCampaign {
        samples: 1000,
        timing: false,
        ..SiCampaign::default()
    })
    .map_err(|e| e.to_string())?;
    report.revalidate().map_err(|e| e.to_string())?;
    let s = &report.summary;
    let total: usize = s.checks.values().sum();
    if s.violations > 0 || s.stage_failures > 0 {
        return Err(format!("{} violations, {} stage failures", s.violations, s.stage_failures));
    }
    if s.passed == 0 || total == 0 {
        return Err("sweep was vacuous".into());
    }
    Ok(format!(
        "{} instances, {} non-vacuous, {total} claim checks over {} claims, 0 violations",
        s.instances,
        s.passed,
        s.checks.len()
    ))
}

fn exhaustively_knitted(h: &Graph) -> bool {
    let n = h.n();
    (0u64..1 << n)
        .into_par_iter()
        .filter(|m| m.count_ones() == 7)
        .all(|m| is_profile_knitted(h, VertexSet::from_bits(m), &[2, 2, 2, 1]).unwrap().knitted)
}

fn dense_neighborhoods_knitted() -> Outcome {
    let mut certified = 0;
    let mut sampled = 0;
    let mut escalated = 0;
    for seed in 0..100u64 {
        let (h, _) = gen_dense_neighborhood(16, 18, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        if h.min_degree() < Some(9) {
            return Err(format!("seed {seed}: minimum degree below 9"));
        }
        let v = knitted1_check(&h, 18, 50, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        match v.status {
            Knitted1Status::Certified => certified += 1,
            Knitted1Status::SampledPass => sampled += 1,
            Knitted1Status::NotFound => {
                escalated += 1;
                if !exhaustively_knitted(&h) {
                    return Err(format!("seed {seed}: {} is not (2,2,2,1)-knitted", write_graph6(&h)));
                }
            }
        }
    }
    Ok(format!("{certified} certified, {sampled} sampled-pass, {escalated} escalated"))
}

fn pipeline_replay() -> Outcome {
    let start = Instant::now();
    let report = campaign_pipeline_4linked(&PipelineCampaign {
        samples: 2,
        timing: false,
        ..PipelineCampaign::default()
    })
    .map_err(|e| e.to_string())?;
    report.revalidate().map_err(|e| e.to_string())?;
    ExperimentReport::from_json(&report.to_json().unwrap()).map_err(|e| e.to_string())?;
    for inst in &report.instances {
        if inst.verdict != Verdict::Pass || !matches!(inst.certificate, Some(Certificate::Pipeline(_))) {
            return Err(format!("instance {} ({}): {:?}", inst.index, inst.descriptor, inst.verdict));
        }
    }
    within(Duration::from_secs(1800), start)?;
    Ok(format!("K_32 and K_33 minus a matching certified, {:.1?}", start.elapsed()))
}

fn graph6_round_trips(census: &[Vec<Graph>]) -> Outcome {
    let mut count = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let random = (0..1000).map(|i| {
        let n = rng.random_range(1..=64);
        let delta = rng.random_range(0..n);
        gen_min_degree(n, delta, i).unwrap()
    });
    for g in census.iter().flatten().cloned().chain(random) {
        let text = write_graph6(&g);
        let back = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
        if back != g || write_graph6(&back) != text {
            return Err(format!("{text} does not round-trip"));
        }
        count += 1;
    }
    Ok(format!("{count} graphs bit-exact"))
}

fn main() -> ExitCode {
    let census = common::census(7);
    let sizes: Vec<usize> = census.iter().map(Vec::len).collect();
    let census_ok = sizes == common::CENSUS_COUNTS;
    let criteria: Vec<Criterion> = vec![
        ("K_9 is (2,2,2,2,1)-knitted", Box::new(k9_profile_knitted)),
        ("threshold pins", Box::new(threshold_pins)),
        ("solver agrees with path-enumeration oracle on n <= 7", Box::new(|| {
            if !census_ok {
                return Err(format!("census sizes {sizes:?}"));
            }
            solver_matches_oracle(&census)
        })),
        ("greedy linking on common-neighbor-dense fixtures", Box::new(greedy_on_dense_fixtures)),
        ("contraction-criticality of K_k and C_5", Box::new(contraction_criticality)),
        ("recombination engine", Box::new(recombination_engine)),
        ("s_i claim sweep", Box::new(si_sweep)),
        ("dense neighborhoods are (2,2,2,1)-knitted", Box::new(dense_neighborhoods_knitted)),
        ("4-linkage pipeline replay", Box::new(pipeline_replay)),
        ("graph6 round trip", Box::new(|| graph6_round_trips(&census))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
