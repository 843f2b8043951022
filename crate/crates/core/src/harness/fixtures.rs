//! Randomized two-sided instances for the recombination engine.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{
    build_recombination_plan, chromatic_number, contracted_graph, normalize_second_coloring, Coloring, Gluing,
    RecombinationPlan,
};
use crate::error::{Error, Result};
use crate::graph::{independence_number, Graph, VertexSet};

/// Vertices outside `S = U ∪ W` that are not independent: `t = 4`.
pub const FIXTURE_T: usize = 4;

/// A gluing along `S = U ∪ W` with `α(G[S]) = |S| − 4`, a maximal first-side
/// coloring and a normalized second-side coloring ready for recombination.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecombinationFixture {
    pub gluing: Gluing,
    pub u: VertexSet,
    pub plan: RecombinationPlan,
    pub phi2prime: Coloring,
    /// Swaps applied to reach a maximal first-side coloring.
    pub swaps: usize,
    /// Whole-instance resamples.
    pub resamples: usize,
}

/// Draws a fixture: `U` independent and complete to a four-vertex `W` with
/// `α(G[W]) ≤ |U|`, palette `r = |S| + 5 + extra`, leaving at least 7 colors beyond those on `S`, a first-side coloring
/// made maximal by applying reported swaps, and a second side colored
/// through the contracted graph.
pub fn recombination_fixture(seed: u64) -> Result<RecombinationFixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for resamples in 0..1000 {
        if let Some(mut fixture) = attempt(&mut rng)? {
            fixture.resamples = resamples;
            return Ok(fixture);
        }
    }
    Err(Error::Resource(format!("no fixture for seed {seed} after 1000 draws")))
}

fn attempt(rng: &mut ChaCha8Rng) -> Result<Option<RecombinationFixture>> {
    let nu = rng.random_range(2..=3);
    let ns = nu + FIXTURE_T;
    let na = rng.random_range(4..=7);
    let nb = rng.random_range(3..=6);
    let n = ns + na + nb;
    let r = ns + 5 + rng.random_range(0..=2);
    let u = VertexSet::full(nu);
    let w = VertexSet::full(ns) - u;
    let side1 = VertexSet::full(ns + na);
    let side2 = VertexSet::full(n) - (side1 - VertexSet::full(ns));
    let mut g = Graph::empty(n)?;

    // G[W] with a non-edge and α ≤ |U|
    loop {
        for (x, y) in pairs(w) {
            g.remove_edge(x, y);
            if rng.random_bool(0.5) {
                g.add_edge(x, y);
            }
        }
        let (gw, _) = g.induced(w)?;
        if !g.is_clique(w) && independence_number(&gw) <= nu {
            break;
        }
    }
    for x in u {
        for y in w {
            g.add_edge(x, y);
        }
    }

    // first side: color W by merging along a random non-edge, then only join
    // differently colored vertices
    let mut palette: Vec<usize> = (0..r).collect();
    palette.shuffle(rng);
    let mut colors = vec![0; n];
    let wv = w.to_vec();
    let non_edges: Vec<(usize, usize)> = pairs(w).filter(|&(x, y)| !g.has_edge(x, y)).collect();
    let (mx, my) = non_edges[rng.random_range(0..non_edges.len())];
    let mut next = 0;
    for &x in &wv {
        if x == my {
            colors[x] = colors[mx];
        } else {
            colors[x] = palette[next];
            next += 1;
        }
    }
    let u_color = palette[next];
    for x in u {
        colors[x] = u_color;
    }
    for x in side1 - VertexSet::full(ns) {
        colors[x] = rng.random_range(0..r);
    }
    for x in side1 - VertexSet::full(ns) {
        for y in side1.iter().filter(|&y| y != x) {
            if colors[x] != colors[y] && rng.random_bool(0.45) {
                g.add_edge(x, y);
            }
        }
    }

    // second side: any edges at the private vertices
    for x in side2 - side1 {
        for y in side2.iter().filter(|&y| y != x) {
            if rng.random_bool(0.45) {
                g.add_edge(x, y);
            }
        }
    }
    let gluing = Gluing::new(g, side1, side2)?;

    let mut phi1 = Coloring::new(colors, r);
    let mut swaps = 0;
    let plan = loop {
        match build_recombination_plan(&gluing, u, &phi1) {
            Ok(plan) => break plan,
            Err(Error::SwapOpportunity(op)) => {
                phi1 = op.apply();
                swaps += 1;
            }
            Err(Error::Precondition { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    };

    let (h, owner) = contracted_graph(&gluing, &plan)?;
    let Some(block_colors) = color_with(&h, r, rng) else {
        return Ok(None);
    };
    let phi2 = Coloring::new(owner.iter().map(|&b| block_colors[b]).collect(), r);
    let phi2prime = normalize_second_coloring(&gluing, &plan, &phi2)?;
    Ok(Some(RecombinationFixture {
        gluing,
        u,
        plan,
        phi2prime,
        swaps,
        resamples: 0,
    }))
}

fn pairs(s: VertexSet) -> impl Iterator<Item = (usize, usize)> {
    s.iter().flat_map(move |x| (s - VertexSet::full(x + 1)).iter().map(move |y| (x, y)))
}

/// A proper coloring with at most `r` colors: randomized greedy a few
/// times, then the exact optimum.
fn color_with(h: &Graph, r: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..h.n()).collect();
    for _ in 0..8 {
        order.shuffle(rng);
        let mut colors = vec![usize::MAX; h.n()];
        let mut ok = true;
        for &v in &order {
            let mut free: Vec<usize> = (0..r).filter(|&c| h.neighbors(v).iter().all(|w| colors[w] != c)).collect();
            if free.is_empty() {
                ok = false;
                break;
            }
            free.shuffle(rng);
            colors[v] = free[0];
        }
        if ok {
            return Some(colors);
        }
    }
    let (chi, coloring) = chromatic_number(h);
    (chi <= r).then_some(coloring.colors)
}
