//! Seeded random graphs with guaranteed minimum degree.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn check_params(n: usize, delta: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::input(format!("n = {n} must lie in 1..={MAX_VERTICES}")));
    }
    if delta >= n {
        return Err(Error::input(format!("minimum degree {delta} needs more than {n} vertices")));
    }
    Ok(())
}

/// Random graph with `δ ≥ delta`: a binomial graph of expected degree
/// `delta`, then random edges at deficient vertices (preferring deficient
/// partners) until none is left. Deterministic per seed.
pub fn gen_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    check_params(n, delta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(min_degree_with(n, delta, &mut rng))
}

pub(crate) fn min_degree_with(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("checked range");
    if n > 1 {
        let q = delta as f64 / (n - 1) as f64;
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(q) {
                    g.add_edge(u, v);
                }
            }
        }
    }
    augment_to_min_degree(&mut g, delta, rng);
    g
}

/// Adds random edges until every vertex has degree at least `delta`.
pub(crate) fn augment_to_min_degree(g: &mut Graph, delta: usize, rng: &mut ChaCha8Rng) {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    for &v in &order {
        while g.degree(v) < delta {
            let free = g.vertices() - g.neighbors(v).with(v);
            let deficient: VertexSet = free.iter().filter(|&w| g.degree(w) < delta).collect();
            let pool = if deficient.is_empty() { free } else { deficient };
            let w = *pool.to_vec().choose(rng).expect("delta < n leaves a non-neighbor");
            g.add_edge(v, w);
        }
    }
}

/// Random graph whose vertex `z = 0` is adjacent to every other vertex, with
/// `δ ≥ delta`.
pub fn gen_universal_vertex(n: usize, delta: usize, seed: u64) -> Result<(Graph, usize)> {
    check_params(n, delta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((universal_with(n, delta, &mut rng), 0))
}

fn universal_with(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n).expect("checked range");
    if n > 1 {
        let rest = min_degree_with(n - 1, delta.saturating_sub(1), rng);
        for (u, v) in rest.edges() {
            g.add_edge(u + 1, v + 1);
        }
        for v in 1..n {
            g.add_edge(0, v);
        }
    }
    g
}

/// Universal-vertex graph on `n ≤ p − 2` vertices with `δ ≥ ⌊p/2⌋` in which
/// at most two vertices have degree exactly `⌊p/2⌋`, and those are
/// nonadjacent: the shape of the second density condition.
pub fn gen_dense_neighborhood(n: usize, p: usize, seed: u64) -> Result<(Graph, usize)> {
    let half = p / 2;
    check_params(n, half)?;
    if n + 2 > p {
        return Err(Error::input(format!("n = {n} exceeds p − 2 = {}", p as i64 - 2)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = universal_with(n, half, &mut rng);
    loop {
        let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) == half).collect();
        let low_set: VertexSet = low.iter().collect();
        let fix = if low.len() > 2 {
            low[2..].to_vec()
        } else if !g.is_independent(low_set) {
            vec![low[1]]
        } else {
            break;
        };
        let v = fix[rng.random_range(0..fix.len())];
        let free = g.vertices() - g.neighbors(v).with(v);
        let low_free = free & low_set;
        let pool = if low_free.is_empty() { free } else { low_free };
        let w = *pool.to_vec().choose(&mut rng).expect("degree ⌊p/2⌋ < n − 1 leaves a non-neighbor");
        g.add_edge(v, w);
    }
    Ok((g, 0))
}

/// A host made of two dense sides joined only through the blocks of three
/// other pairs, with nine terminals `[u_0, u_1, v_1, …, u_4, v_4]`. One pair
/// has an end on each side, so it is the natural candidate for a
/// disconnected block whose components stay apart. `dense` makes the sides
/// large and nearly complete and the other blocks short, so the minimum
/// degree can exceed the number of vertices between the sides.
pub fn gen_separated_host(seed: u64, dense: bool) -> Result<(Graph, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut next = 0;
    let mut fresh = |k: usize| {
        let out: Vec<usize> = (next..next + k).collect();
        next += k;
        out
    };
    let u0 = fresh(1)[0];
    let mut middle = vec![u0];
    // interior path vertices may see only one side
    let mut only_side = vec![None];
    let mut pairs = Vec::new();
    for _ in 0..3 {
        let interior = rng.random_range(0..=if dense { 1 } else { 2 });
        let path = fresh(interior + 2);
        edges.extend(path.windows(2).map(|e| (e[0], e[1])));
        pairs.push((path[0], path[interior + 1]));
        for k in 0..path.len() {
            let inner = k > 0 && k + 1 < path.len();
            only_side.push((inner && rng.random_bool(0.5)).then(|| rng.random_range(0..2)));
        }
        middle.extend(path);
    }
    let sizes = if dense { 9..=13 } else { 3..=7 };
    let side_a = fresh(rng.random_range(sizes.clone()));
    let side_b = fresh(rng.random_range(sizes));
    let n = next;
    let (inside, cross) = if dense {
        (rng.random_range(0.8..0.97), rng.random_range(0.5..0.9))
    } else {
        (rng.random_range(0.5..0.95), rng.random_range(0.15..0.6))
    };
    let sparse = rng.random_range(0.0..0.3);
    for (which, side) in [&side_a, &side_b].into_iter().enumerate() {
        for (k, &x) in side.iter().enumerate() {
            for &y in &side[k + 1..] {
                if rng.random_bool(inside) {
                    edges.push((x, y));
                }
            }
            for (&m, &only) in middle.iter().zip(&only_side) {
                if only.is_none_or(|o| o == which) && rng.random_bool(cross) {
                    edges.push((x, m));
                }
            }
        }
    }
    for (k, &x) in middle.iter().enumerate() {
        for &y in &middle[k + 1..] {
            if rng.random_bool(sparse) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    pairs.insert(rng.random_range(0..=3), (side_a[0], side_b[0]));
    let mut terminals = vec![u0];
    terminals.extend(pairs.iter().flat_map(|&(a, b)| [a, b]));
    Ok((g, terminals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{dense_conditions, DenseCase};
    use crate::graph::named::complete;
    use crate::harness::write_graph6;

    #[test]
    fn minimum_degree_holds() {
        for seed in 0..20 {
            let g = gen_min_degree(16, 10, seed).unwrap();
            assert!(g.min_degree().unwrap() >= 10);
        }
        assert_eq!(gen_min_degree(5, 4, 7).unwrap(), complete(5));
        assert!(gen_min_degree(5, 5, 0).is_err());
        assert!(gen_min_degree(65, 3, 0).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        let a = write_graph6(&gen_min_degree(20, 12, 42).unwrap());
        let b = write_graph6(&gen_min_degree(20, 12, 42).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, write_graph6(&gen_min_degree(20, 12, 43).unwrap()));
        let (u1, _) = gen_universal_vertex(16, 10, 5).unwrap();
        let (u2, _) = gen_universal_vertex(16, 10, 5).unwrap();
        assert_eq!(write_graph6(&u1), write_graph6(&u2));
    }

    #[test]
    fn universal_vertex_is_universal() {
        for seed in 0..10 {
            let (g, z) = gen_universal_vertex(16, 10, seed).unwrap();
            assert_eq!(g.degree(z), 15);
            assert!(g.min_degree().unwrap() >= 10);
        }
        assert_eq!(gen_universal_vertex(5, 4, 1).unwrap().0, complete(5));
        assert_eq!(gen_universal_vertex(1, 0, 1).unwrap().0, complete(1));
    }

    #[test]
    fn dense_shape() {
        for seed in 0..30 {
            let (g, z) = gen_dense_neighborhood(16, 18, seed).unwrap();
            assert_eq!(g.degree(z), 15);
            let report = dense_conditions(&g, 18);
            assert!(matches!(report.case, DenseCase::I | DenseCase::Ii), "{report:?}");
        }
        assert!(gen_dense_neighborhood(17, 18, 0).is_err());
    }

    #[test]
    fn separated_hosts_split_one_pair() {
        for seed in 0..20 {
            let (g, t) = gen_separated_host(seed, seed % 2 == 0).unwrap();
            assert_eq!(t.len(), 9);
            assert_eq!(t.iter().collect::<VertexSet>().len(), 9);
            // the split pair uses the two largest terminal labels
            let mut sorted = t.clone();
            sorted.sort_unstable();
            let (x, y) = (sorted[7], sorted[8]);
            assert!((1..5).any(|i| (t[2 * i - 1], t[2 * i]) == (x, y)));
            assert!(!g.has_edge(x, y));
        }
    }
}
