//! Exact canonical labeling by individualization and refinement.
//!
//! The search tree is explored in full except for branches that differ by a
//! transposition of twin vertices (an automorphism), so two graphs receive the
//! same [`CanonicalForm`] exactly when they are isomorphic.

use super::{Graph, VertexSet};

/// Adjacency rows of a graph under its canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
            .expect("canonical rows are a valid graph")
    }
}

/// Canonical form together with the relabeling `v -> perm[v]` that produces it.
pub fn canonical_form(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (CanonicalForm { n: 0, rows: Vec::new() }, Vec::new());
    }
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (rows, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    (CanonicalForm { n, rows }, perm)
}

fn search(g: &Graph, cells: Vec<VertexSet>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.first().expect("nonempty cell")).collect();
        let rows = leaf_rows(g, &order);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(VertexSet::singleton(v));
        next.push(cell.without(v));
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

#[inline]
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << pos[w]))
        .collect()
}

/// Equitable refinement of an ordered partition. Each cell is split by the
/// vector of neighbor counts into every cell; sub-cells are ordered by that
/// vector, which keeps the result independent of vertex labels.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|v| {
                    let row = g.neighbors(v);
                    (cells.iter().map(|&c| (row & c).len()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if !next.is_empty() && keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0) {
                changed = true;
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    fn random_perm(n: usize, seed: u64) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        perm
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [petersen(), cycle(9), complete(7), path(6), complete_bipartite(3, 4)] {
            let (base, _) = canonical_form(&g);
            for seed in 0..5 {
                let h = g.permuted(&random_perm(g.n(), seed));
                assert_eq!(canonical_form(&h).0, base);
            }
        }
    }

    #[test]
    fn relabeling_reproduces_representative() {
        let g = petersen();
        let (form, perm) = canonical_form(&g);
        assert_eq!(g.permuted(&perm), form.to_graph());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // two 3-regular graphs on 6 vertices: prism and K_{3,3}
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_ne!(canonical_form(&prism).0, canonical_form(&complete_bipartite(3, 3)).0);
        assert_ne!(canonical_form(&cycle(6)).0, canonical_form(&complete(3).disjoint_union(&complete(3)).unwrap()).0);
    }
}
