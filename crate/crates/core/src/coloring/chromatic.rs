use super::Coloring;
use crate::graph::{max_clique, Graph, VertexSet};

/// Exact chromatic number with an optimal coloring: DSATUR branch and bound,
/// seeded by a greedy DSATUR coloring and cut off at the clique number.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::new(Vec::new(), 0));
    }
    let clique = max_clique(g);
    let lower = clique.len();
    let greedy = dsatur_greedy(g);
    let mut best_k = greedy.iter().max().map_or(0, |&c| c + 1);
    let mut best = greedy;
    if best_k > lower {
        let mut search = Search {
            g,
            colors: vec![usize::MAX; n],
            lower,
            best_k,
            best: None,
        };
        // color the clique first; it is forced up to symmetry
        let mut used = 0;
        for v in clique {
            search.colors[v] = used;
            used += 1;
        }
        search.branch(n - lower, used);
        if let Some(found) = search.best {
            best = found;
            best_k = search.best_k;
        }
    }
    (best_k, Coloring::new(best, best_k))
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut uncolored = g.vertices();
    while let Some(v) = pick(g, &colors, uncolored) {
        let taken: u64 = g.neighbors(v).iter().filter(|&w| colors[w] != usize::MAX).fold(0, |acc, w| acc | 1 << colors[w]);
        colors[v] = (!taken).trailing_zeros() as usize;
        uncolored.remove(v);
    }
    colors
}

/// Uncolored vertex of maximum saturation, then maximum uncolored degree,
/// then smallest label.
fn pick(g: &Graph, colors: &[usize], uncolored: VertexSet) -> Option<usize> {
    uncolored.iter().max_by_key(|&v| {
        let sat = g.neighbors(v).iter().filter(|&w| colors[w] != usize::MAX).fold(0u64, |acc, w| acc | 1 << colors[w]);
        (sat.count_ones(), g.degree_in(v, uncolored), std::cmp::Reverse(v))
    })
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    lower: usize,
    best_k: usize,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    /// Returns true once a coloring with `lower` colors is found.
    fn branch(&mut self, remaining: usize, used: usize) -> bool {
        if remaining == 0 {
            if used < self.best_k {
                self.best_k = used;
                self.best = Some(self.colors.clone());
            }
            return self.best_k == self.lower;
        }
        let uncolored: VertexSet = (0..self.g.n()).filter(|&v| self.colors[v] == usize::MAX).collect();
        let v = pick(self.g, &self.colors, uncolored).expect("uncolored vertex remains");
        let taken: u64 = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&w| self.colors[w] != usize::MAX)
            .fold(0, |acc, w| acc | 1 << self.colors[w]);
        // a fresh color only helps if it stays below the incumbent
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if taken >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.branch(remaining - 1, used.max(c + 1)) {
                return true;
            }
            if used.max(c + 1) >= self.best_k {
                break;
            }
        }
        self.colors[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn standard_values() {
        for n in 1..=9 {
            let (k, c) = chromatic_number(&complete(n));
            assert_eq!(k, n);
            assert!(c.is_proper(&complete(n)));
        }
        assert_eq!(chromatic_number(&cycle(5)).0, 3);
        assert_eq!(chromatic_number(&cycle(6)).0, 2);
        let (k, c) = chromatic_number(&petersen());
        assert_eq!(k, 3);
        assert!(c.is_proper(&petersen()));
        assert_eq!(chromatic_number(&edgeless(4)).0, 1);
        assert_eq!(chromatic_number(&edgeless(0)).0, 0);
    }

    #[test]
    fn petersen_is_not_bipartite_by_exhaustion() {
        let g = petersen();
        let two_colorable = (0u32..1 << 10).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)));
        assert!(!two_colorable);
    }

    #[test]
    fn needs_branching_beyond_clique() {
        // Grötzsch-like: odd wheel W_5 has clique 3, chromatic 4
        let w5 = with_universal_vertex(&cycle(5));
        assert_eq!(chromatic_number(&w5).0, 4);
    }
}
