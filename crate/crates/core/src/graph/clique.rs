use super::{Graph, VertexSet};

/// A maximum clique, found by branch and bound with a greedy-coloring bound
/// (each color class of the candidate set contributes at most one vertex).
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// A maximum independent set; a clique cover of `g` bounds the search.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

/// `α(g)`.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

fn expand(g: &Graph, clique: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
    let (order, colors) = greedy_color(g, candidates);
    let mut candidates = candidates;
    for idx in (0..order.len()).rev() {
        if clique.len() + colors[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        let next = clique.with(v);
        let sub = candidates & g.neighbors(v);
        if sub.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, sub, best);
        }
        candidates.remove(v);
    }
}

/// Sequential greedy coloring of `p`; returns vertices in nondecreasing color
/// order alongside their (1-based) color numbers.
fn greedy_color(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut colors = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored;
        while let Some(v) = avail.first() {
            avail -= g.neighbors(v).with(v);
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&complete(7)), 1);
        assert_eq!(independence_number(&edgeless(6)), 6);
        assert_eq!(independence_number(&cycle(5)), 2);
        let p = petersen();
        assert_eq!(brute_alpha(&p), 4);
        assert_eq!(independence_number(&p), 4);
        assert_eq!(independence_number(&edgeless(0)), 0);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique(&complete(9)).len(), 9);
        let c = max_clique(&cycle(5));
        assert_eq!(c.len(), 2);
        assert!(cycle(5).is_clique(c));
        let g = complete_minus_matching(8, 4);
        assert_eq!(brute_alpha(&g.complement()), 4);
        let k = max_clique(&g);
        assert_eq!(k.len(), 4);
        assert!(g.is_clique(k));
    }
}
