use serde::{Deserialize, Serialize};

use super::chromatic_number;
use crate::error::Result;
use crate::graph::{enumerate_minors, independence_number, Graph, MinorWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalVerdict {
    pub critical: bool,
    pub chromatic_number: usize,
    /// A proper minor needing `k` colors, when one exists.
    pub failing_minor: Option<MinorWitness>,
    pub minors_checked: usize,
}

/// Whether `χ(g) = k` and every proper minor is `(k − 1)`-colorable, by full
/// minor enumeration.
pub fn is_contraction_critical(g: &Graph, k: usize) -> Result<CriticalVerdict> {
    let (chi, _) = chromatic_number(g);
    let mut verdict = CriticalVerdict {
        critical: false,
        chromatic_number: chi,
        failing_minor: None,
        minors_checked: 0,
    };
    let stream = enumerate_minors(g, g.n())?;
    if chi != k {
        return Ok(verdict);
    }
    // the stream yields each isomorphism class once, so every chromatic
    // evaluation is for a new class
    for (minor, witness) in stream {
        verdict.minors_checked += 1;
        if minor.n() >= k && chromatic_number(&minor).0 >= k {
            verdict.failing_minor = Some(witness);
            return Ok(verdict);
        }
    }
    verdict.critical = true;
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiracViolation {
    pub vertex: usize,
    /// `α(g[N(u)])`.
    pub alpha: usize,
    /// `d(u) − k + 2`.
    pub bound: i64,
}

/// Vertices with `α(g[N(u)]) > d(u) − k + 2`.
pub fn dirac_neighborhood_check(g: &Graph, k: usize) -> Vec<DiracViolation> {
    g.vertices()
        .iter()
        .filter_map(|u| {
            let (nbhd, _) = g.induced(g.neighbors(u)).expect("neighborhood is in range");
            let alpha = independence_number(&nbhd);
            let bound = g.degree(u) as i64 - k as i64 + 2;
            (alpha as i64 > bound).then_some(DiracViolation { vertex: u, alpha, bound })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::VertexSet;

    #[test]
    fn complete_graphs_are_critical() {
        for k in 1..=5 {
            let v = is_contraction_critical(&complete(k), k).unwrap();
            assert!(v.critical, "K_{k}");
            assert!(dirac_neighborhood_check(&complete(k), k).is_empty());
        }
    }

    #[test]
    fn five_cycle_has_triangle_minor() {
        let g = cycle(5);
        let v = is_contraction_critical(&g, 3).unwrap();
        assert!(!v.critical);
        let w = v.failing_minor.unwrap();
        w.validate(&g).unwrap();
        assert_eq!(w.minor().unwrap(), complete(3));
        assert_eq!(dirac_neighborhood_check(&g, 3).len(), 5);
    }

    #[test]
    fn stated_triangle_model_in_five_cycle() {
        let w = MinorWitness {
            branch_sets: vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([2, 3]), VertexSet::singleton(4)],
            model_edges: vec![(0, 1), (0, 2), (1, 2)],
        };
        w.validate(&cycle(5)).unwrap();
    }

    #[test]
    fn wrong_chromatic_number_is_not_critical() {
        assert!(!is_contraction_critical(&complete(4), 3).unwrap().critical);
        assert!(!is_contraction_critical(&cycle(6), 3).unwrap().critical);
    }

    #[test]
    fn petersen_neighborhoods_are_independent() {
        let v = dirac_neighborhood_check(&petersen(), 3);
        assert_eq!(v.len(), 10);
        assert!(v.iter().all(|x| x.alpha == 3 && x.bound == 2));
    }
}
