use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Separation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{knit_unchecked, partitions_up_to_pairs, spec_of};

/// Which partitions of a terminal set must admit a knit for the pair to count
/// as knitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum KnitConvention {
    /// Every partition into parts of one or two vertices.
    #[default]
    EveryPartition,
    /// One given partition; parts are in original labels.
    Fixed(Vec<VertexSet>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnitVerdict {
    pub knitted: bool,
    pub partitions_checked: usize,
    /// Least partition in enumeration order without a knit.
    pub counterexample: Option<Vec<VertexSet>>,
}

/// Whether `(l, s)` is knitted under `convention`.
pub fn is_knitted_pair(l: &Graph, s: VertexSet, convention: &KnitConvention) -> Result<KnitVerdict> {
    l.check_set(s)?;
    let partitions = match convention {
        KnitConvention::EveryPartition => partitions_up_to_pairs(s),
        KnitConvention::Fixed(parts) => {
            let cover = parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | p);
            let sizes: usize = parts.iter().map(|p| p.len()).sum();
            if cover != s || sizes != s.len() || parts.iter().any(|p| !(1..=2).contains(&p.len())) {
                return Err(Error::input("fixed partition must split the terminal set into parts of size 1 or 2"));
            }
            vec![parts.clone()]
        }
    };
    let bad = partitions
        .par_iter()
        .find_first(|parts| knit_unchecked(l, &spec_of(parts)).is_none());
    Ok(KnitVerdict {
        knitted: bad.is_none(),
        partitions_checked: partitions.len(),
        counterexample: bad.cloned(),
    })
}

/// Whether the separation is rigid: `(l[B], A ∩ B)` is knitted.
pub fn is_rigid(l: &Graph, sep: &Separation, convention: &KnitConvention) -> Result<KnitVerdict> {
    sep.validate(l)?;
    let (sub, map) = l.induced(sep.b)?;
    let mut pos = vec![usize::MAX; l.n()];
    for (i, &v) in map.iter().enumerate() {
        pos[v] = i;
    }
    let relabel = |set: VertexSet| -> VertexSet { set.iter().map(|v| pos[v]).collect() };
    let local = match convention {
        KnitConvention::EveryPartition => KnitConvention::EveryPartition,
        KnitConvention::Fixed(parts) => KnitConvention::Fixed(parts.iter().map(|&p| relabel(p)).collect()),
    };
    let mut verdict = is_knitted_pair(&sub, relabel(sep.separator()), &local)?;
    verdict.counterexample = verdict
        .counterexample
        .map(|parts| parts.iter().map(|p| p.iter().map(|v| map[v]).collect()).collect());
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn clique_side_is_rigid() {
        let g = complete(6);
        let sep = Separation { a: set(&[0, 1, 2, 3]), b: g.vertices() };
        assert!(is_rigid(&g, &sep, &KnitConvention::EveryPartition).unwrap().knitted);
    }

    #[test]
    fn split_pair_is_not_rigid() {
        // B = {2,3,4,5} induces two components {2,3} and {4,5}; A ∩ B = {2,4}
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 4), (2, 3), (4, 5)]).unwrap();
        let sep = Separation { a: set(&[0, 1, 2, 4]), b: set(&[2, 3, 4, 5]) };
        let v = is_rigid(&g, &sep, &KnitConvention::EveryPartition).unwrap();
        assert!(!v.knitted);
        assert_eq!(v.counterexample.unwrap(), vec![set(&[2, 4])]);
        let singles = KnitConvention::Fixed(vec![set(&[2]), set(&[4])]);
        assert!(is_rigid(&g, &sep, &singles).unwrap().knitted);
    }
}
