use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::linkage::link_pairs;
use super::{Knit, Linkage, TerminalSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Disjoint connected subgraphs containing the parts of `spec`.
///
/// Singleton parts are their own subgraph and become obstacles for the pairs;
/// each pair is then joined by a path.
pub fn knit(g: &Graph, spec: &TerminalSpec) -> Result<Option<Knit>> {
    spec.check_against(g)?;
    Ok(knit_unchecked(g, spec))
}

pub(crate) fn knit_unchecked(g: &Graph, spec: &TerminalSpec) -> Option<Knit> {
    let pairs = spec.pair_list();
    let free = g.vertices() - spec.terminals() - spec.forbidden;
    let linkage = link_pairs(g, &pairs, free, None)?;
    let mut paths = linkage.paths.into_iter();
    Some(Knit {
        subgraphs: spec
            .parts
            .iter()
            .map(|&p| {
                if p.len() == 1 {
                    p
                } else {
                    paths.next().expect("one path per pair").into_iter().collect()
                }
            })
            .collect(),
    })
}

/// Every partition of `s` into `pairs` two-element parts and the rest
/// singletons, each listed once. Parts are ordered by smallest member and
/// partitions come out in lexicographic order of that listing.
pub fn partitions_with_pairs(s: VertexSet, pairs: usize) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    if 2 * pairs <= s.len() {
        let singles = s.len() - 2 * pairs;
        partition_rec(s, pairs, singles, &mut Vec::new(), &mut out);
    }
    out
}

/// Every partition of `s` into parts of size one or two.
pub fn partitions_up_to_pairs(s: VertexSet) -> Vec<Vec<VertexSet>> {
    (0..=s.len() / 2)
        .rev()
        .flat_map(|m| partitions_with_pairs(s, m))
        .collect()
}

fn partition_rec(
    rest: VertexSet,
    pairs: usize,
    singles: usize,
    current: &mut Vec<VertexSet>,
    out: &mut Vec<Vec<VertexSet>>,
) {
    let Some(v) = rest.first() else {
        out.push(current.clone());
        return;
    };
    if pairs > 0 {
        for w in rest.without(v) {
            current.push(VertexSet::singleton(v).with(w));
            partition_rec(rest.without(v).without(w), pairs - 1, singles, current, out);
            current.pop();
        }
    }
    if singles > 0 {
        current.push(VertexSet::singleton(v));
        partition_rec(rest.without(v), pairs, singles - 1, current, out);
        current.pop();
    }
}

fn profile_pairs(size: usize, profile: &[usize]) -> Result<usize> {
    if profile.iter().any(|&x| x != 1 && x != 2) {
        return Err(Error::input("profile entries must be 1 or 2"));
    }
    let total: usize = profile.iter().sum();
    if total != size {
        return Err(Error::input(format!(
            "profile sums to {total} but the terminal set has {size} vertices"
        )));
    }
    Ok(profile.iter().filter(|&&x| x == 2).count())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileVerdict {
    pub knitted: bool,
    pub partitions_checked: usize,
    /// The least partition (in enumeration order) with no knit.
    pub counterexample: Option<Vec<VertexSet>>,
    /// A knit for the first partition, when the verdict is positive.
    pub example: Option<(Vec<VertexSet>, Knit)>,
}

/// Whether `g` has a knit for every partition of `s` with the given part sizes.
pub fn is_profile_knitted(g: &Graph, s: VertexSet, profile: &[usize]) -> Result<ProfileVerdict> {
    g.check_set(s)?;
    let pairs = profile_pairs(s.len(), profile)?;
    let partitions = partitions_with_pairs(s, pairs);
    let bad = partitions
        .par_iter()
        .find_first(|parts| knit_unchecked(g, &spec_of(parts)).is_none());
    let example = if bad.is_none() {
        partitions
            .first()
            .and_then(|p| knit_unchecked(g, &spec_of(p)).map(|k| (p.clone(), k)))
    } else {
        None
    };
    Ok(ProfileVerdict {
        knitted: bad.is_none(),
        partitions_checked: partitions.len(),
        counterexample: bad.cloned(),
        example,
    })
}

pub(crate) fn spec_of(parts: &[VertexSet]) -> TerminalSpec {
    TerminalSpec {
        parts: parts.to_vec(),
        forbidden: VertexSet::EMPTY,
    }
}

/// How terminal systems are drawn when testing linkedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinkedVerdict {
    pub linked: bool,
    pub systems_checked: usize,
    pub counterexample: Option<Vec<(usize, usize)>>,
    pub example: Option<Linkage>,
}

/// All systems of `k` disjoint unordered pairs on `0..n`, lexicographic.
fn all_pair_systems(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn choose(n: usize, start: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if current.len() == k {
            out.push(current.iter().collect());
            return;
        }
        for v in start..n {
            if n - v < k - current.len() {
                break;
            }
            current.push(v);
            choose(n, v + 1, k, current, out);
            current.pop();
        }
    }
    let mut sets = Vec::new();
    choose(n, 0, 2 * k, &mut Vec::new(), &mut sets);
    sets.into_iter()
        .flat_map(|s| partitions_with_pairs(s, k))
        .map(|parts| parts.iter().map(|p| (p.first().unwrap(), p.last().unwrap())).collect())
        .collect()
}

/// Whether every system of `k` disjoint pairs can be linked.
pub fn is_k_linked(g: &Graph, k: usize, mode: SystemMode) -> Result<LinkedVerdict> {
    if g.n() < 2 * k {
        return Err(Error::input(format!(
            "{k}-linkedness needs at least {} vertices, the graph has {}",
            2 * k,
            g.n()
        )));
    }
    let systems = match mode {
        SystemMode::Exhaustive => all_pair_systems(g.n(), k),
        SystemMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut vertices: Vec<usize> = (0..g.n()).collect();
            (0..count)
                .map(|_| {
                    vertices.shuffle(&mut rng);
                    vertices[..2 * k].chunks(2).map(|c| (c[0], c[1])).collect()
                })
                .collect()
        }
    };
    let all = g.vertices();
    let solve = |sys: &Vec<(usize, usize)>| {
        let terminals: VertexSet = sys.iter().flat_map(|&(s, t)| [s, t]).collect();
        link_pairs(g, sys, all - terminals, None)
    };
    let bad = systems.par_iter().find_first(|sys| solve(sys).is_none());
    Ok(LinkedVerdict {
        linked: bad.is_none(),
        systems_checked: systems.len(),
        counterexample: bad.cloned(),
        example: if bad.is_none() { systems.first().and_then(solve) } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn partition_counts() {
        let s = VertexSet::full(9);
        // 9 choices of singleton times 105 perfect matchings of the other 8
        assert_eq!(partitions_with_pairs(s, 4).len(), 945);
        assert_eq!(partitions_with_pairs(VertexSet::full(6), 3).len(), 15);
        // involutions of 4 points
        assert_eq!(partitions_up_to_pairs(VertexSet::full(4)).len(), 10);
    }

    #[test]
    fn singleton_only_knit_is_trivial() {
        let spec = TerminalSpec::new(vec![VertexSet::singleton(0), VertexSet::singleton(3)], VertexSet::EMPTY).unwrap();
        let k = knit(&cycle(5), &spec).unwrap().unwrap();
        assert_eq!(k.subgraphs, spec.parts);
    }

    #[test]
    fn cycle_profile_counterexample() {
        let v = is_profile_knitted(&cycle(6), VertexSet::full(6), &[2, 2, 2]).unwrap();
        assert!(!v.knitted);
        let bad = v.counterexample.unwrap();
        // the least failing partition in enumeration order
        assert_eq!(bad, vec![VertexSet::from_bits(0b000011), VertexSet::from_bits(0b000100 | 0b010000), VertexSet::from_bits(0b001000 | 0b100000)]);
        assert!(knit(&cycle(6), &spec_of(&[VertexSet::from_bits(0b001001), VertexSet::from_bits(0b010010), VertexSet::from_bits(0b100100)])).unwrap().is_none());
    }

    #[test]
    fn clique_profiles() {
        let v = is_profile_knitted(&complete(7), VertexSet::full(7), &[2, 2, 2, 1]).unwrap();
        assert!(v.knitted);
        assert!(is_profile_knitted(&cycle(5), VertexSet::full(3), &[1, 1, 1]).unwrap().knitted);
        assert!(is_profile_knitted(&cycle(5), VertexSet::full(3), &[2, 2]).is_err());
    }

    #[test]
    fn k_linked_examples() {
        assert!(is_k_linked(&complete(6), 3, SystemMode::Exhaustive).unwrap().linked);
        let c6 = is_k_linked(&cycle(6), 2, SystemMode::Exhaustive).unwrap();
        assert!(!c6.linked);
        assert!(is_k_linked(&complete_minus_matching(11, 5), 3, SystemMode::Exhaustive).unwrap().linked);
        assert!(is_k_linked(&complete(3), 2, SystemMode::Exhaustive).is_err());
    }
}
