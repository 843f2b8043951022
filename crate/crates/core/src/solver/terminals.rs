use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A partition of terminals into parts of one or two vertices, plus vertices
/// the connecting subgraphs must avoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalSpec {
    pub parts: Vec<VertexSet>,
    #[serde(default)]
    pub forbidden: VertexSet,
}

impl TerminalSpec {
    pub fn new(parts: Vec<VertexSet>, forbidden: VertexSet) -> Result<Self> {
        let spec = TerminalSpec { parts, forbidden };
        spec.check()?;
        Ok(spec)
    }

    /// Spec made only of pairs.
    pub fn pairs(pairs: &[(usize, usize)], forbidden: VertexSet) -> Result<Self> {
        for &(s, t) in pairs {
            if s == t {
                return Err(Error::input(format!("pair ({s},{t}) repeats a vertex")));
            }
        }
        Self::new(
            pairs.iter().map(|&(s, t)| VertexSet::singleton(s).with(t)).collect(),
            forbidden,
        )
    }

    fn check(&self) -> Result<()> {
        let mut seen = self.forbidden;
        for (i, &part) in self.parts.iter().enumerate() {
            if !(1..=2).contains(&part.len()) {
                return Err(Error::input(format!("part {i} = {part} must have 1 or 2 vertices")));
            }
            if part.intersects(seen) {
                return Err(Error::input(format!(
                    "part {i} = {part} overlaps another part or the forbidden set"
                )));
            }
            seen |= part;
        }
        Ok(())
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        self.check()?;
        g.check_set(self.terminals() | self.forbidden)
    }

    pub fn terminals(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }

    /// The two-vertex parts as `(smaller, larger)` pairs, in part order.
    pub fn pair_list(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .filter(|p| p.len() == 2)
            .map(|p| (p.first().unwrap(), p.last().unwrap()))
            .collect()
    }

    pub fn singletons(&self) -> VertexSet {
        self.parts
            .iter()
            .filter(|p| p.len() == 1)
            .fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }
}

/// Disjoint connected subgraphs, one per part of a [`TerminalSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Knit {
    pub subgraphs: Vec<VertexSet>,
}

impl Knit {
    pub fn validate(&self, g: &Graph, spec: &TerminalSpec) -> Result<()> {
        if self.subgraphs.len() != spec.parts.len() {
            return Err(Error::Inconsistent("knit and spec have different lengths".into()));
        }
        let mut used = VertexSet::EMPTY;
        for (i, (&sub, &part)) in self.subgraphs.iter().zip(&spec.parts).enumerate() {
            g.check_set(sub)?;
            if !part.is_subset(sub) {
                return Err(Error::Inconsistent(format!("subgraph {i} misses part {part}")));
            }
            if sub.intersects(used) || sub.intersects(spec.forbidden) {
                return Err(Error::Inconsistent(format!("subgraph {i} overlaps another or a forbidden vertex")));
            }
            if !g.is_connected_set(sub) {
                return Err(Error::Inconsistent(format!("subgraph {i} = {sub} is disconnected")));
            }
            used |= sub;
        }
        Ok(())
    }
}

/// Vertex-disjoint paths, path `i` joining the endpoints of pair `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linkage {
    pub paths: Vec<Vec<usize>>,
}

impl Linkage {
    /// Checks the paths against `pairs` (in order) and `forbidden`.
    pub fn validate(&self, g: &Graph, pairs: &[(usize, usize)], forbidden: VertexSet) -> Result<()> {
        if self.paths.len() != pairs.len() {
            return Err(Error::Inconsistent("linkage and pair list have different lengths".into()));
        }
        let mut used = VertexSet::EMPTY;
        for (i, (path, &(s, t))) in self.paths.iter().zip(pairs).enumerate() {
            let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
                return Err(Error::Inconsistent(format!("path {i} is empty")));
            };
            if !((first == s && last == t) || (first == t && last == s)) {
                return Err(Error::Inconsistent(format!("path {i} does not join {s} and {t}")));
            }
            for &v in path {
                g.check_vertex(v)?;
                if used.contains(v) || forbidden.contains(v) {
                    return Err(Error::Inconsistent(format!("path {i} reuses or enters forbidden vertex {v}")));
                }
                used.insert(v);
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(Error::Inconsistent(format!("path {i} uses a non-edge")));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> VertexSet {
        self.paths.iter().flatten().collect()
    }
}
