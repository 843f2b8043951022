mod chromatic;
mod critical;
mod recombine;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use chromatic::chromatic_number;
pub use critical::{dirac_neighborhood_check, is_contraction_critical, CriticalVerdict, DiracViolation};
pub use recombine::{
    build_recombination_plan, contracted_graph, normalize_second_coloring, recombine, Gluing, RecombinationPlan, SwapOpportunity,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Per-vertex colors `0..palette_size`. JSON uses colors `1..=palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ColoringJson", try_from = "ColoringJson")]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    palette_size: usize,
    colors: Vec<usize>,
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson {
            palette_size: c.palette_size,
            colors: c.colors.iter().map(|&x| x + 1).collect(),
        }
    }
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = String;

    fn try_from(j: ColoringJson) -> std::result::Result<Self, String> {
        let colors = j
            .colors
            .iter()
            .map(|&x| if (1..=j.palette_size).contains(&x) { Ok(x - 1) } else { Err(format!("color {x} outside 1..={}", j.palette_size)) })
            .collect::<std::result::Result<_, _>>()?;
        Ok(Coloring {
            colors,
            palette_size: j.palette_size,
        })
    }
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette_size: usize) -> Self {
        Coloring { colors, palette_size }
    }

    /// Checks length and range against `g`.
    pub fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::input(format!("coloring has {} entries for {} vertices", self.colors.len(), g.n())));
        }
        if let Some((v, &c)) = self.colors.iter().enumerate().find(|(_, &c)| c >= self.palette_size) {
            return Err(Error::input(format!("vertex {v} has color {c} outside a palette of {}", self.palette_size)));
        }
        Ok(())
    }

    /// First monochromatic edge of `g` with both ends in `within`.
    pub fn conflict_within(&self, g: &Graph, within: VertexSet) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| within.contains(u) && within.contains(v) && self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.colors.iter().all(|&c| c < self.palette_size) && self.conflict_within(g, g.vertices()).is_none()
    }

    pub fn colors_on(&self, set: VertexSet) -> BTreeSet<usize> {
        set.iter().map(|v| self.colors[v]).collect()
    }

    /// Exchanges colors `a` and `b` on the vertices of `set`.
    pub fn swap_on(&mut self, set: VertexSet, a: usize, b: usize) {
        for v in set {
            let c = &mut self.colors[v];
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_one_based() {
        let c = Coloring::new(vec![0, 2, 1], 3);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"palette_size":3,"colors":[1,3,2]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&text).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(r#"{"palette_size":2,"colors":[0]}"#).is_err());
    }
}
