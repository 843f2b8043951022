//! Local descent toward a minimal massed, non-knitted pair.

use serde::{Deserialize, Serialize};

use super::{is_knitted_pair, is_p_massed, KnitConvention};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// Original label of the deleted vertex.
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    AddEdge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoggedMove {
    pub step: Move,
    /// `(|V|, ρ(V − S′), −e(S′))` after the move.
    pub objective: (usize, usize, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizeOutcome {
    pub graph: Graph,
    pub terminals: VertexSet,
    /// `original[v]` is the input label of output vertex `v`.
    pub original: Vec<usize>,
    pub log: Vec<LoggedMove>,
}

/// What must stay true of the pair during descent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimizeOptions {
    pub convention: KnitConvention,
    /// Drop the "not knitted" requirement. Highly connected inputs are always
    /// knitted, so this is the only way to descend from them.
    pub allow_knitted: bool,
}

/// Repeatedly applies the first admissible move, in the order: delete a
/// vertex outside `s`, delete an edge not inside `s`, add an edge inside `s`.
/// A move is admissible when the pair stays `p`-massed and not knitted
/// (unless `allow_knitted`). Every such move lowers `(|V|, ρ(V − S′),
/// −e(S′))` lexicographically, so the fixpoint is a local minimum.
pub fn minimize_pair(l: &Graph, s: VertexSet, p: usize, limit: usize, options: &MinimizeOptions) -> Result<MinimizeOutcome> {
    const OP: &str = "minimize_pair";
    l.check_set(s)?;
    if limit + 1 > p / 2 {
        return Err(Error::precondition(OP, format!("limit {limit} exceeds ⌊p/2⌋ − 1 = {}", (p / 2) as i64 - 1)));
    }
    if s.len() > limit {
        return Err(Error::precondition(OP, format!("(2) fails: |S′| = {} exceeds the limit {limit}", s.len())));
    }
    if !is_p_massed(l, s, p)?.satisfied {
        return Err(Error::precondition(OP, format!("(1) fails: pair is not {p}-massed")));
    }
    if !options.allow_knitted && is_knitted_pair(l, s, &options.convention)?.knitted {
        return Err(Error::precondition(OP, "(2) fails: pair is knitted"));
    }

    let mut g = l.clone();
    let mut alive = l.vertices();
    let mut log = Vec::new();
    while let Some((step, next_g, next_alive)) = first_admissible(&g, alive, s, p, options)? {
        g = next_g;
        alive = next_alive;
        let (sub, map) = g.induced(alive)?;
        let local_s = relabel(s, &map);
        log.push(LoggedMove {
            step,
            objective: objective(&sub, local_s),
        });
    }
    let (graph, original) = g.induced(alive)?;
    let terminals = relabel(s, &original);
    Ok(MinimizeOutcome {
        graph,
        terminals,
        original,
        log,
    })
}

fn relabel(s: VertexSet, map: &[usize]) -> VertexSet {
    map.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(i, _)| i).collect()
}

pub(crate) fn objective(g: &Graph, s: VertexSet) -> (usize, usize, i64) {
    (g.n(), g.rho(g.vertices() - s), -(g.edges_within(s) as i64))
}

fn admissible(g: &Graph, alive: VertexSet, s: VertexSet, p: usize, options: &MinimizeOptions) -> Result<bool> {
    let (sub, map) = g.induced(alive)?;
    let local_s = relabel(s, &map);
    if !is_p_massed(&sub, local_s, p)?.satisfied {
        return Ok(false);
    }
    if options.allow_knitted {
        return Ok(true);
    }
    let convention = match &options.convention {
        KnitConvention::EveryPartition => KnitConvention::EveryPartition,
        KnitConvention::Fixed(parts) => KnitConvention::Fixed(parts.iter().map(|&q| relabel(q, &map)).collect()),
    };
    Ok(!is_knitted_pair(&sub, local_s, &convention)?.knitted)
}

type Step = (Move, Graph, VertexSet);

fn first_admissible(g: &Graph, alive: VertexSet, s: VertexSet, p: usize, options: &MinimizeOptions) -> Result<Option<Step>> {
    for v in alive - s {
        let next_alive = alive.without(v);
        if admissible(g, next_alive, s, p, options)? {
            return Ok(Some((Move::DeleteVertex(v), g.clone(), next_alive)));
        }
    }
    let live = g.restrict(alive);
    for (u, v) in live.edges() {
        if s.contains(u) && s.contains(v) {
            continue;
        }
        let mut h = g.clone();
        h.remove_edge(u, v);
        if admissible(&h, alive, s, p, options)? {
            return Ok(Some((Move::DeleteEdge(u, v), h, alive)));
        }
    }
    for u in s {
        for v in s - VertexSet::full(u + 1) - g.neighbors(u) {
            let mut h = g.clone();
            h.add_edge(u, v);
            if admissible(&h, alive, s, p, options)? {
                return Ok(Some((Move::AddEdge(u, v), h, alive)));
            }
        }
    }
    Ok(None)
}

/// True when no single move keeps the pair admissible; the fixpoint check
/// used by tests and the pipeline.
pub fn is_local_minimum(l: &Graph, s: VertexSet, p: usize, options: &MinimizeOptions) -> Result<bool> {
    Ok(first_admissible(l, l.vertices(), s, p, options)?.is_none())
}
