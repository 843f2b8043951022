//! Recombining colorings of the two sides of a separation through a mostly
//! independent separator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const PLAN: &str = "build_recombination_plan";
const RECOMBINE: &str = "recombine";
const NORMALIZE: &str = "normalize_second_coloring";

/// `graph = G1 ∪ G2` where `Gi` is the subgraph induced by `sidei`; the sides
/// meet in the separator and no edge joins their private parts. All
/// colorings are indexed by the labels of `graph`; entries outside the side a
/// coloring belongs to are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub graph: Graph,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl Gluing {
    pub fn new(graph: Graph, side1: VertexSet, side2: VertexSet) -> Result<Self> {
        graph.check_set(side1)?;
        graph.check_set(side2)?;
        if side1 | side2 != graph.vertices() {
            return Err(Error::input("the two sides must cover the vertex set"));
        }
        if graph.neighborhood_of_set(side1 - side2).intersects(side2 - side1) {
            return Err(Error::input("an edge joins the private parts of the two sides"));
        }
        Ok(Gluing { graph, side1, side2 })
    }

    pub fn separator(&self) -> VertexSet {
        self.side1 & self.side2
    }

    pub fn g1(&self) -> Graph {
        self.graph.restrict(self.side1)
    }

    pub fn g2(&self) -> Graph {
        self.graph.restrict(self.side2)
    }
}

/// Everything needed to turn the first side's coloring into one that agrees
/// with a suitable coloring of the second side. Colors are in the plan's own
/// numbering: class `V_i` has color `i`, `U` has color `r − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecombinationPlan {
    pub palette_size: usize,
    pub u: VertexSet,
    pub w: VertexSet,
    /// `V_0, …, V_{p−1}`; `V_0` has at least two vertices.
    pub classes: Vec<VertexSet>,
    /// `L_i`, sorted.
    pub lists: Vec<Vec<usize>>,
    /// The coding color of each nonempty `J ⊆ {0, …, p−1}` (sorted members).
    pub coding: Vec<(Vec<usize>, usize)>,
    /// The additional color unique to `L_i`, if any.
    pub extra: Vec<Option<usize>>,
    pub c_components: Vec<VertexSet>,
    pub d_components: Vec<VertexSet>,
    /// The first side's coloring renumbered into the plan's colors.
    pub phi1: Coloring,
    /// `renaming[c]` is the plan color of input color `c`.
    pub renaming: Vec<usize>,
}

impl RecombinationPlan {
    pub fn p(&self) -> usize {
        self.classes.len()
    }

    pub fn u_color(&self) -> usize {
        self.palette_size - 1
    }

    /// Every color on some list.
    pub fn coding_colors(&self) -> BTreeSet<usize> {
        self.lists.iter().flatten().copied().collect()
    }

    pub fn code_of(&self, members: &[usize]) -> Option<usize> {
        self.coding.iter().find(|(j, _)| j == members).map(|&(_, c)| c)
    }

    /// Checks the list axioms, the power-set coding by brute force over
    /// every `J`, and the component structure against `gluing`.
    pub fn validate(&self, gluing: &Gluing) -> Result<()> {
        let bad = |m: String| Err(Error::Inconsistent(m));
        let p = self.p();
        let r = self.u_color();
        for (i, list) in self.lists.iter().enumerate() {
            if !list.contains(&i) || list.contains(&r) {
                return bad(format!("L_{i} must contain {i} and not the U color"));
            }
            if self.lists.iter().enumerate().any(|(j, other)| j != i && other.contains(&i)) {
                return bad(format!("color {i} appears on another list"));
            }
        }
        for mask in 1u32..1 << p {
            let exact = self.coding_colors().into_iter().any(|c| (0..p).all(|i| self.lists[i].contains(&c) == (mask >> i & 1 == 1)));
            if !exact {
                return bad(format!("no color is common to exactly the lists in {mask:#b}"));
            }
        }
        let mut used = VertexSet::EMPTY;
        for (i, (&c, &v)) in self.c_components.iter().zip(&self.classes).enumerate() {
            if c.intersects(used) || !v.is_subset(c) || !gluing.graph.is_connected_set(c) {
                return bad(format!("C_{i} is not a connected set disjoint from earlier ones containing V_{i}"));
            }
            used |= c;
        }
        let rest = gluing.graph.components(gluing.side1 - used);
        if rest != self.d_components {
            return bad("D components differ from the components of G1 minus the C sets".into());
        }
        Ok(())
    }
}

/// A class `V_i` meets several components of its list-colored subgraph, so
/// swapping two colors of `L_i` on one of them puts one more color on `W`,
/// contradicting maximality of the input coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapOpportunity {
    pub class: usize,
    pub component: VertexSet,
    pub colors: (usize, usize),
    /// The input coloring in the plan's numbering.
    pub before: Coloring,
    pub colors_on_w_before: usize,
    pub colors_on_w_after: usize,
}

impl SwapOpportunity {
    /// The swapped coloring, still proper on the first side and monochromatic
    /// on `U`.
    pub fn apply(&self) -> Coloring {
        let mut c = self.before.clone();
        c.swap_on(self.component, self.colors.0, self.colors.1);
        c
    }
}

impl fmt::Display for SwapOpportunity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V_{} splits; swapping colors {} and {} on {} raises the colors on W from {} to {}",
            self.class, self.colors.0, self.colors.1, self.component, self.colors_on_w_before, self.colors_on_w_after
        )
    }
}

/// Renumbers `phi1`, builds the lists and extracts `C_0, …, C_{p−1}` in
/// order, then the leftover components `D_j`.
pub fn build_recombination_plan(gluing: &Gluing, u: VertexSet, phi1: &Coloring) -> Result<RecombinationPlan> {
    let g = &gluing.graph;
    let s = gluing.separator();
    g.check_set(u)?;
    phi1.check_shape(g)?;
    let r = phi1.palette_size;
    if !u.is_subset(s) {
        return Err(Error::precondition(PLAN, "U must lie in the separator"));
    }
    if !g.is_independent(u) {
        return Err(Error::precondition(PLAN, "U is not independent"));
    }
    let g1 = gluing.g1();
    if let Some((a, b)) = phi1.conflict_within(&g1, gluing.side1) {
        return Err(Error::precondition(PLAN, format!("phi1 is not proper on G1: edge {{{a},{b}}}")));
    }
    let u_colors = phi1.colors_on(u);
    if u_colors.len() > 1 {
        return Err(Error::precondition(PLAN, "phi1 is not U-monochromatic"));
    }
    let w = s - u;
    if w.iter().any(|v| u_colors.contains(&phi1.colors[v])) {
        return Err(Error::precondition(PLAN, "a vertex of W has the U color, so U is not a maximum independent set of S"));
    }
    let w_colors = phi1.colors_on(w);
    let p = w_colors.len();
    if p >= w.len() {
        return Err(Error::precondition(PLAN, format!("p = {p} colors on W must be fewer than |W| = {}", w.len())));
    }

    // classes: one of size at least two first, then by smallest member
    let mut classes: Vec<VertexSet> = w_colors
        .iter()
        .map(|&c| w.iter().filter(|&v| phi1.colors[v] == c).collect())
        .collect();
    classes.sort_by_key(|c| c.first());
    let big = classes.iter().position(|c| c.len() >= 2).expect("p < |W| forces a repeated color");
    let first = classes.remove(big);
    classes.insert(0, first);

    let augment = classes[1..].iter().any(|c| c.len() >= 2) || p == 1;
    let q = if augment { classes.iter().filter(|c| c.len() >= 2).count() } else { 0 };
    let needed = (1usize << p) - 1 + q;
    if needed + 1 > r {
        return Err(Error::precondition(
            PLAN,
            format!("palette of {r} cannot host {needed} coding colors plus the U color"),
        ));
    }

    // renumber: class i gets i, U gets r − 1, the rest fill p..r−1 in order
    let old_u = u_colors.first().copied().unwrap_or_else(|| (0..r).rev().find(|c| !w_colors.contains(c)).expect("p < r"));
    let mut renaming = vec![usize::MAX; r];
    for (i, class) in classes.iter().enumerate() {
        renaming[phi1.colors[class.first().expect("nonempty class")]] = i;
    }
    renaming[old_u] = r - 1;
    for (slot, color) in renaming.iter_mut().filter(|c| **c == usize::MAX).zip(p..) {
        *slot = color;
    }
    let phi = Coloring::new(phi1.colors.iter().map(|&c| renaming[c]).collect(), r);

    let (coding, extra, lists) = power_set_coding(&classes, augment);

    let mut c_components = Vec::with_capacity(p);
    let mut taken = VertexSet::EMPTY;
    for (i, &class) in classes.iter().enumerate() {
        let colored: VertexSet = (gluing.side1 - taken).iter().filter(|&v| lists[i].contains(&phi.colors[v])).collect();
        let hits: Vec<VertexSet> = g1.components(colored).into_iter().filter(|c| c.intersects(class)).collect();
        if hits.len() > 1 {
            let other = if i == 0 { lists[0].iter().copied().find(|&c| c != 0) } else { extra[i] };
            let other = other.ok_or_else(|| Error::Inconsistent(format!("V_{i} splits but L_{i} has no second unique color")))?;
            let component = hits[0];
            let mut op = SwapOpportunity {
                class: i,
                component,
                colors: (i, other),
                colors_on_w_before: p,
                colors_on_w_after: 0,
                before: phi,
            };
            let after = op.apply();
            if let Some((a, b)) = after.conflict_within(&g1, gluing.side1) {
                return Err(Error::Inconsistent(format!("swap on {component} breaks edge {{{a},{b}}}")));
            }
            op.colors_on_w_after = after.colors_on(w).len();
            return Err(Error::SwapOpportunity(Box::new(op)));
        }
        let c = hits.into_iter().next().expect("V_i is list-colored");
        taken |= c;
        c_components.push(c);
    }
    let d_components = g1.components(gluing.side1 - taken);

    let plan = RecombinationPlan {
        palette_size: r,
        u,
        w,
        classes,
        lists,
        coding,
        extra,
        c_components,
        d_components,
        phi1: phi,
        renaming,
    };
    plan.validate(gluing)?;
    Ok(plan)
}

type Coding = (Vec<(Vec<usize>, usize)>, Vec<Option<usize>>, Vec<Vec<usize>>);

/// Singletons `{i}` are coded by `i`; larger `J`, in lexicographic order of
/// their sorted members, take fresh colors from `p` upward; then one more
/// color per class of size at least two when `augment`.
fn power_set_coding(classes: &[VertexSet], augment: bool) -> Coding {
    let p = classes.len();
    let mut sets: Vec<Vec<usize>> = (1u32..1 << p)
        .map(|mask| (0..p).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|j| j.len() >= 2)
        .collect();
    sets.sort();
    let mut coding: Vec<(Vec<usize>, usize)> = (0..p).map(|i| (vec![i], i)).collect();
    coding.extend(sets.into_iter().enumerate().map(|(k, j)| (j, p + k)));
    let mut next = coding.len();
    let extra: Vec<Option<usize>> = classes
        .iter()
        .map(|c| {
            (augment && c.len() >= 2).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    let lists = (0..p)
        .map(|i| {
            let mut l: Vec<usize> = coding.iter().filter(|(j, _)| j.contains(&i)).map(|&(_, c)| c).collect();
            l.extend(extra[i]);
            l.sort_unstable();
            l
        })
        .collect();
    coding.sort_by(|a, b| a.0.cmp(&b.0));
    (coding, extra, lists)
}

/// The graph obtained by contracting every `C_i` and `D_j`, followed by the
/// private vertices of the second side. Returns the graph and, per original
/// vertex, its contracted vertex.
pub fn contracted_graph(gluing: &Gluing, plan: &RecombinationPlan) -> Result<(Graph, Vec<usize>)> {
    let g = &gluing.graph;
    let blocks: Vec<VertexSet> = plan
        .c_components
        .iter()
        .chain(&plan.d_components)
        .copied()
        .chain((gluing.side2 - gluing.side1).iter().map(VertexSet::singleton))
        .collect();
    let mut owner = vec![usize::MAX; g.n()];
    for (b, set) in blocks.iter().enumerate() {
        for v in *set {
            owner[v] = b;
        }
    }
    let mut h = Graph::empty(blocks.len())?;
    for (a, b) in g.edges() {
        if owner[a] != owner[b] {
            h.add_edge(owner[a], owner[b]);
        }
    }
    Ok((h, owner))
}

/// Turns a coloring of [`contracted_graph`] (or any coloring of the second
/// side constant on each `C_i ∩ S` and `D_j ∩ S`) into the form
/// [`recombine`] expects: each group of classes sharing a color gets that
/// group's coding color, and coding colors unused on `W` are moved off `U`.
/// Only permutes colors.
pub fn normalize_second_coloring(gluing: &Gluing, plan: &RecombinationPlan, phi2: &Coloring) -> Result<Coloring> {
    let r = plan.palette_size;
    if phi2.palette_size != r {
        return Err(Error::precondition(NORMALIZE, "palettes differ"));
    }
    phi2.check_shape(&gluing.graph)?;
    let lambda = class_colors(plan, phi2, NORMALIZE)?;
    let mut perm: Vec<Option<usize>> = vec![None; r];
    for (i, &l) in lambda.iter().enumerate() {
        let group: Vec<usize> = (0..plan.p()).filter(|&j| lambda[j] == l).collect();
        if group[0] == i {
            perm[l] = Some(plan.code_of(&group).expect("every group is coded"));
        }
    }
    let coding = plan.coding_colors();
    let mut free: BTreeSet<usize> = (0..r).filter(|c| !perm.contains(&Some(*c))).collect();
    let on_u = phi2.colors_on(plan.u);
    for &c in &on_u {
        if perm[c].is_none() {
            let target = free
                .iter()
                .copied()
                .find(|t| !coding.contains(t))
                .ok_or_else(|| Error::precondition(NORMALIZE, "too few colors outside the coding colors for U"))?;
            free.remove(&target);
            perm[c] = Some(target);
        }
    }
    for slot in perm.iter_mut().filter(|c| c.is_none()) {
        *slot = free.pop_first();
    }
    let colors = phi2.colors.iter().map(|&c| perm[c].expect("permutation is total")).collect();
    Ok(Coloring::new(colors, r))
}

/// Color of each class under `phi2`, which must be constant on it.
fn class_colors(plan: &RecombinationPlan, phi2: &Coloring, op: &'static str) -> Result<Vec<usize>> {
    plan.classes
        .iter()
        .enumerate()
        .map(|(i, &class)| {
            let on = phi2.colors_on(class);
            match on.len() {
                1 => Ok(*on.first().expect("one color")),
                _ => Err(Error::precondition(op, format!("phi2prime is not constant on V_{i}"))),
            }
        })
        .collect()
}

/// Applies the two swap families to the plan's first-side coloring so that
/// it agrees with `phi2prime` on the separator, and returns the union.
/// `phi2prime` must use the plan's color numbering; orient the sides so the
/// first uses at most as many colors on `W` as the second can.
pub fn recombine(gluing: &Gluing, plan: &RecombinationPlan, phi2prime: &Coloring) -> Result<Coloring> {
    let g = &gluing.graph;
    let s = gluing.separator();
    let r = plan.palette_size;
    plan.validate(gluing)?;
    if phi2prime.palette_size != r {
        return Err(Error::precondition(RECOMBINE, "phi2prime must use the plan's palette"));
    }
    phi2prime.check_shape(g)?;
    if plan.u | plan.w != s {
        return Err(Error::precondition(RECOMBINE, "the plan was built for another separator"));
    }
    let g2 = gluing.g2();
    if let Some((a, b)) = phi2prime.conflict_within(&g2, gluing.side2) {
        return Err(Error::precondition(RECOMBINE, format!("phi2prime is not proper on G2: edge {{{a},{b}}}")));
    }
    let lambda = class_colors(plan, phi2prime, RECOMBINE)?;
    for (i, &l) in lambda.iter().enumerate() {
        let group: Vec<usize> = (0..plan.p()).filter(|&j| lambda[j] == l).collect();
        if plan.code_of(&group) != Some(l) {
            return Err(Error::precondition(
                RECOMBINE,
                format!("V_{i} has color {l}, not the coding color of its group {group:?}"),
            ));
        }
    }
    let on_w = phi2prime.colors_on(plan.w);
    if let Some(c) = plan.coding_colors().into_iter().find(|c| !on_w.contains(c) && phi2prime.colors_on(plan.u).contains(c)) {
        return Err(Error::precondition(RECOMBINE, format!("coding color {c} is unused on W but used on U")));
    }
    let mut mu = BTreeMap::new();
    for (k, &d) in plan.d_components.iter().enumerate() {
        let on = phi2prime.colors_on(d & s);
        if on.len() > 1 {
            return Err(Error::precondition(RECOMBINE, format!("phi2prime is not constant on D_{k} ∩ S")));
        }
        if let Some(&c) = on.first() {
            mu.insert(k, c);
        }
    }
    for (i, &ci) in plan.c_components.iter().enumerate() {
        let near = g.neighborhood_of_set(ci);
        for (j, &cj) in plan.c_components.iter().enumerate().skip(i + 1) {
            if lambda[i] == lambda[j] && near.intersects(cj) {
                return Err(Error::precondition(RECOMBINE, format!("adjacent C_{i} and C_{j} share color {}", lambda[i])));
            }
        }
        for (&k, &c) in &mu {
            if c == lambda[i] && near.intersects(plan.d_components[k]) {
                return Err(Error::precondition(RECOMBINE, format!("adjacent C_{i} and D_{k} share color {c}")));
            }
        }
    }

    let g1 = gluing.g1();
    let mut phi = plan.phi1.clone();
    let check = |phi: &Coloring, what: String| match phi.conflict_within(&g1, gluing.side1) {
        Some((a, b)) => Err(Error::Inconsistent(format!("{what} breaks edge {{{a},{b}}}"))),
        None => Ok(()),
    };
    for (i, &ci) in plan.c_components.iter().enumerate() {
        phi.swap_on(ci, lambda[i], i);
        check(&phi, format!("swap ({}, {i}) on C_{i}", lambda[i]))?;
    }
    for (&k, &c) in &mu {
        phi.swap_on(plan.d_components[k], c, r - 1);
        check(&phi, format!("swap ({c}, {}) on D_{k}", r - 1))?;
    }
    if let Some(v) = s.iter().find(|&v| phi.colors[v] != phi2prime.colors[v]) {
        return Err(Error::Inconsistent(format!("swapped coloring disagrees with phi2prime at {v}")));
    }
    let colors = (0..g.n())
        .map(|v| if gluing.side1.contains(v) { phi.colors[v] } else { phi2prime.colors[v] })
        .collect();
    let out = Coloring::new(colors, r);
    if let Some((a, b)) = out.conflict_within(g, g.vertices()) {
        return Err(Error::Inconsistent(format!("combined coloring is improper on edge {{{a},{b}}}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::chromatic_number;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn coding_is_exact_for_two_singletons() {
        let (coding, extra, lists) = power_set_coding(&[set(&[0]), set(&[1])], false);
        assert_eq!(coding, vec![(vec![0], 0), (vec![0, 1], 2), (vec![1], 1)]);
        assert_eq!(extra, vec![None, None]);
        assert_eq!(lists, vec![vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn augmentation_follows_repeated_classes() {
        let (_, extra, lists) = power_set_coding(&[set(&[0, 1]), set(&[2, 3]), set(&[4])], true);
        assert_eq!(extra, vec![Some(7), Some(8), None]);
        assert!(lists[0].contains(&7) && lists[1].contains(&8));
    }

    #[test]
    fn degenerate_full_separator_is_rejected() {
        let g = complete(4);
        let gl = Gluing::new(g.clone(), g.vertices(), g.vertices()).unwrap();
        let (_, phi) = chromatic_number(&g);
        let phi = Coloring::new(phi.colors, 5);
        let err = build_recombination_plan(&gl, VertexSet::EMPTY, &phi).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }), "{err}");
    }

    /// Separator {0..5}: U = {0, 1}, W = {2, 3, 4, 5} with 2 ≁ 3, 4 ≁ 5, W
    /// complete to U otherwise. Side 1 adds 6, 7; side 2 adds 8, 9.
    fn fixture() -> Gluing {
        let mut g = Graph::empty(10).unwrap();
        for w in 2..6 {
            g.add_edge(0, w);
            g.add_edge(1, w);
        }
        for (a, b) in [(2, 4), (2, 5), (3, 4), (3, 5)] {
            g.add_edge(a, b);
        }
        for (a, b) in [(6, 2), (6, 3), (6, 0), (7, 4), (7, 5), (7, 6), (8, 2), (8, 5), (9, 8), (9, 1), (9, 3)] {
            g.add_edge(a, b);
        }
        Gluing::new(g, set(&[0, 1, 2, 3, 4, 5, 6, 7]), set(&[0, 1, 2, 3, 4, 5, 8, 9])).unwrap()
    }

    #[test]
    fn plan_and_recombine_on_fixture() {
        let gl = fixture();
        let r = 9;
        // 2,3 share color 4; 4,5 share color 7; U color 0
        let phi1 = Coloring::new(vec![0, 0, 4, 4, 7, 7, 1, 3, 0, 0], r);
        let plan = build_recombination_plan(&gl, set(&[0, 1]), &phi1).unwrap();
        assert_eq!(plan.classes, vec![set(&[2, 3]), set(&[4, 5])]);
        assert_eq!(plan.extra, vec![Some(3), Some(4)]);
        assert_eq!(plan.phi1.colors[0], r - 1);
        let (h, owner) = contracted_graph(&gl, &plan).unwrap();
        let (k, c) = chromatic_number(&h);
        assert!(k <= r);
        let expanded = Coloring::new((0..10).map(|v| c.colors[owner[v]]).collect(), r);
        let phi2 = normalize_second_coloring(&gl, &plan, &expanded).unwrap();
        let out = recombine(&gl, &plan, &phi2).unwrap();
        assert!(out.is_proper(&gl.graph));
        for v in gl.separator() {
            assert_eq!(out.colors[v], phi2.colors[v]);
        }
    }

    #[test]
    fn identity_swaps_give_the_union() {
        let gl = fixture();
        let phi1 = Coloring::new(vec![0, 0, 4, 4, 7, 7, 1, 3, 0, 0], 9);
        let plan = build_recombination_plan(&gl, set(&[0, 1]), &phi1).unwrap();
        let mut phi2 = plan.phi1.clone();
        // color the second side's private vertices compatibly
        phi2.colors[8] = 5;
        phi2.colors[9] = 6;
        assert!(phi2.conflict_within(&gl.g2(), gl.side2).is_none());
        let out = recombine(&gl, &plan, &phi2).unwrap();
        let union: Vec<usize> = (0..10).map(|v| if gl.side1.contains(v) { plan.phi1.colors[v] } else { phi2.colors[v] }).collect();
        assert_eq!(out.colors, union);
    }

    #[test]
    fn split_class_reports_swap() {
        // V_0 = {2, 3} colored 0 with no path through L_0 colors between them
        let mut g = Graph::empty(7).unwrap();
        for w in 2..6 {
            g.add_edge(0, w);
            g.add_edge(1, w);
        }
        for (a, b) in [(2, 4), (2, 5), (3, 4), (3, 5)] {
            g.add_edge(a, b);
        }
        g.add_edge(6, 2);
        let gl = Gluing::new(g, VertexSet::full(7), VertexSet::full(6)).unwrap();
        let phi1 = Coloring::new(vec![8, 8, 0, 0, 1, 2, 3], 9);
        let err = build_recombination_plan(&gl, set(&[0, 1]), &phi1).unwrap_err();
        let Error::SwapOpportunity(op) = err else { panic!("{err}") };
        assert_eq!(op.class, 0);
        let after = op.apply();
        assert!(after.conflict_within(&gl.g1(), gl.side1).is_none());
        assert_eq!(op.colors_on_w_after, op.colors_on_w_before + 1);
        assert_eq!(after.colors_on(set(&[0, 1])).len(), 1);
    }
}
