//! Cores of cubic graphs.
//!
//! For three pairwise distinct perfect matchings `M1, M2, M3`, let `𝓜` be
//! the edges lying in at least two of them and `𝓤` the edges lying in none.
//! The core is the subgraph spanned by `𝓜 ∪ 𝓤`; `k = |𝓤|`.

use crate::checks::CheckResult;
use crate::cycles::all_circuits;
use crate::edgeset::EdgeSet;
use crate::error::CoreError;
use crate::graph::{vertex_bit, vertices_in, Graph, VertexSet};
use crate::structure::{bipartition_in, bridges_in, components_in, girth_in};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    /// Indices of the three factors in the perfect-matching list.
    pub factors: [usize; 3],
    pub matchings: [EdgeSet; 3],
    /// Edges in at least two factors.
    pub multi: EdgeSet,
    /// Edges in no factor.
    pub uncovered: EdgeSet,
    /// Edges in all three factors.
    pub triple: EdgeSet,
    /// Edges in exactly two factors.
    pub double: EdgeSet,
    pub k: usize,
    pub edges: EdgeSet,
    pub vertices: VertexSet,
}

/// Builds the core of `g` for the factors `pms[i]`, `pms[j]`, `pms[l]` and
/// checks the structural invariants every core satisfies.
pub fn build_core(g: &Graph, pms: &[EdgeSet], factors: [usize; 3]) -> Result<Core, CoreError> {
    let matchings = factors.map(|i| pms[i]);
    build_core_from(g, factors, matchings)
}

pub fn build_core_from(g: &Graph, factors: [usize; 3], matchings: [EdgeSet; 3]) -> Result<Core, CoreError> {
    if let Some(i) = (0..3).find(|&i| !g.is_perfect_matching(&matchings[i])) {
        return Err(CoreError::NotAPerfectMatching(i));
    }
    let [a, b, c] = matchings;
    if a == b || a == c || b == c {
        return Err(CoreError::FactorsNotDistinct);
    }
    let multi = (a & b) | (a & c) | (b & c);
    let triple = a & b & c;
    let uncovered = g.all_edges() - (a | b | c);
    let edges = multi | uncovered;
    let core = Core {
        factors,
        matchings,
        multi,
        uncovered,
        triple,
        double: multi - triple,
        k: uncovered.len(),
        edges,
        vertices: g.vertices_of(&edges),
    };
    core.check_invariants(g)?;
    Ok(core)
}

impl Core {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Empty triple intersection; equivalent to the core being a cycle.
    pub fn is_cyclic(&self) -> bool {
        self.triple.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    /// Counting and degree invariants of cores.
    pub fn check_invariants(&self, g: &Graph) -> Result<(), CoreError> {
        let fail = |msg: String| Err(CoreError::InvariantViolated(msg));
        let t = self.triple.len();
        if !self.multi.is_disjoint(&self.uncovered) {
            return fail("𝓜 and 𝓤 intersect".into());
        }
        if !self.triple.is_subset(&self.multi) || self.double != self.multi - self.triple {
            return fail("inconsistent 𝓜 / T / 𝓜_2".into());
        }
        if self.multi.len() + t != self.k {
            return fail(format!("|𝓜| = {} but k - |T| = {}", self.multi.len(), self.k as isize - t as isize));
        }
        if self.vertex_count() + 2 * t != 2 * self.k {
            return fail(format!("|V(G_c)| = {}, expected 2k - 2|T| = {}", self.vertex_count(), 2 * self.k - 2 * t));
        }
        if self.edges.len() + t != 2 * self.k {
            return fail(format!("|E(G_c)| = {}, expected 2k - |T| = {}", self.edges.len(), 2 * self.k - t));
        }
        let triple_ends = g.vertices_of(&self.triple);
        for v in vertices_in(self.vertices) {
            if g.degree_in(v, &self.multi) != 1 {
                return fail(format!("vertex {v} is not covered exactly once by 𝓜"));
            }
            let d = g.degree_in(v, &self.edges);
            let expect = if triple_ends & vertex_bit(v) != 0 { 3 } else { 2 };
            if d != expect {
                return fail(format!("vertex {v} has degree {d} in the core, expected {expect}"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    EvenCircuit,
    CubicSubdivision,
}

/// An edge of the multigraph obtained by suppressing degree-2 vertices:
/// a maximal path between branch vertices (possibly closed: a loop).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppressedEdge {
    pub ends: (usize, usize),
    pub path: EdgeSet,
}

/// The cubic multigraph `H` underlying a subdivided component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suppressed {
    pub branch_vertices: VertexSet,
    pub edges: Vec<SuppressedEdge>,
}

impl Suppressed {
    /// Degree of `v` in `H`, loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.ends.0 == v) as usize + (e.ends.1 == v) as usize)
            .sum()
    }

    pub fn is_cubic(&self) -> bool {
        vertices_in(self.branch_vertices).all(|v| self.degree(v) == 3)
    }

    /// True iff the `H`-edges whose paths are the single edges of `set`
    /// form a perfect matching of `H`.
    pub fn is_perfect_matching(&self, set: &EdgeSet) -> bool {
        let chosen: Vec<_> = self.edges.iter().filter(|e| e.path.is_subset(set)).collect();
        chosen.iter().map(|e| e.path.len()).sum::<usize>() == set.len()
            && chosen.iter().all(|e| e.ends.0 != e.ends.1)
            && vertices_in(self.branch_vertices).all(|v| {
                chosen.iter().filter(|e| e.ends.0 == v || e.ends.1 == v).count() == 1
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreComponent {
    pub kind: ComponentKind,
    pub vertices: VertexSet,
    pub edges: EdgeSet,
    /// Triple-intersection edges inside this component.
    pub estar: EdgeSet,
    pub suppressed: Option<Suppressed>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreClassification {
    pub components: Vec<CoreComponent>,
    /// The empty core; counted as cyclic.
    pub empty: bool,
    pub cyclic: bool,
    pub bipartite: bool,
    pub bridgeless: bool,
}

/// Suppresses the degree-2 vertices of a component whose maximum degree
/// is 3. Paths are traced from branch vertices in vertex order, leaving
/// through incident edges in index order.
pub fn suppress(g: &Graph, edges: &EdgeSet) -> Suppressed {
    let verts = g.vertices_of(edges);
    let branch: VertexSet = vertices_in(verts)
        .filter(|&v| g.degree_in(v, edges) == 3)
        .fold(0, |acc, v| acc | vertex_bit(v));
    let mut used = EdgeSet::empty();
    let mut out = Vec::new();
    for start in vertices_in(branch) {
        for &e0 in g.incident(start) {
            if !edges.contains(e0) || used.contains(e0) {
                continue;
            }
            let mut path = EdgeSet::singleton(e0);
            used.insert(e0);
            let mut v = g.other_end(e0, start);
            let mut prev = e0;
            while branch & vertex_bit(v) == 0 {
                let next = g
                    .incident(v)
                    .iter()
                    .copied()
                    .find(|&f| f != prev && edges.contains(f))
                    .expect("degree 2 inside a suppressed path");
                path.insert(next);
                used.insert(next);
                v = g.other_end(next, v);
                prev = next;
            }
            out.push(SuppressedEdge {
                ends: (start, v),
                path,
            });
        }
    }
    Suppressed {
        branch_vertices: branch,
        edges: out,
    }
}

pub fn classify_core(g: &Graph, core: &Core) -> CoreClassification {
    let components = components_in(g, &core.edges)
        .into_iter()
        .map(|(vertices, edges)| {
            let estar = edges & core.triple;
            if estar.is_empty() {
                CoreComponent {
                    kind: ComponentKind::EvenCircuit,
                    vertices,
                    edges,
                    estar,
                    suppressed: None,
                }
            } else {
                CoreComponent {
                    kind: ComponentKind::CubicSubdivision,
                    vertices,
                    edges,
                    estar,
                    suppressed: Some(suppress(g, &edges)),
                }
            }
        })
        .collect();
    CoreClassification {
        components,
        empty: core.is_empty(),
        cyclic: core.is_cyclic(),
        bipartite: bipartition_in(g, &core.edges).is_some(),
        bridgeless: bridges_in(g, &core.edges).is_empty(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorePredicate {
    Cyclic,
    Bipartite,
    Bridgeless,
    Any,
}

impl CorePredicate {
    pub fn holds(self, g: &Graph, core: &Core) -> bool {
        match self {
            CorePredicate::Cyclic => core.is_cyclic(),
            CorePredicate::Bipartite => bipartition_in(g, &core.edges).is_some(),
            CorePredicate::Bridgeless => bridges_in(g, &core.edges).is_empty(),
            CorePredicate::Any => true,
        }
    }
}

/// First core, over factor triples `i < j < l` in lexicographic order, with
/// `k <= k_budget` that satisfies `predicate`.
pub fn find_core(
    g: &Graph,
    pms: &[EdgeSet],
    predicate: CorePredicate,
    k_budget: usize,
) -> Result<Option<Core>, CoreError> {
    let all = g.all_edges();
    let p = pms.len();
    for i in 0..p {
        for j in i + 1..p {
            let ij = pms[i] | pms[j];
            for l in j + 1..p {
                if (all - (ij | pms[l])).len() > k_budget {
                    continue;
                }
                let core = build_core(g, pms, [i, j, l])?;
                if predicate.holds(g, &core) {
                    return Ok(Some(core));
                }
            }
        }
    }
    Ok(None)
}

/// A core with the least `k` satisfying `predicate`; ties go to the
/// lexicographically first triple.
pub fn find_best_core(g: &Graph, pms: &[EdgeSet], predicate: CorePredicate) -> Result<Option<Core>, CoreError> {
    let all = g.all_edges();
    let p = pms.len();
    let mut best: Option<Core> = None;
    for i in 0..p {
        for j in i + 1..p {
            let ij = pms[i] | pms[j];
            for l in j + 1..p {
                let k = (all - (ij | pms[l])).len();
                if best.as_ref().is_some_and(|b| b.k <= k) {
                    continue;
                }
                let core = build_core(g, pms, [i, j, l])?;
                if predicate.holds(g, &core) {
                    best = Some(core);
                }
            }
        }
    }
    Ok(best)
}

/// Facts about the host graph used by [`check_core_properties`].
#[derive(Clone, Copy, Debug, Default)]
pub struct CoreContext {
    pub girth: usize,
    /// Known μ_3(G); checks about optimal cores apply when `k` equals it.
    pub mu3: Option<usize>,
    pub three_edge_colorable: Option<bool>,
}

/// Above this cycle-space dimension the per-circuit check is skipped.
const CIRCUIT_CHECK_DIM: usize = 14;

/// Runs the structural statements about cores on one core.
pub fn check_core_properties(
    g: &Graph,
    core: &Core,
    cls: &CoreClassification,
    ctx: &CoreContext,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let k = core.k;
    let t = core.triple.len();
    out.push(CheckResult::new(
        "core_counting",
        core.check_invariants(g).is_ok(),
        format!(
            "k={k} |T|={t} |M|={} |V(Gc)|={} |E(Gc)|={}",
            core.multi.len(),
            core.vertex_count(),
            core.edges.len()
        ),
    ));

    let core_girth = girth_in(g, &core.edges);
    let comps = cls.components.len();
    match core_girth {
        None => {
            out.push(CheckResult::new("core_girth_at_most_2k", core.is_empty(), "core has no circuit"));
        }
        Some(gc) => {
            out.push(CheckResult::new(
                "core_girth_at_most_2k",
                gc <= 2 * k,
                format!("girth(Gc)={gc} 2k={}", 2 * k),
            ));
            out.push(CheckResult::new(
                "core_components_at_most_2k_over_girth",
                comps * gc <= 2 * k,
                format!("components={comps} 2k/girth(Gc)={}/{gc}", 2 * k),
            ));
        }
    }

    let structure = component_structure(g, core, cls);
    out.push(CheckResult::new(
        "core_component_structure",
        structure.is_ok(),
        structure.err().unwrap_or_else(|| format!("{comps} components")),
    ));

    if let Some(gc) = core_girth {
        if core.edges.len() - core.vertex_count() + comps <= CIRCUIT_CHECK_DIM {
            let circuits = all_circuits(g, &core.edges);
            let bad = circuits.iter().find(|c| 2 * (**c & core.uncovered).len() < gc);
            out.push(CheckResult::new(
                "core_circuits_hold_half_girth_uncovered",
                bad.is_none(),
                match bad {
                    Some(c) => format!("circuit {:?} has {} 𝓤-edges, girth(Gc)={gc}", c, (*c & core.uncovered).len()),
                    None => format!("{} circuits checked", circuits.len()),
                },
            ));
        }
    }

    if cls.bipartite {
        out.push(CheckResult::new(
            "bipartite_core_is_bridgeless",
            cls.bridgeless,
            format!("bridges={:?}", bridges_in(g, &core.edges)),
        ));
    }

    if k < 3 {
        if let Some(col) = ctx.three_edge_colorable {
            out.push(CheckResult::new(
                "core_below_3_implies_colorable",
                col,
                format!("k={k} colorable={col}"),
            ));
        }
    }

    if ctx.mu3 == Some(k) {
        let girth = ctx.girth;
        if girth > k {
            out.push(CheckResult::new(
                "girth_above_mu3_optimal_core_cyclic",
                cls.cyclic,
                format!("girth={girth} mu3={k} |T|={t}"),
            ));
        }
        if girth >= k {
            out.push(CheckResult::new(
                "girth_at_least_mu3_optimal_core_bipartite",
                cls.bipartite,
                format!("girth={girth} mu3={k}"),
            ));
        }
        if core_girth == Some(k) && t > 0 {
            let theta_like = comps == 1
                && cls.components[0]
                    .suppressed
                    .as_ref()
                    .is_some_and(|h| h.branch_vertices.count_ones() == 2 && h.edges.len() == 3);
            out.push(CheckResult::new(
                "optimal_core_at_girth_is_theta_subdivision",
                k.is_multiple_of(2) && theta_like,
                format!("mu3={k} |T|={t} components={comps}"),
            ));
        }
    }
    out
}

/// Component-level structure: circuit components are even and alternate
/// between 𝓜 and 𝓤; other components subdivide a cubic multigraph in which
/// their triple edges form a perfect matching.
pub fn component_structure(g: &Graph, core: &Core, cls: &CoreClassification) -> Result<(), String> {
    for (idx, comp) in cls.components.iter().enumerate() {
        for v in vertices_in(comp.vertices) {
            let d = g.degree_in(v, &comp.edges);
            if d == 2 && g.degree_in(v, &(comp.edges & core.uncovered)) != 1 {
                return Err(format!("component {idx}: vertex {v} does not alternate 𝓜/𝓤"));
            }
        }
        match comp.kind {
            ComponentKind::EvenCircuit => {
                let is_circuit = vertices_in(comp.vertices).all(|v| g.degree_in(v, &comp.edges) == 2);
                if !is_circuit || comp.edges.len() % 2 == 1 {
                    return Err(format!("component {idx} is not an even circuit"));
                }
            }
            ComponentKind::CubicSubdivision => {
                let h = comp.suppressed.as_ref().ok_or("missing suppressed graph")?;
                if !h.is_cubic() {
                    return Err(format!("component {idx}: suppressed graph is not cubic"));
                }
                if !h.is_perfect_matching(&comp.estar) {
                    return Err(format!("component {idx}: triple edges are not a perfect matching of H"));
                }
            }
        }
    }
    Ok(())
}
