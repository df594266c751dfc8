//! Cycle covers: verification, the constructions built from perfect
//! matchings and cores, and an exact shortest-cover search for small graphs.

use crate::cores::{classify_core, ComponentKind, Core, CoreClassification};
use crate::cycles::{circuits, cycle_basis, cycle_space, is_cycle, is_even_cycle};
use crate::edgeset::EdgeSet;
use crate::error::CycleCoverError;
use crate::graph::{vertices_in, Graph};
use crate::structure::{bridges_in, components_in};

pub const DEFAULT_DIM_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCover {
    pub cycles: Vec<EdgeSet>,
    pub length: usize,
    /// Maximum number of members containing one edge.
    pub ced: usize,
    pub even: bool,
    pub count: usize,
    /// Every member is a cycle and the members cover the target.
    pub valid: bool,
    /// Every target edge lies in exactly two members.
    pub double: bool,
    /// Indices of members that are not cycles.
    pub invalid_members: Vec<usize>,
    pub uncovered: EdgeSet,
}

impl CycleCover {
    /// Number of members containing `e`.
    pub fn depth(&self, e: usize) -> usize {
        self.cycles.iter().filter(|c| c.contains(e)).count()
    }
}

pub fn verify_cover(g: &Graph, cycles: Vec<EdgeSet>) -> CycleCover {
    verify_cover_of(g, &g.all_edges(), cycles)
}

/// Statistics and validity of `cycles` as a cover of the subgraph `target`.
pub fn verify_cover_of(g: &Graph, target: &EdgeSet, cycles: Vec<EdgeSet>) -> CycleCover {
    let invalid_members: Vec<usize> = cycles
        .iter()
        .enumerate()
        .filter(|(_, c)| !is_cycle(g, c) || !c.is_subset(target))
        .map(|(i, _)| i)
        .collect();
    let union = cycles.iter().fold(EdgeSet::empty(), |acc, c| acc | *c);
    let uncovered = *target - union;
    let depth = |e: usize| cycles.iter().filter(|c| c.contains(e)).count();
    let ced = union.iter().map(depth).max().unwrap_or(0);
    let double = target.iter().all(|e| depth(e) == 2) && union.is_subset(target);
    CycleCover {
        length: cycles.iter().map(EdgeSet::len).sum(),
        ced,
        even: invalid_members.is_empty() && cycles.iter().all(|c| is_even_cycle(g, c)),
        count: cycles.len(),
        valid: invalid_members.is_empty() && uncovered.is_empty(),
        double,
        invalid_members,
        uncovered,
        cycles,
    }
}

/// The two-cycle cover `{a ∪ b, a ∪ c}` of a 3-edge-colored cubic graph,
/// where `a = coloring[0]` is the doubled class.
pub fn canonical_cover(g: &Graph, coloring: &[EdgeSet; 3]) -> Result<CycleCover, CycleCoverError> {
    let [a, b, c] = *coloring;
    let partition = coloring.iter().all(|x| g.is_perfect_matching(x))
        && a.is_disjoint(&b)
        && a.is_disjoint(&c)
        && b.is_disjoint(&c)
        && (a | b | c) == g.all_edges();
    if !partition {
        return Err(CycleCoverError::NotAPartition);
    }
    Ok(verify_cover(g, vec![a | b, a | c]))
}

/// Extends a cover of the core by `M1 Δ M2` and `M1 Δ M3`, after choosing
/// the factor `M1` that maximises `|(M1∩M2) - T| + |(M1∩M3) - T|`.
pub fn cover_from_core(g: &Graph, core: &Core, core_cover: &[EdgeSet]) -> Result<CycleCover, CycleCoverError> {
    let check = verify_cover_of(g, &core.edges, core_cover.to_vec());
    if !check.valid {
        return Err(CycleCoverError::InvalidCoreCover(format!(
            "invalid members {:?}, uncovered {:?}",
            check.invalid_members, check.uncovered
        )));
    }
    let m = core.matchings;
    let pair2 = |i: usize, j: usize| ((m[i] & m[j]) - core.triple).len();
    let first = (0..3)
        .max_by_key(|&i| {
            let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
            // ties go to the lowest index
            (pair2(i, others[0]) + pair2(i, others[1]), std::cmp::Reverse(i))
        })
        .unwrap();
    let others: Vec<usize> = (0..3).filter(|&j| j != first).collect();
    let mut cycles = core_cover.to_vec();
    for &j in &others {
        let d = m[first] ^ m[j];
        if !d.is_empty() {
            cycles.push(d);
        }
    }
    Ok(verify_cover(g, cycles))
}

/// Even cover of a bipartite core of length `2k`, merged into at most two
/// cycles. Circuit components cover themselves; in a subdivided component
/// the paths of `K_c - E*` are 2-coloured along each circuit (the path with
/// the lowest edge gets colour 1) and `E*` joins both colour classes.
pub fn bipartite_core_cover(g: &Graph, core: &Core) -> Result<CycleCover, CycleCoverError> {
    let cls = classify_core(g, core);
    bipartite_core_cover_with(g, core, &cls)
}

pub fn bipartite_core_cover_with(
    g: &Graph,
    core: &Core,
    cls: &CoreClassification,
) -> Result<CycleCover, CycleCoverError> {
    if !cls.bipartite {
        return Err(CycleCoverError::CoreNotBipartite);
    }
    let mut first = EdgeSet::empty();
    let mut second = EdgeSet::empty();
    for comp in &cls.components {
        match comp.kind {
            ComponentKind::EvenCircuit => first |= comp.edges,
            ComponentKind::CubicSubdivision => {
                let h = comp.suppressed.as_ref().expect("classified subdivision");
                let rest = comp.edges - comp.estar;
                let loops = circuits(g, &rest).ok_or_else(|| {
                    CycleCoverError::InvalidCoreCover("K_c - E* is not 2-regular".into())
                })?;
                for circuit in loops {
                    let (b, c) = two_colour_paths(h, &circuit)?;
                    first |= b;
                    second |= c;
                }
                first |= comp.estar;
                second |= comp.estar;
            }
        }
    }
    let cycles = [first, second].into_iter().filter(|c| !c.is_empty()).collect();
    Ok(verify_cover_of(g, &core.edges, cycles))
}

/// Alternately colours the suppressed paths making up `circuit`, walking
/// from the path that holds the circuit's lowest edge.
fn two_colour_paths(
    h: &crate::cores::Suppressed,
    circuit: &EdgeSet,
) -> Result<(EdgeSet, EdgeSet), CycleCoverError> {
    let odd = || CycleCoverError::InvalidCoreCover("odd circuit in K_c - E*".into());
    let lowest = circuit.first().unwrap();
    let start = h.edges.iter().find(|p| p.path.contains(lowest)).ok_or_else(odd)?;
    let mut colours = [EdgeSet::empty(), EdgeSet::empty()];
    let mut current = start;
    let mut at = start.ends.1;
    let mut colour = 0;
    let mut seen = EdgeSet::empty();
    loop {
        colours[colour] |= current.path;
        seen |= current.path;
        let next = h.edges.iter().find(|p| {
            p.path.is_subset(circuit) && p.path.is_disjoint(&seen) && (p.ends.0 == at || p.ends.1 == at)
        });
        match next {
            Some(p) => {
                at = if p.ends.0 == at { p.ends.1 } else { p.ends.0 };
                current = p;
                colour ^= 1;
            }
            None => break,
        }
    }
    if seen != *circuit || colour != 1 {
        return Err(odd());
    }
    Ok((colours[0], colours[1]))
}

fn check_factors(g: &Graph, factors: &[EdgeSet; 4]) -> Result<(), CycleCoverError> {
    if let Some(i) = (0..4).find(|&i| !g.is_perfect_matching(&factors[i])) {
        return Err(CycleCoverError::NotAPerfectMatching(i));
    }
    if !factors.iter().fold(g.all_edges(), |acc, f| acc & *f).is_empty() {
        return Err(CycleCoverError::NonEmptyIntersection);
    }
    Ok(())
}

/// For factor multiset `M1..M4`: edges of `E` in exactly `t` factors.
fn multiplicity_classes(g: &Graph, factors: &[EdgeSet; 4]) -> [EdgeSet; 5] {
    let mut classes = [EdgeSet::empty(); 5];
    for e in g.all_edges().iter() {
        let t = factors.iter().filter(|f| f.contains(e)).count();
        classes[t].insert(e);
    }
    classes
}

/// `C_i = M_i^1 ∪ (E - M_i)^2 ∪ M_i^3 ∪ 𝓤` for each factor; superscripts
/// count memberships in the multiset. Empty members are dropped.
pub fn four_cover_cycles(g: &Graph, factors: &[EdgeSet; 4]) -> Result<CycleCover, CycleCoverError> {
    check_factors(g, factors)?;
    Ok(verify_cover(g, four_cycles(g, factors)))
}

fn four_cycles(g: &Graph, factors: &[EdgeSet; 4]) -> Vec<EdgeSet> {
    let classes = multiplicity_classes(g, factors);
    factors
        .iter()
        .map(|&mi| (mi & classes[1]) | (classes[2] - mi) | (mi & classes[3]) | classes[0])
        .filter(|c| !c.is_empty())
        .collect()
}

/// The four cycles of a covering quadruple plus the 2-factor of edges in
/// exactly one factor.
pub fn five_cdc(g: &Graph, factors: &[EdgeSet; 4]) -> Result<CycleCover, CycleCoverError> {
    check_factors(g, factors)?;
    let classes = multiplicity_classes(g, factors);
    if !classes[0].is_empty() {
        return Err(CycleCoverError::UnionNotAllEdges);
    }
    let mut cycles = four_cycles(g, factors);
    cycles.push(classes[1]);
    Ok(verify_cover(g, cycles))
}

pub fn scc_exact(g: &Graph, max_cycles: usize, dim_cap: usize) -> Result<CycleCover, CycleCoverError> {
    scc_exact_on(g, &g.all_edges(), max_cycles, dim_cap)
}

/// Shortest cover of the subgraph `mask` by at most `max_cycles` cycles.
/// Exhaustive over the cycle space: IDA* on total length, branching on the
/// lowest uncovered edge, with the bound `Σ_v ⌈u_v / 2⌉` where `u_v` counts
/// uncovered edges at `v` (each cycle uses at most two edges per vertex).
pub fn scc_exact_on(
    g: &Graph,
    mask: &EdgeSet,
    max_cycles: usize,
    dim_cap: usize,
) -> Result<CycleCover, CycleCoverError> {
    let comps = components_in(g, mask).len();
    let dim = mask.len() + comps - g.vertices_of(mask).count_ones() as usize;
    if dim > dim_cap {
        return Err(CycleCoverError::DimensionCapExceeded { dim, cap: dim_cap });
    }
    if mask.is_empty() {
        return Ok(verify_cover_of(g, mask, Vec::new()));
    }
    if !bridges_in(g, mask).is_empty() || max_cycles == 0 {
        return Err(CycleCoverError::NoCover);
    }
    let mut space = cycle_space(&cycle_basis(g, mask));
    space.sort_by_key(|c| (c.len(), c.to_vec()));
    let mut search = SccSearch {
        g,
        space,
        max_cycles,
        chosen: Vec::new(),
        next_bound: usize::MAX,
    };
    let mut bound = search.lower_bound(mask);
    loop {
        search.next_bound = usize::MAX;
        if search.dfs(*mask, 0, bound) {
            return Ok(verify_cover_of(g, mask, search.chosen));
        }
        if search.next_bound == usize::MAX {
            return Err(CycleCoverError::NoCover);
        }
        bound = search.next_bound;
    }
}

struct SccSearch<'a> {
    g: &'a Graph,
    space: Vec<EdgeSet>,
    max_cycles: usize,
    chosen: Vec<EdgeSet>,
    next_bound: usize,
}

impl SccSearch<'_> {
    fn lower_bound(&self, uncovered: &EdgeSet) -> usize {
        vertices_in(self.g.vertices_of(uncovered))
            .map(|v| self.g.degree_in(v, uncovered).div_ceil(2))
            .sum()
    }

    /// Cycles still needed at the busiest vertex.
    fn cycles_needed(&self, uncovered: &EdgeSet) -> usize {
        vertices_in(self.g.vertices_of(uncovered))
            .map(|v| self.g.degree_in(v, uncovered).div_ceil(2))
            .max()
            .unwrap_or(0)
    }

    fn dfs(&mut self, uncovered: EdgeSet, length: usize, bound: usize) -> bool {
        let Some(e) = uncovered.first() else {
            return true;
        };
        if self.chosen.len() + self.cycles_needed(&uncovered) > self.max_cycles {
            return false;
        }
        for idx in 0..self.space.len() {
            let c = self.space[idx];
            if !c.contains(e) {
                continue;
            }
            let rest = uncovered - c;
            let f = length + c.len() + self.lower_bound(&rest);
            if f > bound {
                self.next_bound = self.next_bound.min(f);
                continue;
            }
            self.chosen.push(c);
            if self.dfs(rest, length + c.len(), bound) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::{build_core, find_core, CorePredicate};
    use crate::covers::mu_k;
    use crate::generators::*;
    use crate::matching::{enumerate_perfect_matchings, three_edge_coloring, DEFAULT_PM_CAP};

    fn pms(g: &Graph) -> Vec<EdgeSet> {
        enumerate_perfect_matchings(g, DEFAULT_PM_CAP).unwrap()
    }

    /// Independent oracle: the shortest cover by at most `max` cycles,
    /// by trying every multiset of cycle-space elements.
    fn brute_scc(g: &Graph, max: usize) -> usize {
        let space = cycle_space(&cycle_basis(g, &g.all_edges()));
        let all = g.all_edges();
        let mut best = usize::MAX;
        fn rec(space: &[EdgeSet], from: usize, left: usize, cur: EdgeSet, len: usize, all: EdgeSet, best: &mut usize) {
            if cur == all {
                *best = (*best).min(len);
                return;
            }
            if left == 0 {
                return;
            }
            for i in from..space.len() {
                rec(space, i, left - 1, cur | space[i], len + space[i].len(), all, best);
            }
        }
        rec(&space, 0, max, EdgeSet::empty(), 0, all, &mut best);
        best
    }

    #[test]
    fn verification() {
        let g = k4();
        let col = three_edge_coloring(&g, &pms(&g)).unwrap();
        let c = canonical_cover(&g, &col).unwrap();
        assert!(c.valid && c.even && !c.double);
        assert_eq!((c.length, c.count, c.ced), (8, 2, 2));

        let p = petersen();
        let hexagon = build_core(&p, &pms(&p), [0, 1, 2]).unwrap().edges;
        let v = verify_cover(&p, vec![hexagon]);
        assert!(!v.valid);
        assert_eq!(v.uncovered.len(), 9);
        let bad = verify_cover(&p, vec![EdgeSet::from_indices([0, 1])]);
        assert_eq!(bad.invalid_members, vec![0]);

        let t = theta();
        let c = verify_cover(&t, vec![EdgeSet::from_indices([0, 1]), EdgeSet::from_indices([1, 2])]);
        assert!(c.valid && c.even);
        assert_eq!((c.length, c.depth(1)), (4, 2));
    }

    #[test]
    fn canonical_covers() {
        let g = k33();
        let c = canonical_cover(&g, &three_edge_coloring(&g, &pms(&g)).unwrap()).unwrap();
        assert_eq!(c.length, 12);
        let j5 = flower_snark(5).unwrap();
        let p = pms(&j5);
        assert_eq!(canonical_cover(&j5, &[p[0], p[1], p[2]]), Err(CycleCoverError::NotAPartition));
    }

    #[test]
    fn covers_from_cores() {
        let p = petersen();
        let ps = pms(&p);
        let core = find_core(&p, &ps, CorePredicate::Cyclic, 3).unwrap().unwrap();
        let c = cover_from_core(&p, &core, &[core.edges]).unwrap();
        assert!(c.valid);
        assert_eq!((c.count, c.length), (3, 22));

        let g = k4();
        let core = build_core(&g, &pms(&g), [0, 1, 2]).unwrap();
        let c = cover_from_core(&g, &core, &[]).unwrap();
        assert!(c.valid && c.even);
        assert_eq!(c.length, 8);

        let j5 = flower_snark(5).unwrap();
        let ps = pms(&j5);
        let core = find_core(&j5, &ps, CorePredicate::Cyclic, 6).unwrap().unwrap();
        let inner = scc_exact_on(&j5, &core.edges, 4, DEFAULT_DIM_CAP).unwrap();
        let c = cover_from_core(&j5, &core, &inner.cycles).unwrap();
        assert!(c.valid);
        assert!(3 * c.length <= 4 * (j5.m() - core.k) + 3 * inner.length);
        assert!(matches!(
            cover_from_core(&j5, &core, &[]),
            Err(CycleCoverError::InvalidCoreCover(_))
        ));
    }

    #[test]
    fn bipartite_cores() {
        let p = petersen();
        let core = build_core(&p, &pms(&p), [0, 1, 2]).unwrap();
        let c = bipartite_core_cover(&p, &core).unwrap();
        assert_eq!(c.cycles, vec![core.edges]);
        assert_eq!(c.length, 6);

        let g = k4();
        let core = build_core(&g, &pms(&g), [0, 1, 2]).unwrap();
        assert_eq!(bipartite_core_cover(&g, &core).unwrap().length, 0);
    }

    #[test]
    fn four_covers() {
        let p = petersen();
        let ps = pms(&p);
        let w = mu_k(&p, &ps, 4).unwrap();
        assert_eq!(w.mu, 1);
        let f: [EdgeSet; 4] = std::array::from_fn(|i| ps[w.factors[i]]);
        let c = four_cover_cycles(&p, &f).unwrap();
        assert!(c.valid && c.even);
        assert_eq!(c.length, 24);
        assert_eq!(five_cdc(&p, &f), Err(CycleCoverError::UnionNotAllEdges));

        let g = k4();
        let ps = pms(&g);
        let f = [ps[0], ps[1], ps[2], ps[0]];
        let c = four_cover_cycles(&g, &f).unwrap();
        assert!(c.valid && c.even);
        assert_eq!(c.length, 8);
        let d = five_cdc(&g, &f).unwrap();
        assert!(d.valid && d.double);
        assert_eq!(
            four_cover_cycles(&g, &[ps[0]; 4]),
            Err(CycleCoverError::NonEmptyIntersection)
        );
    }

    #[test]
    fn flower_snark_four_cover() {
        let j5 = flower_snark(5).unwrap();
        let ps = pms(&j5);
        let w = mu_k(&j5, &ps, 4).unwrap();
        assert_eq!(w.mu, 0);
        let f: [EdgeSet; 4] = std::array::from_fn(|i| ps[w.factors[i]]);
        let c = four_cover_cycles(&j5, &f).unwrap();
        assert!(c.valid && c.even && c.ced <= 2);
        assert_eq!(c.length, 40);
        let d = five_cdc(&j5, &f).unwrap();
        assert!(d.valid && d.double);
        assert_eq!(d.count, 5);
    }

    #[test]
    fn exact_shortest_covers() {
        assert_eq!(scc_exact(&petersen(), 4, 6).unwrap().length, 21);
        assert_eq!(scc_exact(&k4(), 2, 6).unwrap().length, 8);
        assert_eq!(scc_exact(&theta(), 2, 6).unwrap().length, 4);
        assert_eq!(
            scc_exact(&petersen(), 4, 5),
            Err(CycleCoverError::DimensionCapExceeded { dim: 6, cap: 5 })
        );
        let bridged = two_k4_minus_edge_joined();
        assert_eq!(scc_exact(&bridged, 4, 16), Err(CycleCoverError::NoCover));
        assert_eq!(scc_exact(&petersen(), 1, 6), Err(CycleCoverError::NoCover));
    }

    #[test]
    fn exact_matches_brute_force() {
        for (g, max) in [(k4(), 2), (k4(), 3), (k33(), 2), (prism(), 3), (theta(), 1), (petersen(), 3)] {
            let want = brute_scc(&g, max);
            match scc_exact(&g, max, 16) {
                Ok(c) => {
                    assert!(c.valid && c.count <= max);
                    assert_eq!(c.length, want);
                }
                Err(CycleCoverError::NoCover) => assert_eq!(want, usize::MAX),
                Err(e) => panic!("{e}"),
            }
        }
    }
}
