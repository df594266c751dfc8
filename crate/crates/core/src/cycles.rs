//! Cycles as edge sets: circuit decomposition and the cycle space.
//!
//! In a graph of maximum degree 3 a cycle (even subgraph) is exactly an
//! edge set meeting every vertex in 0 or 2 edges.

use crate::edgeset::EdgeSet;
use crate::graph::{vertices_in, Graph};

/// True iff every vertex meets `set` in 0 or 2 edges.
pub fn is_cycle(g: &Graph, set: &EdgeSet) -> bool {
    vertices_in(g.vertices_of(set)).all(|v| g.degree_in(v, set) == 2)
}

/// Splits a 2-regular edge set into circuits. Each circuit is traced from
/// the lowest remaining edge; circuits are returned in that order.
/// `None` if `set` is not a cycle.
pub fn circuits(g: &Graph, set: &EdgeSet) -> Option<Vec<EdgeSet>> {
    if !is_cycle(g, set) {
        return None;
    }
    let mut rest = *set;
    let mut out = Vec::new();
    while let Some(e0) = rest.first() {
        let mut circuit = EdgeSet::singleton(e0);
        rest.remove(e0);
        let (start, mut v) = g.edge(e0);
        let mut prev = e0;
        while v != start {
            let next = g
                .incident(v)
                .iter()
                .copied()
                .find(|&f| f != prev && set.contains(f))
                .expect("2-regular");
            circuit.insert(next);
            rest.remove(next);
            v = g.other_end(next, v);
            prev = next;
        }
        out.push(circuit);
    }
    Some(out)
}

/// Lengths of the circuits of a cycle; `None` if `set` is not a cycle.
pub fn circuit_lengths(g: &Graph, set: &EdgeSet) -> Option<Vec<usize>> {
    circuits(g, set).map(|cs| cs.iter().map(EdgeSet::len).collect())
}

/// True iff `set` is a cycle all of whose circuits have even length.
pub fn is_even_cycle(g: &Graph, set: &EdgeSet) -> bool {
    circuit_lengths(g, set).is_some_and(|ls| ls.iter().all(|l| l % 2 == 0))
}

/// Fundamental-cycle basis of the cycle space of the subgraph `mask`, from
/// a BFS spanning forest. Its length is `|mask| - |V(mask)| + components`.
pub fn cycle_basis(g: &Graph, mask: &EdgeSet) -> Vec<EdgeSet> {
    let n = g.n();
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = EdgeSet::empty();
    for root in vertices_in(g.vertices_of(mask)) {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &f in g.incident(v) {
                if !mask.contains(f) {
                    continue;
                }
                let w = g.other_end(f, v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent_edge[w] = Some(f);
                    tree.insert(f);
                    queue.push_back(w);
                }
            }
        }
    }
    (*mask - tree)
        .iter()
        .map(|e| {
            let mut cycle = EdgeSet::singleton(e);
            let (mut a, mut b) = g.edge(e);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let f = parent_edge[a].unwrap();
                cycle.toggle(f);
                a = g.other_end(f, a);
            }
            cycle
        })
        .collect()
}

/// Every nonzero element of the cycle space spanned by `basis`, in
/// Gray-code order. `2^len - 1` elements; the caller bounds the dimension.
pub fn cycle_space(basis: &[EdgeSet]) -> Vec<EdgeSet> {
    let dim = basis.len();
    let total = 1usize << dim;
    let mut out = Vec::with_capacity(total.saturating_sub(1));
    let mut cur = EdgeSet::empty();
    for i in 1..total {
        cur ^= basis[i.trailing_zeros() as usize];
        out.push(cur);
    }
    out
}

/// Circuits (connected cycles) among the cycle-space elements of `mask`.
pub fn all_circuits(g: &Graph, mask: &EdgeSet) -> Vec<EdgeSet> {
    cycle_space(&cycle_basis(g, mask))
        .into_iter()
        .filter(|c| {
            let vs = g.vertices_of(c);
            crate::structure::vertex_components(g, vs, c).len() == 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn circuit_tracing() {
        let g = k33();
        // 0-3-1-4-0 uses edges (0,3)=0, (1,3)=3, (1,4)=4, (0,4)=1
        let c = EdgeSet::from_indices([0, 1, 3, 4]);
        assert_eq!(circuit_lengths(&g, &c), Some(vec![4]));
        assert!(is_even_cycle(&g, &c));
        assert_eq!(circuits(&g, &EdgeSet::from_indices([0, 1])), None);
        let t = theta();
        let two = circuits(&t, &EdgeSet::from_indices([0, 2])).unwrap();
        assert_eq!(two, vec![EdgeSet::from_indices([0, 2])]);
    }

    #[test]
    fn cycle_space_sizes() {
        let g = petersen();
        let basis = cycle_basis(&g, &g.all_edges());
        assert_eq!(basis.len(), 6);
        let space = cycle_space(&basis);
        assert_eq!(space.len(), 63);
        assert!(space.iter().all(|c| is_cycle(&g, c)));
        let distinct: std::collections::HashSet<_> = space.iter().collect();
        assert_eq!(distinct.len(), 63);
        // Petersen: 12 pentagons, 10 hexagons, 15 octagons, 20 nonagons
        let circuits = all_circuits(&g, &g.all_edges());
        let count = |l| circuits.iter().filter(|c| c.len() == l).count();
        assert_eq!((count(5), count(6), count(8), count(9)), (12, 10, 15, 20));
    }
}
