//! Structural queries on graphs and on edge-induced subgraphs.
//!
//! Most functions come in two forms: one over the whole graph and an `_in`
//! variant restricted to the subgraph spanned by an [`EdgeSet`].

use std::collections::VecDeque;

use crate::edgeset::EdgeSet;
use crate::error::GraphError;
use crate::graph::{vertex_bit, vertices_in, Graph, VertexSet};

/// Length of a shortest circuit of `g`. Two parallel edges form a circuit
/// of length 2. Cubic graphs always have a circuit.
pub fn girth(g: &Graph) -> usize {
    girth_in(g, &g.all_edges()).expect("graph without circuits")
}

/// Girth of the subgraph formed by `mask`, or `None` if it is a forest.
///
/// For every edge `uv` the shortest `u`-`v` path avoiding that edge closes
/// a shortest circuit through it.
pub fn girth_in(g: &Graph, mask: &EdgeSet) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for e in mask.iter() {
        let (s, t) = g.edge(e);
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        let limit = best.map_or(usize::MAX, |b| b - 1);
        'bfs: while let Some(v) = queue.pop_front() {
            if dist[v] + 1 > limit {
                break;
            }
            for &f in g.incident(v) {
                if f == e || !mask.contains(f) {
                    continue;
                }
                let w = g.other_end(f, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if dist[t] != usize::MAX {
            let len = dist[t] + 1;
            if best.is_none_or(|b| len < b) {
                best = Some(len);
            }
        }
    }
    best
}

/// Cut edges of `g`.
pub fn bridges(g: &Graph) -> EdgeSet {
    bridges_in(g, &g.all_edges())
}

/// Cut edges of the subgraph formed by `mask` (lowpoint DFS keyed on edge
/// ids, so parallel edges are never bridges).
pub fn bridges_in(g: &Graph, mask: &EdgeSet) -> EdgeSet {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = EdgeSet::empty();
    let mut time = 0;
    // (vertex, edge used to enter it, next incidence position)
    let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();
    for root in vertices_in(g.vertices_of(mask)) {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
            if let Some(&f) = g.incident(v).get(*pos) {
                *pos += 1;
                if !mask.contains(f) || Some(f) == parent_edge {
                    continue;
                }
                let w = g.other_end(f, v);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(f), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(f), Some(&(u, _, _))) = (parent_edge, stack.last()) {
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        out.insert(f);
                    }
                }
            }
        }
    }
    out
}

/// Connected components of the graph `(vertices, mask)`. Isolated vertices
/// of `vertices` form singleton components. Ordered by lowest vertex.
pub fn vertex_components(g: &Graph, vertices: VertexSet, mask: &EdgeSet) -> Vec<VertexSet> {
    let mut seen: VertexSet = 0;
    let mut comps = Vec::new();
    for s in vertices_in(vertices) {
        if seen & vertex_bit(s) != 0 {
            continue;
        }
        let mut comp = vertex_bit(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &f in g.incident(v) {
                if !mask.contains(f) {
                    continue;
                }
                let w = g.other_end(f, v);
                if vertices & vertex_bit(w) != 0 && comp & vertex_bit(w) == 0 {
                    comp |= vertex_bit(w);
                    stack.push(w);
                }
            }
        }
        seen |= comp;
        comps.push(comp);
    }
    comps
}

/// Components of the subgraph formed by `mask`, as (vertices, edges).
pub fn components_in(g: &Graph, mask: &EdgeSet) -> Vec<(VertexSet, EdgeSet)> {
    vertex_components(g, g.vertices_of(mask), mask)
        .into_iter()
        .map(|vs| {
            let edges = mask
                .iter()
                .filter(|&e| vs & vertex_bit(g.edge(e).0) != 0)
                .collect();
            (vs, edges)
        })
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    vertex_components(g, g.all_vertices(), &g.all_edges()).len() <= 1
}

/// A proper 2-coloring of `g` (the set of vertices colored 1), or `None`
/// if `g` has an odd circuit.
pub fn is_bipartite(g: &Graph) -> Option<VertexSet> {
    bipartition_in(g, &g.all_edges())
}

/// Two-coloring of the subgraph formed by `mask`; the lowest vertex of
/// each component gets color 0.
pub fn bipartition_in(g: &Graph, mask: &EdgeSet) -> Option<VertexSet> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut ones: VertexSet = 0;
    for s in vertices_in(g.vertices_of(mask)) {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            for &f in g.incident(v) {
                if !mask.contains(f) {
                    continue;
                }
                let w = g.other_end(f, v);
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        if !cv {
                            ones |= vertex_bit(w);
                        }
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(ones)
}

/// Searches for a non-trivial 3-edge-cut: three edges `F` and a vertex set
/// `S` with `δ(S) = F` and at least two vertices on each side. Returns the
/// lexicographically first such `F`.
pub fn nontrivial_3_edge_cut(g: &Graph) -> Result<Option<[usize; 3]>, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    let m = g.m();
    let all = g.all_edges();
    let verts = g.all_vertices();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let cut = [a, b, c];
                let rest = all - EdgeSet::from_indices(cut);
                let comps = vertex_components(g, verts, &rest);
                if comps.len() < 2 {
                    continue;
                }
                // S ranges over unions of components; the component count is
                // at most four because three edges were removed.
                for pick in 1..(1u32 << comps.len()) - 1 {
                    let side: VertexSet = comps
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| pick >> i & 1 == 1)
                        .fold(0, |acc, (_, &c)| acc | c);
                    let crossing = cut
                        .iter()
                        .filter(|&&e| {
                            let (u, v) = g.edge(e);
                            (side & vertex_bit(u) != 0) != (side & vertex_bit(v) != 0)
                        })
                        .count();
                    let size = side.count_ones() as usize;
                    if crossing == 3 && size >= 2 && g.n() - size >= 2 {
                        return Ok(Some(cut));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A hamiltonian circuit (as edge indices in traversal order) of the
/// subgraph induced by `vertices`. Needs at least two vertices; on two
/// vertices the circuit is a pair of parallel edges.
pub fn hamiltonian_circuit_in(g: &Graph, vertices: VertexSet) -> Option<Vec<usize>> {
    let count = vertices.count_ones() as usize;
    if count < 2 {
        return None;
    }
    let start = vertices.trailing_zeros() as usize;
    let mut search = HamSearch {
        g,
        vertices,
        start,
        target: count,
        path_edges: Vec::with_capacity(count),
    };
    if search.extend(start, vertex_bit(start)) {
        Some(search.path_edges)
    } else {
        None
    }
}

struct HamSearch<'a> {
    g: &'a Graph,
    vertices: VertexSet,
    start: usize,
    target: usize,
    path_edges: Vec<usize>,
}

impl HamSearch<'_> {
    fn extend(&mut self, cur: usize, visited: VertexSet) -> bool {
        let g = self.g;
        if self.path_edges.len() + 1 == self.target {
            let first = self.path_edges.first().copied();
            for &f in g.incident(cur) {
                if g.other_end(f, cur) == self.start && Some(f) != first {
                    self.path_edges.push(f);
                    return true;
                }
            }
            return false;
        }
        if !self.feasible(cur, visited) {
            return false;
        }
        for &f in g.incident(cur) {
            let w = g.other_end(f, cur);
            if self.vertices & vertex_bit(w) == 0 || visited & vertex_bit(w) != 0 {
                continue;
            }
            self.path_edges.push(f);
            if self.extend(w, visited | vertex_bit(w)) {
                return true;
            }
            self.path_edges.pop();
        }
        false
    }

    /// Every unvisited vertex needs two usable edges: to other unvisited
    /// vertices or to one of the two path ends.
    fn feasible(&self, cur: usize, visited: VertexSet) -> bool {
        let g = self.g;
        let open = (self.vertices & !visited) | vertex_bit(cur) | vertex_bit(self.start);
        vertices_in(self.vertices & !visited).all(|v| {
            g.incident(v)
                .iter()
                .filter(|&&f| open & vertex_bit(g.other_end(f, v)) != 0)
                .count()
                >= 2
        })
    }
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_circuit_in(g, g.all_vertices()).is_some()
}

/// Not hamiltonian, but `G - v` is hamiltonian for every vertex `v`.
pub fn is_hypohamiltonian(g: &Graph) -> bool {
    let all = g.all_vertices();
    !is_hamiltonian(g)
        && (0..g.n()).all(|v| hamiltonian_circuit_in(g, all & !vertex_bit(v)).is_some())
}
