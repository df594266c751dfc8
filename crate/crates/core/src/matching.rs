//! Perfect matchings, 2-factors, edge colorings and oddness.

use crate::cycles::{circuit_lengths, circuits};
use crate::edgeset::EdgeSet;
use crate::error::MatchingError;
use crate::graph::{vertex_bit, Graph, VertexSet};

/// Default limit on the number of perfect matchings enumerated.
pub const DEFAULT_PM_CAP: usize = 1_000_000;

/// All perfect matchings of `g`, sorted lexicographically by their sorted
/// edge-index lists.
///
/// The search branches on the lowest uncovered vertex and tries its edges
/// in index order. Exceeding `cap` is an error; a partial list is never
/// returned.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<EdgeSet>, MatchingError> {
    let mut out = Vec::new();
    if g.n().is_multiple_of(2) {
        let all = g.all_vertices();
        extend_matching(g, all, 0, EdgeSet::empty(), cap, &mut out)?;
    }
    out.sort_by_cached_key(EdgeSet::to_vec);
    Ok(out)
}

fn extend_matching(
    g: &Graph,
    all: VertexSet,
    covered: VertexSet,
    current: EdgeSet,
    cap: usize,
    out: &mut Vec<EdgeSet>,
) -> Result<(), MatchingError> {
    let free = all & !covered;
    if free == 0 {
        if out.len() == cap {
            return Err(MatchingError::CapExceeded { cap });
        }
        out.push(current);
        return Ok(());
    }
    let v = free.trailing_zeros() as usize;
    for &e in g.incident(v) {
        let w = g.other_end(e, v);
        if free & vertex_bit(w) != 0 {
            let mut next = current;
            next.insert(e);
            extend_matching(g, all, covered | vertex_bit(v) | vertex_bit(w), next, cap, out)?;
        }
    }
    Ok(())
}

/// The complement of a perfect matching in a cubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub edges: EdgeSet,
    /// Circuit lengths in tracing order (see [`crate::cycles::circuits`]).
    pub circuits: Vec<usize>,
}

impl TwoFactor {
    pub fn from_matching(g: &Graph, pm: &EdgeSet) -> Option<TwoFactor> {
        let edges = g.all_edges() - *pm;
        circuit_lengths(g, &edges).map(|circuits| TwoFactor { edges, circuits })
    }

    pub fn odd_circuits(&self) -> usize {
        self.circuits.iter().filter(|&&l| l % 2 == 1).count()
    }
}

/// Splits an even cycle into two perfect matchings of it by coloring each
/// circuit alternately, starting with its lowest-index edge.
fn alternate_split(g: &Graph, cycle: &EdgeSet) -> Option<(EdgeSet, EdgeSet)> {
    let mut first = EdgeSet::empty();
    let mut second = EdgeSet::empty();
    for circuit in circuits(g, cycle)? {
        if circuit.len() % 2 == 1 {
            return None;
        }
        let e0 = circuit.first().unwrap();
        let (start, mut v) = g.edge(e0);
        first.insert(e0);
        let (mut prev, mut flip) = (e0, true);
        while v != start {
            let next = g
                .incident(v)
                .iter()
                .copied()
                .find(|&f| f != prev && circuit.contains(f))
                .unwrap();
            if flip {
                second.insert(next);
            } else {
                first.insert(next);
            }
            flip = !flip;
            v = g.other_end(next, v);
            prev = next;
        }
    }
    Some((first, second))
}

/// A 3-edge-coloring as three disjoint perfect matchings, found through the
/// first perfect matching (in list order) whose 2-factor has only even
/// circuits.
pub fn three_edge_coloring(g: &Graph, pms: &[EdgeSet]) -> Option<[EdgeSet; 3]> {
    let all = g.all_edges();
    pms.iter().find_map(|pm| {
        let (b, c) = alternate_split(g, &(all - *pm))?;
        Some([*pm, b, c])
    })
}

pub fn is_three_edge_colorable(g: &Graph, pms: &[EdgeSet]) -> bool {
    three_edge_coloring(g, pms).is_some()
}

/// Minimum number of odd circuits over all 2-factors, from the full list of
/// perfect matchings.
pub fn oddness(g: &Graph, pms: &[EdgeSet]) -> Result<usize, MatchingError> {
    pms.iter()
        .filter_map(|pm| TwoFactor::from_matching(g, pm))
        .map(|tf| tf.odd_circuits())
        .min()
        .ok_or(MatchingError::NoTwoFactor)
}

/// Proper edge coloring of the subgraph `mask` with `colors` colors by
/// backtracking, always branching on the uncolored edge with the fewest
/// available colors. Returns one color class per color.
pub fn edge_coloring_in(g: &Graph, mask: &EdgeSet, colors: usize) -> Option<Vec<EdgeSet>> {
    assert!((1..=8).contains(&colors));
    let mut search = ColoringSearch {
        g,
        used: vec![0u8; g.n()],
        color_of: vec![None; g.m()],
        full: ((1u16 << colors) - 1) as u8,
        colors_seen: 0,
    };
    if search.run(*mask) {
        let mut classes = vec![EdgeSet::empty(); colors];
        for e in mask.iter() {
            classes[search.color_of[e].unwrap() as usize].insert(e);
        }
        Some(classes)
    } else {
        None
    }
}

struct ColoringSearch<'a> {
    g: &'a Graph,
    used: Vec<u8>,
    color_of: Vec<Option<u8>>,
    full: u8,
    /// Highest color index used so far plus one; new colors are only opened
    /// in order, which removes color-permutation symmetry.
    colors_seen: u8,
}

impl ColoringSearch<'_> {
    fn available(&self, e: usize) -> u8 {
        let (u, v) = self.g.edge(e);
        self.full & !(self.used[u] | self.used[v])
    }

    fn run(&mut self, uncolored: EdgeSet) -> bool {
        let Some(e) = uncolored
            .iter()
            .min_by_key(|&e| self.available(e).count_ones())
        else {
            return true;
        };
        let avail = self.available(e);
        let (u, v) = self.g.edge(e);
        for c in 0..8u8 {
            if avail >> c & 1 == 0 || c > self.colors_seen {
                continue;
            }
            let saved = self.colors_seen;
            self.colors_seen = self.colors_seen.max(c + 1);
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            self.color_of[e] = Some(c);
            let mut rest = uncolored;
            rest.remove(e);
            if self.run(rest) {
                return true;
            }
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
            self.color_of[e] = None;
            self.colors_seen = saved;
        }
        false
    }
}

/// A proper 4-edge-coloring with one color class of exactly `s` edges, as
/// four classes with the size-`s` class last.
///
/// Matchings `X` of size `s` are tried in lexicographic order; the rest of
/// the graph must then be 3-edge-colorable.
pub fn four_edge_coloring_with_class_of_size(g: &Graph, s: usize) -> Option<[EdgeSet; 4]> {
    let mut found = None;
    matchings_of_size(g, s, 0, 0, EdgeSet::empty(), &mut |x| {
        let rest = g.all_edges() - *x;
        if let Some(classes) = edge_coloring_in(g, &rest, 3) {
            found = Some([classes[0], classes[1], classes[2], *x]);
            true
        } else {
            false
        }
    });
    found
}

pub fn exists_4ec_with_class_of_size(g: &Graph, s: usize) -> bool {
    four_edge_coloring_with_class_of_size(g, s).is_some()
}

/// Calls `visit` on every matching of size `s` built from edges `>= from`,
/// in lexicographic order, until it returns true.
fn matchings_of_size(
    g: &Graph,
    s: usize,
    from: usize,
    covered: VertexSet,
    current: EdgeSet,
    visit: &mut dyn FnMut(&EdgeSet) -> bool,
) -> bool {
    if current.len() == s {
        return visit(&current);
    }
    for e in from..g.m() {
        let (u, v) = g.edge(e);
        if covered & (vertex_bit(u) | vertex_bit(v)) != 0 {
            continue;
        }
        let mut next = current;
        next.insert(e);
        if matchings_of_size(g, s, e + 1, covered | vertex_bit(u) | vertex_bit(v), next, visit) {
            return true;
        }
    }
    false
}
