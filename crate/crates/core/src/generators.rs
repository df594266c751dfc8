//! Small named graphs and the flower snark family.

use crate::error::GraphError;
use crate::graph::Graph;

/// `K_2^3`: two vertices joined by three parallel edges.
pub fn theta() -> Graph {
    Graph::cubic(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::cubic(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k33() -> Graph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    Graph::cubic(6, edges).unwrap()
}

/// Triangular prism; edges 6, 7, 8 are the rungs.
pub fn prism() -> Graph {
    Graph::cubic(
        6,
        vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
pub fn petersen() -> Graph {
    Graph::cubic(
        10,
        vec![
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
            (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
        ],
    )
    .unwrap()
}

/// Two copies of `K_4` minus an edge joined by a single edge (index 10).
/// Not cubic; it has exactly one bridge.
pub fn two_k4_minus_edge_joined() -> Graph {
    let half = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut edges: Vec<_> = half.to_vec();
    edges.extend(half.iter().map(|&(u, v)| (u + 4, v + 4)));
    edges.push((0, 4));
    Graph::new(8, edges).unwrap()
}

/// Flower snark `J_t` for odd `t >= 5`: `4t` vertices and `6t` edges.
///
/// Vertex `4i` is the center of claw `i`, joined to `4i+1`, `4i+2`, `4i+3`.
/// The `4i+1` vertices form a `t`-cycle; the `4i+2` and `4i+3` vertices
/// form one `2t`-cycle that switches sides once.
pub fn flower_snark(t: usize) -> Result<Graph, GraphError> {
    if t < 5 || t.is_multiple_of(2) {
        return Err(GraphError::InvalidParameter(format!(
            "flower snark needs odd t >= 5, got {t}"
        )));
    }
    let (a, b, c, d) = (|i| 4 * i, |i| 4 * i + 1, |i| 4 * i + 2, |i| 4 * i + 3);
    let mut edges = Vec::with_capacity(6 * t);
    for i in 0..t {
        edges.extend([(a(i), b(i)), (a(i), c(i)), (a(i), d(i))]);
    }
    for i in 0..t {
        edges.push((b(i), b((i + 1) % t)));
    }
    for i in 0..t - 1 {
        edges.push((c(i), c(i + 1)));
        edges.push((d(i), d(i + 1)));
    }
    edges.push((c(t - 1), d(0)));
    edges.push((d(t - 1), c(0)));
    Graph::cubic(4 * t, edges)
}
