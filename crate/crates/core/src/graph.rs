use std::fmt::Write as _;

use crate::edgeset::{EdgeSet, MAX_EDGES, MAX_VERTICES};
use crate::error::GraphError;

/// Vertex subsets are bitmasks; `MAX_VERTICES` is 128.
pub type VertexSet = u128;

#[inline]
pub fn vertex_bit(v: usize) -> VertexSet {
    1u128 << v
}

/// Members of a vertex set in ascending order.
pub fn vertices_in(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// A loop-free multigraph with indexed edges.
///
/// Edge `i` is the `i`-th pair given at construction; that index is what
/// every [`EdgeSet`] refers to. Cubic graphs are the main subject, but cores
/// and test gadgets are represented with the same type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a loop-free multigraph without any degree requirement.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n > MAX_VERTICES || edges.len() > MAX_EDGES {
            return Err(GraphError::TooLarge { n, m: edges.len() });
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: i,
                        vertex: w,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: i, vertex: u });
            }
            incidence[u].push(i);
            incidence[v].push(i);
        }
        Ok(Graph {
            n,
            edges,
            incidence,
        })
    }

    /// Builds a graph and checks that it is 3-regular.
    pub fn cubic(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let g = Self::new(n, edges)?;
        g.check_cubic()?;
        Ok(g)
    }

    pub fn check_cubic(&self) -> Result<(), GraphError> {
        match (0..self.n).find(|&v| self.incidence[v].len() != 3) {
            Some(v) => Err(GraphError::NotCubic {
                vertex: v,
                degree: self.incidence[v].len(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.check_cubic().is_ok()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Edge indices incident to `v`, ascending.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// Number of edges of `mask` at `v`.
    pub fn degree_in(&self, v: usize, mask: &EdgeSet) -> usize {
        self.incidence[v].iter().filter(|&&e| mask.contains(e)).count()
    }

    /// Vertices covered by the edges of `mask`.
    pub fn vertices_of(&self, mask: &EdgeSet) -> VertexSet {
        mask.iter().fold(0, |acc, e| {
            let (u, v) = self.edges[e];
            acc | vertex_bit(u) | vertex_bit(v)
        })
    }

    /// Edges with both ends in `vertices`.
    pub fn induced_edges(&self, vertices: VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| vertices & vertex_bit(u) != 0 && vertices & vertex_bit(v) != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff some pair of edges joins the same two vertices.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }

    /// True iff `mask` is a perfect matching of this graph.
    pub fn is_perfect_matching(&self, mask: &EdgeSet) -> bool {
        mask.last().map_or(self.n == 0, |e| e < self.m())
            && (0..self.n).all(|v| self.degree_in(v, mask) == 1)
    }

    /// Serializes to the MGF edge-list text format.
    pub fn to_mgf(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.m()).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line: lineno,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line: lineno,
            msg: format!("invalid {what} {tok:?}"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line: lineno,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

/// Parses an MGF edge list (`n m` header, then `m` lines `u v`) into a
/// validated cubic multigraph.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    parse_edge_list_any(text).and_then(|g| {
        g.check_cubic()?;
        Ok(g)
    })
}

/// Like [`parse_edge_list`] but without the 3-regularity check.
pub fn parse_edge_list_any(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;
    if n > MAX_VERTICES || m > MAX_EDGES {
        return Err(GraphError::TooLarge { n, m });
    }
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse {
                line: lineno,
                msg: format!("more than {m} edge lines"),
            });
        }
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}
