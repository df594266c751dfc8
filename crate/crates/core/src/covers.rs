//! Exact k-covers by perfect matchings and the related witness searches.
//!
//! All searches take the perfect-matching list produced by
//! [`crate::matching::enumerate_perfect_matchings`] and refer to factors by
//! their index in that list.

use crate::edgeset::EdgeSet;
use crate::error::CoverError;
use crate::graph::{vertex_bit, Graph};
use crate::structure::hamiltonian_circuit_in;

/// Best union of `k` perfect matchings (repetition allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub k: usize,
    /// Factor indices, non-decreasing.
    pub factors: Vec<usize>,
    pub union: EdgeSet,
    pub uncovered: EdgeSet,
    /// `m - |union|`.
    pub mu: usize,
    /// Set when produced by the exhaustive search.
    pub optimal: bool,
}

impl CoverWitness {
    pub fn from_factors(g: &Graph, pms: &[EdgeSet], factors: Vec<usize>) -> Self {
        let union = factors.iter().fold(EdgeSet::empty(), |acc, &i| acc | pms[i]);
        let uncovered = g.all_edges() - union;
        CoverWitness {
            k: factors.len(),
            factors,
            union,
            uncovered,
            mu: uncovered.len(),
            optimal: false,
        }
    }
}

/// Exact `μ_k(G)` with a witness.
///
/// Branch and bound over non-decreasing index tuples. A partial tuple is
/// pruned when its union size plus `n/2` per remaining pick cannot beat the
/// incumbent; the first optimum in lexicographic order wins.
pub fn mu_k(g: &Graph, pms: &[EdgeSet], k: usize) -> Result<CoverWitness, CoverError> {
    if !(1..=6).contains(&k) {
        return Err(CoverError::BadTupleSize(k));
    }
    if pms.is_empty() {
        return Err(CoverError::NoPerfectMatching);
    }
    let mut search = MuSearch {
        pms,
        m: g.m(),
        half: g.n() / 2,
        k,
        best_size: 0,
        best: Vec::new(),
        stack: Vec::with_capacity(k),
    };
    search.run(0, EdgeSet::empty());
    let mut w = CoverWitness::from_factors(g, pms, search.best);
    w.optimal = true;
    Ok(w)
}

struct MuSearch<'a> {
    pms: &'a [EdgeSet],
    m: usize,
    half: usize,
    k: usize,
    best_size: usize,
    best: Vec<usize>,
    stack: Vec<usize>,
}

impl MuSearch<'_> {
    /// Returns true once every edge is covered, which ends the search.
    fn run(&mut self, from: usize, union: EdgeSet) -> bool {
        let size = union.len();
        if self.stack.len() == self.k {
            if size > self.best_size || self.best.is_empty() {
                self.best_size = size;
                self.best = self.stack.clone();
            }
            return size == self.m;
        }
        let remaining = self.k - self.stack.len();
        if !self.best.is_empty() && (size + remaining * self.half).min(self.m) <= self.best_size {
            return false;
        }
        for i in from..self.pms.len() {
            self.stack.push(i);
            let done = self.run(i, union | self.pms[i]);
            self.stack.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// Three distinct factors with empty common intersection, first in
/// lexicographic index order.
pub fn fan_raspaud_witness(pms: &[EdgeSet]) -> Option<[usize; 3]> {
    let p = pms.len();
    for i in 0..p {
        for j in i + 1..p {
            let ij = pms[i] & pms[j];
            if let Some(l) = (j + 1..p).find(|&l| (ij & pms[l]).is_empty()) {
                return Some([i, j, l]);
            }
        }
    }
    None
}

/// True iff five perfect matchings cover `E(G)`.
pub fn berge_check(g: &Graph, pms: &[EdgeSet]) -> Result<bool, CoverError> {
    Ok(mu_k(g, pms, 5)?.mu == 0)
}

/// Six perfect matchings (with repetition) covering every edge exactly
/// twice, as non-decreasing factor indices.
pub type FulkersonWitness = [usize; 6];

/// True iff every edge lies in exactly two of the six factors.
pub fn is_fulkerson_cover(g: &Graph, factors: &[EdgeSet]) -> bool {
    factors.len() == 6
        && factors.iter().all(|f| g.is_perfect_matching(f))
        && (0..g.m()).all(|e| factors.iter().filter(|f| f.contains(e)).count() == 2)
}

/// Exhaustive search for a [`FulkersonWitness`]. Slots take non-decreasing
/// factor indices; no edge may exceed two uses, and an edge still short of
/// two uses must be reachable by some factor at or after the current index
/// within the remaining slots.
pub fn fulkerson_witness(g: &Graph, pms: &[EdgeSet]) -> Option<FulkersonWitness> {
    if pms.is_empty() {
        return None;
    }
    let m = g.m();
    // last factor index containing each edge
    let mut last_with = vec![None; m];
    for (i, pm) in pms.iter().enumerate() {
        for e in pm.iter() {
            last_with[e] = Some(i);
        }
    }
    let mut search = FulkersonSearch {
        pms,
        m,
        last_with,
        count: vec![0u8; m],
        slots: [0; 6],
    };
    search.run(0, 0).then_some(search.slots)
}

struct FulkersonSearch<'a> {
    pms: &'a [EdgeSet],
    m: usize,
    last_with: Vec<Option<usize>>,
    count: Vec<u8>,
    slots: [usize; 6],
}

impl FulkersonSearch<'_> {
    fn run(&mut self, depth: usize, from: usize) -> bool {
        let remaining = 6 - depth;
        if remaining == 0 {
            return self.count.iter().all(|&c| c == 2);
        }
        for e in 0..self.m {
            let deficit = 2 - self.count[e] as usize;
            if deficit > remaining || (deficit > 0 && self.last_with[e].is_none_or(|l| l < from)) {
                return false;
            }
        }
        for i in from..self.pms.len() {
            let pm = self.pms[i];
            if pm.iter().any(|e| self.count[e] == 2) {
                continue;
            }
            pm.iter().for_each(|e| self.count[e] += 1);
            self.slots[depth] = i;
            let found = self.run(depth + 1, i);
            pm.iter().for_each(|e| self.count[e] -= 1);
            if found {
                return true;
            }
        }
        false
    }
}

/// Two perfect matchings sharing exactly one edge, built from a hamiltonian
/// circuit of `G - v`.
///
/// For each neighbor `x` of `v`, the edge `vx` together with the alternate
/// edges of the path `H - x` is a perfect matching. Returns the first pair
/// among these with a single common edge, or `None` if `G - v` is not
/// hamiltonian or no pair qualifies.
pub fn hamiltonian_pair(g: &Graph, v: usize) -> Option<(EdgeSet, EdgeSet)> {
    let rest = g.all_vertices() & !vertex_bit(v);
    let circuit = hamiltonian_circuit_in(g, rest)?;
    let len = circuit.len();
    // vertex sequence h_0 .. h_{len-1}, where circuit[i] joins h_i and h_{i+1}
    let mut seq = Vec::with_capacity(len);
    let (a, b) = g.edge(circuit[0]);
    let (c, d) = g.edge(circuit[len - 1]);
    let mut cur = if a == c || a == d { a } else { b };
    for &e in &circuit {
        seq.push(cur);
        cur = g.other_end(e, cur);
    }
    let factors: Vec<EdgeSet> = g
        .incident(v)
        .iter()
        .map(|&ve| {
            let x = g.other_end(ve, v);
            let pos = seq.iter().position(|&h| h == x).unwrap();
            let mut pm = EdgeSet::singleton(ve);
            // path h_{pos+1} .. h_{pos-1}: take its 1st, 3rd, ... edges
            for step in (1..len - 1).step_by(2) {
                pm.insert(circuit[(pos + step) % len]);
            }
            pm
        })
        .collect();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if (factors[i] & factors[j]).len() == 1 {
                return Some((factors[i], factors[j]));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::matching::{enumerate_perfect_matchings, DEFAULT_PM_CAP};

    fn pms(g: &Graph) -> Vec<EdgeSet> {
        enumerate_perfect_matchings(g, DEFAULT_PM_CAP).unwrap()
    }

    /// Oracle: all multisets of k factors.
    fn mu_brute(g: &Graph, pms: &[EdgeSet], k: usize) -> usize {
        fn rec(pms: &[EdgeSet], k: usize, from: usize, union: EdgeSet) -> usize {
            if k == 0 {
                return union.len();
            }
            (from..pms.len()).map(|i| rec(pms, k - 1, i, union | pms[i])).max().unwrap_or(0)
        }
        g.m() - rec(pms, k, 0, EdgeSet::empty())
    }

    #[test]
    fn petersen_mu_values() {
        let g = petersen();
        let p = pms(&g);
        let mus: Vec<usize> = (1..=6).map(|k| mu_k(&g, &p, k).unwrap().mu).collect();
        assert_eq!(mus, vec![10, 6, 3, 1, 0, 0]);
        for k in 1..=5 {
            assert_eq!(mus[k - 1], mu_brute(&g, &p, k));
        }
        let w = mu_k(&g, &p, 3).unwrap();
        assert!(w.optimal);
        assert_eq!(w.factors, vec![0, 1, 2]);
        assert_eq!(w.union.len() + w.uncovered.len(), 15);
    }

    #[test]
    fn pairwise_intersections_in_petersen() {
        let p = pms(&petersen());
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!((p[i] & p[j]).len(), 1);
            }
        }
    }

    #[test]
    fn colorable_graphs_have_mu3_zero() {
        for g in [theta(), k4(), k33(), prism()] {
            let p = pms(&g);
            assert_eq!(mu_k(&g, &p, 3).unwrap().mu, 0);
            assert_eq!(mu_k(&g, &p, 1).unwrap().mu, g.m() - g.n() / 2);
        }
    }

    #[test]
    fn flower_snark_j5() {
        let g = flower_snark(5).unwrap();
        let p = pms(&g);
        assert_eq!(mu_k(&g, &p, 3).unwrap().mu, 3);
        assert_eq!(mu_k(&g, &p, 4).unwrap().mu, 0);
        assert!(berge_check(&g, &p).unwrap());
        assert!(fan_raspaud_witness(&p).is_some());
        let f = fulkerson_witness(&g, &p).unwrap();
        assert!(is_fulkerson_cover(&g, &f.map(|i| p[i])));
    }

    #[test]
    fn mu_errors() {
        let g = k4();
        assert_eq!(mu_k(&g, &[], 3), Err(CoverError::NoPerfectMatching));
        assert_eq!(mu_k(&g, &pms(&g), 0), Err(CoverError::BadTupleSize(0)));
        assert_eq!(mu_k(&g, &pms(&g), 7), Err(CoverError::BadTupleSize(7)));
    }

    #[test]
    fn fan_raspaud() {
        assert_eq!(fan_raspaud_witness(&pms(&k4())), Some([0, 1, 2]));
        assert_eq!(fan_raspaud_witness(&pms(&petersen())), Some([0, 1, 2]));
        assert_eq!(fan_raspaud_witness(&pms(&theta())), Some([0, 1, 2]));
    }

    #[test]
    fn fulkerson() {
        let g = k4();
        let p = pms(&g);
        assert_eq!(fulkerson_witness(&g, &p), Some([0, 0, 1, 1, 2, 2]));
        let g = petersen();
        let p = pms(&g);
        assert_eq!(fulkerson_witness(&g, &p), Some([0, 1, 2, 3, 4, 5]));
        assert!(berge_check(&g, &p).unwrap());
        assert!(!is_fulkerson_cover(&g, &[p[0]; 6]));
    }

    #[test]
    fn petersen_hamiltonian_pairs() {
        let g = petersen();
        for v in 0..g.n() {
            let (a, b) = hamiltonian_pair(&g, v).unwrap();
            assert!(g.is_perfect_matching(&a) && g.is_perfect_matching(&b));
            assert_eq!((a & b).len(), 1);
        }
        // K4 - v is a triangle; the constructed matchings are disjoint
        assert_eq!(hamiltonian_pair(&k4(), 0), None);
    }
}
