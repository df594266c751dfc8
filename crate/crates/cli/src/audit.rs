//! Re-verification of every witness in a report against the graph alone.

use cubic_covers::cores::{build_core_from, classify_core};
use cubic_covers::covers::is_fulkerson_cover;
use cubic_covers::cyclecover::verify_cover;
use cubic_covers::graph::{vertex_bit, VertexSet};
use cubic_covers::structure::{bridges, girth, vertex_components};
use cubic_covers::{EdgeSet, Graph};

use crate::report::*;

fn in_range(g: &Graph, list: &[usize]) -> bool {
    list.iter().all(|&e| e < g.m())
}

fn factors(g: &Graph, lists: &[Vec<usize>]) -> Result<Vec<EdgeSet>, String> {
    lists
        .iter()
        .map(|l| {
            let set = edge_set(l);
            if in_range(g, l) && g.is_perfect_matching(&set) {
                Ok(set)
            } else {
                Err(format!("{l:?} is not a perfect matching"))
            }
        })
        .collect()
}

/// True iff removing `cut` leaves a side `S` with `δ(S) = cut` and at least
/// two vertices on each side.
fn is_nontrivial_3_cut(g: &Graph, cut: &[usize; 3]) -> bool {
    if !in_range(g, cut) {
        return false;
    }
    let rest = g.all_edges() - EdgeSet::from_indices(cut.iter().copied());
    let comps = vertex_components(g, g.all_vertices(), &rest);
    (1..(1u32 << comps.len()).saturating_sub(1)).any(|pick| {
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
        crossing == 3 && size >= 2 && g.n() - size >= 2
    })
}

fn audit_cover(g: &Graph, c: &CoverReport) -> Result<(), String> {
    if !c.cycles.iter().all(|l| in_range(g, l)) {
        return Err(format!("cover {}: edge index out of range", c.name));
    }
    let v = verify_cover(g, c.cycles.iter().map(|l| edge_set(l)).collect());
    let same = (v.length, v.ced, v.even, v.count, v.valid, v.double)
        == (c.length, c.ced, c.even, c.count, c.valid, c.double);
    if same {
        Ok(())
    } else {
        Err(format!("cover {}: recomputed statistics differ", c.name))
    }
}

/// Every disagreement between the report and a recomputation from `g`.
pub fn audit_report(g: &Graph, r: &GraphReport) -> Vec<String> {
    let mut problems = Vec::new();
    let mut check = |res: Result<(), String>| {
        if let Err(e) = res {
            problems.push(e);
        }
    };
    check(if (r.n, r.m) == (g.n(), g.m()) { Ok(()) } else { Err("n/m mismatch".into()) });
    if let Outcome::Ok(s) = &r.structure {
        check(if s.girth == girth(g) { Ok(()) } else { Err("girth mismatch".into()) });
        check(if s.bridgeless == bridges(g).is_empty() { Ok(()) } else { Err("bridgeless mismatch".into()) });
        if let Some(cut) = &s.nontrivial_3_cut {
            check(if is_nontrivial_3_cut(g, cut) { Ok(()) } else { Err(format!("{cut:?} is not a non-trivial 3-cut")) });
        }
    }
    if let Outcome::Ok(Some(col)) = &r.coloring {
        check(factors(g, col).and_then(|f| {
            let disjoint = f[0].is_disjoint(&f[1]) && f[0].is_disjoint(&f[2]) && f[1].is_disjoint(&f[2]);
            if disjoint && (f[0] | f[1] | f[2]) == g.all_edges() {
                Ok(())
            } else {
                Err("coloring is not a partition".into())
            }
        }));
    }
    for (k, out) in &r.mu {
        if let Outcome::Ok(w) = out {
            check(factors(g, &w.factors).and_then(|f| {
                let union = f.iter().fold(EdgeSet::empty(), |a, b| a | *b);
                let uncovered = g.all_edges() - union;
                if f.len() == *k && uncovered.len() == w.mu && edge_set(&w.uncovered) == uncovered {
                    Ok(())
                } else {
                    Err(format!("mu_{k} witness does not leave {} edges uncovered", w.mu))
                }
            }));
        }
    }
    if let Outcome::Ok(Some(w)) = &r.fan_raspaud {
        check(factors(g, w).and_then(|f| {
            let distinct = f[0] != f[1] && f[0] != f[2] && f[1] != f[2];
            if distinct && (f[0] & f[1] & f[2]).is_empty() {
                Ok(())
            } else {
                Err("fan-raspaud witness has a common edge".into())
            }
        }));
    }
    if let Outcome::Ok(Some(w)) = &r.fulkerson {
        check(factors(g, w).and_then(|f| {
            if is_fulkerson_cover(g, &f) {
                Ok(())
            } else {
                Err("fulkerson witness does not cover every edge twice".into())
            }
        }));
    }
    if let Outcome::Ok(cores) = &r.cores {
        for c in cores {
            check(factors(g, &c.factors).and_then(|f| {
                let core = build_core_from(g, [0, 1, 2], [f[0], f[1], f[2]]).map_err(|e| e.to_string())?;
                let cls = classify_core(g, &core);
                let same = (core.k, core.triple.len(), core.vertex_count(), core.edges.len(), cls.components.len())
                    == (c.k, c.t, c.vertices, c.edges, c.components.len())
                    && (cls.cyclic, cls.bipartite, cls.bridgeless) == (c.cyclic, c.bipartite, c.bridgeless);
                if same {
                    Ok(())
                } else {
                    Err(format!("core {} does not match its factors", c.role))
                }
            }));
        }
    }
    if let Outcome::Ok(covers) = &r.covers {
        for c in covers {
            check(audit_cover(g, c));
        }
    }
    if let Outcome::Ok(c) = &r.scc {
        check(audit_cover(g, c));
    }
    problems
}
