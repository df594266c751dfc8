//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use cubic_covers::cores::{build_core, classify_core, component_structure, ComponentKind};
use cubic_covers::covers::{fan_raspaud_witness, fulkerson_witness, is_fulkerson_cover, mu_k};
use cubic_covers::cyclecover::{canonical_cover, five_cdc, four_cover_cycles, scc_exact, verify_cover};
use cubic_covers::generators::{flower_snark, petersen};
use cubic_covers::graph::{vertex_bit, vertices_in};
use cubic_covers::matching::{
    enumerate_perfect_matchings, exists_4ec_with_class_of_size, oddness, three_edge_coloring, DEFAULT_PM_CAP,
};
use cubic_covers::structure::{bridges, components_in, girth, girth_in, nontrivial_3_edge_cut};
use cubic_covers::{EdgeSet, Graph};
use cubic_covers_cli::{analyze, read_corpus, Format, Op, Options};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

const CORPUS_FILES: [&str; 2] = ["bridgeless_cubic_upto14.g6", "extras.mgf"];

fn corpus() -> Vec<Graph> {
    CORPUS_FILES
        .iter()
        .flat_map(|f| {
            let text = std::fs::read_to_string(corpus_dir().join(f)).expect("corpus file");
            read_corpus(&text, Format::Auto)
        })
        .map(|e| e.graph.expect("corpus graphs parse"))
        .collect()
}

fn pms(g: &Graph) -> Vec<EdgeSet> {
    enumerate_perfect_matchings(g, DEFAULT_PM_CAP).unwrap()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn petersen_mu_values() -> Outcome {
    let start = Instant::now();
    let g = petersen();
    let p = pms(&g);
    let mus: Vec<usize> = (1..=5).map(|k| mu_k(&g, &p, k).unwrap().mu).collect();
    ensure(mus == [10, 6, 3, 1, 0], format!("mu = {mus:?}"))?;
    within(Duration::from_secs(5), start)?;
    Ok(format!("mu_1..5 = {mus:?} in {:?}", start.elapsed()))
}

fn petersen_shortest_cover() -> Outcome {
    let start = Instant::now();
    let c = scc_exact(&petersen(), 4, 6).map_err(|e| e.to_string())?;
    ensure(c.valid && c.length == 21, format!("length {}", c.length))?;
    within(Duration::from_secs(60), start)?;
    Ok(format!("length 21 in {:?}", start.elapsed()))
}

fn flower_snark_j5() -> Outcome {
    let start = Instant::now();
    let g = flower_snark(5).unwrap();
    let p = pms(&g);
    let mu3 = mu_k(&g, &p, 3).unwrap().mu;
    let w4 = mu_k(&g, &p, 4).unwrap();
    ensure(mu3 == 3 && w4.mu == 0, format!("mu3={mu3} mu4={}", w4.mu))?;
    let f: [EdgeSet; 4] = std::array::from_fn(|i| p[w4.factors[i]]);
    let c = four_cover_cycles(&g, &f).map_err(|e| e.to_string())?;
    ensure(c.valid && c.even && c.length == 40 && c.ced <= 2, format!("four-cover {c:?}"))?;
    let d = five_cdc(&g, &f).map_err(|e| e.to_string())?;
    let recheck = verify_cover(&g, d.cycles.clone());
    ensure(recheck.valid && recheck.double && d.count == 5, "5-CDC invalid")?;
    within(Duration::from_secs(120), start)?;
    Ok(format!("mu3=3 mu4=0, even 4-cover length 40 ced {}, 5-CDC valid", c.ced))
}

fn petersen_four_cover() -> Outcome {
    let g = petersen();
    let p = pms(&g);
    let w = mu_k(&g, &p, 4).unwrap();
    let f: [EdgeSet; 4] = std::array::from_fn(|i| p[w.factors[i]]);
    let c = four_cover_cycles(&g, &f).map_err(|e| e.to_string())?;
    let v = verify_cover(&g, c.cycles.clone());
    ensure(v.valid && v.even && v.length == 24, format!("length {} even {}", v.length, v.even))?;
    Ok("length 24 = 4/3*15 + 4, even".into())
}

/// Core invariants computed from scratch for the factors `f`.
fn check_core_independently(g: &Graph, pms: &[EdgeSet], triple: [usize; 3]) -> Result<(), String> {
    let f = triple.map(|i| pms[i]);
    let mut mult = vec![0; g.m()];
    for pm in &f {
        for e in pm.iter() {
            mult[e] += 1;
        }
    }
    let multi: EdgeSet = (0..g.m()).filter(|&e| mult[e] >= 2).collect();
    let unc: EdgeSet = (0..g.m()).filter(|&e| mult[e] == 0).collect();
    let t = (0..g.m()).filter(|&e| mult[e] == 3).count();
    let k = unc.len();
    let core_edges = multi | unc;
    let mut deg = vec![0; g.n()];
    let mut mdeg = vec![0; g.n()];
    let mut tdeg = vec![0; g.n()];
    for e in core_edges.iter() {
        let (a, b) = g.edge(e);
        for v in [a, b] {
            deg[v] += 1;
            if multi.contains(e) {
                mdeg[v] += 1;
            }
            if mult[e] == 3 {
                tdeg[v] += 1;
            }
        }
    }
    let nv = deg.iter().filter(|&&d| d > 0).count();
    let ctx = || format!("triple {triple:?}");
    ensure(multi.len() + t == k, format!("{}: |M| = {} != k - |T|", ctx(), multi.len()))?;
    ensure(nv + 2 * t == 2 * k, format!("{}: |V| = {nv}", ctx()))?;
    ensure(core_edges.len() + t == 2 * k, format!("{}: |E| = {}", ctx(), core_edges.len()))?;
    for v in 0..g.n() {
        if deg[v] > 0 {
            ensure(mdeg[v] == 1, format!("{}: M not a perfect matching at {v}", ctx()))?;
            ensure(deg[v] == 2 + tdeg[v], format!("{}: degree {} at {v}", ctx(), deg[v]))?;
        }
    }
    // library core must agree, and the structural statements must hold
    let core = build_core(g, pms, triple).map_err(|e| format!("{}: {e}", ctx()))?;
    ensure(core.edges == core_edges && core.k == k, format!("{}: library core differs", ctx()))?;
    if k > 0 {
        let gc = girth_in(g, &core_edges).ok_or_else(|| format!("{}: nonempty core is acyclic", ctx()))?;
        ensure(gc <= 2 * k, format!("{}: girth {gc} > 2k", ctx()))?;
        let comps = components_in(g, &core_edges).len();
        ensure(comps * gc <= 2 * k, format!("{}: {comps} components, girth {gc}", ctx()))?;
    }
    let cls = classify_core(g, &core);
    component_structure(g, &core, &cls).map_err(|e| format!("{}: {e}", ctx()))?;
    for comp in &cls.components {
        let cubic_vertices: u128 = vertices_in(comp.vertices)
            .filter(|&v| deg[v] == 3)
            .fold(0, |a, v| a | vertex_bit(v));
        match comp.kind {
            ComponentKind::EvenCircuit => {
                ensure(cubic_vertices == 0 && comp.edges.len() % 2 == 0, format!("{}: bad circuit", ctx()))?
            }
            ComponentKind::CubicSubdivision => ensure(cubic_vertices != 0, format!("{}: no branch vertex", ctx()))?,
        }
    }
    Ok(())
}

fn core_invariants(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20140101);
    let mut total = 0usize;
    for (gi, g) in graphs.iter().enumerate() {
        let p = pms(g);
        let n = p.len();
        if n < 3 {
            continue;
        }
        let triples = n * (n - 1) * (n - 2) / 6;
        if triples <= 1000 {
            for i in 0..n {
                for j in i + 1..n {
                    for l in j + 1..n {
                        check_core_independently(g, &p, [i, j, l]).map_err(|e| format!("graph {gi}: {e}"))?;
                        total += 1;
                    }
                }
            }
        } else {
            for _ in 0..1000 {
                let mut t = [0; 3];
                loop {
                    t = t.map(|_| rng.gen_range(0..n));
                    if t[0] != t[1] && t[0] != t[2] && t[1] != t[2] {
                        break;
                    }
                }
                t.sort();
                check_core_independently(g, &p, t).map_err(|e| format!("graph {gi}: {e}"))?;
                total += 1;
            }
        }
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!("{} graphs, {total} triples, 0 violations in {:?}", graphs.len(), start.elapsed()))
}

fn mu3_bounds(graphs: &[Graph]) -> Outcome {
    let mut positive = 0;
    for (gi, g) in graphs.iter().enumerate() {
        let mu3 = mu_k(g, &pms(g), 3).unwrap().mu;
        if mu3 > 0 {
            positive += 1;
            ensure(mu3 >= 3 && girth(g) <= 2 * mu3, format!("graph {gi}: mu3={mu3} girth={}", girth(g)))?;
        }
        ensure(35 * mu3 <= 8 * g.m(), format!("graph {gi}: mu3={mu3} m={}", g.m()))?;
    }
    Ok(format!("{} graphs ({positive} with mu3 > 0), 0 violations", graphs.len()))
}

fn conjecture_witnesses(graphs: &[Graph]) -> Outcome {
    let mut instances = 0;
    for (gi, g) in graphs.iter().enumerate() {
        if !bridges(g).is_empty() {
            continue;
        }
        let p = pms(g);
        let fr = fan_raspaud_witness(&p).ok_or(format!("graph {gi}: no Fan-Raspaud triple"))?;
        ensure((p[fr[0]] & p[fr[1]] & p[fr[2]]).is_empty(), format!("graph {gi}: bad Fan-Raspaud triple"))?;
        let fk = fulkerson_witness(g, &p).ok_or(format!("graph {gi}: no Fulkerson cover"))?;
        ensure(is_fulkerson_cover(g, &fk.map(|i| p[i])), format!("graph {gi}: bad Fulkerson cover"))?;
        let mu3 = mu_k(g, &p, 3).unwrap().mu;
        if nontrivial_3_edge_cut(g).unwrap().is_none() && mu3 <= 4 {
            instances += 1;
        }
    }
    Ok(format!(
        "Fan-Raspaud and Fulkerson witnesses for all bridgeless graphs; {instances} graphs without non-trivial 3-cut and mu3 <= 4"
    ))
}

fn oddness_equivalence(graphs: &[Graph]) -> Outcome {
    let mut tested = 0;
    for (gi, g) in graphs.iter().enumerate() {
        let p = pms(g);
        if !bridges(g).is_empty() || three_edge_coloring(g, &p).is_some() {
            continue;
        }
        tested += 1;
        let odd = oddness(g, &p).unwrap();
        let four = exists_4ec_with_class_of_size(g, 2);
        ensure((odd == 2) == four, format!("graph {gi}: oddness {odd}, class of two {four}"))?;
    }
    Ok(format!("{tested} non-colorable graphs, 0 violations"))
}

fn constructions_vs_oracle(graphs: &[Graph]) -> Outcome {
    let opts = Options {
        ops: [Op::All].into_iter().collect(),
        ..Options::default()
    };
    let mut compared = 0;
    for (gi, g) in graphs.iter().enumerate() {
        let scc = match scc_exact(g, g.m(), 16) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let report = analyze(g, gi, "", &opts);
        let covers = report.covers.ok().ok_or(format!("graph {gi}: covers missing"))?;
        for c in covers.iter().filter(|c| c.name != "five_cdc") {
            ensure(c.valid && c.length >= scc.length, format!("graph {gi}: {} = {} < {}", c.name, c.length, scc.length))?;
            compared += 1;
        }
        if let Some(col) = three_edge_coloring(g, &pms(g)) {
            let canon = canonical_cover(g, &col).unwrap().length;
            ensure(
                canon == scc.length && 3 * canon == 4 * g.m(),
                format!("graph {gi}: canonical {canon} scc {}", scc.length),
            )?;
        }
        let failed: Vec<_> = report.failed_checks().map(|c| c.name.clone()).collect();
        ensure(failed.is_empty(), format!("graph {gi}: failed checks {failed:?}"))?;
    }
    Ok(format!("{compared} constructed covers compared, 0 violations"))
}

fn scan_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cubcov");
    for file in CORPUS_FILES {
        let path = corpus_dir().join(file);
        let run = |workers: &str| {
            Command::new(bin)
                .args(["scan", path.to_str().unwrap(), "--workers", workers])
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run("4")?, run("1")?);
        ensure(a.status.success(), format!("{file}: exit {:?}", a.status.code()))?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, format!("{file}: outputs differ"))?;
    }
    Ok("two scans per corpus file (4 and 1 workers) byte-identical".into())
}

fn main() {
    let graphs = corpus();
    let criteria: Vec<Criterion> = vec![
        ("petersen mu values", Box::new(petersen_mu_values)),
        ("petersen shortest cycle cover", Box::new(petersen_shortest_cover)),
        ("flower snark J5 covers", Box::new(flower_snark_j5)),
        ("petersen even four-cover", Box::new(petersen_four_cover)),
        ("core invariants over corpus", Box::new(|| core_invariants(&graphs))),
        ("mu3 girth and edge bounds", Box::new(|| mu3_bounds(&graphs))),
        ("fan-raspaud and fulkerson witnesses", Box::new(|| conjecture_witnesses(&graphs))),
        ("oddness two iff 4-coloring with class of two", Box::new(|| oddness_equivalence(&graphs))),
        ("constructions versus exact oracle", Box::new(|| constructions_vs_oracle(&graphs))),
        ("scan determinism", Box::new(scan_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
