//! Serialized report types. Edge sets are written as sorted index arrays.

use std::collections::BTreeMap;

use cubic_covers::cyclecover::CycleCover;
use cubic_covers::{CheckResult, EdgeSet};
use serde::{Deserialize, Serialize};

/// Result of one report field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome<T> {
    Ok(T),
    Skipped,
    Timeout,
    Error(String),
}

impl<T> Outcome<T> {
    pub fn ok(&self) -> Option<&T> {
        match self {
            Outcome::Ok(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped)
    }
}

pub fn edges(set: &EdgeSet) -> Vec<usize> {
    set.to_vec()
}

pub fn edge_set(list: &[usize]) -> EdgeSet {
    EdgeSet::from_indices(list.iter().copied())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Structure {
    pub girth: usize,
    pub connected: bool,
    pub bridgeless: bool,
    pub bipartite: bool,
    pub simple: bool,
    /// Edges of a non-trivial 3-edge-cut, if one exists.
    pub nontrivial_3_cut: Option<[usize; 3]>,
    pub hamiltonian: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub mu: usize,
    /// The k factors of an optimal cover, as edge lists.
    pub factors: Vec<Vec<usize>>,
    pub uncovered: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// "even_circuit" or "cubic_subdivision".
    pub kind: String,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreReport {
    /// Why this core was selected, e.g. "min_cyclic".
    pub role: String,
    pub factors: [Vec<usize>; 3],
    pub k: usize,
    /// Size of the triple intersection.
    pub t: usize,
    pub vertices: usize,
    pub edges: usize,
    pub components: Vec<ComponentReport>,
    pub empty: bool,
    pub cyclic: bool,
    pub bipartite: bool,
    pub bridgeless: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub name: String,
    pub cycles: Vec<Vec<usize>>,
    pub length: usize,
    pub ced: usize,
    pub even: bool,
    pub count: usize,
    pub valid: bool,
    pub double: bool,
}

impl CoverReport {
    pub fn new(name: &str, cover: &CycleCover) -> Self {
        CoverReport {
            name: name.to_string(),
            cycles: cover.cycles.iter().map(edges).collect(),
            length: cover.length,
            ced: cover.ced,
            even: cover.even,
            count: cover.count,
            valid: cover.valid,
            double: cover.double,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<CheckResult> for CheckReport {
    fn from(c: CheckResult) -> Self {
        CheckReport {
            name: c.name,
            passed: c.passed,
            detail: c.detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphReport {
    /// Position in the input, from 0.
    pub index: usize,
    /// The graph6 line, or the first line number of an MGF block.
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parse_error: Option<String>,
    pub n: usize,
    pub m: usize,
    pub structure: Outcome<Structure>,
    pub hypohamiltonian: Outcome<bool>,
    pub perfect_matchings: Outcome<usize>,
    /// A 3-edge-coloring, or `None` when none exists.
    pub coloring: Outcome<Option<[Vec<usize>; 3]>>,
    pub oddness: Outcome<usize>,
    pub mu: BTreeMap<usize, Outcome<MuReport>>,
    pub fan_raspaud: Outcome<Option<[Vec<usize>; 3]>>,
    pub fulkerson: Outcome<Option<[Vec<usize>; 6]>>,
    pub cores: Outcome<Vec<CoreReport>>,
    pub covers: Outcome<Vec<CoverReport>>,
    pub scc: Outcome<CoverReport>,
    pub checks: Vec<CheckReport>,
    pub counterexample_candidate: bool,
    /// The graph in MGF when a check failed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_mgf: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl GraphReport {
    pub fn unparsed(index: usize, source: String, error: String) -> Self {
        GraphReport {
            index,
            source,
            parse_error: Some(error),
            n: 0,
            m: 0,
            structure: Outcome::Skipped,
            hypohamiltonian: Outcome::Skipped,
            perfect_matchings: Outcome::Skipped,
            coloring: Outcome::Skipped,
            oddness: Outcome::Skipped,
            mu: BTreeMap::new(),
            fan_raspaud: Outcome::Skipped,
            fulkerson: Outcome::Skipped,
            cores: Outcome::Skipped,
            covers: Outcome::Skipped,
            scc: Outcome::Skipped,
            checks: Vec::new(),
            counterexample_candidate: false,
            witness_mgf: None,
            timings_ms: None,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Last line of a scan.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub counterexample_candidates: usize,
    /// `(index, check name)` for every failed check.
    pub violations: Vec<(usize, String)>,
    pub checks_run: usize,
    pub bridgeless: usize,
    pub colorable: usize,
    pub fan_raspaud_found: usize,
    pub fan_raspaud_searched: usize,
    pub fulkerson_found: usize,
    pub fulkerson_searched: usize,
    /// Graph count per value of μ_3.
    pub mu3_histogram: BTreeMap<usize, usize>,
    pub timeouts: usize,
    pub field_errors: usize,
}

#[derive(Serialize, Deserialize)]
pub struct SummaryLine {
    pub summary: Summary,
}
