//! Perfect-matching covers, cores and cycle covers of cubic graphs.

pub mod checks;
pub mod cores;
pub mod covers;
pub mod cyclecover;
pub mod cycles;
pub mod edgeset;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod structure;

pub use checks::CheckResult;
pub use cores::{build_core, classify_core, find_core, Core, CoreClassification, CorePredicate};
pub use covers::{mu_k, CoverWitness};
pub use cyclecover::{verify_cover, CycleCover};
pub use edgeset::EdgeSet;
pub use error::{CoreError, CoverError, CycleCoverError, GraphError, MatchingError};
pub use graph::{parse_edge_list, Graph, VertexSet};
pub use graph6::parse_graph6;
pub use matching::enumerate_perfect_matchings;
