//! Corpus analysis for cubic graphs: per-graph pipeline, JSON Lines
//! reports, self-auditing of witnesses and the `cubcov` command line.

pub mod analyze;
pub mod audit;
pub mod corpus;
pub mod report;
pub mod scan;

pub use analyze::{analyze, Op, Options};
pub use corpus::{read_corpus, Entry, Format};
pub use report::{GraphReport, Outcome, Summary};
pub use scan::{scan, ScanOutput};
