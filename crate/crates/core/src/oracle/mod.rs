//! Independent reference computations used to check the engine.
//!
//! Nothing here shares traversal code with [`crate::trail`]: the
//! enumerator backtracks over raw arc lists, the counter goes through the
//! BEST theorem, and the full-language sequence comes from Lyndon words.

mod best;
mod enumerate;
mod fkm;
mod generate;

pub use best::{arborescence_count, best_count};
pub use enumerate::{
    bruteforce_minimal_sequence, bruteforce_minimal_trail, enumerate_eulerian_trails,
    TrailEnumeration, DEFAULT_LIMIT,
};
pub use fkm::{fkm_sequence, lyndon_words};
pub use generate::{random_eulerian_graph, GeneratorConfig};

use thiserror::Error;

use crate::graph::EulerianReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search exceeded {0} states")]
    LimitExceeded(u64),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("no eulerian trail starts at {0}")]
    NoTrail(String),
    #[error("graph is not eulerian: {0}")]
    NotEulerian(EulerianReport),
    #[error("no eulerian graph after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}
