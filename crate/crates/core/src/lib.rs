//! Lexicographically minimal Eulerian trails in arc-labeled digraphs.
//!
//! Given an Eulerian digraph whose out-arcs at every vertex carry distinct
//! labels, and a start vertex `r`, [`minimal_eulerian_trail`] returns the
//! Eulerian trail from `r` whose label word is lexicographically least. It
//! runs in time linear in the number of arcs once the graph is built.
//!
//! [`minimal_debruijn_sequence`] applies this to the de Bruijn graph of an
//! arbitrary dictionary of equal-length words and returns its least de
//! Bruijn sequence.
//!
//! ```
//! use lexeuler::{build_graph, minimal_eulerian_trail};
//!
//! let g = build_graph(&[("0", '0', "0"), ("0", '1', "1"), ("1", '0', "0"), ("1", '1', "1")])?;
//! let (trail, stats) = minimal_eulerian_trail(&g, g.vertex("0").unwrap())?;
//! assert_eq!(trail.label().iter().collect::<String>(), "0110");
//! assert!(stats.arc_visits <= 2 * g.arc_count());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! The [`oracle`] module holds brute-force and closed-form references used
//! by the test suites.

pub mod debruijn;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod trail;

pub use debruijn::{
    build_debruijn_graph, circular_factors, minimal_debruijn_sequence, validate_sequence,
    DeBruijnSequence, DebruijnError, DebruijnGraph, Dictionary,
};
pub use graph::{
    build_graph, Arc, ArcId, DegreeImbalance, EulerianReport, GraphBuilder, GraphError,
    LabeledDigraph, Symbol, VertexId,
};
pub use trail::{
    minimal_eulerian_trail, minimal_eulerian_trail_with, verify_eulerian_trail, EngineOptions,
    EngineState, Handle, LinkedTrail, Trail, TrailError, TrailStats,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/minimal-trail.md")]
    mod minimal_trail {}
    #[doc = include_str!("../../../book/src/debruijn.md")]
    mod debruijn {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
