//! Exact computation and certificate checking for zero forcing and graph
//! cleaning with brushes, on graphs and their line graphs.
//!
//! The library provides exhaustive solvers for the zero-forcing number Z,
//! the brushing number B and its one-brush-per-edge variant b; scripted
//! cleaning strategies for prisms and chained six-cycles; and three
//! constructive translations that turn line-graph certificates into
//! replayable certificates for the base graph, establishing
//! B(G) <= b(G) <= Z(L(G)), Z(G) <= Z(L(G)) and B(G) <= B(L(G)),
//! b(G) <= b(L(G)) instance by instance.

pub mod brushing;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod forcing;
pub mod graph;
pub mod report;
pub mod translate;

pub use error::{Error, Result};
pub use graph::{add_isolated, cartesian_product, line_graph, EdgeId, Graph, LineGraphMap};
