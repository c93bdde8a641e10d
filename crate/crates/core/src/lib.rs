//! Antimagic orientations of 2d-regular graphs with any number of odd
//! components.
//!
//! The construction tours every component, marks one occurrence of each
//! vertex as real, orients the resulting circuits path by path and hands out
//! labels in blocks so that no two vertices share a vertex-sum. Every result
//! can be re-checked with [`verify`] and cross-checked with [`oracle`].

pub mod cli;
pub mod euler;
pub mod format;
pub mod gen;
pub mod graph;
pub mod label;
pub mod layout;
pub mod oracle;
pub mod orient;
pub mod pipeline;
pub mod verify;
pub mod x0;

pub use graph::{build_graph, classify_components, ComponentInfo, Graph, GraphError, Parity};
pub use pipeline::{construct, Config, Construction, PipelineError};
pub use verify::{verify_construction, VerificationReport};
