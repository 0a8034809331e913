//! File formats, reports and checks around `xchain-core`.
//!
//! - [`edge_list`] and [`graph6`]: reading and writing graphs,
//! - [`input`]: sources (files, stdin, families) and format detection,
//! - [`report`]: JSON-serializable reports with text rendering,
//! - [`verify`]: the statevector and brute-force cross-checks behind
//!   `xchain verify`.

pub mod edge_list;
pub mod graph6;
pub mod input;
pub mod report;
pub mod verify;

pub use xchain_core;
