//! Computational workbench for A-type, B-type and affine braid groups:
//! presentations and relation tables, a faithful-action equality oracle,
//! the arrows between the three towers, membership and decomposition
//! procedures, Schreier rewriting of the free kernels, and Markov-move
//! closure machinery with a bracket-polynomial invariant.

pub mod atlas;
pub mod cli;
pub mod closure;
pub mod decompose;
pub mod error;
pub mod free;
pub mod oracle;
pub mod poly;
pub mod tl;
pub mod word;

pub use error::{Error, Result};
