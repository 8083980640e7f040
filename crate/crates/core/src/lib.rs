//! Turán-type extremal problems for Berge hypergraphs.
//!
//! The crate covers Berge-F containment with certificates, the classical
//! extremal constructions, exact small-instance Turán numbers, runnable
//! versions of the standard counting arguments and a catalog of bound
//! formulas evaluated in exact arithmetic.

pub mod audit;
pub mod berge;
pub mod bounds;
pub mod cliques;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod field;
pub mod hypergraph;
pub mod matching;
pub mod reduction;
pub mod search;

pub use berge::{contains_berge, is_berge_free, oracle_contains_berge, BergeWitness};
pub use cliques::{count_cliques, list_triangles, CliqueCount};
pub use error::{Error, Result};
pub use hypergraph::{parse_structure, Hypergraph, Multigraph, Structure};
