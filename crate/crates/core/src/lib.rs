//! Core algorithms for studying Ramsey numbers of cycles versus fans.
//!
//! Everything in this crate is pure computation over small dense graphs:
//! graph and two-coloring data types, graph6 encoding, maximum matchings with
//! blossom contraction, exact cycle structure (girth, circumference, cycle
//! spectrum), the extremal lower-bound colorings together with a certificate
//! verifier, a symmetry-pruned exhaustive search engine, and checkers for the
//! classical lemmas used in cycle/fan Ramsey arguments.
//!
//! The crate is `no_std` and only needs `alloc`. Threads, wall clocks, files
//! and the command line live in the `ramsey-workbench` crate.

#![no_std]

extern crate alloc;

pub mod census;
pub mod constructions;
pub mod cycles;
mod error;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod matching;
pub mod ratio;
pub mod search;

pub use error::{Error, Graph6Error, Result};
pub use graph::{SimpleGraph, TwoColoring, VertexSet};
pub use ratio::{parse_rational, RatioParam, Rational};
