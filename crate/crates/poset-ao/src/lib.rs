//! Exact computation of `ao`, the largest number of vertices inducing a
//! vertex-disjoint union of cliques, for graphs and in particular for
//! comparability graphs of posets (where it equals the size of the largest
//! independent family of chains).
//!
//! The crate bundles:
//!
//! - [`poset`]: a bitset-backed poset type with covers, comparability and
//!   cover graphs, height and width;
//! - [`structure`]: cover-cycle, V-shape and N-shape searches with
//!   witnesses, and central elements;
//! - [`solver`]: an exact branch-and-bound solver for `ao` plus an
//!   independent subset-enumeration oracle;
//! - [`extremal`]: the closed forms and recurrences for the extremal sizes
//!   `lambda(a, h)` and `x(a)` of V-free / acyclic N-free posets, and the
//!   derived bracket on `ao` over all acyclic posets of a given size;
//! - [`constructions`]: generators realizing the extremal values, Boolean
//!   lattices, complete multipartite orders and the graph examples;
//! - [`enumeration`]: isomorph-free generation of all posets on up to
//!   seven elements, the ground truth everything is checked against;
//! - [`io`] and [`cli`]: the text file formats, DOT export and the command
//!   implementations behind the `poset-ao` binary.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability.

pub mod bits;
pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod poset;
pub mod solver;
pub mod structure;

pub use graph::SimpleGraph;
pub use poset::{ChainFamily, CoverPair, CycleError, Poset};
pub use solver::{ao_brute, ao_exact, ao_poset, AoResult, SolverConfig, SolverError};
pub use structure::ShapeWitness;
