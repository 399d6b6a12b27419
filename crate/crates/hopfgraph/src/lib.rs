//! Combinatorial Hopf algebras of finite simple graphs.
//!
//! The crate provides exact-arithmetic implementations of six products and
//! coproducts on the free vector space over isomorphism classes of graphs,
//! the resulting bialgebra/Hopf structures and antipodes, four
//! subgraph-counting signatures with their character and Chen identities,
//! translation maps between counting semantics, and the decomposition of
//! counts into polynomials in connected-graph counts.

pub mod basis;
pub mod coproducts;
pub mod counting;
pub mod error;
pub mod graph;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod morphisms;
pub mod names;
pub mod par;
pub mod products;
pub mod translate;
pub mod universe;

pub use error::{Error, Result};
pub use graph::{canonicalize, CanonicalGraph, Graph};
pub use linalg::{GraphSum, Grading, Rat, TensorSum};
