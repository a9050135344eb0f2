//! Exact rational computations on finite-dimensional Lie algebras: subideal
//! decisions, derivation algebras and towers, radical and Levi criteria,
//! invariant-form criteria and normalizer towers.
//!
//! ```
//! use lietrans::catalog;
//! use lietrans::liealg::span_ints;
//! use lietrans::transitivity::subideal_chain;
//!
//! let g = catalog::heisenberg3();
//! let x = span_ints(&g, &[&[1, 0, 0]]).unwrap();
//! let verdict = subideal_chain(&g, &x).unwrap();
//! assert!(verdict.is_subideal());
//! assert!(!g.is_ideal(&x).unwrap());
//! ```

pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod derivations;
pub mod error;
pub mod exactlin;
pub mod liealg;
pub mod report;
pub mod transitivity;

pub use error::{Error, Result};
pub use exactlin::{Inertia, Mat, Rat, Subspace};
pub use liealg::{LieAlgebra, LinMap, Subalgebra, SymForm};
