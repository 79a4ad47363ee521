//! Exact computational engine for metabelian associative algebras over small
//! prime fields.
//!
//! A metabelian algebra is an extension of an abelian algebra by an abelian
//! algebra; equivalently, every product of four elements vanishes;
//! equivalently, its derived subalgebra is abelian. This crate constructs
//! such algebras from datums (actions plus a cocycle), decomposes arbitrary
//! metabelian algebras back into datums, classifies extensions through a
//! discrete cohomology quotient, and exhaustively cross-checks every one of
//! those equivalences at desk scale over F_p.
//!
//! Module map:
//! - [`field`], [`linalg`]: exact arithmetic and the linear-algebra substrate
//!   (RREF, kernels, canonical subspaces, quotient transversals, GL streams).
//! - [`algebra`]: structure-constant algebras, predicates, brute-force
//!   isomorphism and automorphism search, extension equivalence, the
//!   abelian-pair (Itô-style) verifier, and the associative-algebra census.
//! - [`datum`]: discrete bimodules, cocycles, the metabelian product, and the
//!   section-based decomposition.
//! - [`cohomology`]: cocycle and coboundary spaces, the quotient DH2, and the
//!   extension catalog with exhaustive equivalence cross-validation.
//! - [`dim_one`]: the derived-dimension-1 family P_theta, homothety and
//!   isometry classification, its automorphism group model, and the shipped
//!   canonical-form catalogs.
//! - [`codim_one`]: the derived-codimension-1 family built from square-zero
//!   commuting matrix pairs and its extension-class censuses.
//! - [`selftest`]: the acceptance suite exposed as callable criteria.
//! - [`wire`]: JSON wire formats shared with the CLI.

pub mod algebra;
pub mod budget;
pub mod codim_one;
pub mod cohomology;
pub mod datum;
pub mod dim_one;
pub mod error;
pub mod field;
pub mod linalg;
pub mod selftest;
pub mod wire;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::PrimeField;
