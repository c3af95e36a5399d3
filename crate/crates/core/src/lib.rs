//! Combinatorial invariants of level-one cyclotomic KLR algebras of affine
//! type `C_ℓ^(1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: root and weight lattice arithmetic, the bilinear form,
//!   defect, the null root `δ`, the elements `ξ_k^{±i}` and the Weyl group.
//! * [`partitions`]: charged partitions, residues, standard tableaux and
//!   their degree.
//! * [`fock`]: the Fock space crystal (signatures, Kashiwara operators,
//!   Kleshchev partitions) and the q-deformed Fock space action.
//! * [`qdim`]: Laurent polynomials and the graded dimension formula.
//! * [`blocks`]: maximal-weight decomposition and representation type.
//! * [`idempotents`] and [`tables`]: the idempotent residue sequences used
//!   as certificates, and regression checks for every published table.

pub mod blocks;
pub mod cartan;
pub mod error;
pub mod fock;
pub mod idempotents;
pub mod partitions;
pub mod qdim;
pub mod tables;

pub use blocks::{classify, decompose, Decomposition, RepType};
pub use cartan::{CartanDatum, RootVector, Sign, Weight, WeylWord};
pub use error::{Error, Result};
pub use fock::{is_kleshchev, CrystalGraph, FockVector};
pub use partitions::{Charge, Node, Partition, StandardTableau};
pub use qdim::LaurentPoly;
