//! relhom: an exact-arithmetic workbench for relative homological algebra
//! over finite-dimensional bound quiver algebras.
//!
//! The library builds algebras kQ/I over a prime field, computes in the
//! abelian category of their finite-dimensional representations, and turns
//! statements about balanced pairs, relative cotorsion pairs, relative Ext
//! and relative singularity categories into machine-checkable certificates.

pub mod accept;
pub mod algebra;
pub mod balanced;
pub mod catalog;
pub mod commands;
pub mod complex;
pub mod cotorsion;
pub mod derived;
pub mod dual;
pub mod error;
pub mod field;
pub mod homalg;
pub mod matrix;
pub mod module;
pub mod report;
pub mod resolution;
pub mod sample;
pub mod ses;
pub mod subcat;
pub mod summand;
pub mod workspace;

pub use error::{Error, Result};
