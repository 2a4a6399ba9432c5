//! Verification and enumeration of set-theoretic solutions of the
//! Yang-Baxter and reflection equations built from braces, together with
//! exact polynomial-matrix checks of the associated R-matrices, twists and
//! quadratic algebras.

pub mod algebra;
pub mod error;
pub mod matrix;
pub mod quantum;
pub mod reflection;
pub mod report;
pub mod rmatrix;
pub mod ybe;

pub use error::{Error, Result};
