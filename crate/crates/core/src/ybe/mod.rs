//! Set-theoretic solutions of the braid equation: construction from
//! braces, verification, inverse maps, reconstruction of the addition and
//! exhaustive search.

pub mod addition;
pub mod braid;
pub mod construct;
pub mod diagnostics;
pub mod enumerate;
pub mod solution;

pub use addition::{reconstruct_addition, AdditionReport};
pub use braid::{verify_braid, BraidReport};
pub use construct::{solution_from_structure, Rule};
pub use diagnostics::{diagnostics, SolutionDiagnostics};
pub use enumerate::{enumerate_solutions, enumerate_solutions_in, SearchMode, SolutionFilter};
pub use solution::SetSolution;
