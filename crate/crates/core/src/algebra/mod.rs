//! Finite groups, braces, skew braces and near braces.

pub mod enumerate;
pub mod ring;
pub mod structure;
pub mod table;

pub use enumerate::{canonical_form, enumerate_near_braces, enumerate_near_braces_with, EnumerationOptions};
pub use ring::{brace_from_radical_ring, RingTable};
pub use structure::{require_level, verify_structure, Arith, Derived, Level, NearBrace, StructureReport};
pub use table::{Failure, GroupTable, OpTable};
