//! Ordered semigroups and categories of ideals of commutative principal ideal rings.

pub mod category;
pub mod cli;
pub mod error;
pub mod ideals;
pub mod instances;
pub mod ordered_semigroup;
pub mod report;
pub mod rings;
pub mod sampling;

pub use error::{AlgebraError, Result};
pub use report::CheckReport;
