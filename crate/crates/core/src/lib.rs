//! Exact characters of the symmetric group, Kronecker coefficients and
//! partition-counting series, aimed at checking tensor-square positivity for
//! the staircase, chopped-square and caret shapes.
//!
//! Every character value and Kronecker coefficient is an arbitrary-precision
//! integer. Start with [`partition::Partition`] and [`character::mn_char`].

pub mod budget;
pub mod character;
pub mod cli;
pub mod counting;
pub mod error;
pub mod kronecker;
pub mod partition;
pub mod report;
pub mod saxlcert;
pub mod stats;

pub use budget::Budget;
pub use error::{Error, Result};
pub use partition::{Family, Partition, PrincipalHooks};
