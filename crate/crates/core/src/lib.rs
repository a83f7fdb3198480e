//! Exact construction and verification of the higher-order Jacobi-type
//! differential operator and the identities surrounding it.
//!
//! All arithmetic is over arbitrary-precision rationals; every check in this
//! crate is an exact equality.

pub mod error;
pub mod exactalg;
pub mod highops;
pub mod jacobi;
pub mod jacobitype;
pub mod orthogonality;
pub mod report;
pub mod special;
pub mod suites;
pub mod table;
pub mod testfns;
pub mod ultra;

pub use error::{Error, Result};
