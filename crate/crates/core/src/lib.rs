//! Exact Dickson-polynomial machinery.
//!
//! Dickson polynomials of the first kind, the kind-(k+1) family and the
//! multivariate first coordinate, together with Chebyshev polynomials,
//! Waring/Carlitz power-sum formulas and the 2×2 / 3×3 Cayley–Hamilton
//! trace-power engine they come from. Everything is exact: arbitrary
//! precision integers and rationals, prime fields and small extension
//! fields.

pub mod dickson;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod numtheory;
pub mod poly;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
