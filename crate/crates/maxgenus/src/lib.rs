//! Exact computer algebra for good weighted-homogeneous polynomials,
//! primitive multiple line constructions and maximum genus numerology.

pub mod basis;
pub mod error;
pub mod field;
pub mod genus;
pub mod groebner;
pub mod lift;
pub mod linalg;
pub mod oracle;
pub mod phi;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
