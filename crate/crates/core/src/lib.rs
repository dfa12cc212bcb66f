//! Motivic Hilbert zeta functions of planar curve singularities `x^u y^v = 0`
//! and the Khovanov-Rozansky series of the matching torus links.

pub mod closed_forms;
pub mod error;
pub mod kr;
pub mod partitions;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
