//! Exact arithmetic in `Q` (point count), `T` (homological degree) and `a`.

pub mod json;
pub mod laurent;
pub mod qseries;
pub mod rational;

pub use laurent::{LaurentPoly, Monomial};
pub use qseries::{Divergence, QSeries};
pub use rational::{FactoredRational, Factor};

use crate::error::Result;

/// A variable that can be specialized to 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    T,
    A,
}

pub trait Specialize: Sized {
    fn specialize(&self, var: Var, value: u8) -> Result<Self>;
}

impl Specialize for LaurentPoly {
    fn specialize(&self, var: Var, value: u8) -> Result<Self> {
        match var {
            Var::T => self.specialize_t(value),
            Var::A => self.specialize_a(value),
        }
    }
}

impl Specialize for QSeries {
    fn specialize(&self, var: Var, value: u8) -> Result<Self> {
        match var {
            Var::T => self.specialize_t(value),
            Var::A => self.specialize_a(value),
        }
    }
}
