//! Exact scalars and dense linear algebra over the rationals and the
//! Gaussian rationals `Q(i)`.
//!
//! Everything here is deterministic: elimination always pivots on the first
//! nonzero entry in column order, so echelon forms and kernel bases are
//! canonical for a given input.

mod gaussian;
mod matrix;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use gaussian::GaussianRational;
pub use matrix::Matrix;
pub use rational::{format_rational, int, parse_rational, rational, Rational};

/// Dense matrix over the Gaussian rationals.
pub type MatrixGQ = Matrix<GaussianRational>;
/// Dense matrix over the rationals.
pub type MatrixQ = Matrix<Rational>;

/// A commutative field with exact arithmetic.
pub trait Field:
    Sized
    + Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Field for Rational {}
impl Field for GaussianRational {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: &'static str,
}
