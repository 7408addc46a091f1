//! The exact scalar field abstraction.
//!
//! Every algebraic routine in this crate is generic over a [`Field`]: an
//! exact field with decidable equality. The concrete session field is the
//! cyclotomic rational-function field [`crate::Scalar`], but plain
//! `BigRational` works wherever no roots of unity are involved.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field with decidable equality.
///
/// `roots_of_unity(n)` returns the complete list of solutions of `x^n = 1`
/// in the field when that list is known to be exhaustive, and `None` when
/// the field does not contain all `n`-th roots (so an enumeration based on
/// it would be incomplete).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn from_i64(n: i64) -> Self;

    fn roots_of_unity(n: u32) -> Option<Vec<Self>>;
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn roots_of_unity(n: u32) -> Option<Vec<Self>> {
        // Q contains exactly the first and second roots of unity.
        match n {
            1 => Some(vec![BigRational::one()]),
            2 => Some(vec![BigRational::one(), -BigRational::one()]),
            _ => None,
        }
    }
}
