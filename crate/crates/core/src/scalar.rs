//! Scalar traits the series and elimination code is generic over.
//!
//! Series coefficients live in a commutative ring with exact arithmetic
//! (`BigInt` in practice, `i64`/`i128` for quick experiments). Rank
//! computations run either fraction-free over an integral domain or by plain
//! Gaussian elimination over a field.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

/// Exact commutative ring usable as a series coefficient.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + PartialOrd
    + Zero
    + One
    + FromPrimitive
    + ToPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn is_negative_coeff(&self) -> bool {
        *self < Self::zero()
    }
}

impl Coefficient for i64 {}
impl Coefficient for i128 {}
impl Coefficient for BigInt {}

/// A field with exact arithmetic, used by the Gaussian-elimination rank.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(value: i64) -> Self;
}

impl Field for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

/// Characteristic of the coefficient field used for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Characteristic {
    #[default]
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// Parses `0` or a prime `p`.
    pub fn from_u64(p: u64) -> Option<Self> {
        match p {
            0 => Some(Characteristic::Zero),
            p if is_prime(p) && p < (1 << 31) => Some(Characteristic::Prime(p)),
            _ => None,
        }
    }

    pub fn as_u64(self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
