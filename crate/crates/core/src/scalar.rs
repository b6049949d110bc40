//! Scalar types for Euler-characteristic arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer type usable as a Hochschild Euler characteristic.
pub trait EulerInt:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> EulerInt for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Exact rational over an Euler scalar.
pub type Rational<T> = Ratio<T>;

pub type BigRational = Ratio<BigInt>;
