//! Exact scalar arithmetic.
//!
//! Three rings are provided, all with canonical internal forms:
//!
//! * [`Rational`] — arbitrary-precision rationals (reduced, positive
//!   denominator).
//! * [`RationalFunction`] — the field `Q(x_{-M}, …, x_M)` of multivariate
//!   rational functions, with the partial-derivative derivations `δ_i`.
//! * [`LaurentPolynomial`] — the ring `k[t, t^-1]` over that field, carrying
//!   the two degree valuations read off from the lowest and highest stored
//!   exponents.

mod laurent;
mod multipoly;
mod ratfunc;

pub use laurent::{LaurentDegrees, LaurentPolynomial};
pub use multipoly::{Monomial, MultiPolynomial};
pub use ratfunc::{Derivation, RationalFunction, DEFAULT_VARIABLE_WINDOW};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("derivation index {index} outside the window [-{window}, {window}]")]
    IndexOutsideWindow { index: i32, window: u32 },
    #[error("element is not a unit")]
    NotAUnit,
}

/// Common interface of the exact coefficient rings that matrices are built
/// over.
///
/// Arithmetic goes through the by-value `std::ops` bounds; the trait itself
/// only adds what generic matrix code needs beyond them. `zero_of` / `one_of`
/// take a receiver because some rings (number fields) need a live element to
/// know which ring they belong to.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Sized
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The additive identity of the ring this element lives in.
    fn zero_of(&self) -> Self;

    /// The multiplicative identity of the ring this element lives in.
    fn one_of(&self) -> Self;

    /// `n · 1` in the ring of this element.
    fn from_i64_of(&self, n: i64) -> Self;

    /// The multiplicative inverse, or `None` if the element is not a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_of()
    }
}

impl Ring for Rational {
    fn zero_of(&self) -> Self {
        Rational::zero()
    }

    fn one_of(&self) -> Self {
        Rational::one()
    }

    fn from_i64_of(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}
