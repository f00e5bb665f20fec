//! Multivariate rational functions `Q(x_{-M}, …, x_M)` in canonical form,
//! and the partial-derivative derivations `δ_i` acting on them.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::multipoly::forward_value_ops;
use super::{MultiPolynomial, Rational, Ring, RingError};

/// Default half-width of the variable window `[-M, M]`.
pub const DEFAULT_VARIABLE_WINDOW: u32 = 8;

/// The derivation `δ_i = ∂/∂x_i`, zero on rationals and on every other
/// variable. Constructed against an explicit window so out-of-range indices
/// are rejected up front.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Derivation {
    index: i32,
}

impl Derivation {
    pub fn new(index: i32, window: u32) -> Result<Self, RingError> {
        if index.unsigned_abs() > window {
            return Err(RingError::IndexOutsideWindow { index, window });
        }
        Ok(Derivation { index })
    }

    pub fn index(&self) -> i32 {
        self.index
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d/dx_{}", self.index)
    }
}

/// An element of the rational function field, stored as `num / den` with
/// `gcd(num, den) = 1` and `den` monic under the graded-lex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: MultiPolynomial,
    den: MultiPolynomial,
}

impl RationalFunction {
    /// Build `num / den` in canonical form. Fails only when `den = 0`.
    pub fn new(num: MultiPolynomial, den: MultiPolynomial) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: MultiPolynomial, den: MultiPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num,
                den: MultiPolynomial::one(),
            };
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = MultiPolynomial::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Make the denominator monic; the scale factor is a unit.
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: MultiPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: MultiPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPolynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPolynomial::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(MultiPolynomial::integer(n))
    }

    /// The variable `x_i`.
    pub fn variable(index: i32) -> Self {
        Self::from_poly(MultiPolynomial::variable(index))
    }

    pub fn numerator(&self) -> &MultiPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the value is the constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, exp: i64) -> Result<Self, RingError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Apply `δ` by the quotient rule: `(n'd - nd') / d²`.
    pub fn partial_derivative(&self, d: &Derivation) -> Self {
        let i = d.index();
        let dn = self.num.partial_derivative(i);
        let dd = self.den.partial_derivative(i);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        Self::canonical(num, den)
    }

    /// Indices `i` with `δ_i(f) ≠ 0`; by canonicity these are exactly the
    /// variables appearing in the reduced numerator or denominator.
    pub fn support_variables(&self) -> BTreeSet<i32> {
        let mut vars = self.num.variables();
        vars.extend(self.den.variables());
        vars
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_value_ops!(RationalFunction);

impl Ring for RationalFunction {
    fn zero_of(&self) -> Self {
        Self::zero()
    }

    fn one_of(&self) -> Self {
        Self::one()
    }

    fn from_i64_of(&self, n: i64) -> Self {
        Self::integer(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }

    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: i32) -> RationalFunction {
        RationalFunction::variable(i)
    }

    fn q(n: i64) -> RationalFunction {
        RationalFunction::integer(n)
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&t(1) * &t(1), t(1).pow(2).unwrap());
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let inv = t(1).inverse().unwrap();
        assert!((&inv * &t(1)).is_one());
    }

    #[test]
    fn gcd_cancellation() {
        // (x_1^2 - 1)/(x_1 - 1) * 1 = x_1 + 1, checked against the product
        // (x_1 + 1)(x_1 - 1) = x_1^2 - 1.
        let num = &t(1).pow(2).unwrap() - &q(1);
        let den = &t(1) - &q(1);
        let expected = &t(1) + &q(1);
        assert_eq!(&expected * &den, num);
        let reduced = num.checked_div(&den).unwrap();
        assert_eq!(&reduced * &q(1), expected);
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(
            q(1).checked_div(&RationalFunction::zero()),
            Err(RingError::DivisionByZero)
        );
        assert_eq!(
            RationalFunction::new(MultiPolynomial::one(), MultiPolynomial::zero()),
            Err(RingError::DivisionByZero)
        );
    }

    #[test]
    fn derivative_power_rule() {
        let d = Derivation::new(1, 8).unwrap();
        let f = t(1).pow(2).unwrap();
        assert_eq!(f.partial_derivative(&d), &q(2) * &t(1));
    }

    #[test]
    fn derivative_of_other_variable_is_zero() {
        let d = Derivation::new(1, 8).unwrap();
        assert!(t(2).partial_derivative(&d).is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        // δ_1(1/x_1) = -1/x_1^2, cross-checked by the Leibniz identity
        // x_1·δ(1/x_1) + δ(x_1)·(1/x_1) = δ(1) = 0.
        let d = Derivation::new(1, 8).unwrap();
        let f = t(1).inverse().unwrap();
        let df = f.partial_derivative(&d);
        let expected = -&t(1).pow(-2).unwrap();
        assert_eq!(df, expected);
        let leibniz = &(&t(1) * &df) + &(&t(1).partial_derivative(&d) * &f);
        assert!(leibniz.is_zero());
    }

    #[test]
    fn derivation_window_enforced() {
        assert!(Derivation::new(8, 8).is_ok());
        assert_eq!(
            Derivation::new(9, 8),
            Err(RingError::IndexOutsideWindow { index: 9, window: 8 })
        );
        assert!(Derivation::new(-8, 8).is_ok());
        assert!(Derivation::new(-9, 8).is_err());
    }

    #[test]
    fn support_constant_is_empty() {
        assert!(q(5).support_variables().is_empty());
    }

    #[test]
    fn support_direct_appearance() {
        let f = &t(1) + &t(-2);
        let vars: Vec<i32> = f.support_variables().into_iter().collect();
        assert_eq!(vars, vec![-2, 1]);
    }

    #[test]
    fn support_cancellation_removes_variable() {
        // (x_1 x_3) / x_3 canonicalizes to x_1, and δ_3 of it is zero.
        let f = (&t(1) * &t(3)).checked_div(&t(3)).unwrap();
        let vars: Vec<i32> = f.support_variables().into_iter().collect();
        assert_eq!(vars, vec![1]);
        let d3 = Derivation::new(3, 8).unwrap();
        assert!(f.partial_derivative(&d3).is_zero());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let f = RationalFunction::new(
            MultiPolynomial::variable(1).scale(&Rational::from_integer(2.into())),
            MultiPolynomial::integer(4),
        )
        .unwrap();
        let again = RationalFunction::new(f.num.clone(), f.den.clone()).unwrap();
        assert_eq!(f, again);
        // 2x/4 = x/2 with monic denominator 1 after scaling: num = x/2.
        assert!(f.den.is_one());
    }

    #[test]
    fn display_round_shape() {
        let f = (&(&t(1).pow(3).unwrap() + &q(1))).checked_div(&t(1)).unwrap();
        assert_eq!(f.to_string(), "(x_1^3 + 1)/(x_1)");
        assert_eq!(q(-3).checked_div(&q(2)).unwrap().to_string(), "-3/2");
    }
}
