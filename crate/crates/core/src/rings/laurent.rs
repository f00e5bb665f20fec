//! Laurent polynomials `f = Σ a_i t^i` over the rational function field,
//! with the two degree valuations.
//!
//! For nonzero `f` with lowest stored exponent `N0` and highest `N1`,
//! `deg_t(f) = N0` and `deg_{t^-1}(f) = -N1`; the zero polynomial carries no
//! degree at all (`degrees()` returns `None`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::multipoly::forward_value_ops;
use super::{Rational, RationalFunction, Ring, RingError};

/// The pair of degree valuations of a nonzero Laurent polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LaurentDegrees {
    /// `deg_t`: the lowest exponent `N0`.
    pub deg_t: i64,
    /// `deg_{t^-1}`: minus the highest exponent, `-N1`.
    pub deg_tinv: i64,
}

/// An element of `k[t, t^-1]`, `k` the rational function field.
///
/// Invariant: no stored zero coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPolynomial {
    coefficients: BTreeMap<i64, RationalFunction>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    /// A scalar from `k`, placed in degree 0.
    pub fn constant(c: RationalFunction) -> Self {
        Self::monomial(0, c)
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(RationalFunction::integer(n))
    }

    pub fn rational(q: Rational) -> Self {
        Self::constant(RationalFunction::constant(q))
    }

    /// The loop variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, RationalFunction::one())
    }

    /// `c · t^exp`.
    pub fn monomial(exp: i64, c: RationalFunction) -> Self {
        let mut p = LaurentPolynomial::zero();
        p.insert_term(exp, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, RationalFunction)>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in terms {
            p.insert_term(e, c);
        }
        p
    }

    fn insert_term(&mut self, exp: i64, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.coefficients.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coefficients.len() == 1
            && self
                .coefficients
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Coefficient of `t^exp` (zero if absent): the homogeneous component.
    pub fn coefficient(&self, exp: i64) -> RationalFunction {
        self.coefficients
            .get(&exp)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RationalFunction)> {
        self.coefficients.iter().map(|(&e, c)| (e, c))
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coefficients.keys().copied()
    }

    /// `Some(c)` when the polynomial is the degree-0 scalar `c` or zero.
    pub fn as_scalar(&self) -> Option<RationalFunction> {
        if self.is_zero() {
            return Some(RationalFunction::zero());
        }
        if self.coefficients.len() == 1 {
            return self.coefficients.get(&0).cloned();
        }
        None
    }

    /// Both degree valuations, or `None` for the zero polynomial.
    pub fn degrees(&self) -> Option<LaurentDegrees> {
        let lowest = *self.coefficients.keys().next()?;
        let highest = *self.coefficients.keys().next_back()?;
        Some(LaurentDegrees {
            deg_t: lowest,
            deg_tinv: -highest,
        })
    }

    /// Substitute `t ↦ 1/t`; realizes `deg_{t^-1}(f) = deg_t(f(1/t))`.
    pub fn substitute_t_inverse(&self) -> Self {
        LaurentPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, a)| (e, a * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = LaurentPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Units of `k[t, t^-1]` are the single-term elements `c·t^e`, `c ≠ 0`.
    pub fn inverse(&self) -> Result<Self, RingError> {
        if self.coefficients.len() != 1 {
            return Err(RingError::NotAUnit);
        }
        let (&e, c) = self.coefficients.iter().next().unwrap();
        Ok(Self::monomial(-e, c.inverse().expect("nonzero coefficient")))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coefficients {
            out.insert_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coefficients {
            out.insert_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&ea, ca) in &self.coefficients {
            for (&eb, cb) in &rhs.coefficients {
                out.insert_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, c)| (e, -c))
                .collect(),
        }
    }
}

forward_value_ops!(LaurentPolynomial);

impl Ring for LaurentPolynomial {
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
        LaurentPolynomial::is_zero(self)
    }

    fn is_one(&self) -> bool {
        LaurentPolynomial::is_one(self)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms in ascending exponent order. Coefficients that are not plain
    /// integers are parenthesized so the string re-parses exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coefficients {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                let s = c.to_string();
                if s.contains(' ') {
                    write!(f, "({})", s)?;
                } else {
                    write!(f, "{}", s)?;
                }
                continue;
            }
            let tpart = if e == 1 {
                "t".to_string()
            } else {
                format!("t^{}", e)
            };
            if c.is_one() {
                write!(f, "{}", tpart)?;
            } else if (-c).is_one() {
                write!(f, "-{}", tpart)?;
            } else {
                let s = c.to_string();
                let simple = !s.contains(' ') && !s.contains('/');
                if simple {
                    write!(f, "{}*{}", s, tpart)?;
                } else {
                    write!(f, "({})*{}", s, tpart)?;
                }
            }
        }
        Ok(())
    }
}
