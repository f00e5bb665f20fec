//! Exact number-field arithmetic and the constructive bounded-generation
//! machinery for `SL_2` over number fields.
//!
//! A [`NumberField`] is `Q(α)` for a monic irreducible integer polynomial;
//! irreducibility is verified exactly at construction. Elements are
//! coordinate vectors over the power basis `1, α, …, α^{n-1}`; the order
//! `Z[α]` (all coordinates integral) stands in for the ring of integers.

mod bounded_gen;
mod double_embedding;
mod primitive;
mod qpoly;

pub use bounded_gen::{
    decompose_3n0, CertificateFactor, DecompositionCertificate, FactorTag, BOUNDED_FACTOR_BUDGET,
};
pub use double_embedding::{double_embedding_orbit, DoubleEmbeddingReport, OrbitOutcome};
pub use primitive::{
    even_power_coordinates, is_primitive, primitive_power_search, vandermonde_span_solve,
    PRIMITIVE_SEARCH_CAP,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrices::MatrixError;
use crate::rings::{Rational, Ring};

use qpoly::QPoly;

/// Errors from number-field construction and the operations built on it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberFieldError {
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("minimal polynomial must have integer coefficients")]
    NonIntegerCoefficients,
    #[error("minimal polynomial must have degree at least 1")]
    DegreeZero,
    #[error("minimal polynomial is reducible (factor: {factor})")]
    Reducible { factor: String },
    #[error("element has {found} coordinates, the field has degree {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("primitive-power search exceeded the candidate cap {cap}")]
    SearchCapExceeded { cap: usize },
    #[error("interpolation points must be pairwise distinct")]
    RepeatedPoints,
    #[error("expected {expected} interpolation points, found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("target polynomial degree exceeds k = {k}")]
    TargetDegreeTooHigh { k: usize },
    #[error("x^2 is not a primitive element; the even powers do not span")]
    NotPrimitiveSquare,
    #[error("operation requires a quadratic field, found degree {found}")]
    NotQuadratic { found: usize },
    #[error("congruence level must be at least 1")]
    InvalidLevel,
    #[error("certificate verification failed: {reason}")]
    CertificateInvalid { reason: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, PartialEq, Eq)]
struct FieldInner {
    min_poly: QPoly,
    degree: usize,
}

/// The number field `Q(α)` with `α` a root of a monic irreducible integer
/// polynomial. Cheap to clone; elements keep a handle to their field.
#[derive(Clone, Debug)]
pub struct NumberField {
    inner: Arc<FieldInner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for NumberField {}

impl NumberField {
    /// Construct from the minimal polynomial's coefficients in ascending
    /// order (constant first, leading 1 last). Irreducibility over `Q` is
    /// verified exactly: rational-root test plus a Kronecker factor search
    /// up to half the degree.
    pub fn new(min_poly: &[Rational]) -> Result<Self, NumberFieldError> {
        let poly = QPoly::from_coeffs(min_poly.to_vec());
        let degree = match poly.degree() {
            None | Some(0) => return Err(NumberFieldError::DegreeZero),
            Some(d) => d,
        };
        if !poly.is_monic() {
            return Err(NumberFieldError::NotMonic);
        }
        if !poly.has_integer_coeffs() {
            return Err(NumberFieldError::NonIntegerCoefficients);
        }
        if let Err(factor) = qpoly::check_irreducible(&poly) {
            return Err(NumberFieldError::Reducible {
                factor: factor
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            });
        }
        Ok(NumberField {
            inner: Arc::new(FieldInner {
                min_poly: poly,
                degree,
            }),
        })
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_integer_min_poly(coeffs: &[i64]) -> Result<Self, NumberFieldError> {
        let rc: Vec<Rational> = coeffs
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        Self::new(&rc)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Minimal polynomial coefficients, ascending, length `degree + 1`.
    pub fn min_poly(&self) -> Vec<Rational> {
        (0..=self.inner.degree)
            .map(|i| self.inner.min_poly.coeff(i))
            .collect()
    }

    pub fn zero(&self) -> NFElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> NFElement {
        self.from_rational(Rational::one())
    }

    /// The defining generator `α`.
    pub fn generator(&self) -> NFElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        if self.degree() == 1 {
            // Q(α) = Q with α the root of the degree-1 polynomial.
            let root = -self.inner.min_poly.coeff(0);
            coords[0] = root;
        } else {
            coords[1] = Rational::one();
        }
        NFElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_rational(&self, q: Rational) -> NFElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        NFElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_integer(&self, n: i64) -> NFElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    /// Build an element from power-basis coordinates.
    pub fn element(&self, coords: Vec<Rational>) -> Result<NFElement, NumberFieldError> {
        if coords.len() != self.degree() {
            return Err(NumberFieldError::CoordinateLength {
                expected: self.degree(),
                found: coords.len(),
            });
        }
        Ok(NFElement {
            field: self.clone(),
            coords,
        })
    }

    fn reduce(&self, poly: QPoly) -> Vec<Rational> {
        let rem = poly.div_rem(&self.inner.min_poly).1;
        (0..self.degree()).map(|i| rem.coeff(i)).collect()
    }

    /// The nontrivial automorphism of a quadratic field:
    /// `σ(a + bα) = (a - bp) - bα` for minimal polynomial `u² + pu + q`.
    pub fn quadratic_conjugate(&self, e: &NFElement) -> Result<NFElement, NumberFieldError> {
        if self.degree() != 2 {
            return Err(NumberFieldError::NotQuadratic {
                found: self.degree(),
            });
        }
        assert!(e.field == *self, "element from a different field");
        let p = self.inner.min_poly.coeff(1);
        let a = e.coords[0].clone();
        let b = e.coords[1].clone();
        Ok(NFElement {
            field: self.clone(),
            coords: vec![a - b.clone() * p, -b],
        })
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[u]/(")?;
        let coeffs = self.min_poly();
        let mut first = true;
        for (i, c) in coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", abs)?,
                1 if One::is_one(&abs) => write!(f, "u")?,
                1 => write!(f, "{}*u", abs)?,
                _ if One::is_one(&abs) => write!(f, "u^{}", i)?,
                _ => write!(f, "{}*u^{}", abs, i)?,
            }
        }
        write!(f, ")")
    }
}

/// An element of a number field in power-basis coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NFElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NFElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "mixed elements from different number fields"
        );
    }

    fn to_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(self.coords.clone())
    }

    /// `Some(q)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(|c| Zero::is_zero(c)) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Whether all coordinates are integers, i.e. membership in `Z[α]`.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    /// Least positive integer `q` with `q · self ∈ Z[α]`: the lcm of the
    /// coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut acc = BigInt::one();
        for c in &self.coords {
            acc = acc.lcm(c.denom());
        }
        acc.abs()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = self.field.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, NumberFieldError> {
        if Ring::is_zero(self) {
            return Err(NumberFieldError::DivisionByZero);
        }
        let (g, s, _) = self.to_qpoly().ext_gcd(&self.field.inner.min_poly);
        debug_assert!(g.degree() == Some(0), "minimal polynomial is irreducible");
        let ginv = g.coeff(0).recip();
        let coords = self.field.reduce(s.scale(&ginv));
        Ok(NFElement {
            field: self.field.clone(),
            coords,
        })
    }
}

impl Add for &NFElement {
    type Output = NFElement;
    fn add(self, rhs: &NFElement) -> NFElement {
        self.assert_same_field(rhs);
        NFElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl Sub for &NFElement {
    type Output = NFElement;
    fn sub(self, rhs: &NFElement) -> NFElement {
        self.assert_same_field(rhs);
        NFElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl Mul for &NFElement {
    type Output = NFElement;
    fn mul(self, rhs: &NFElement) -> NFElement {
        self.assert_same_field(rhs);
        let coords = self.field.reduce(self.to_qpoly().mul(&rhs.to_qpoly()));
        NFElement {
            field: self.field.clone(),
            coords,
        }
    }
}

impl Neg for &NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        NFElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Add for NFElement {
    type Output = NFElement;
    fn add(self, rhs: NFElement) -> NFElement {
        &self + &rhs
    }
}

impl Sub for NFElement {
    type Output = NFElement;
    fn sub(self, rhs: NFElement) -> NFElement {
        &self - &rhs
    }
}

impl Mul for NFElement {
    type Output = NFElement;
    fn mul(self, rhs: NFElement) -> NFElement {
        &self * &rhs
    }
}

impl Neg for NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        -&self
    }
}

impl Ring for NFElement {
    fn zero_of(&self) -> Self {
        self.field.zero()
    }

    fn one_of(&self) -> Self {
        self.field.one()
    }

    fn from_i64_of(&self, n: i64) -> Self {
        self.field.from_integer(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| Zero::is_zero(c))
    }
}

impl fmt::Display for NFElement {
    /// Power-basis coordinate vector, e.g. `[0, 1/3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    pub(crate) fn gaussian() -> NumberField {
        NumberField::from_integer_min_poly(&[1, 0, 1]).unwrap() // u^2 + 1
    }

    pub(crate) fn sqrt2() -> NumberField {
        NumberField::from_integer_min_poly(&[-2, 0, 1]).unwrap() // u^2 - 2
    }

    #[test]
    fn construction_validates() {
        assert!(NumberField::from_integer_min_poly(&[1, 0, 1]).is_ok());
        assert_eq!(
            NumberField::from_integer_min_poly(&[1, 0, 2]),
            Err(NumberFieldError::NotMonic)
        );
        assert!(matches!(
            NumberField::from_integer_min_poly(&[-1, 0, 1]),
            Err(NumberFieldError::Reducible { .. })
        ));
        assert!(matches!(
            NumberField::new(&[qq(1, 2), q(1)]).unwrap_err(),
            NumberFieldError::NonIntegerCoefficients
        ));
        assert_eq!(
            NumberField::new(&[q(1)]),
            Err(NumberFieldError::DegreeZero)
        );
    }

    #[test]
    fn gaussian_arithmetic() {
        let f = gaussian();
        let i = f.generator();
        // i^2 = -1
        assert_eq!(&i * &i, f.from_integer(-1));
        // (1+i)(1-i) = 2
        let a = &f.one() + &i;
        let b = &f.one() - &i;
        assert_eq!(&a * &b, f.from_integer(2));
    }

    #[test]
    fn inverse_in_sqrt2() {
        let f = sqrt2();
        let x = &f.one() + &f.generator(); // 1 + √2
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        // (1+√2)^-1 = √2 - 1.
        assert_eq!(inv, &f.generator() - &f.one());
        assert_eq!(
            f.zero().inverse(),
            Err(NumberFieldError::DivisionByZero)
        );
    }

    #[test]
    fn integrality_and_denominators() {
        let f = sqrt2();
        let x = f.element(vec![q(0), qq(1, 3)]).unwrap(); // √2/3
        assert!(!x.is_integral());
        assert_eq!(x.denominator_lcm(), BigInt::from(3));
        let scaled = &x * &f.from_integer(3);
        assert!(scaled.is_integral());
    }

    #[test]
    fn quadratic_conjugation() {
        let f = sqrt2();
        let x = f.element(vec![q(1), q(1)]).unwrap(); // 1 + √2
        let sigma = f.quadratic_conjugate(&x).unwrap();
        assert_eq!(sigma, f.element(vec![q(1), q(-1)]).unwrap());
        // σ is an automorphism: σ(x·y) = σ(x)·σ(y).
        let y = f.element(vec![q(2), q(-3)]).unwrap();
        let lhs = f.quadratic_conjugate(&(&x * &y)).unwrap();
        let rhs = &f.quadratic_conjugate(&x).unwrap() * &f.quadratic_conjugate(&y).unwrap();
        assert_eq!(lhs, rhs);
        let cubic = NumberField::from_integer_min_poly(&[-2, 0, 0, 1]).unwrap();
        assert_eq!(
            cubic.quadratic_conjugate(&cubic.one()),
            Err(NumberFieldError::NotQuadratic { found: 3 })
        );
    }

    #[test]
    fn display_coordinates() {
        let f = sqrt2();
        let x = f.element(vec![q(0), qq(1, 3)]).unwrap();
        assert_eq!(x.to_string(), "[0, 1/3]");
        assert_eq!(f.to_string(), "Q[u]/(u^2 - 2)");
    }
}
