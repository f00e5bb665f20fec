//! Bounded generation of `SL_2(L)` by `SL_2(Q)` and a congruence subgroup:
//! every element factors into at most `3 · 11 = 33` matrices drawn from the
//! two subgroups.
//!
//! The pipeline first factors `g` into at most 11 elementary matrices over
//! `L` via the Bruhat decomposition, then replaces each elementary factor
//! `u_±(l)` with an irrational parameter by the exact sandwich
//!
//! ```text
//! u_+(l) = diag((aq)^-1, aq) · u_+(a²q²l) · diag(aq, (aq)^-1)
//! ```
//!
//! with `q` the least positive integer clearing the denominators of `l`
//! (so `ql ∈ Z[α]`, hence `q²l ∈ Z[α]`) and `a = N` the congruence level,
//! which puts the middle factor in the principal congruence subgroup `V` of
//! level `N` inside `SL_2(Z[α])` while the conjugators lie in `SL_2(Q)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrices::sl2::{bruhat_decompose_sl2, u_minus, u_plus, ElementaryFactor};
use crate::matrices::Matrix;
use crate::rings::{Rational, Ring};

use super::{NFElement, NumberFieldError};

/// `3 · 11`: the factor budget of [`decompose_3n0`].
pub const BOUNDED_FACTOR_BUDGET: usize = 33;

/// Which designated subgroup a certificate factor belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorTag {
    /// All entries in `Q`.
    Rational,
    /// Entries in `Z[α]` and congruent to the identity mod `N`.
    VMember,
}

impl fmt::Display for FactorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorTag::Rational => write!(f, "RATIONAL"),
            FactorTag::VMember => write!(f, "V_MEMBER"),
        }
    }
}

/// One tagged factor of a decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateFactor {
    pub tag: FactorTag,
    pub matrix: Matrix<NFElement>,
}

/// A verified factorization of an `SL_2(L)` element into at most 33 factors
/// tagged `RATIONAL` or `V_MEMBER`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionCertificate {
    factors: Vec<CertificateFactor>,
    level: u32,
}

impl DecompositionCertificate {
    pub fn factors(&self) -> &[CertificateFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The congruence level `N` defining the subgroup `V`.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn budget(&self) -> usize {
        BOUNDED_FACTOR_BUDGET
    }

    /// Re-check everything the certificate claims: factor count within
    /// budget, exact product equality, and every tag entrywise.
    pub fn verify(&self, target: &Matrix<NFElement>) -> Result<(), NumberFieldError> {
        if self.factors.len() > BOUNDED_FACTOR_BUDGET {
            return Err(NumberFieldError::CertificateInvalid {
                reason: format!(
                    "{} factors exceed the budget {}",
                    self.factors.len(),
                    BOUNDED_FACTOR_BUDGET
                ),
            });
        }
        let mut product = target.identity_like();
        for (idx, factor) in self.factors.iter().enumerate() {
            verify_tag(factor, self.level, idx)?;
            product = product.checked_mul(&factor.matrix)?;
        }
        if &product != target {
            return Err(NumberFieldError::CertificateInvalid {
                reason: "factor product does not equal the target".to_string(),
            });
        }
        Ok(())
    }
}

fn verify_tag(
    factor: &CertificateFactor,
    level: u32,
    idx: usize,
) -> Result<(), NumberFieldError> {
    let m = &factor.matrix;
    match factor.tag {
        FactorTag::Rational => {
            if m.entries().iter().any(|e| e.as_rational().is_none()) {
                return Err(NumberFieldError::CertificateInvalid {
                    reason: format!("factor {idx} tagged RATIONAL has an irrational entry"),
                });
            }
        }
        FactorTag::VMember => {
            let n = BigInt::from(level);
            for i in 0..m.n() {
                for j in 0..m.n() {
                    let e = m.entry(i, j);
                    let delta = if i == j {
                        e.clone() - e.one_of()
                    } else {
                        e.clone()
                    };
                    if !divisible_by(&delta, &n) {
                        return Err(NumberFieldError::CertificateInvalid {
                            reason: format!(
                                "factor {idx} tagged V_MEMBER is not congruent to I mod {level}"
                            ),
                        });
                    }
                }
            }
            if !m.det().is_one() {
                return Err(NumberFieldError::CertificateInvalid {
                    reason: format!("factor {idx} tagged V_MEMBER is not unimodular"),
                });
            }
        }
    }
    Ok(())
}

/// Whether every power-basis coordinate of `e` is an integer multiple of
/// `n`, i.e. `e ∈ n·Z[α]`.
fn divisible_by(e: &NFElement, n: &BigInt) -> bool {
    e.coords().iter().all(|c| {
        c.denom().is_one() && (c.numer() % n).is_zero()
    })
}

fn rational_diag(
    witness: &NFElement,
    top: Rational,
) -> Result<Matrix<NFElement>, NumberFieldError> {
    let field = witness.field();
    if Zero::is_zero(&top) {
        return Err(NumberFieldError::DivisionByZero);
    }
    let bottom = top.recip();
    Ok(Matrix::from_rows(vec![
        vec![field.from_rational(top), field.zero()],
        vec![field.zero(), field.from_rational(bottom)],
    ])
    .expect("2x2 is square"))
}

/// Factor `g ∈ SL_2(L)` into at most 33 matrices from `SL_2(Q)` or the
/// principal congruence subgroup of level `level` in `SL_2(Z[α])`. The
/// returned certificate is verified before being handed back.
pub fn decompose_3n0(
    g: &Matrix<NFElement>,
    level: u32,
) -> Result<DecompositionCertificate, NumberFieldError> {
    if level < 1 {
        return Err(NumberFieldError::InvalidLevel);
    }
    let word = bruhat_decompose_sl2(g)?;
    let witness = g.entry(0, 0).clone();
    let mut factors = Vec::new();
    for factor in word.factors() {
        let l = factor.parameter();
        if l.as_rational().is_some() {
            factors.push(CertificateFactor {
                tag: FactorTag::Rational,
                matrix: factor.to_matrix(),
            });
            continue;
        }
        // q clears the denominators of l; a = N makes a²q²l ∈ N·Z[α].
        let q = Rational::from_integer(l.denominator_lcm());
        let a = Rational::from_integer(BigInt::from(level));
        let aq = a * q;
        let aq_sq = witness
            .field()
            .from_rational(aq.clone() * aq.clone());
        let middle_param = &aq_sq * l;
        if One::is_one(&aq) {
            // Level 1 with integral parameter: the factor itself is in V.
            factors.push(CertificateFactor {
                tag: FactorTag::VMember,
                matrix: factor.to_matrix(),
            });
            continue;
        }
        let (first, middle, last) = match factor {
            ElementaryFactor::UPlus(_) => (
                rational_diag(&witness, aq.recip())?,
                u_plus(&middle_param),
                rational_diag(&witness, aq.clone())?,
            ),
            ElementaryFactor::UMinus(_) => (
                rational_diag(&witness, aq.clone())?,
                u_minus(&middle_param),
                rational_diag(&witness, aq.recip())?,
            ),
        };
        factors.push(CertificateFactor {
            tag: FactorTag::Rational,
            matrix: first,
        });
        factors.push(CertificateFactor {
            tag: FactorTag::VMember,
            matrix: middle,
        });
        factors.push(CertificateFactor {
            tag: FactorTag::Rational,
            matrix: last,
        });
    }
    let certificate = DecompositionCertificate { factors, level };
    certificate.verify(g)?;
    Ok(certificate)
}
