//! `SL_2` generators and the Bruhat-based factorization into elementary
//! matrices.
//!
//! With `u_+(r) = [[1, r], [0, 1]]`, `u_-(r) = [[1, 0], [r, 1]]` and
//! `m(u) = u_+(u) u_-(-u^-1) u_+(u) = [[0, u], [-u^-1, 0]]`, a torus element
//! is `diag(a, a^-1) = m(-a) m(1)` (six elementary factors) and
//! `s = m(-1)` (three). The Bruhat decomposition then writes any `g` in
//! `SL_2` over a field as at most 11 elementary factors:
//!
//! * `g_21 = 0`:  `g = diag(g_11, g_11^-1) · u_+(g_12 / g_11)`   (≤ 7)
//! * `g_21 ≠ 0`:  `g = u_+(g_11/g_21) · diag(g_21^-1, g_21) · s · u_+(g_22/g_21)` (≤ 11)
//!
//! Identity factors (zero parameters, `diag(1,1)`) are dropped.

use std::fmt;

use crate::rings::Ring;

use super::{Matrix, MatrixError};

/// Upper bound on the number of elementary factors produced by
/// [`bruhat_decompose_sl2`].
pub const ELEMENTARY_FACTOR_BUDGET: usize = 11;

/// `u_+(r) = [[1, r], [0, 1]]`.
pub fn u_plus<F: Ring>(r: &F) -> Matrix<F> {
    let one = r.one_of();
    let zero = r.zero_of();
    Matrix::from_rows(vec![vec![one.clone(), r.clone()], vec![zero, one]])
        .expect("2x2 is square")
}

/// `u_-(r) = [[1, 0], [r, 1]]`.
pub fn u_minus<F: Ring>(r: &F) -> Matrix<F> {
    let one = r.one_of();
    let zero = r.zero_of();
    Matrix::from_rows(vec![vec![one.clone(), zero], vec![r.clone(), one]])
        .expect("2x2 is square")
}

/// `m(u) = [[0, u], [-u^-1, 0]]`; `u` must be a unit.
pub fn weyl_m<F: Ring>(u: &F) -> Result<Matrix<F>, MatrixError> {
    if u.is_zero() {
        return Err(MatrixError::ZeroParameter);
    }
    let uinv = u.try_inverse().ok_or(MatrixError::NotInvertible)?;
    let zero = u.zero_of();
    Matrix::from_rows(vec![
        vec![zero.clone(), u.clone()],
        vec![zero.zero_of() - uinv, zero],
    ])
    .map_err(|_| MatrixError::NotSquare)
}

/// `s = m(-1) = [[0, -1], [1, 0]]`; the witness fixes the ring.
pub fn weyl_s<F: Ring>(witness: &F) -> Matrix<F> {
    let one = witness.one_of();
    let zero = witness.zero_of();
    Matrix::from_rows(vec![
        vec![zero.clone(), zero.clone() - one.clone()],
        vec![one, zero],
    ])
    .expect("2x2 is square")
}

/// `diag(a, a^-1) = m(-a) m(1)`; `a` must be a unit.
pub fn torus<F: Ring>(a: &F) -> Result<Matrix<F>, MatrixError> {
    if a.is_zero() {
        return Err(MatrixError::ZeroParameter);
    }
    let ainv = a.try_inverse().ok_or(MatrixError::NotInvertible)?;
    let zero = a.zero_of();
    Matrix::from_rows(vec![
        vec![a.clone(), zero.clone()],
        vec![zero, ainv],
    ])
    .map_err(|_| MatrixError::NotSquare)
}

/// One elementary generator with its parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementaryFactor<F: Ring> {
    UPlus(F),
    UMinus(F),
}

impl<F: Ring> ElementaryFactor<F> {
    pub fn parameter(&self) -> &F {
        match self {
            ElementaryFactor::UPlus(r) | ElementaryFactor::UMinus(r) => r,
        }
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        match self {
            ElementaryFactor::UPlus(r) => u_plus(r),
            ElementaryFactor::UMinus(r) => u_minus(r),
        }
    }
}

impl<F: Ring> fmt::Display for ElementaryFactor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryFactor::UPlus(r) => write!(f, "u+({})", r),
            ElementaryFactor::UMinus(r) => write!(f, "u-({})", r),
        }
    }
}

/// A product of elementary matrices with a declared factor budget.
///
/// Invariants: the length never exceeds the budget, and every stored factor
/// has a nonzero parameter (identity factors are dropped on push).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryWord<F: Ring> {
    factors: Vec<ElementaryFactor<F>>,
    budget: usize,
}

impl<F: Ring> ElementaryWord<F> {
    pub fn new(budget: usize) -> Self {
        ElementaryWord {
            factors: Vec::new(),
            budget,
        }
    }

    /// Append a factor; zero parameters are silently dropped.
    pub fn push(&mut self, factor: ElementaryFactor<F>) -> Result<(), MatrixError> {
        if factor.parameter().is_zero() {
            return Ok(());
        }
        if self.factors.len() + 1 > self.budget {
            return Err(MatrixError::BudgetExceeded {
                length: self.factors.len() + 1,
                budget: self.budget,
            });
        }
        self.factors.push(factor);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn factors(&self) -> &[ElementaryFactor<F>] {
        &self.factors
    }

    /// Multiply the factors out; the witness fixes the ring for the empty
    /// word.
    pub fn evaluate(&self, witness: &F) -> Matrix<F> {
        let mut acc = Matrix::identity(2, witness);
        for f in &self.factors {
            acc = acc.checked_mul(&f.to_matrix()).expect("2x2 product");
        }
        acc
    }
}

impl<F: Ring> fmt::Display for ElementaryWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(empty word)");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", factor)?;
        }
        Ok(())
    }
}

/// Append `m(u) = u_+(u) u_-(-u^-1) u_+(u)` as three elementary factors.
fn push_weyl<F: Ring>(word: &mut ElementaryWord<F>, u: &F) -> Result<(), MatrixError> {
    let uinv = u.try_inverse().ok_or(MatrixError::NotInvertible)?;
    word.push(ElementaryFactor::UPlus(u.clone()))?;
    word.push(ElementaryFactor::UMinus(uinv.zero_of() - uinv))?;
    word.push(ElementaryFactor::UPlus(u.clone()))?;
    Ok(())
}

/// Append `diag(a, a^-1) = m(-a) m(1)`; the trivial torus `a = 1` is dropped.
fn push_torus<F: Ring>(word: &mut ElementaryWord<F>, a: &F) -> Result<(), MatrixError> {
    if a.is_one() {
        return Ok(());
    }
    push_weyl(word, &(a.zero_of() - a.clone()))?;
    push_weyl(word, &a.one_of())
}

/// Factor `g ∈ SL_2` over a field into at most 11 elementary matrices whose
/// exact product is `g`.
pub fn bruhat_decompose_sl2<F: Ring>(g: &Matrix<F>) -> Result<ElementaryWord<F>, MatrixError> {
    if g.n() != 2 {
        return Err(MatrixError::DimensionMismatch {
            expected: 2,
            found: g.n(),
        });
    }
    if !g.det().is_one() {
        return Err(MatrixError::NotUnimodular);
    }
    let mut word = ElementaryWord::new(ELEMENTARY_FACTOR_BUDGET);
    let a = g.entry(0, 0);
    let b = g.entry(0, 1);
    let c = g.entry(1, 0);
    let d = g.entry(1, 1);
    if c.is_zero() {
        // g = diag(a, a^-1) · u_+(b / a); det 1 forces a ≠ 0.
        let ainv = a.try_inverse().ok_or(MatrixError::NotInvertible)?;
        push_torus(&mut word, a)?;
        word.push(ElementaryFactor::UPlus(b.clone() * ainv))?;
    } else {
        // g = u_+(a/c) · diag(c^-1, c) · s · u_+(d/c).
        let cinv = c.try_inverse().ok_or(MatrixError::NotInvertible)?;
        word.push(ElementaryFactor::UPlus(a.clone() * cinv.clone()))?;
        push_torus(&mut word, &cinv)?;
        // s = m(-1).
        push_weyl(&mut word, &(c.zero_of() - c.one_of()))?;
        word.push(ElementaryFactor::UPlus(d.clone() * cinv))?;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn weyl_m_of_one_by_hand() {
        // m(1) = u_+(1) u_-(-1) u_+(1) = [[0, 1], [-1, 0]].
        let by_hand = u_plus(&q(1))
            .checked_mul(&u_minus(&q(-1)))
            .unwrap()
            .checked_mul(&u_plus(&q(1)))
            .unwrap();
        assert_eq!(by_hand, weyl_m(&q(1)).unwrap());
        assert_eq!(weyl_m(&q(1)).unwrap(), qm(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn torus_is_weyl_product() {
        // diag(a, a^-1) = m(-a) m(1) for a = 5.
        let a = q(5);
        let prod = weyl_m(&-a.clone())
            .unwrap()
            .checked_mul(&weyl_m(&q(1)).unwrap())
            .unwrap();
        assert_eq!(prod, torus(&a).unwrap());
    }

    #[test]
    fn s_matrix() {
        assert_eq!(weyl_s(&q(0)), qm(&[&[0, -1], &[1, 0]]));
        // s = m(-1).
        assert_eq!(weyl_s(&q(0)), weyl_m(&q(-1)).unwrap());
    }

    #[test]
    fn generators_are_unimodular() {
        assert!(u_plus(&q(7)).det().is_one());
        assert!(u_minus(&q(-4)).det().is_one());
        assert!(weyl_m(&q(3)).unwrap().det().is_one());
        assert!(weyl_s(&q(0)).det().is_one());
        assert!(torus(&q(-2)).unwrap().det().is_one());
    }

    #[test]
    fn zero_parameter_rejected() {
        assert_eq!(weyl_m(&q(0)), Err(MatrixError::ZeroParameter));
        assert_eq!(torus(&q(0)), Err(MatrixError::ZeroParameter));
    }

    #[test]
    fn bruhat_of_s_is_three_factors() {
        let s = weyl_s(&q(0));
        let word = bruhat_decompose_sl2(&s).unwrap();
        assert_eq!(word.len(), 3);
        assert_eq!(
            word.factors(),
            &[
                ElementaryFactor::UPlus(q(-1)),
                ElementaryFactor::UMinus(q(1)),
                ElementaryFactor::UPlus(q(-1)),
            ]
        );
        assert_eq!(word.evaluate(&q(0)), s);
    }

    #[test]
    fn bruhat_worked_example() {
        // [[2,3],[1,2]] = u_+(2) · s · u_+(2); torus(1) drops out, so the
        // expanded word has length 5.
        let g = qm(&[&[2, 3], &[1, 2]]);
        let direct = u_plus(&q(2))
            .checked_mul(&weyl_s(&q(0)))
            .unwrap()
            .checked_mul(&u_plus(&q(2)))
            .unwrap();
        assert_eq!(direct, g);
        let word = bruhat_decompose_sl2(&g).unwrap();
        assert_eq!(word.len(), 5);
        assert_eq!(word.evaluate(&q(0)), g);
    }

    #[test]
    fn bruhat_identity_is_empty() {
        let word = bruhat_decompose_sl2(&Matrix::identity(2, &q(0))).unwrap();
        assert!(word.is_empty());
        assert!(word.evaluate(&q(0)).is_identity());
    }

    #[test]
    fn bruhat_upper_triangular_case() {
        // [[2, 3], [0, 1/2]]: torus(2) (6 factors) then u_+(3/2).
        let g = Matrix::from_rows(vec![
            vec![q(2), q(3)],
            vec![q(0), Rational::new(1.into(), 2.into())],
        ])
        .unwrap();
        let word = bruhat_decompose_sl2(&g).unwrap();
        assert_eq!(word.len(), 7);
        assert_eq!(word.evaluate(&q(0)), g);
    }

    #[test]
    fn bruhat_rejects_non_unimodular() {
        let g = qm(&[&[2, 0], &[0, 2]]);
        assert_eq!(bruhat_decompose_sl2(&g), Err(MatrixError::NotUnimodular));
    }

    #[test]
    fn budget_is_enforced() {
        let mut word: ElementaryWord<Rational> = ElementaryWord::new(1);
        word.push(ElementaryFactor::UPlus(q(1))).unwrap();
        assert_eq!(
            word.push(ElementaryFactor::UMinus(q(1))),
            Err(MatrixError::BudgetExceeded { length: 2, budget: 1 })
        );
        // Zero parameters never count against the budget.
        word.push(ElementaryFactor::UPlus(q(0))).unwrap();
        assert_eq!(word.len(), 1);
    }
}
