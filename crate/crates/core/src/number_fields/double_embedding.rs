//! The double embedding `ψ(g) = blockdiag(g, σ(g))` of `SL_2(L)` into
//! `SL_4(L)` for a quadratic field `L`, and the orbit test against the
//! diagonal plane `U = span{(1,0,1,0), (0,1,0,1)}`.
//!
//! Vectors are rows acted on from the right, so the image of a spanning row
//! `u` is `u · ψ(g)`. Elements of `SL_2(Q)` always preserve `U` (there
//! `ψ(g) = diag(g, g)` acts diagonally), while generic elements of
//! `SL_2(L)` move it; membership is decided by an exact rank test.

use std::fmt;

use crate::matrices::{row_rank, Matrix};
use crate::rings::Ring;

use super::{NFElement, NumberFieldError};

/// Whether `ψ(g)` maps the distinguished plane to itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitOutcome {
    Preserves,
    Moves,
}

impl fmt::Display for OrbitOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitOutcome::Preserves => write!(f, "PRESERVES"),
            OrbitOutcome::Moves => write!(f, "MOVES"),
        }
    }
}

/// The outcome together with the data backing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleEmbeddingReport {
    outcome: OrbitOutcome,
    psi: Matrix<NFElement>,
    images: [Vec<NFElement>; 2],
}

impl DoubleEmbeddingReport {
    pub fn outcome(&self) -> OrbitOutcome {
        self.outcome
    }

    /// The block-diagonal image `ψ(g) ∈ SL_4(L)`.
    pub fn psi(&self) -> &Matrix<NFElement> {
        &self.psi
    }

    /// Images of the two spanning rows `(1,0,1,0)` and `(0,1,0,1)`.
    pub fn images(&self) -> &[Vec<NFElement>; 2] {
        &self.images
    }
}

/// Form `ψ(g) = blockdiag(g, σ(g))` and report whether the plane
/// `U = span{(1,0,1,0), (0,1,0,1)}` is mapped to itself.
pub fn double_embedding_orbit(
    g: &Matrix<NFElement>,
) -> Result<DoubleEmbeddingReport, NumberFieldError> {
    let field = g.entry(0, 0).field().clone();
    if field.degree() != 2 {
        return Err(NumberFieldError::NotQuadratic {
            found: field.degree(),
        });
    }
    if g.n() != 2 {
        return Err(NumberFieldError::Matrix(
            crate::matrices::MatrixError::DimensionMismatch {
                expected: 2,
                found: g.n(),
            },
        ));
    }
    if !g.det().is_one() {
        return Err(NumberFieldError::Matrix(
            crate::matrices::MatrixError::NotUnimodular,
        ));
    }
    let zero = field.zero();
    let one = field.one();
    let psi = Matrix::from_fn(4, |i, j| {
        if i < 2 && j < 2 {
            g.entry(i, j).clone()
        } else if i >= 2 && j >= 2 {
            field
                .quadratic_conjugate(g.entry(i - 2, j - 2))
                .expect("field is quadratic")
        } else {
            zero.clone()
        }
    });

    let u1 = vec![one.clone(), zero.clone(), one.clone(), zero.clone()];
    let u2 = vec![zero.clone(), one.clone(), zero.clone(), one.clone()];
    let image_of = |u: &[NFElement]| -> Vec<NFElement> {
        (0..4)
            .map(|j| {
                let mut acc = zero.clone();
                for (k, uk) in u.iter().enumerate() {
                    if !Ring::is_zero(uk) {
                        acc = acc + uk.clone() * psi.entry(k, j).clone();
                    }
                }
                acc
            })
            .collect()
    };
    let w1 = image_of(&u1);
    let w2 = image_of(&u2);

    let rank = row_rank(&[u1, u2, w1.clone(), w2.clone()]);
    let outcome = if rank == 2 {
        OrbitOutcome::Preserves
    } else {
        OrbitOutcome::Moves
    };
    Ok(DoubleEmbeddingReport {
        outcome,
        psi,
        images: [w1, w2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::sl2;
    use crate::number_fields::NumberField;
    use crate::rings::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sqrt2() -> NumberField {
        NumberField::from_integer_min_poly(&[-2, 0, 1]).unwrap()
    }

    #[test]
    fn rational_elements_preserve_the_plane() {
        let f = sqrt2();
        let g = Matrix::from_rows(vec![
            vec![f.from_integer(2), f.from_integer(3)],
            vec![f.from_integer(1), f.from_integer(2)],
        ])
        .unwrap();
        let report = double_embedding_orbit(&g).unwrap();
        assert_eq!(report.outcome(), OrbitOutcome::Preserves);
    }

    #[test]
    fn irrational_unipotent_moves_the_plane() {
        // ψ(u_+(√2)) maps (1,0,1,0) to (1, √2, 1, -√2), which leaves U.
        let f = sqrt2();
        let g = sl2::u_plus(&f.generator());
        let report = double_embedding_orbit(&g).unwrap();
        assert_eq!(report.outcome(), OrbitOutcome::Moves);
        let expected = vec![
            f.one(),
            f.generator(),
            f.one(),
            -&f.generator(),
        ];
        assert_eq!(report.images()[0], expected);
    }

    #[test]
    fn irrational_torus_moves_the_plane() {
        let f = sqrt2();
        let x = &f.one() + &f.generator();
        let g = sl2::torus(&x).unwrap();
        let report = double_embedding_orbit(&g).unwrap();
        assert_eq!(report.outcome(), OrbitOutcome::Moves);
    }

    #[test]
    fn non_quadratic_field_rejected() {
        let cubic = NumberField::from_integer_min_poly(&[-2, 0, 0, 1]).unwrap();
        let g = sl2::u_plus(&cubic.generator());
        assert_eq!(
            double_embedding_orbit(&g),
            Err(NumberFieldError::NotQuadratic { found: 3 })
        );
    }

    #[test]
    fn psi_is_unimodular_4x4() {
        let f = sqrt2();
        let g = sl2::u_plus(&f.generator());
        let report = double_embedding_orbit(&g).unwrap();
        assert!(report.psi().det().is_one());
        assert_eq!(report.psi().entry(2, 3), &-&f.generator());
        let _ = q(0);
    }
}
