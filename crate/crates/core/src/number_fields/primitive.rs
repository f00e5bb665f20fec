//! Primitive elements, the primitive-power search, the Vandermonde span
//! solver, and even-power coordinates.
//!
//! `y` is primitive in a degree-`n` field exactly when the power vectors
//! `1, y, …, y^{n-1}` have rank `n` over `Q`. The search walks the sequence
//! `y = α + i`, `i = 0, 1, 2, …` and returns the first candidate all of
//! whose powers `y, y², …, y^n` are primitive; only finitely many candidates
//! can fail, because a repeated intermediate field would let the shifted
//! k-th powers `(y+a_i)^k` span every polynomial of degree ≤ k (their
//! coefficient vectors form a Vandermonde matrix).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrices::{row_rank, solve_square, Matrix};
use crate::rings::Rational;

use super::{NFElement, NumberField, NumberFieldError};

/// Candidate cap for [`primitive_power_search`].
pub const PRIMITIVE_SEARCH_CAP: usize = 10_000;

/// Whether `Q(y) = L`: full rank of the power vectors `1, y, …, y^{n-1}`.
pub fn is_primitive(y: &NFElement) -> bool {
    let n = y.field().degree();
    let mut rows = Vec::with_capacity(n);
    let mut power = y.field().one();
    for _ in 0..n {
        rows.push(power.coords().to_vec());
        power = &power * y;
    }
    row_rank(&rows) == n
}

/// First `y = α + i` (`i = 0, 1, 2, …`) such that `y^p` is primitive for
/// every `1 ≤ p ≤ n`; deterministic first success, capped candidate count.
pub fn primitive_power_search(field: &NumberField) -> Result<NFElement, NumberFieldError> {
    let n = field.degree();
    let alpha = field.generator();
    for i in 0..PRIMITIVE_SEARCH_CAP {
        let y = &alpha + &field.from_integer(i as i64);
        let mut power = field.one();
        let mut all_primitive = true;
        for _ in 1..=n {
            power = &power * &y;
            if !is_primitive(&power) {
                all_primitive = false;
                break;
            }
        }
        if all_primitive {
            return Ok(y);
        }
    }
    Err(NumberFieldError::SearchCapExceeded {
        cap: PRIMITIVE_SEARCH_CAP,
    })
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Exact coefficients `c_i` with `Σ c_i (t - a_i)^k = target`, where
/// `points = (a_0, …, a_k)` are pairwise distinct and `target` has degree
/// at most `k` (coefficients ascending). The system is a column-scaled
/// Vandermonde matrix, hence solvable exactly.
pub fn vandermonde_span_solve(
    points: &[Rational],
    k: usize,
    target: &[Rational],
) -> Result<Vec<Rational>, NumberFieldError> {
    if points.len() != k + 1 {
        return Err(NumberFieldError::PointCount {
            expected: k + 1,
            found: points.len(),
        });
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a == b {
                return Err(NumberFieldError::RepeatedPoints);
            }
        }
    }
    let mut rhs = vec![Rational::zero(); k + 1];
    for (i, c) in target.iter().enumerate() {
        if i > k {
            if !Zero::is_zero(c) {
                return Err(NumberFieldError::TargetDegreeTooHigh { k });
            }
            continue;
        }
        rhs[i] = c.clone();
    }
    // (t - a)^k = Σ_j C(k, j) (-a)^{k-j} t^j: row j of the system.
    let m = Matrix::from_fn(k + 1, |j, i| {
        let mut pw = Rational::one();
        for _ in 0..(k - j) {
            pw *= -points[i].clone();
        }
        binomial(k, j) * pw
    });
    solve_square(&m, &rhs).ok_or(NumberFieldError::RepeatedPoints)
}

/// Rationals `r_0, …, r_{n-1}` with `l = Σ r_i x^{2i}`, available whenever
/// `x²` is primitive so the even powers form a basis.
pub fn even_power_coordinates(
    l: &NFElement,
    x: &NFElement,
) -> Result<Vec<Rational>, NumberFieldError> {
    let field = x.field().clone();
    assert!(l.field() == &field, "mixed elements from different number fields");
    let n = field.degree();
    let xsq = x * x;
    if !is_primitive(&xsq) {
        return Err(NumberFieldError::NotPrimitiveSquare);
    }
    // Column i holds the coordinates of x^{2i}.
    let mut powers = Vec::with_capacity(n);
    let mut acc = field.one();
    for _ in 0..n {
        powers.push(acc.clone());
        acc = &acc * &xsq;
    }
    let m = Matrix::from_fn(n, |r, c| powers[c].coords()[r].clone());
    solve_square(&m, l.coords()).ok_or(NumberFieldError::NotPrimitiveSquare)
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

    fn gaussian() -> NumberField {
        NumberField::from_integer_min_poly(&[1, 0, 1]).unwrap()
    }

    fn sqrt2() -> NumberField {
        NumberField::from_integer_min_poly(&[-2, 0, 1]).unwrap()
    }

    fn biquadratic() -> NumberField {
        // Q(√2 + √3): u^4 - 10u^2 + 1.
        NumberField::from_integer_min_poly(&[1, 0, -10, 0, 1]).unwrap()
    }

    /// Independent oracle: degree of the minimal polynomial of `y`, found as
    /// the least d with 1, y, …, y^d linearly dependent.
    fn min_poly_degree(y: &NFElement) -> usize {
        let n = y.field().degree();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut power = y.field().one();
        for d in 1..=n {
            rows.push(power.coords().to_vec());
            power = &power * y;
            if row_rank(&rows) < d {
                return d - 1;
            }
        }
        n
    }

    #[test]
    fn generator_is_primitive() {
        assert!(is_primitive(&gaussian().generator()));
        assert_eq!(min_poly_degree(&gaussian().generator()), 2);
    }

    #[test]
    fn rational_element_is_not_primitive() {
        let f = gaussian();
        assert!(!is_primitive(&f.from_integer(-1)));
        assert_eq!(min_poly_degree(&f.from_integer(-1)), 1);
    }

    #[test]
    fn square_of_biquadratic_generator_is_not_primitive() {
        // x² = 5 + 2√6 generates only a quadratic subfield.
        let f = biquadratic();
        let xsq = f.generator().pow(2);
        assert!(!is_primitive(&xsq));
        assert_eq!(min_poly_degree(&xsq), 2);
    }

    #[test]
    fn search_in_gaussian_field() {
        // i fails (i² = -1), 1 + i succeeds ((1+i)² = 2i).
        let f = gaussian();
        let y = primitive_power_search(&f).unwrap();
        assert_eq!(y, &f.generator() + &f.one());
        for p in 1..=2 {
            assert!(is_primitive(&y.pow(p)));
            assert_eq!(min_poly_degree(&y.pow(p)), 2);
        }
    }

    #[test]
    fn search_in_sqrt2_field() {
        // √2 fails ((√2)² = 2), 1 + √2 succeeds ((1+√2)² = 3 + 2√2).
        let f = sqrt2();
        let y = primitive_power_search(&f).unwrap();
        assert_eq!(y, &f.generator() + &f.one());
    }

    #[test]
    fn search_in_biquadratic_field() {
        let f = biquadratic();
        let y = primitive_power_search(&f).unwrap();
        // x itself fails at p = 2, so the found shift is at least 1.
        assert_ne!(y, f.generator());
        for p in 1..=4 {
            assert!(is_primitive(&y.pow(p)));
            assert_eq!(min_poly_degree(&y.pow(p)), 4);
        }
    }

    #[test]
    fn vandermonde_worked_instance() {
        // Points (1,2,3), k = 2, target t: coefficients (5/4, -2, 3/4).
        let c = vandermonde_span_solve(&[q(1), q(2), q(3)], 2, &[q(0), q(1)]).unwrap();
        assert_eq!(c, vec![qq(5, 4), q(-2), qq(3, 4)]);
    }

    #[test]
    fn vandermonde_basis_vector() {
        // Target (t - a_0)^k returns (1, 0, …, 0).
        let points = [q(0), q(1), q(2), q(3)];
        let k = 3;
        // (t - 0)^3 = t^3.
        let c = vandermonde_span_solve(&points, k, &[q(0), q(0), q(0), q(1)]).unwrap();
        assert_eq!(c, vec![q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn vandermonde_constant_target() {
        let c = vandermonde_span_solve(&[q(1), q(2), q(3)], 2, &[q(1)]).unwrap();
        // Verify by expansion: Σ c_i (t - a_i)^2 = 1.
        let mut acc = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (ci, a) in c.iter().zip([q(1), q(2), q(3)]) {
            // (t - a)^2 = a^2 - 2a t + t^2
            acc[0] += ci.clone() * a.clone() * a.clone();
            acc[1] += ci.clone() * q(-2) * a;
            acc[2] += ci.clone();
        }
        assert_eq!(acc, [q(1), q(0), q(0)]);
    }

    #[test]
    fn vandermonde_rejects_repeats() {
        assert_eq!(
            vandermonde_span_solve(&[q(1), q(1), q(3)], 2, &[q(1)]),
            Err(NumberFieldError::RepeatedPoints)
        );
    }

    #[test]
    fn even_power_worked_instance() {
        // L = Q(√2), x = 1+√2, l = √2: √2 = -3/2 + 1/2·(3 + 2√2).
        let f = sqrt2();
        let x = &f.one() + &f.generator();
        let l = f.generator();
        let r = even_power_coordinates(&l, &x).unwrap();
        assert_eq!(r, vec![qq(-3, 2), qq(1, 2)]);
    }

    #[test]
    fn even_power_trivial_cases() {
        let f = sqrt2();
        let x = &f.one() + &f.generator();
        assert_eq!(
            even_power_coordinates(&f.one(), &x).unwrap(),
            vec![q(1), q(0)]
        );
        assert_eq!(
            even_power_coordinates(&x.pow(2), &x).unwrap(),
            vec![q(0), q(1)]
        );
    }

    #[test]
    fn even_power_requires_primitive_square() {
        let f = sqrt2();
        // x = √2: x² = 2 is rational, not primitive.
        assert_eq!(
            even_power_coordinates(&f.one(), &f.generator()),
            Err(NumberFieldError::NotPrimitiveSquare)
        );
    }

    #[test]
    fn even_power_reconstruction() {
        let f = biquadratic();
        let x = primitive_power_search(&f).unwrap();
        let l = f
            .element(vec![q(3), qq(-1, 2), q(0), q(7)])
            .unwrap();
        let r = even_power_coordinates(&l, &x).unwrap();
        let mut acc = f.zero();
        for (i, ri) in r.iter().enumerate() {
            acc = &acc + &(&x.pow(2 * i as u32) * &f.from_rational(ri.clone()));
        }
        assert_eq!(acc, l);
    }
}
