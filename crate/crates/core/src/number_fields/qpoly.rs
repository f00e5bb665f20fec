//! Internal dense univariate polynomials over `Q`: division, extended gcd,
//! and an exact irreducibility check (rational roots plus a Kronecker factor
//! search up to half the degree) for monic integer polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rings::Rational;

/// Coefficients in ascending degree order; empty means zero, otherwise the
/// last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Quotient and remainder in `Q[u]`; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().recip();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading() * lead_inv.clone();
            let shift = dr - dd;
            quot[shift] = factor.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c.clone() * factor.clone()));
            rem = rem.sub(&Self::from_coeffs(sub));
        }
        (Self::from_coeffs(quot), rem)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·rhs = g` and `g`
    /// monic (or zero when both inputs are zero).
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Self::one();
        let mut s1 = Self::zero();
        let mut t0 = Self::zero();
        let mut t1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = r0.leading().recip();
        (
            r0.scale(&lead_inv),
            s0.scale(&lead_inv),
            t0.scale(&lead_inv),
        )
    }
}

/// Positive divisors of `|n|` (n nonzero), by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            let q = &n / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += 1;
    }
    divs.sort();
    divs
}

/// Lagrange interpolation through `(points[i], values[i])`, exact.
fn interpolate(points: &[BigInt], values: &[Rational]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = QPoly::one();
        let mut denom = Rational::one();
        let xi = Rational::from_integer(points[i].clone());
        for (j, pj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = Rational::from_integer(pj.clone());
            basis = basis.mul(&QPoly::from_coeffs(vec![-xj.clone(), Rational::one()]));
            denom *= xi.clone() - xj;
        }
        acc = acc.add(&basis.scale(&(v.clone() / denom)));
    }
    acc
}

/// Exact irreducibility over `Q` for a monic integer polynomial of degree
/// at least 1. Returns `Ok(())` or the monic factor found.
pub(crate) fn check_irreducible(poly: &QPoly) -> Result<(), QPoly> {
    let n = poly.degree().expect("nonzero polynomial");
    if n <= 1 {
        return Ok(());
    }
    // Rational roots of a monic integer polynomial are integer divisors of
    // the constant term.
    let constant = poly.coeff(0);
    if constant.is_zero() {
        return Err(QPoly::from_coeffs(vec![Rational::zero(), Rational::one()]));
    }
    let c = constant.numer().clone();
    for d in positive_divisors(&c) {
        for root in [Rational::from_integer(d.clone()), Rational::from_integer(-d)] {
            if poly.eval(&root).is_zero() {
                return Err(QPoly::from_coeffs(vec![-root, Rational::one()]));
            }
        }
    }
    // Kronecker search for a factor of degree d, 2 <= d <= n/2: a factor is
    // determined by its values at d+1 points, and those values divide the
    // values of poly there.
    for d in 2..=n / 2 {
        if let Some(factor) = kronecker_factor(poly, d) {
            return Err(factor);
        }
    }
    Ok(())
}

fn kronecker_factor(poly: &QPoly, d: usize) -> Option<QPoly> {
    // Evaluation points 0, 1, -1, 2, -2, …; all values are nonzero since
    // integer roots were excluded.
    let mut points = Vec::with_capacity(d + 1);
    let mut k = 0i64;
    while points.len() < d + 1 {
        points.push(BigInt::from(k));
        if k > 0 {
            points.push(BigInt::from(-k));
        }
        k += 1;
    }
    points.truncate(d + 1);
    let values: Vec<BigInt> = points
        .iter()
        .map(|p| {
            let v = poly.eval(&Rational::from_integer(p.clone()));
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        })
        .collect();

    let divisor_lists: Vec<Vec<BigInt>> = values
        .iter()
        .map(|v| {
            let mut ds = Vec::new();
            for p in positive_divisors(v) {
                ds.push(p.clone());
                ds.push(-p);
            }
            ds
        })
        .collect();

    let mut choice = vec![0usize; d + 1];
    loop {
        let candidate_values: Vec<Rational> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| Rational::from_integer(divisor_lists[i][c].clone()))
            .collect();
        let candidate = interpolate(&points, &candidate_values);
        if let Some(deg) = candidate.degree() {
            if deg >= 1 && candidate.has_integer_coeffs() && candidate.divides(poly) {
                return Some(candidate.monic());
            }
        }
        // Advance the mixed-radix counter.
        let mut pos = 0;
        loop {
            if pos > d {
                return None;
            }
            choice[pos] += 1;
            if choice[pos] < divisor_lists[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}
