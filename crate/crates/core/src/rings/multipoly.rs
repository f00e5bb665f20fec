//! Multivariate polynomials over `Q` with variables `x_i` indexed by
//! integers (negative indices allowed).
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the graded
//! lexicographic order (total degree first, then exponents compared at
//! increasing variable index). Invariant: no stored zero coefficient, so
//! structural equality is semantic equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// A monomial `x_{i1}^{e1} · … · x_{ik}^{ek}`, stored sparsely.
///
/// Invariant: all stored exponents are nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Monomial {
    exponents: BTreeMap<i32, u32>,
}

impl Monomial {
    /// The empty monomial (the constant 1).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// The monomial `x_i`.
    pub fn variable(index: i32) -> Self {
        let mut exponents = BTreeMap::new();
        exponents.insert(index, 1);
        Monomial { exponents }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (i32, u32)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (i, e) in pairs {
            if e > 0 {
                *exponents.entry(i).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent_of(&self, index: i32) -> u32 {
        self.exponents.get(&index).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.values().map(|&e| e as u64).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = i32> + '_ {
        self.exponents.keys().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exponents = self.exponents.clone();
        for (&i, &e) in &other.exponents {
            *exponents.entry(i).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    /// Divide by `other`, or `None` if some exponent would go negative.
    pub fn try_div(&self, other: &Self) -> Option<Self> {
        let mut exponents = self.exponents.clone();
        for (&i, &e) in &other.exponents {
            let slot = exponents.get_mut(&i)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exponents.remove(&i);
            }
        }
        Some(Monomial { exponents })
    }

    /// The same monomial with variable `index` removed entirely.
    fn without(&self, index: i32) -> Self {
        let mut exponents = self.exponents.clone();
        exponents.remove(&index);
        Monomial { exponents }
    }

    fn with_exponent(&self, index: i32, exp: u32) -> Self {
        let mut exponents = self.exponents.clone();
        if exp == 0 {
            exponents.remove(&index);
        } else {
            exponents.insert(index, exp);
        }
        Monomial { exponents }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, ties broken at the smallest
    /// variable index where the exponents differ (larger exponent wins).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let indices: BTreeSet<i32> = self
            .exponents
            .keys()
            .chain(other.exponents.keys())
            .copied()
            .collect();
        for i in indices {
            match self.exponent_of(i).cmp(&other.exponent_of(i)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&i, &e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x_{}", i)?;
            } else {
                write!(f, "x_{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}

/// A multivariate polynomial with rational coefficients.
///
/// Invariant: no stored zero coefficient; the zero polynomial is the empty
/// map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPolynomial {
    pub fn zero() -> Self {
        MultiPolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPolynomial::zero();
        p.insert_term(Monomial::unit(), c);
        p
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// The variable `x_i`.
    pub fn variable(index: i32) -> Self {
        let mut p = MultiPolynomial::zero();
        p.insert_term(Monomial::variable(index), Rational::one());
        p
    }

    pub fn monomial(mono: Monomial, coeff: Rational) -> Self {
        let mut p = MultiPolynomial::zero();
        p.insert_term(mono, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPolynomial::zero();
        for (m, c) in terms {
            p.insert_term(m, c);
        }
        p
    }

    /// Add `coeff · mono` to the polynomial, keeping the invariant.
    fn insert_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Leading (greatest) term under the graded lexicographic order.
    /// Panics on the zero polynomial.
    pub fn leading_term(&self) -> (&Monomial, &Rational) {
        self.terms
            .iter()
            .next_back()
            .expect("leading term of the zero polynomial")
    }

    pub fn leading_coefficient(&self) -> Rational {
        if self.is_zero() {
            Rational::zero()
        } else {
            self.leading_term().1.clone()
        }
    }

    /// All variable indices appearing in the polynomial.
    pub fn variables(&self) -> BTreeSet<i32> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn degree_in(&self, index: i32) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(index))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPolynomial::zero();
        }
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    fn mul_term(&self, mono: &Monomial, coeff: &Rational) -> Self {
        if coeff.is_zero() {
            return MultiPolynomial::zero();
        }
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = MultiPolynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The formal partial derivative with respect to `x_index`.
    pub fn partial_derivative(&self, index: i32) -> Self {
        let mut out = MultiPolynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(index);
            if e == 0 {
                continue;
            }
            let dm = m.with_exponent(index, e - 1);
            out.insert_term(dm, c.clone() * Rational::from_integer(e.into()));
        }
        out
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return MultiPolynomial::zero();
        }
        let lc = self.leading_coefficient();
        self.scale(&lc.recip())
    }

    /// Exact quotient `self / divisor`, or `None` when not divisible.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = MultiPolynomial::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading_term();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&dm)?;
            let qc = rc / dc.clone();
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.insert_term(qm, qc);
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized monic (zero if both inputs are
    /// zero). Computed by a primitive pseudo-remainder sequence, recursing
    /// one variable at a time.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        gcd_nonzero(a, b).monic()
    }
}

// ---- gcd internals ----

/// Dense coefficient vector of `p` viewed as a univariate polynomial in
/// `x_index`; coefficients do not involve `x_index`.
fn to_univariate(p: &MultiPolynomial, index: i32) -> Vec<MultiPolynomial> {
    let deg = p.degree_in(index) as usize;
    let mut coeffs = vec![MultiPolynomial::zero(); deg + 1];
    for (m, c) in &p.terms {
        let e = m.exponent_of(index) as usize;
        coeffs[e].insert_term(m.without(index), c.clone());
    }
    coeffs
}

fn from_univariate(coeffs: &[MultiPolynomial], index: i32) -> MultiPolynomial {
    let mut out = MultiPolynomial::zero();
    for (e, c) in coeffs.iter().enumerate() {
        for (m, a) in &c.terms {
            out.insert_term(m.mul(&Monomial::variable(index).pow_mono(e as u32)), a.clone());
        }
    }
    out
}

impl Monomial {
    fn pow_mono(&self, exp: u32) -> Self {
        let mut exponents = BTreeMap::new();
        for (&i, &e) in &self.exponents {
            if e * exp > 0 {
                exponents.insert(i, e * exp);
            }
        }
        Monomial { exponents }
    }
}

fn uni_trim(coeffs: &mut Vec<MultiPolynomial>) {
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// gcd of the coefficients; the content of a univariate view.
fn content(coeffs: &[MultiPolynomial]) -> MultiPolynomial {
    let mut acc = MultiPolynomial::zero();
    for c in coeffs {
        if !c.is_zero() {
            acc = MultiPolynomial::gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
    }
    acc
}

fn divide_out(coeffs: &[MultiPolynomial], divisor: &MultiPolynomial) -> Vec<MultiPolynomial> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                MultiPolynomial::zero()
            } else {
                c.exact_div(divisor).expect("content divides coefficients")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero), reduced to
/// its primitive part after every elimination step to keep coefficient
/// growth in check.
fn pseudo_rem_primitive(a: &[MultiPolynomial], b: &[MultiPolynomial]) -> Vec<MultiPolynomial> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let lb_constant = lb.is_constant();
    let mut r = a.to_vec();
    uni_trim(&mut r);
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let shift = dr - db;
        let mut next = vec![MultiPolynomial::zero(); dr];
        #[allow(clippy::needless_range_loop)]
        for i in 0..dr {
            let mut t = &r[i] * &lb;
            if i >= shift {
                // b index i - shift < db here; the db term cancels at i = dr.
                t = &t - &(&lr * &b[i - shift]);
            }
            next[i] = t;
        }
        r = next;
        uni_trim(&mut r);
        // A multivariate leading coefficient makes the coefficients grow
        // multiplicatively; dividing out the content after each step keeps
        // the sequence primitive (any unit-times-content scaling is
        // harmless for gcd purposes).
        if !lb_constant && !r.is_empty() {
            let cont = content(&r);
            if !cont.is_one() {
                r = divide_out(&r, &cont);
            }
        }
    }
    r
}

/// Variable to recurse on: present in both polynomials with the smallest
/// combined degree, to keep the remainder sequence short.
fn recursion_variable(a: &MultiPolynomial, b: &MultiPolynomial) -> Option<i32> {
    let vars_a = a.variables();
    let vars_b = b.variables();
    vars_a
        .intersection(&vars_b)
        .copied()
        .min_by_key(|&v| (a.degree_in(v) as u64 + b.degree_in(v) as u64, v))
}

fn gcd_nonzero(a: &MultiPolynomial, b: &MultiPolynomial) -> MultiPolynomial {
    if a.is_constant() || b.is_constant() {
        // Nonzero constants are units over Q.
        return MultiPolynomial::one();
    }
    let v = match recursion_variable(a, b) {
        Some(v) => v,
        None => {
            // No shared variable: the gcd has none of a's variables and
            // none of b's, so it divides both contents down to a constant.
            return MultiPolynomial::one();
        }
    };

    let ua = to_univariate(a, v);
    let ub = to_univariate(b, v);

    let ca = content(&ua);
    let cb = content(&ub);
    let pa = divide_out(&ua, &ca);
    let pb = divide_out(&ub, &cb);
    let c = MultiPolynomial::gcd(&ca, &cb);

    let (mut big, mut small) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    let g_pp = loop {
        let r = pseudo_rem_primitive(&big, &small);
        if r.is_empty() {
            let cont = content(&small);
            break divide_out(&small, &cont);
        }
        if r.len() == 1 {
            // Nonzero remainder of v-degree 0 against primitive polynomials.
            break vec![MultiPolynomial::one()];
        }
        big = small;
        let cont = content(&r);
        small = divide_out(&r, &cont);
    };

    &c * &from_univariate(&g_pp, v)
}

// ---- arithmetic ----

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        let mut out = MultiPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_value_ops;

forward_value_ops!(MultiPolynomial);

// ---- display ----

impl fmt::Display for MultiPolynomial {
    /// Terms in descending graded-lex order; parses back through the CLI
    /// scalar grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            if m.is_unit() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x(i: i32) -> MultiPolynomial {
        MultiPolynomial::variable(i)
    }

    #[test]
    fn monomial_order_is_graded() {
        let a = Monomial::from_exponents([(1, 2)]); // x_1^2
        let b = Monomial::from_exponents([(1, 1)]); // x_1
        assert!(a > b);
        let c = Monomial::from_exponents([(-2, 1), (1, 1)]); // x_-2 x_1
        assert!(c > b); // higher total degree
        // Same degree: larger exponent at the smaller index wins.
        let d = Monomial::from_exponents([(-2, 2)]);
        assert!(d > c);
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = &x(1) + &x(2);
        let m = -&p;
        assert!((&p + &m).is_zero());
    }

    #[test]
    fn product_of_binomials() {
        // (x_1 - 1)(x_1 + 1) = x_1^2 - 1
        let a = &x(1) - &MultiPolynomial::one();
        let b = &x(1) + &MultiPolynomial::one();
        let expected = &x(1).pow(2) - &MultiPolynomial::one();
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = &x(1) - &MultiPolynomial::one();
        let b = &x(1) + &MultiPolynomial::one();
        let p = &a * &b;
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        let c = &x(2) + &MultiPolynomial::one();
        assert_eq!(p.exact_div(&c), None);
    }

    #[test]
    fn gcd_univariate() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let p = &x(1).pow(2) - &MultiPolynomial::one();
        let d = &x(1) - &MultiPolynomial::one();
        assert_eq!(MultiPolynomial::gcd(&p, &d), d);
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((x_1 + x_2)(x_1 - 1), (x_1 + x_2)(x_2 + 3)) = x_1 + x_2
        let common = &x(1) + &x(2);
        let a = &common * &(&x(1) - &MultiPolynomial::one());
        let b = &common * &(&x(2) + &MultiPolynomial::integer(3));
        assert_eq!(MultiPolynomial::gcd(&a, &b), common);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = &x(1) + &MultiPolynomial::one();
        let b = &x(2) + &MultiPolynomial::one();
        assert!(MultiPolynomial::gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let a = (&x(1) + &MultiPolynomial::one()).scale(&q(3));
        let g = MultiPolynomial::gcd(&a, &MultiPolynomial::zero());
        assert_eq!(g, &x(1) + &MultiPolynomial::one());
    }

    #[test]
    fn gcd_negative_indices() {
        let common = &x(-2) - &x(3);
        let a = &common * &x(-2);
        let b = &common * &(&x(3) + &MultiPolynomial::one());
        assert_eq!(MultiPolynomial::gcd(&a, &b), common.monic());
    }

    #[test]
    fn partial_derivative_power_rule() {
        let p = x(1).pow(3);
        let expected = x(1).pow(2).scale(&q(3));
        assert_eq!(p.partial_derivative(1), expected);
        assert!(p.partial_derivative(2).is_zero());
    }

    #[test]
    fn display_ordering_and_signs() {
        let p = &(&x(1).pow(2) - &x(1).scale(&q(2))) + &MultiPolynomial::one();
        assert_eq!(p.to_string(), "x_1^2 - 2*x_1 + 1");
        assert_eq!(MultiPolynomial::zero().to_string(), "0");
        assert_eq!(x(-2).to_string(), "x_-2");
    }
}
