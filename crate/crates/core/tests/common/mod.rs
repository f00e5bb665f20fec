//! Shared helpers for the integration suites: seeded generators of random
//! group elements built from unimodular words.

#![allow(dead_code)]

use loopdeg::matrices::sl2;
use loopdeg::{Matrix, NFElement, NumberField, Rational, RationalFunction};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Small nonzero rational.
pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n = rng.random_range(-5i64..=5);
        if n != 0 {
            let d = rng.random_range(1i64..=3);
            return qq(n, d);
        }
    }
}

/// Random element of `SL_2(Q)` as a word of `len` generators
/// `u_+(r), u_-(r), torus(a)`.
pub fn random_sl2_rational(rng: &mut ChaCha8Rng, len: usize) -> Matrix<Rational> {
    let mut acc = Matrix::identity(2, &q(0));
    for _ in 0..len {
        let factor = match rng.random_range(0..3) {
            0 => sl2::u_plus(&random_nonzero_rational(rng)),
            1 => sl2::u_minus(&random_nonzero_rational(rng)),
            _ => sl2::torus(&random_nonzero_rational(rng)).unwrap(),
        };
        acc = acc.checked_mul(&factor).unwrap();
    }
    acc
}

/// Generator parameter drawn from `{±1, ±2, x_i, 1 + x_i, x_i x_j}`.
pub fn random_param(rng: &mut ChaCha8Rng, vars: &[i32]) -> RationalFunction {
    let pick = |rng: &mut ChaCha8Rng| vars[rng.random_range(0..vars.len())];
    match rng.random_range(0..5) {
        0 => RationalFunction::integer(if rng.random_bool(0.5) { 1 } else { -1 }),
        1 => RationalFunction::integer(if rng.random_bool(0.5) { 2 } else { -2 }),
        2 => RationalFunction::variable(pick(rng)),
        3 => &RationalFunction::one() + &RationalFunction::variable(pick(rng)),
        _ => {
            &RationalFunction::variable(pick(rng)) * &RationalFunction::variable(pick(rng))
        }
    }
}

/// Random element of `SL_2(Q(x_i))` as a word of `len` generators with
/// parameters from [`random_param`].
pub fn random_sl2_ratfunc(
    rng: &mut ChaCha8Rng,
    vars: &[i32],
    len: usize,
) -> Matrix<RationalFunction> {
    let mut acc = Matrix::identity(2, &RationalFunction::zero());
    for _ in 0..len {
        let p = random_param(rng, vars);
        let factor = match rng.random_range(0..3) {
            0 => sl2::u_plus(&p),
            1 => sl2::u_minus(&p),
            _ => sl2::torus(&p).unwrap(),
        };
        acc = acc.checked_mul(&factor).unwrap();
    }
    acc
}

/// Random element of the field with small integral and fractional coords.
pub fn random_nf_element(rng: &mut ChaCha8Rng, field: &NumberField) -> NFElement {
    let n = field.degree();
    let coords = (0..n)
        .map(|_| {
            let num = rng.random_range(-4i64..=4);
            let den = rng.random_range(1i64..=3);
            qq(num, den)
        })
        .collect();
    field.element(coords).unwrap()
}

fn random_nonzero_nf(rng: &mut ChaCha8Rng, field: &NumberField) -> NFElement {
    loop {
        let e = random_nf_element(rng, field);
        if !loopdeg::Ring::is_zero(&e) {
            return e;
        }
    }
}

/// Random element of `SL_2(L)` as a word of `len` unimodular generators.
pub fn random_sl2_number_field(
    rng: &mut ChaCha8Rng,
    field: &NumberField,
    len: usize,
) -> Matrix<NFElement> {
    let mut acc = Matrix::identity(2, &field.zero());
    for _ in 0..len {
        let factor = match rng.random_range(0..3) {
            0 => sl2::u_plus(&random_nf_element(rng, field)),
            1 => sl2::u_minus(&random_nf_element(rng, field)),
            _ => sl2::torus(&random_nonzero_nf(rng, field)).unwrap(),
        };
        acc = acc.checked_mul(&factor).unwrap();
    }
    acc
}
