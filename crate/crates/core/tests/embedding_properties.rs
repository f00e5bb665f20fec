//! Structural properties of the adjoint embedding on randomized words:
//! the homomorphism laws, determinant invariants, cocycle consistency, and
//! finite support.

mod common;

use common::{random_sl2_ratfunc, rng};
use loopdeg::{
    adjoint_matrix, derivation_cocycle, embed_element, right_cocycle, Derivation, EmbeddingSpec,
    LieBasis,
};

#[test]
fn embedding_is_a_homomorphism_on_random_words() {
    let spec = EmbeddingSpec::new(2, 2).unwrap();
    let vars = [1, 2];
    let mut r = rng(0x10a1);
    for i in 0..40 {
        let len_g = 1 + (i % 4);
        let g = random_sl2_ratfunc(&mut r, &vars, len_g);
        let h = random_sl2_ratfunc(&mut r, &vars, 1 + ((i + 1) % 4));
        let gh = g.checked_mul(&h).unwrap();
        let lhs = embed_element(&gh, &spec).unwrap();
        let rhs = embed_element(&g, &spec)
            .unwrap()
            .multiply(&embed_element(&h, &spec).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "failed at word pair {i}");
    }
}

#[test]
fn adjoint_is_a_homomorphism_with_determinant_one() {
    let basis = LieBasis::standard(2).unwrap();
    let vars = [1, 2];
    let mut r = rng(0x20b2);
    for _ in 0..30 {
        let g = random_sl2_ratfunc(&mut r, &vars, 3);
        let h = random_sl2_ratfunc(&mut r, &vars, 2);
        let ad_g = adjoint_matrix(&g, &basis).unwrap();
        let ad_h = adjoint_matrix(&h, &basis).unwrap();
        let ad_gh = adjoint_matrix(&g.checked_mul(&h).unwrap(), &basis).unwrap();
        assert_eq!(ad_gh, ad_g.checked_mul(&ad_h).unwrap());
        assert!(ad_g.det().is_one());
    }
}

#[test]
fn right_cocycle_is_the_adjoint_translate_of_the_left() {
    let basis = LieBasis::standard(2).unwrap();
    let vars = [1, 2, 3];
    let mut r = rng(0x30c3);
    for _ in 0..25 {
        let g = random_sl2_ratfunc(&mut r, &vars, 3);
        for i in [1, 2, 3] {
            let d = Derivation::new(i, 8).unwrap();
            let left = derivation_cocycle(&g, &d).unwrap();
            let right = right_cocycle(&g, &d).unwrap();
            let ad = adjoint_matrix(&g, &basis).unwrap();
            assert_eq!(right.coords(), &ad.apply(left.coords()).unwrap()[..]);
        }
    }
}

#[test]
fn block_realization_lands_in_unimodular_laurent_matrices() {
    let spec = EmbeddingSpec::new(2, 3).unwrap();
    let vars = [1, 3];
    let mut r = rng(0x40d4);
    for _ in 0..15 {
        let g = random_sl2_ratfunc(&mut r, &vars, 3);
        let block = embed_element(&g, &spec).unwrap().block_matrix();
        assert_eq!(block.n(), 4);
        assert!(block.det().is_one());
        // Bottom row is (0, 0, 0, 1).
        for j in 0..3 {
            assert!(block.entry(3, j).is_zero());
        }
        assert!(block.entry(3, 3).is_one());
    }
}

#[test]
fn embedded_support_is_contained_in_entry_variables() {
    let spec = EmbeddingSpec::new(2, 8).unwrap();
    let vars = [2, 5, 7];
    let mut r = rng(0x50e5);
    for _ in 0..15 {
        let g = random_sl2_ratfunc(&mut r, &vars, 3);
        let mut entry_vars = std::collections::BTreeSet::new();
        for e in g.entries() {
            entry_vars.extend(e.support_variables());
        }
        let el = embed_element(&g, &spec).unwrap();
        for v in el.vec_part() {
            for exp in v.support() {
                assert!(entry_vars.contains(&(exp as i32)));
            }
        }
    }
}

#[test]
fn inverse_law_in_the_semidirect_product() {
    let spec = EmbeddingSpec::new(2, 2).unwrap();
    let vars = [1, 2];
    let mut r = rng(0x60f6);
    for _ in 0..15 {
        let g = random_sl2_ratfunc(&mut r, &vars, 3);
        let el = embed_element(&g, &spec).unwrap();
        let ginv = g.adjugate();
        let el_inv = embed_element(&ginv, &spec).unwrap();
        assert_eq!(el.inverse(), el_inv);
        let prod = el.multiply(&el.inverse()).unwrap();
        assert_eq!(prod, loopdeg::SemidirectElement::identity(3));
    }
}
