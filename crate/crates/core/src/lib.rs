//! Exact-arithmetic toolkit for matrix groups over Laurent polynomial rings.
//!
//! The crate provides four layers, each usable on its own:
//!
//! * [`rings`] — arbitrary-precision rationals, multivariate rational
//!   functions `Q(x_{-M}, …, x_M)` with partial-derivative derivations, and
//!   Laurent polynomials `k[t, t^-1]` carrying the two degree valuations
//!   `deg_t` and `deg_{t^-1}`.
//! * [`matrices`] — generic exact matrices over any of those rings, the
//!   standard `SL_2` generators, and the Bruhat-based factorization of an
//!   `SL_2` element into at most 11 elementary matrices.
//! * [`adjoint`] / [`boundedness`] — the adjoint representation, the
//!   derivation cocycle `g ↦ δ(g)·g^-1`, the semidirect embedding of
//!   `SL_m(k)` into `SL_{m²}(k[t,t^-1])`, and degree-growth certificates
//!   showing the image is unbounded.
//! * [`number_fields`] — exact number-field arithmetic, primitive-power
//!   search, Vandermonde span solving, and the 3·11-factor bounded-generation
//!   decomposition of `SL_2(L)` over `SL_2(Q)` and a congruence subgroup.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod adjoint;
pub mod boundedness;
pub mod matrices;
pub mod number_fields;
pub mod rings;

pub use adjoint::{
    adjoint_matrix, derivation_cocycle, embed_element, right_cocycle, torus_probe, EmbeddingSpec,
    LieBasis, LieVector, SemidirectElement,
};
pub use boundedness::{
    certify_unbounded_embedding, classify_cyclic, degree_profile, growth_explore,
    BoundednessEvidence, CyclicVerdict, DegreeProfile, GrowthReport, UnboundednessWitness,
};
pub use matrices::{
    bruhat_decompose_sl2, sl2, ElementaryFactor, ElementaryWord, Matrix, MatrixRecord,
    ELEMENTARY_FACTOR_BUDGET,
};
pub use number_fields::{
    decompose_3n0, double_embedding_orbit, even_power_coordinates, is_primitive,
    primitive_power_search, vandermonde_span_solve, DecompositionCertificate, FactorTag,
    NFElement, NumberField, OrbitOutcome, BOUNDED_FACTOR_BUDGET,
};
pub use rings::{
    Derivation, LaurentDegrees, LaurentPolynomial, Monomial, MultiPolynomial, Rational,
    RationalFunction, Ring, RingError,
};
