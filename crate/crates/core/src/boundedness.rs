//! Degree-valuation boundedness: matrix degree profiles, a breadth-first
//! growth explorer over words in a generating set, and certified
//! unboundedness witnesses for embedded images.
//!
//! A subgroup of `SL_n(k[t, t^-1])` is bounded exactly when `|deg_t|` and
//! `|deg_{t^-1}|` admit a uniform bound over all its elements. For a general
//! finitely generated subgroup that condition is only semi-decided here: the
//! explorer reports evidence. Certified verdicts are produced for cyclic
//! groups with a recognized power pattern (diagonal-unit and unipotent
//! generators) and for embedded images via torus witnesses.

use std::collections::BTreeMap;
use std::fmt;

use crate::adjoint::{embed_element, torus_probe, AdjointError, EmbeddingSpec};
use crate::matrices::{Matrix, MatrixError};
use crate::rings::LaurentPolynomial;

/// Errors from the boundedness layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundednessError {
    #[error("degree profile of the all-zero matrix is undefined")]
    AllZeroMatrix,
    #[error("generator {index} is not unimodular")]
    NonUnimodularGenerator { index: usize },
    #[error("generator {index} has dimension {found}, expected {expected}")]
    GeneratorDimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("no generators supplied")]
    NoGenerators,
    #[error("target degree {degree} exceeds the window {window}; enlarge the window")]
    WindowExceeded { degree: i32, window: u32 },
    #[error(transparent)]
    Adjoint(#[from] AdjointError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The two matrix-level degree valuations: maxima of the entry valuations
/// over the nonzero entries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeProfile {
    pub deg_t: i64,
    pub deg_tinv: i64,
}

impl DegreeProfile {
    /// `max(|deg_t|, |deg_{t^-1}|)`, the quantity the boundedness criterion
    /// bounds.
    pub fn magnitude(&self) -> i64 {
        self.deg_t.abs().max(self.deg_tinv.abs())
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(deg_t = {}, deg_t^-1 = {})", self.deg_t, self.deg_tinv)
    }
}

/// `deg_t(g) = max_{i,j} deg_t(g_ij)` and likewise for `deg_{t^-1}`, taken
/// over nonzero entries only. The all-zero matrix carries no profile.
pub fn degree_profile(g: &Matrix<LaurentPolynomial>) -> Result<DegreeProfile, BoundednessError> {
    let mut deg_t: Option<i64> = None;
    let mut deg_tinv: Option<i64> = None;
    for e in g.entries() {
        if let Some(d) = e.degrees() {
            deg_t = Some(deg_t.map_or(d.deg_t, |m| m.max(d.deg_t)));
            deg_tinv = Some(deg_tinv.map_or(d.deg_tinv, |m| m.max(d.deg_tinv)));
        }
    }
    match (deg_t, deg_tinv) {
        (Some(deg_t), Some(deg_tinv)) => Ok(DegreeProfile { deg_t, deg_tinv }),
        _ => Err(BoundednessError::AllZeroMatrix),
    }
}

/// One row of a growth report: cumulative distinct elements up to this word
/// length, with the running degree maxima.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrowthRow {
    pub length: usize,
    pub distinct_elements: usize,
    pub max_abs_deg_t: i64,
    pub max_abs_deg_tinv: i64,
}

/// What the explored prefix of the group suggests. Breadth-first evidence,
/// not a proof.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundednessEvidence {
    /// Degree maxima stopped growing before the final length.
    Plateau { since_length: usize },
    /// Degree maxima strictly increased at every length.
    StrictGrowth,
    /// Mixed behaviour within the explored horizon.
    Inconclusive,
}

impl fmt::Display for BoundednessEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundednessEvidence::Plateau { since_length } => {
                write!(f, "plateau since length {} (evidence of boundedness)", since_length)
            }
            BoundednessEvidence::StrictGrowth => {
                write!(f, "strict growth at every length (evidence of unboundedness)")
            }
            BoundednessEvidence::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// The outcome of a breadth-first exploration of words in the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthReport {
    rows: Vec<GrowthRow>,
    evidence: BoundednessEvidence,
}

impl GrowthReport {
    pub fn rows(&self) -> &[GrowthRow] {
        &self.rows
    }

    pub fn evidence(&self) -> BoundednessEvidence {
        self.evidence
    }
}

/// Breadth-first enumeration of distinct products of the generators and
/// their inverses, up to words of length `max_length`. Deduplication is by
/// canonical serialization, so the report is deterministic.
pub fn growth_explore(
    generators: &[Matrix<LaurentPolynomial>],
    max_length: usize,
) -> Result<GrowthReport, BoundednessError> {
    if generators.is_empty() {
        return Err(BoundednessError::NoGenerators);
    }
    let n = generators[0].n();
    let mut alphabet: BTreeMap<String, Matrix<LaurentPolynomial>> = BTreeMap::new();
    for (index, g) in generators.iter().enumerate() {
        if g.n() != n {
            return Err(BoundednessError::GeneratorDimensionMismatch {
                index,
                expected: n,
                found: g.n(),
            });
        }
        if !g.det().is_one() {
            return Err(BoundednessError::NonUnimodularGenerator { index });
        }
        let inv = g.adjugate(); // det 1
        alphabet.insert(g.canonical_key(), g.clone());
        alphabet.insert(inv.canonical_key(), inv);
    }

    let identity = generators[0].identity_like();
    let mut visited: BTreeMap<String, ()> = BTreeMap::new();
    visited.insert(identity.canonical_key(), ());
    let mut frontier: Vec<Matrix<LaurentPolynomial>> = vec![identity.clone()];
    let mut max_abs_deg_t = degree_profile(&identity)?.deg_t.abs();
    let mut max_abs_deg_tinv = max_abs_deg_t;
    let mut rows = Vec::with_capacity(max_length);

    for length in 1..=max_length {
        let mut next: BTreeMap<String, Matrix<LaurentPolynomial>> = BTreeMap::new();
        for w in &frontier {
            for g in alphabet.values() {
                let prod = w.checked_mul(g)?;
                let key = prod.canonical_key();
                if visited.contains_key(&key) || next.contains_key(&key) {
                    continue;
                }
                let profile = degree_profile(&prod)?;
                max_abs_deg_t = max_abs_deg_t.max(profile.deg_t.abs());
                max_abs_deg_tinv = max_abs_deg_tinv.max(profile.deg_tinv.abs());
                next.insert(key, prod);
            }
        }
        for key in next.keys() {
            visited.insert(key.clone(), ());
        }
        frontier = next.into_values().collect();
        rows.push(GrowthRow {
            length,
            distinct_elements: visited.len(),
            max_abs_deg_t,
            max_abs_deg_tinv,
        });
        if frontier.is_empty() {
            // The group has been exhausted; remaining rows repeat.
            for l in length + 1..=max_length {
                rows.push(GrowthRow {
                    length: l,
                    distinct_elements: visited.len(),
                    max_abs_deg_t,
                    max_abs_deg_tinv,
                });
            }
            break;
        }
    }

    let evidence = assess(&rows);
    Ok(GrowthReport { rows, evidence })
}

fn assess(rows: &[GrowthRow]) -> BoundednessEvidence {
    if rows.len() < 2 {
        return BoundednessEvidence::Inconclusive;
    }
    let grew = |a: &GrowthRow, b: &GrowthRow| {
        b.max_abs_deg_t > a.max_abs_deg_t || b.max_abs_deg_tinv > a.max_abs_deg_tinv
    };
    let all_grow = rows.windows(2).all(|w| grew(&w[0], &w[1]));
    if all_grow {
        return BoundednessEvidence::StrictGrowth;
    }
    // Find the first length after which the maxima never change.
    let last = rows.last().unwrap();
    let mut since = rows.len();
    for (i, row) in rows.iter().enumerate().rev() {
        if row.max_abs_deg_t == last.max_abs_deg_t
            && row.max_abs_deg_tinv == last.max_abs_deg_tinv
        {
            since = i + 1;
        } else {
            break;
        }
    }
    if since < rows.len() {
        BoundednessEvidence::Plateau {
            since_length: rows[since - 1].length,
        }
    } else {
        BoundednessEvidence::Inconclusive
    }
}

/// Certified verdict for the cyclic group generated by a single matrix, when
/// a closed-form power pattern is recognized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CyclicVerdict {
    /// Diagonal with unit entries of nonzero `t`-exponent: powers grow
    /// linearly in degree.
    CertifiedUnbounded { reason: String },
    /// Degree profile of every power is uniformly bounded.
    CertifiedBounded { reason: String },
    /// No closed form recognized; fall back to exploration evidence.
    Inconclusive,
}

/// Classify the cyclic group generated by `g` where a closed form exists:
/// diagonal matrices with unit entries and unipotent triangular matrices.
pub fn classify_cyclic(g: &Matrix<LaurentPolynomial>) -> CyclicVerdict {
    let n = g.n();
    let is_diagonal = (0..n).all(|i| (0..n).all(|j| i == j || g.entry(i, j).is_zero()));
    if is_diagonal {
        let mut exponents = Vec::with_capacity(n);
        for i in 0..n {
            let e = g.entry(i, i);
            if e.inverse().is_err() {
                return CyclicVerdict::Inconclusive;
            }
            exponents.push(e.degrees().expect("diagonal unit is nonzero").deg_t);
        }
        return if exponents.iter().any(|&e| e != 0) {
            CyclicVerdict::CertifiedUnbounded {
                reason: format!(
                    "diagonal of units with t-exponents {:?}; the l-th power has degree profile scaled by l",
                    exponents
                ),
            }
        } else {
            CyclicVerdict::CertifiedBounded {
                reason: "diagonal of degree-0 units; every power has profile (0, 0)".to_string(),
            }
        };
    }
    let unit_diagonal = (0..n).all(|i| g.entry(i, i).is_one());
    let upper = (0..n).all(|i| (0..i).all(|j| g.entry(i, j).is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| g.entry(i, j).is_zero()));
    if unit_diagonal && (upper || lower) {
        return CyclicVerdict::CertifiedBounded {
            reason: format!(
                "unipotent triangular: powers are I + sum of binomial multiples of the first {} nilpotent powers, so degrees are uniformly bounded",
                n - 1
            ),
        };
    }
    CyclicVerdict::Inconclusive
}

/// A degree-`D` element in the embedded image, witnessing that the image is
/// unbounded as the window grows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnboundednessWitness {
    target_degree: i32,
    element_word: String,
    profile: DegreeProfile,
}

impl UnboundednessWitness {
    pub fn target_degree(&self) -> i32 {
        self.target_degree
    }

    /// Description of the source element that was embedded.
    pub fn element_word(&self) -> &str {
        &self.element_word
    }

    pub fn profile(&self) -> DegreeProfile {
        self.profile
    }

    /// The realized degree `max(|deg_t|, |deg_{t^-1}|)` of the image.
    pub fn witness_degree(&self) -> i64 {
        self.profile.magnitude()
    }
}

impl fmt::Display for UnboundednessWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} witness: {} with image profile {}",
            self.target_degree, self.element_word, self.profile
        )
    }
}

/// Build the witness for degree `target`: embed `torus_probe(target)`, whose
/// image has a nonzero homogeneous component in that degree. Succeeds for
/// every `|target| ≤ window`, which is the finite-window shadow of the
/// unboundedness of the embedding.
pub fn certify_unbounded_embedding(
    spec: &EmbeddingSpec,
    target: i32,
) -> Result<UnboundednessWitness, BoundednessError> {
    if target.unsigned_abs() > spec.window() {
        return Err(BoundednessError::WindowExceeded {
            degree: target,
            window: spec.window(),
        });
    }
    let probe = torus_probe(target, spec)?;
    let image = embed_element(&probe, spec)?;
    let profile = degree_profile(&image.block_matrix())?;
    let witness = UnboundednessWitness {
        target_degree: target,
        element_word: format!("diag(x_{i}, x_{i}^-1)", i = target),
        profile,
    };
    debug_assert!(witness.witness_degree() >= i64::from(target.unsigned_abs()));
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::sl2;
    use crate::rings::RationalFunction;

    fn lp_int(n: i64) -> LaurentPolynomial {
        LaurentPolynomial::integer(n)
    }

    fn diag_t() -> Matrix<LaurentPolynomial> {
        let t = LaurentPolynomial::t();
        let tinv = t.inverse().unwrap();
        Matrix::from_rows(vec![
            vec![t, LaurentPolynomial::zero()],
            vec![LaurentPolynomial::zero(), tinv],
        ])
        .unwrap()
    }

    fn u_plus_mixed() -> Matrix<LaurentPolynomial> {
        // u_+(t + 2 t^-1)
        let c = &LaurentPolynomial::t() + &LaurentPolynomial::monomial(-1, RationalFunction::integer(2));
        sl2::u_plus(&c)
    }

    #[test]
    fn profile_of_diagonal_powers() {
        let g = diag_t();
        let p3 = g.pow(3);
        let profile = degree_profile(&p3).unwrap();
        assert_eq!(profile.deg_t, 3);
        assert_eq!(profile.deg_tinv, 3);
    }

    #[test]
    fn profile_of_mixed_unipotent_is_zero() {
        // Entry t + 2t^-1 has deg_t = -1, deg_tinv = -1; the constant
        // entries contribute 0, so the maxima are (0, 0).
        let profile = degree_profile(&u_plus_mixed()).unwrap();
        assert_eq!(profile.deg_t, 0);
        assert_eq!(profile.deg_tinv, 0);
    }

    #[test]
    fn profile_of_identity() {
        let id = Matrix::identity(2, &LaurentPolynomial::zero());
        let profile = degree_profile(&id).unwrap();
        assert_eq!((profile.deg_t, profile.deg_tinv), (0, 0));
    }

    #[test]
    fn profile_of_zero_matrix_is_an_error() {
        let z = Matrix::from_rows(vec![
            vec![LaurentPolynomial::zero(), LaurentPolynomial::zero()],
            vec![LaurentPolynomial::zero(), LaurentPolynomial::zero()],
        ])
        .unwrap();
        assert_eq!(degree_profile(&z), Err(BoundednessError::AllZeroMatrix));
    }

    #[test]
    fn growth_of_torus_generator() {
        let report = growth_explore(&[diag_t()], 3).unwrap();
        let maxima: Vec<i64> = report.rows().iter().map(|r| r.max_abs_deg_t).collect();
        assert_eq!(maxima, vec![1, 2, 3]);
        // diag(t^j, t^-j) for |j| <= l: 2l + 1 distinct elements.
        let counts: Vec<usize> = report.rows().iter().map(|r| r.distinct_elements).collect();
        assert_eq!(counts, vec![3, 5, 7]);
        assert_eq!(report.evidence(), BoundednessEvidence::StrictGrowth);
    }

    #[test]
    fn growth_of_unipotent_plateaus() {
        let report = growth_explore(&[u_plus_mixed()], 5).unwrap();
        for row in report.rows() {
            assert_eq!(row.max_abs_deg_t, 0);
            assert_eq!(row.max_abs_deg_tinv, 0);
        }
        assert!(matches!(
            report.evidence(),
            BoundednessEvidence::Plateau { .. }
        ));
    }

    #[test]
    fn growth_of_identity_generator() {
        let id = Matrix::identity(2, &LaurentPolynomial::zero());
        let report = growth_explore(&[id], 3).unwrap();
        for row in report.rows() {
            assert_eq!(row.distinct_elements, 1);
            assert_eq!(row.max_abs_deg_t, 0);
            assert_eq!(row.max_abs_deg_tinv, 0);
        }
    }

    #[test]
    fn non_unimodular_generator_rejected() {
        let g = Matrix::from_rows(vec![
            vec![lp_int(2), lp_int(0)],
            vec![lp_int(0), lp_int(1)],
        ])
        .unwrap();
        assert_eq!(
            growth_explore(&[g], 2),
            Err(BoundednessError::NonUnimodularGenerator { index: 0 })
        );
    }

    #[test]
    fn explored_elements_stay_unimodular() {
        let s = sl2::weyl_s(&LaurentPolynomial::zero());
        let report = growth_explore(&[diag_t(), s], 3).unwrap();
        // The check is internal to the walk: products of det-1 matrices.
        // Spot-check the counts are monotone and positive.
        let mut prev = 0;
        for row in report.rows() {
            assert!(row.distinct_elements > 0);
            assert!(row.distinct_elements >= prev);
            prev = row.distinct_elements;
        }
    }

    #[test]
    fn cyclic_classification() {
        assert!(matches!(
            classify_cyclic(&diag_t()),
            CyclicVerdict::CertifiedUnbounded { .. }
        ));
        assert!(matches!(
            classify_cyclic(&u_plus_mixed()),
            CyclicVerdict::CertifiedBounded { .. }
        ));
        let bounded_diag = Matrix::from_rows(vec![
            vec![lp_int(2), lp_int(0)],
            vec![
                lp_int(0),
                LaurentPolynomial::constant(
                    RationalFunction::integer(2).inverse().unwrap(),
                ),
            ],
        ])
        .unwrap();
        assert!(matches!(
            classify_cyclic(&bounded_diag),
            CyclicVerdict::CertifiedBounded { .. }
        ));
        let s = sl2::weyl_s(&LaurentPolynomial::zero());
        assert_eq!(classify_cyclic(&s), CyclicVerdict::Inconclusive);
    }

    #[test]
    fn witness_for_positive_degree() {
        let spec = EmbeddingSpec::new(2, 5).unwrap();
        let w = certify_unbounded_embedding(&spec, 5).unwrap();
        assert_eq!(w.profile().deg_t, 5);
        assert_eq!(w.witness_degree(), 5);
    }

    #[test]
    fn witness_for_negative_degree_lands_in_tinv() {
        let spec = EmbeddingSpec::new(2, 3).unwrap();
        let w = certify_unbounded_embedding(&spec, -3).unwrap();
        assert_eq!(w.profile().deg_tinv, 3);
        assert_eq!(w.witness_degree(), 3);
    }

    #[test]
    fn witness_degree_zero_is_trivial() {
        let spec = EmbeddingSpec::new(2, 5).unwrap();
        let w = certify_unbounded_embedding(&spec, 0).unwrap();
        assert_eq!(w.witness_degree(), 0);
    }

    #[test]
    fn window_violation_reported() {
        let spec = EmbeddingSpec::new(2, 5).unwrap();
        assert_eq!(
            certify_unbounded_embedding(&spec, 6),
            Err(BoundednessError::WindowExceeded { degree: 6, window: 5 })
        );
    }

    #[test]
    fn witnesses_exist_for_every_degree_up_to_window() {
        let spec = EmbeddingSpec::new(2, 6).unwrap();
        for d in 1..=6 {
            let w = certify_unbounded_embedding(&spec, d).unwrap();
            assert_eq!(w.witness_degree(), i64::from(d));
        }
    }
}
