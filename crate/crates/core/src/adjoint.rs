//! The adjoint representation of `SL_m`, the derivation cocycle, and the
//! semidirect embedding into `SL_{n+1}(k[t, t^-1])` with `n = m² - 1`.
//!
//! For `g` in `SL_m(k)` the map stores `(Ad g, Σ_i coords(δ_i(g)·g^-1) t^i)`,
//! summed over derivation indices in the configured window. With column
//! vectors acted on from the left, the right cocycle `γ(g) = δ(g)·g^-1`
//! satisfies `γ(gh) = γ(g) + Ad(g)·γ(h)`, which is exactly the block
//! multiplication law `(A_1, v_1)·(A_2, v_2) = (A_1 A_2, v_1 + A_1 v_2)`, so
//! the embedding is a group homomorphism. The left cocycle `g^-1·δ(g)` is
//! exposed as [`derivation_cocycle`]; the two are `Ad g`-translates of each
//! other.

use std::fmt;

use crate::matrices::{Matrix, MatrixError};
use crate::rings::{Derivation, LaurentPolynomial, RationalFunction, RingError};

/// Errors from the adjoint and embedding layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjointError {
    #[error("matrix must be {expected}x{expected}, found {found}x{found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("matrix determinant is not 1")]
    NotUnimodular,
    #[error("matrix is not traceless; cannot extract Lie algebra coordinates")]
    NotTraceless,
    #[error("source group size must be at least 2, found {found}")]
    GroupSizeTooSmall { found: usize },
    #[error("window must be at least 1")]
    WindowTooSmall,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The standard basis of the traceless `m x m` matrices: the off-diagonal
/// units `E_ij` in row-major order, then the Cartan elements
/// `H_i = E_ii - E_{i+1,i+1}`. For `m = 2` this is `(e, f, h)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieBasis {
    m: usize,
    elements: Vec<Matrix<RationalFunction>>,
}

impl LieBasis {
    pub fn standard(m: usize) -> Result<Self, AdjointError> {
        if m < 2 {
            return Err(AdjointError::GroupSizeTooSmall { found: m });
        }
        let zero = RationalFunction::zero();
        let one = RationalFunction::one();
        let mut elements = Vec::with_capacity(m * m - 1);
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    elements.push(Matrix::from_fn(m, |r, c| {
                        if (r, c) == (i, j) {
                            one.clone()
                        } else {
                            zero.clone()
                        }
                    }));
                }
            }
        }
        for i in 0..m - 1 {
            elements.push(Matrix::from_fn(m, |r, c| {
                if r != c {
                    zero.clone()
                } else if r == i {
                    one.clone()
                } else if r == i + 1 {
                    -&one
                } else {
                    zero.clone()
                }
            }));
        }
        Ok(LieBasis { m, elements })
    }

    pub fn group_size(&self) -> usize {
        self.m
    }

    /// `n = m² - 1`, the dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        self.m * self.m - 1
    }

    pub fn elements(&self) -> &[Matrix<RationalFunction>] {
        &self.elements
    }

    /// Coordinates of a traceless matrix relative to this basis. The
    /// off-diagonal coordinates are read off directly; the Cartan
    /// coordinates are the partial sums of the diagonal.
    pub fn coordinates(&self, x: &Matrix<RationalFunction>) -> Result<LieVector, AdjointError> {
        if x.n() != self.m {
            return Err(AdjointError::WrongDimension {
                expected: self.m,
                found: x.n(),
            });
        }
        if !x.trace().is_zero() {
            return Err(AdjointError::NotTraceless);
        }
        let mut coords = Vec::with_capacity(self.dimension());
        for i in 0..self.m {
            for j in 0..self.m {
                if i != j {
                    coords.push(x.entry(i, j).clone());
                }
            }
        }
        let mut partial = RationalFunction::zero();
        for i in 0..self.m - 1 {
            partial = &partial + x.entry(i, i);
            coords.push(partial.clone());
        }
        Ok(LieVector { coords })
    }

    /// Reassemble `Σ c_b B_b` from coordinates.
    pub fn combine(&self, v: &LieVector) -> Result<Matrix<RationalFunction>, AdjointError> {
        if v.coords.len() != self.dimension() {
            return Err(AdjointError::WrongDimension {
                expected: self.dimension(),
                found: v.coords.len(),
            });
        }
        let mut acc = Matrix::from_fn(self.m, |_, _| RationalFunction::zero());
        for (c, b) in v.coords.iter().zip(&self.elements) {
            acc = acc.checked_add(&b.scale(c))?;
        }
        Ok(acc)
    }
}

/// An element of the Lie algebra expressed in [`LieBasis`] coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieVector {
    coords: Vec<RationalFunction>,
}

impl LieVector {
    pub fn new(coords: Vec<RationalFunction>) -> Self {
        LieVector { coords }
    }

    pub fn coords(&self) -> &[RationalFunction] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for LieVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Parameters of the embedding: the source group is `SL_m` and derivation
/// indices range over `[-window, window]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EmbeddingSpec {
    m: usize,
    window: u32,
}

impl EmbeddingSpec {
    pub fn new(m: usize, window: u32) -> Result<Self, AdjointError> {
        if m < 2 {
            return Err(AdjointError::GroupSizeTooSmall { found: m });
        }
        if window < 1 {
            return Err(AdjointError::WindowTooSmall);
        }
        Ok(EmbeddingSpec { m, window })
    }

    pub fn group_size(&self) -> usize {
        self.m
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    /// Lie algebra dimension `m² - 1` of the source group.
    pub fn dimension(&self) -> usize {
        self.m * self.m - 1
    }
}

impl Default for EmbeddingSpec {
    fn default() -> Self {
        EmbeddingSpec {
            m: 2,
            window: crate::rings::DEFAULT_VARIABLE_WINDOW,
        }
    }
}

/// Check `g` is `m x m` with determinant 1 and return its inverse, which is
/// just the adjugate.
fn unimodular_inverse(
    g: &Matrix<RationalFunction>,
    m: usize,
) -> Result<Matrix<RationalFunction>, AdjointError> {
    if g.n() != m {
        return Err(AdjointError::WrongDimension {
            expected: m,
            found: g.n(),
        });
    }
    if !g.det().is_one() {
        return Err(AdjointError::NotUnimodular);
    }
    Ok(g.adjugate())
}

/// The matrix of `X ↦ g X g^-1` in the given basis; its determinant is 1.
pub fn adjoint_matrix(
    g: &Matrix<RationalFunction>,
    basis: &LieBasis,
) -> Result<Matrix<RationalFunction>, AdjointError> {
    let m = basis.group_size();
    let ginv = unimodular_inverse(g, m)?;
    let n = basis.dimension();
    let mut columns = Vec::with_capacity(n);
    for b in basis.elements() {
        let conj = g.checked_mul(b)?.checked_mul(&ginv)?;
        columns.push(basis.coordinates(&conj)?);
    }
    Ok(Matrix::from_fn(n, |i, j| columns[j].coords()[i].clone()))
}

/// Apply `d` to every entry of `g`.
fn entrywise_derivative(
    g: &Matrix<RationalFunction>,
    d: &Derivation,
) -> Matrix<RationalFunction> {
    g.map(|e| e.partial_derivative(d))
}

/// The left cocycle `g^-1 · δ(g)` in standard basis coordinates.
pub fn derivation_cocycle(
    g: &Matrix<RationalFunction>,
    d: &Derivation,
) -> Result<LieVector, AdjointError> {
    let basis = LieBasis::standard(g.n())?;
    let ginv = unimodular_inverse(g, g.n())?;
    let a = ginv.checked_mul(&entrywise_derivative(g, d))?;
    basis.coordinates(&a)
}

/// The right cocycle `δ(g) · g^-1` in standard basis coordinates; equals
/// `Ad(g)` applied to the left cocycle.
pub fn right_cocycle(
    g: &Matrix<RationalFunction>,
    d: &Derivation,
) -> Result<LieVector, AdjointError> {
    let basis = LieBasis::standard(g.n())?;
    let ginv = unimodular_inverse(g, g.n())?;
    let a = entrywise_derivative(g, d).checked_mul(&ginv)?;
    basis.coordinates(&a)
}

/// A pair `(Ad g, v)` with `v` a vector of Laurent polynomials, realized as
/// the `(n+1) x (n+1)` block matrix `[[Ad g, v], [0, 1]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemidirectElement {
    ad_part: Matrix<RationalFunction>,
    vec_part: Vec<LaurentPolynomial>,
}

impl SemidirectElement {
    pub fn new(
        ad_part: Matrix<RationalFunction>,
        vec_part: Vec<LaurentPolynomial>,
    ) -> Result<Self, AdjointError> {
        if vec_part.len() != ad_part.n() {
            return Err(AdjointError::WrongDimension {
                expected: ad_part.n(),
                found: vec_part.len(),
            });
        }
        if !ad_part.det().is_one() {
            return Err(AdjointError::NotUnimodular);
        }
        Ok(SemidirectElement { ad_part, vec_part })
    }

    pub fn identity(n: usize) -> Self {
        SemidirectElement {
            ad_part: Matrix::identity(n, &RationalFunction::zero()),
            vec_part: vec![LaurentPolynomial::zero(); n],
        }
    }

    pub fn ad_part(&self) -> &Matrix<RationalFunction> {
        &self.ad_part
    }

    pub fn vec_part(&self) -> &[LaurentPolynomial] {
        &self.vec_part
    }

    pub fn n(&self) -> usize {
        self.ad_part.n()
    }

    /// `(A_1, v_1)·(A_2, v_2) = (A_1 A_2, v_1 + A_1 v_2)`, the block product.
    pub fn multiply(&self, rhs: &Self) -> Result<Self, AdjointError> {
        if self.n() != rhs.n() {
            return Err(AdjointError::WrongDimension {
                expected: self.n(),
                found: rhs.n(),
            });
        }
        let ad = self.ad_part.checked_mul(&rhs.ad_part)?;
        let vec = self
            .vec_part
            .iter()
            .enumerate()
            .map(|(i, v1)| {
                let mut acc = v1.clone();
                for (k, v2) in rhs.vec_part.iter().enumerate() {
                    if v2.is_zero() {
                        continue;
                    }
                    let a = self.ad_part.entry(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &v2.scale(a);
                }
                acc
            })
            .collect();
        Ok(SemidirectElement {
            ad_part: ad,
            vec_part: vec,
        })
    }

    /// `(A, v)^-1 = (A^-1, -A^-1 v)`.
    pub fn inverse(&self) -> Self {
        let adinv = self.ad_part.adjugate(); // det 1
        let vec = (0..self.n())
            .map(|i| {
                let mut acc = LaurentPolynomial::zero();
                for (k, v) in self.vec_part.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    acc = &acc - &v.scale(adinv.entry(i, k));
                }
                acc
            })
            .collect();
        SemidirectElement {
            ad_part: adinv,
            vec_part: vec,
        }
    }

    /// The `(n+1) x (n+1)` block matrix over `k[t, t^-1]`.
    pub fn block_matrix(&self) -> Matrix<LaurentPolynomial> {
        let n = self.n();
        Matrix::from_fn(n + 1, |i, j| {
            if i < n && j < n {
                LaurentPolynomial::constant(self.ad_part.entry(i, j).clone())
            } else if i < n {
                self.vec_part[i].clone()
            } else if j < n {
                LaurentPolynomial::zero()
            } else {
                LaurentPolynomial::one()
            }
        })
    }
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.block_matrix())
    }
}

/// Embed `g ∈ SL_m(k)` as `(Ad g, Σ_i coords(δ_i(g)·g^-1)·t^i)`, summing
/// over derivation indices in the window that actually occur in `g`.
pub fn embed_element(
    g: &Matrix<RationalFunction>,
    spec: &EmbeddingSpec,
) -> Result<SemidirectElement, AdjointError> {
    let basis = LieBasis::standard(spec.group_size())?;
    let ginv = unimodular_inverse(g, spec.group_size())?;
    let ad = adjoint_matrix(g, &basis)?;
    let n = basis.dimension();
    let mut vec_part = vec![LaurentPolynomial::zero(); n];

    let mut support = std::collections::BTreeSet::new();
    for e in g.entries() {
        support.extend(e.support_variables());
    }
    for i in support {
        if i.unsigned_abs() > spec.window() {
            continue;
        }
        let d = Derivation::new(i, spec.window())?;
        let gamma = entrywise_derivative(g, &d).checked_mul(&ginv)?;
        let coords = basis.coordinates(&gamma)?;
        for (j, c) in coords.coords().iter().enumerate() {
            if !c.is_zero() {
                vec_part[j] = &vec_part[j] + &LaurentPolynomial::monomial(i as i64, c.clone());
            }
        }
    }
    Ok(SemidirectElement {
        ad_part: ad,
        vec_part,
    })
}

/// The torus element `diag(x_i, x_i^-1) ⊕ I_{m-2}`, whose embedded image has
/// a nonzero homogeneous component in degree `i`.
pub fn torus_probe(i: i32, spec: &EmbeddingSpec) -> Result<Matrix<RationalFunction>, AdjointError> {
    if i.unsigned_abs() > spec.window() {
        return Err(AdjointError::Ring(RingError::IndexOutsideWindow {
            index: i,
            window: spec.window(),
        }));
    }
    let x = RationalFunction::variable(i);
    let xinv = x.inverse().expect("variable is nonzero");
    Ok(Matrix::from_fn(spec.group_size(), |r, c| {
        if r != c {
            RationalFunction::zero()
        } else if r == 0 {
            x.clone()
        } else if r == 1 {
            xinv.clone()
        } else {
            RationalFunction::one()
        }
    }))
}
