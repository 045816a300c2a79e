use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix, Scalar};

/// Structure constants of a finite-dimensional Hopf algebra, in the on-disk layout.
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i e_j`, `comult[i][j][k]`
/// the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, and `antipode[r][c]` the
/// coefficient of `e_r` in `S(e_c)`. The R-matrix is `Σ r[i*n+j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfAlgebraData {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub comult: Vec<Vec<Vec<Scalar>>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Element of a tensor power `H^{⊗k}`, keyed by basis multi-index.
pub type TensorElement = BTreeMap<Vec<usize>, Scalar>;

type Terms2 = Vec<(usize, Scalar)>;
type Terms3 = Vec<(usize, usize, Scalar)>;

struct Inner {
    data: HopfAlgebraData,
    /// nonzero `(k, m_ij^k)` for each `i * n + j`
    mult: Vec<Terms2>,
    /// nonzero `(j, k, Δ_i^{jk})` for each `i`
    comult: Vec<Terms3>,
    antipode: Matrix,
    generators: OnceLock<Vec<usize>>,
}

/// A validated-shape Hopf algebra with sparse lookup tables. Cheap to clone.
#[derive(Clone)]
pub struct HopfAlgebra(Arc<Inner>);

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra({}, dim {})", self.name(), self.dim())
    }
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.data == other.0.data
    }
}

impl Eq for HopfAlgebra {}

fn check_len<T>(what: &str, v: &[T], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::InvalidAlgebra(format!("{what} has length {}, expected {n}", v.len())));
    }
    Ok(())
}

impl HopfAlgebra {
    /// Checks shapes only; use [`check_axioms`](super::check_axioms) for the identities.
    pub fn new(data: HopfAlgebraData) -> Result<Self> {
        let n = data.dim;
        check_len("basis", &data.basis, n)?;
        check_len("unit", &data.unit, n)?;
        check_len("counit", &data.counit, n)?;
        check_len("mult", &data.mult, n)?;
        check_len("comult", &data.comult, n)?;
        check_len("antipode", &data.antipode, n)?;
        for i in 0..n {
            check_len("mult row", &data.mult[i], n)?;
            check_len("comult row", &data.comult[i], n)?;
            check_len("antipode row", &data.antipode[i], n)?;
            for j in 0..n {
                check_len("mult entry", &data.mult[i][j], n)?;
                check_len("comult entry", &data.comult[i][j], n)?;
            }
        }
        if let Some(r) = &data.r_matrix {
            check_len("r_matrix", r, n * n)?;
        }
        if let Some(p) = &data.pivot {
            check_len("pivot", p, n)?;
        }
        let mult = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..n)
                    .filter(|&k| !data.mult[i][j][k].is_zero())
                    .map(|k| (k, data.mult[i][j][k].clone()))
                    .collect()
            })
            .collect();
        let comult = (0..n)
            .map(|i| {
                let mut t = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let c = &data.comult[i][j][k];
                        if !c.is_zero() {
                            t.push((j, k, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        let antipode = Matrix::from_rows(data.antipode.clone())?;
        Ok(HopfAlgebra(Arc::new(Inner {
            data,
            mult,
            comult,
            antipode,
            generators: OnceLock::new(),
        })))
    }

    pub fn data(&self) -> &HopfAlgebraData {
        &self.0.data
    }

    pub fn name(&self) -> &str {
        &self.0.data.name
    }

    pub fn dim(&self) -> usize {
        self.0.data.dim
    }

    pub fn has_r_matrix(&self) -> bool {
        self.0.data.r_matrix.is_some()
    }

    /// Nonzero terms `(k, c)` of `e_i e_j = Σ c e_k`.
    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.0.mult[i * self.dim() + j]
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.0.comult[i]
    }

    /// Antipode matrix; column `i` is `S(e_i)`.
    pub fn antipode_matrix(&self) -> &Matrix {
        &self.0.antipode
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.0.data.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.0.data.counit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.mult_terms(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.0.antipode.apply(a)
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(self.counit()).filter(|(x, _)| !x.is_zero()).map(|(x, e)| x * e).sum()
    }

    /// `Δ(a)` as an `n²` vector with index `j * n + k`.
    pub fn comul(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, c) in self.comult_terms(i) {
                out[j * n + k] += &(x * c);
            }
        }
        out
    }

    /// Nonzero terms of the R-matrix as `(i, j, r)` with `R = Σ r e_i ⊗ e_j`.
    pub fn r_terms(&self) -> Result<Vec<(usize, usize, Scalar)>> {
        let n = self.dim();
        let r = self
            .0
            .data
            .r_matrix
            .as_ref()
            .ok_or_else(|| Error::MissingRMatrix(self.name().to_string()))?;
        Ok(r.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(ij, c)| (ij / n, ij % n, c.clone()))
            .collect())
    }

    /// `R⁻¹ = (S ⊗ id)(R)`, as `(i, j, r)` terms.
    pub fn r_inverse_terms(&self) -> Result<Vec<(usize, usize, Scalar)>> {
        let n = self.dim();
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, j, r) in self.r_terms()? {
            for k in 0..n {
                let s = self.0.antipode.get(k, i);
                if !s.is_zero() {
                    *acc.entry((k, j)).or_insert_with(Scalar::zero) += &(s * &r);
                }
            }
        }
        Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect())
    }

    pub fn pivot(&self) -> Result<Vec<Scalar>> {
        self.0
            .data
            .pivot
            .clone()
            .ok_or_else(|| Error::MissingPivot(self.name().to_string()))
    }

    /// Inverse of the grouplike pivot, which is its antipode.
    pub fn pivot_inverse(&self) -> Result<Vec<Scalar>> {
        Ok(self.antipode(&self.pivot()?))
    }

    /// Basis indices generating the algebra, chosen greedily in index order.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            let n = self.dim();
            let mut gens: Vec<usize> = Vec::new();
            let mut span = self.closure(&gens);
            for i in 0..n {
                if span.len() == n {
                    break;
                }
                if !in_span(&span, &self.basis_vector(i)) {
                    gens.push(i);
                    span = self.closure(&gens);
                }
            }
            gens
        })
    }

    /// Basis of the subalgebra generated by the given basis elements.
    fn closure(&self, gens: &[usize]) -> Vec<Vec<Scalar>> {
        let mut span: Vec<Vec<Scalar>> = vec![self.unit().to_vec()];
        let mut frontier = span.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for &g in gens {
                    let w = self.mul(v, &self.basis_vector(g));
                    if !in_span(&span, &w) {
                        span.push(w.clone());
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        span
    }

    /// Left-regular action of `a` as an `n x n` matrix.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(a, &self.basis_vector(j));
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }
}

fn in_span(span: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let n = v.len();
    let cols: Vec<Scalar> = (0..n)
        .flat_map(|r| span.iter().map(move |s| s[r].clone()).chain(std::iter::once(v[r].clone())))
        .collect();
    let m = Matrix::new(n, span.len() + 1, cols).expect("consistent shape");
    rank(&m) == span.len()
}

/// Multiplies two elements of `H^{⊗k}` factorwise.
pub fn tensor_mul(h: &HopfAlgebra, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::new();
    for (a, ca) in x {
        for (b, cb) in y {
            let c = ca * cb;
            let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(a.len()), c)];
            for (&ai, &bi) in a.iter().zip(b) {
                let terms = h.mult_terms(ai, bi);
                let mut next = Vec::with_capacity(partial.len() * terms.len());
                for (idx, coef) in &partial {
                    for (k, m) in terms {
                        let mut idx2 = idx.clone();
                        idx2.push(*k);
                        next.push((idx2, coef * m));
                    }
                }
                partial = next;
            }
            for (idx, coef) in partial {
                *out.entry(idx).or_insert_with(Scalar::zero) += &coef;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Applies a map on one tensor factor: each basis index `i` at `slot` is
/// replaced by the terms returned by `f(i)`, which may have several indices.
pub fn tensor_apply(
    x: &TensorElement,
    slot: usize,
    f: impl Fn(usize) -> Vec<(Vec<usize>, Scalar)>,
) -> TensorElement {
    let mut out = TensorElement::new();
    for (idx, c) in x {
        for (rep, coef) in f(idx[slot]) {
            let mut k = idx[..slot].to_vec();
            k.extend_from_slice(&rep);
            k.extend_from_slice(&idx[slot + 1..]);
            *out.entry(k).or_insert_with(Scalar::zero) += &(c * &coef);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn tensor_from_vec(v: &[Scalar], n: usize, order: usize) -> TensorElement {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(mut flat, c)| {
            let mut idx = vec![0; order];
            for slot in (0..order).rev() {
                idx[slot] = flat % n;
                flat /= n;
            }
            (idx, c.clone())
        })
        .collect()
}
