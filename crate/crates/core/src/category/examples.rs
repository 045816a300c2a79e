use super::coend::{end, factor_through_end, DinaturalFamily, EndResult};
use super::functor::{Factor, FactorCarrier, Letter, Payload, WordFunctor};
use super::subcategory::GeneratingSubcategory;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, QuotientSpace, Scalar};

/// A finite-dimensional associative unital algebra, `mult[i][j][k]` the coefficient of `e_k` in `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FiniteAlgebra {
    pub fn new(mult: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Result<Self> {
        let dim = unit.len();
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::InvalidAlgebra("multiplication table has the wrong shape".into()));
        }
        let a = FiniteAlgebra { dim, mult, unit };
        for i in 0..dim {
            let e = a.basis_vector(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(Error::InvalidAlgebra("unit axiom fails".into()));
            }
            for j in 0..dim {
                for k in 0..dim {
                    let (x, y, z) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
                    if a.mul(&a.mul(&x, &y), &z) != a.mul(&x, &a.mul(&y, &z)) {
                        return Err(Error::InvalidAlgebra("multiplication is not associative".into()));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        FiniteAlgebra { dim: h.dim(), mult: h.data().mult.clone(), unit: h.unit().to_vec() }
    }

    pub fn ground() -> Self {
        FiniteAlgebra { dim: 1, mult: vec![vec![vec![Scalar::one()]]], unit: vec![Scalar::one()] }
    }

    /// `ℚ[x]/(x^n)` in the basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i + j < n {
                    cell[i + j] = Scalar::one();
                }
            }
        }
        let mut unit = vec![Scalar::zero(); n];
        unit[0] = Scalar::one();
        FiniteAlgebra { dim: n, mult, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `e_i`.
    pub fn left_regular(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                let mut m = Matrix::zeros(self.dim, self.dim);
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        m.set(k, j, self.mult[i][j][k].clone());
                    }
                }
                m
            })
            .collect()
    }

    /// Right multiplication by `e_i`.
    pub fn right_regular(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                let mut m = Matrix::zeros(self.dim, self.dim);
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        m.set(k, j, self.mult[j][i][k].clone());
                    }
                }
                m
            })
            .collect()
    }

    fn action_of(&self, action: &[Matrix], a: &[Scalar]) -> Matrix {
        let d = action[0].rows();
        a.iter()
            .zip(action)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(d, d), |acc, (c, m)| &acc + &m.scale(c))
    }

    /// Checks `L(a)L(b) = L(ab)` (left) or `R(b)R(a) = R(ab)` (right) and that the unit acts as the identity.
    pub fn check_action(&self, action: &[Matrix], right: bool) -> Result<()> {
        if action.len() != self.dim || action.iter().any(|m| !m.is_square() || m.rows() != action[0].rows()) {
            return Err(Error::InvalidModule("action has the wrong shape".into()));
        }
        if !self.action_of(action, &self.unit).is_identity() {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ab = self.action_of(action, &self.mul(&self.basis_vector(i), &self.basis_vector(j)));
                let composed = if right { action[j].mul(&action[i]) } else { action[i].mul(&action[j]) };
                if ab != composed {
                    return Err(Error::InvalidModule("action is not multiplicative".into()));
                }
            }
        }
        Ok(())
    }
}

/// `N ⊗_R M`: the coend over the one-object category with endomorphisms `R`,
/// i.e. `N ⊗ M` modulo `n·r ⊗ m - n ⊗ r·m` for the basis elements `r`.
pub fn relative_tensor(ring: &FiniteAlgebra, right: &[Matrix], left: &[Matrix]) -> Result<QuotientSpace> {
    ring.check_action(right, true)?;
    ring.check_action(left, false)?;
    let (dn, dm) = (right[0].rows(), left[0].rows());
    let relations: Vec<Matrix> = right
        .iter()
        .zip(left)
        .map(|(r, l)| &r.kron(&Matrix::identity(dm)) - &Matrix::identity(dn).kron(l))
        .collect();
    let refs: Vec<&Matrix> = relations.iter().collect();
    QuotientSpace::of_subspace(dn * dm, &Matrix::hstack(&refs)?)
}

/// Natural transformations between two functors given as tensor words in `Slot(0)`.
#[derive(Clone, Debug)]
pub struct NatSpace {
    pub end: EndResult,
    /// For each basis transformation, its component at every object as a matrix.
    pub transformations: Vec<Vec<Matrix>>,
}

impl NatSpace {
    pub fn dim(&self) -> usize {
        self.end.dim()
    }
}

/// `Nat(F, G) = ∫_x Hom(F x, G x)`.
pub fn nat_space(h: &HopfAlgebra, f: &[Letter], g: &[Letter], sub: &GeneratingSubcategory) -> Result<NatSpace> {
    let shift = |w: &[Letter], to: usize| -> Result<Vec<Letter>> {
        w.iter()
            .map(|l| match l {
                Letter::Fixed(m) => Ok(Letter::Fixed(m.clone())),
                Letter::Slot(0) => Ok(Letter::Slot(to)),
                _ => Err(Error::Presentation("functor words may only use Slot(0) and fixed letters".into())),
            })
            .collect()
    };
    let functor = WordFunctor::new(
        h,
        vec![Factor::Hom(shift(f, 0)?, shift(g, 1)?)],
        vec![super::functor::Variance::Contravariant, super::functor::Variance::Covariant],
    )?;
    let e = end(sub, &functor)?;
    let spaces: Vec<_> = (0..sub.len())
        .map(|i| match e.carrier(i).payload() {
            Payload::Factors(f) => match &f[0] {
                FactorCarrier::Hom(hs) => hs.clone(),
                FactorCarrier::Object(_) => unreachable!("Hom factor"),
            },
            _ => unreachable!("word functor carrier"),
        })
        .collect();
    let transformations = (0..e.dim())
        .map(|k| {
            spaces
                .iter()
                .zip(e.components())
                .map(|(hs, pi)| hs.combine(&pi.column(k)))
                .collect()
        })
        .collect();
    Ok(NatSpace { end: e, transformations })
}

/// Coordinates in `Nat(F, G)` of a family of intertwiners `η_x: F x -> G x`.
pub fn nat_coordinates(nat: &NatSpace, family: &[Matrix]) -> Result<Matrix> {
    let mut components = Vec::with_capacity(family.len());
    for (i, eta) in family.iter().enumerate() {
        let Payload::Factors(f) = nat.end.carrier(i).payload() else { unreachable!("word functor carrier") };
        let FactorCarrier::Hom(hs) = &f[0] else { unreachable!("Hom factor") };
        components.push(Matrix::column_vector(hs.coordinates(eta)?));
    }
    factor_through_end(&nat.end, &DinaturalFamily { target_dim: 1, components })
}
