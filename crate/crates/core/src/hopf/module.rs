use super::algebra::HopfAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{image_basis, left_inverse, rank, Matrix, Scalar};

/// A finite-dimensional left module, stored as the action of every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    algebra: HopfAlgebra,
    name: String,
    dim: usize,
    action: Vec<Matrix>,
}

impl ModuleRep {
    /// Builds a module after checking shapes; see [`validate`](Self::validate) for the axioms.
    pub fn new(algebra: &HopfAlgebra, name: impl Into<String>, action: Vec<Matrix>) -> Result<Self> {
        let name = name.into();
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{name}: {} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidModule(format!("{name}: action matrices of mixed shape")));
        }
        Ok(ModuleRep { algebra: algebra.clone(), name, dim, action })
    }

    /// Like [`new`](Self::new) but also checks that the action is a unital algebra map.
    pub fn checked(algebra: &HopfAlgebra, name: impl Into<String>, action: Vec<Matrix>) -> Result<Self> {
        let m = ModuleRep::new(algebra, name, action)?;
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let h = &self.algebra;
        if !self.act(h.unit()).is_identity() {
            return Err(Error::InvalidModule(format!("{}: unit does not act as identity", self.name)));
        }
        let n = h.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in h.mult_terms(i, j) {
                    rhs = &rhs + &self.action[*k].scale(c);
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "{}: action is not multiplicative on basis pair ({i}, {j})",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn basis_action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = &out + &self.action[i].scale(c);
        }
        out
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Module structure via the counit.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let action = h.counit().iter().map(|e| Matrix::identity(1).scale(e)).collect();
        ModuleRep { algebra: h.clone(), name: "triv".into(), dim: 1, action }
    }

    /// Left-regular module; `ρ(e_i)[k][j] = m_ij^k`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let action = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis_vector(i))).collect();
        ModuleRep { algebra: h.clone(), name: "reg".into(), dim: h.dim(), action }
    }

    /// `M ⊗ N` with `e_i` acting by `Σ Δ_i^{jk} ρ_M(e_j) ⊗ ρ_N(e_k)`.
    pub fn tensor(&self, other: &ModuleRep) -> Result<Self> {
        self.same_algebra(other)?;
        let h = &self.algebra;
        let d = self.dim * other.dim;
        let action = (0..h.dim())
            .map(|i| {
                let mut acc = Matrix::zeros(d, d);
                for (j, k, c) in h.comult_terms(i) {
                    acc = &acc + &self.action[*j].kron(&other.action[*k]).scale(c);
                }
                acc
            })
            .collect();
        Ok(ModuleRep {
            algebra: h.clone(),
            name: format!("({}⊗{})", self.name, other.name),
            dim: d,
            action,
        })
    }

    /// Right-associated tensor product of a list; the empty list gives the trivial module.
    pub fn tensor_all(h: &HopfAlgebra, factors: &[ModuleRep]) -> Result<Self> {
        match factors.split_last() {
            None => Ok(ModuleRep::trivial(h)),
            Some((last, rest)) => {
                let mut acc = last.clone();
                for f in rest.iter().rev() {
                    acc = f.tensor(&acc)?;
                }
                Ok(acc)
            }
        }
    }

    /// Left dual in the dual basis: `ρ*(a) = ρ(S a)ᵀ`.
    pub fn dual(&self) -> Self {
        let s = self.algebra.antipode_matrix();
        let action = (0..self.algebra.dim())
            .map(|i| self.act(&s.column(i)).transpose())
            .collect();
        let name = format!("{}*", self.name);
        ModuleRep { algebra: self.algebra.clone(), name, dim: self.dim, action }
    }

    pub fn direct_sum(h: &HopfAlgebra, parts: &[ModuleRep]) -> Result<Self> {
        for p in parts {
            if p.algebra != *h {
                return Err(Error::AlgebraMismatch);
            }
        }
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..h.dim())
            .map(|i| Matrix::block_diag(&parts.iter().map(|p| &p.action[i]).collect::<Vec<_>>()))
            .collect();
        let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("⊕");
        Ok(ModuleRep { algebra: h.clone(), name, dim, action })
    }

    /// Submodule spanned by the columns of `basis` (which must be independent and invariant).
    pub fn submodule(&self, name: impl Into<String>, basis: &Matrix) -> Result<Self> {
        let name = name.into();
        if basis.rows() != self.dim || rank(basis) != basis.cols() {
            return Err(Error::InvalidModule(format!("{name}: basis is not independent in the ambient module")));
        }
        let inv = left_inverse(basis)?;
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let moved = a.mul(basis);
            let restricted = inv.mul(&moved);
            if basis.mul(&restricted) != moved {
                return Err(Error::InvalidModule(format!("{name}: span is not invariant")));
            }
            action.push(restricted);
        }
        Ok(ModuleRep { algebra: self.algebra.clone(), name, dim: basis.cols(), action })
    }

    /// Submodule generated by a set of vectors (the columns of `gens`).
    pub fn generated_submodule(&self, name: impl Into<String>, gens: &Matrix) -> Result<Self> {
        let moved: Vec<Matrix> = self.action.iter().map(|a| a.mul(gens)).collect();
        let refs: Vec<&Matrix> = moved.iter().collect();
        let span = image_basis(&Matrix::hstack(&refs)?);
        self.submodule(name, &span)
    }

    /// Quotient module by an invariant subspace spanned by the columns of `sub`.
    pub fn quotient(&self, name: impl Into<String>, sub: &Matrix) -> Result<Self> {
        let q = crate::linalg::QuotientSpace::of_subspace(self.dim, sub)?;
        let action: Vec<Matrix> = self.action.iter().map(|a| q.induced_endomorphism(a)).collect();
        let m = ModuleRep::new(&self.algebra, name, action)?;
        for a in &self.action {
            if !q.projection.mul(a).mul(sub).is_zero() {
                return Err(Error::InvalidModule(format!("{}: subspace is not invariant", m.name)));
            }
        }
        Ok(m)
    }

    /// Module whose action is pulled back along an algebra endomorphism given on basis elements.
    pub fn twisted(&self, name: impl Into<String>, images: &Matrix) -> Self {
        let action = (0..self.algebra.dim()).map(|i| self.act(&images.column(i))).collect();
        ModuleRep { algebra: self.algebra.clone(), name: name.into(), dim: self.dim, action }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::catalog;

    #[test]
    fn constructions_are_modules() {
        for h in catalog::catalog() {
            let reg = ModuleRep::regular(&h);
            let triv = ModuleRep::trivial(&h);
            reg.validate().unwrap();
            triv.validate().unwrap();
            reg.dual().validate().unwrap();
            if h.dim() <= 4 {
                reg.tensor(&reg).unwrap().validate().unwrap();
            }
            ModuleRep::direct_sum(&h, &[reg.clone(), triv.clone()]).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn invariant_subspace_checks() {
        let h = catalog::by_name("z2").unwrap();
        let reg = ModuleRep::regular(&h);
        let sym = Matrix::from_i64(&[&[1], &[1]]);
        assert_eq!(reg.submodule("s", &sym).unwrap().dim(), 1);
        assert!(reg.submodule("bad", &Matrix::from_i64(&[&[1], &[0]])).is_err());
        assert_eq!(reg.quotient("q", &sym).unwrap().dim(), 1);
    }
}
