use crate::category::{coend, factor_through_coend, CoendResult, DinaturalFamily, GeneratingSubcategory, WordFunctor};
use crate::error::{Error, Result};
use crate::hopf::catalog::{is_semisimple, simple_modules};
use crate::hopf::{pivot_iso, HopfAlgebra, ModuleRep};
use crate::linalg::{inverse, is_invertible, Matrix};

/// Which of the two inner-Hom bifunctors is integrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Ordering {
    /// `∫ x ⊗ x∨`
    #[default]
    ObjectDual,
    /// `∫ x∨ ⊗ x`
    DualObject,
}

/// `L`, the coend of the inner Hom, with its identification with `H*`.
#[derive(Clone, Debug)]
pub struct LyubashenkoCoend {
    algebra: HopfAlgebra,
    ordering: Ordering,
    sub: GeneratingSubcategory,
    coend: CoendResult,
    module: ModuleRep,
    to_coadjoint: Matrix,
    from_coadjoint: Matrix,
}

/// `x ⊗ x∨ -> H*` (or `x∨ ⊗ x -> H*`), `v ⊗ φ ↦ (a ↦ φ(a v))`.
pub fn coadjoint_family(x: &ModuleRep, ordering: Ordering) -> Matrix {
    let h = x.algebra();
    let d = x.dim();
    let mut k = Matrix::zeros(h.dim(), d * d);
    for i in 0..h.dim() {
        let a = x.basis_action(i);
        for p in 0..d {
            for q in 0..d {
                let col = match ordering {
                    Ordering::ObjectDual => p * d + q,
                    Ordering::DualObject => q * d + p,
                };
                k.set(i, col, a.get(q, p).clone());
            }
        }
    }
    k
}

/// `H*` with the action making [`coadjoint_family`] an intertwiner:
/// `(h ▷ f)(a) = f(S(h₂) a h₁)` for `x ⊗ x∨` and `f(S(h₁) a h₂)` for `x∨ ⊗ x`.
pub fn coadjoint_module(h: &HopfAlgebra, ordering: Ordering) -> Result<ModuleRep> {
    let n = h.dim();
    let s = h.antipode_matrix();
    let action = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for (a, b, c) in h.comult_terms(i) {
                let (left, right) = match ordering {
                    Ordering::ObjectDual => (*b, *a),
                    Ordering::DualObject => (*a, *b),
                };
                let sl = s.column(left);
                for j in 0..n {
                    let prod = h.mul(&h.mul(&sl, &h.basis_vector(j)), &h.basis_vector(right));
                    for (k, v) in prod.iter().enumerate() {
                        if !v.is_zero() {
                            *m.get_mut(j, k) += &(c * v);
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleRep::new(h, "H*", action)
}

/// Coend of `(x, y) ↦ y ⊗ x∨` (or `x∨ ⊗ y`) over `sub`, with the module structure induced on the quotient.
pub fn build_l(sub: &GeneratingSubcategory, ordering: Ordering) -> Result<LyubashenkoCoend> {
    let h = sub.algebra().ok_or_else(|| Error::Presentation("empty subcategory".into()))?.clone();
    let g = match ordering {
        Ordering::ObjectDual => WordFunctor::inner_hom(&h),
        Ordering::DualObject => WordFunctor::inner_hom_left(&h),
    };
    let c = coend(sub, &g)?;
    let module = c.module().expect("module-valued bifunctor").clone().with_name("L");
    let family = DinaturalFamily {
        target_dim: h.dim(),
        components: c.diagonal().iter().enumerate().map(|(i, _)| coadjoint_family(&c.diagonal_objects(i)[0], ordering)).collect(),
    };
    let to_coadjoint = factor_through_coend(&c, &family)?;
    if !is_invertible(&to_coadjoint) {
        return Err(Error::Presentation(format!(
            "L over this subcategory has dimension {}, not {}; the subcategory does not generate",
            c.dim(),
            h.dim()
        )));
    }
    let from_coadjoint = inverse(&to_coadjoint)?;
    Ok(LyubashenkoCoend { algebra: h, ordering, sub: sub.clone(), coend: c, module, to_coadjoint, from_coadjoint })
}

/// `L` over the regular module in the default ordering.
pub fn build_l_default(h: &HopfAlgebra) -> Result<LyubashenkoCoend> {
    build_l(&GeneratingSubcategory::regular(h), Ordering::default())
}

/// `L` over the simples when the algebra is semisimple, else over the regular module.
/// The smaller blocks keep tensor powers of `x ⊗ x∨` cheap.
pub fn build_l_small(h: &HopfAlgebra) -> Result<LyubashenkoCoend> {
    if is_semisimple(h) {
        if let Ok(simples) = simple_modules(h) {
            return build_l(&GeneratingSubcategory::new(simples)?, Ordering::default());
        }
    }
    build_l_default(h)
}

impl LyubashenkoCoend {
    pub fn algebra(&self) -> &HopfAlgebra {
        &self.algebra
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    pub fn dim(&self) -> usize {
        self.coend.dim()
    }

    /// The subcategory the coend was computed over.
    pub fn sub(&self) -> &GeneratingSubcategory {
        &self.sub
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn coend(&self) -> &CoendResult {
        &self.coend
    }

    /// The mediating map `L -> H*` of the coadjoint family.
    pub fn coadjoint_iso(&self) -> &Matrix {
        &self.to_coadjoint
    }

    /// `ι_x` for any module `x`, obtained as `Φ⁻¹ ∘ κ_x` with `κ` the coadjoint family.
    /// Agrees with the coend's own component on objects of the subcategory.
    pub fn iota(&self, x: &ModuleRep) -> Result<Matrix> {
        x.same_algebra(&self.module)?;
        Ok(self.from_coadjoint.mul(&coadjoint_family(x, self.ordering)))
    }

    /// The comparison isomorphism `∫ x ⊗ x∨ -> ∫ x∨ ⊗ x` induced by
    /// `x ⊗ x∨ -> x∨∨ ⊗ x∨`, `π_x ⊗ id`, followed by `ι'_{x∨}`.
    pub fn comparison(&self, other: &LyubashenkoCoend) -> Result<Matrix> {
        if self.ordering != Ordering::ObjectDual || other.ordering != Ordering::DualObject {
            return Err(Error::Unsupported("comparison runs from x⊗x∨ to x∨⊗x".into()));
        }
        let mut components = Vec::with_capacity(self.coend.diagonal().len());
        for i in 0..self.coend.diagonal().len() {
            let x = &self.coend.diagonal_objects(i)[0];
            let pi = pivot_iso(x)?;
            let block = pi.kron(&Matrix::identity(x.dim()));
            components.push(other.iota(&x.dual())?.mul(&block));
        }
        factor_through_coend(&self.coend, &DinaturalFamily { target_dim: other.dim(), components })
    }

    /// Rank of `ι_x` for each module, e.g. the image of `S ⊗ S∨` for a simple `S`.
    pub fn image_rank(&self, x: &ModuleRep) -> Result<usize> {
        Ok(crate::linalg::rank(&self.iota(x)?))
    }
}

