use super::space::WorldSheetSpec;
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, ModuleRep};
use crate::linalg::{kernel_basis, Matrix, Scalar};

/// The integral `Λ` with `a Λ = ε(a) Λ` and `ε(Λ) = 1`; absent unless the algebra is semisimple.
pub fn normalized_integral(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        let mut m = h.left_mult_matrix(&h.basis_vector(a));
        let eps = h.counit()[a].clone();
        for k in 0..n {
            *m.get_mut(k, k) -= &eps;
        }
        rows.push(m);
    }
    let eq = Matrix::vstack(&rows.iter().collect::<Vec<_>>())?;
    let ker = kernel_basis(&eq);
    let lambda = (0..ker.cols())
        .map(|c| ker.column(c))
        .find(|v| !h.counit_of(v).is_zero())
        .ok_or_else(|| Error::Unsupported(format!("{} has no normalizable integral; it is not semisimple", h.name())))?;
    let e = h.counit_of(&lambda).recip();
    Ok(lambda.iter().map(|x| x * &e).collect())
}

/// `χ_M(e_i) = tr ρ_M(e_i)`.
pub fn character(m: &ModuleRep) -> Vec<Scalar> {
    m.action().iter().map(|a| (0..a.rows()).map(|i| a.get(i, i).clone()).sum()).collect()
}

/// `χ_{M∨} = χ_M ∘ S`.
pub fn dual_character(h: &HopfAlgebra, chi: &[Scalar]) -> Vec<Scalar> {
    let s = h.antipode_matrix();
    (0..h.dim()).map(|i| (0..h.dim()).map(|j| s.get(j, i) * &chi[j]).sum()).collect()
}

/// `χ_{M⊗N}(a) = χ_M(a₁) χ_N(a₂)`.
pub fn product_character(h: &HopfAlgebra, chi: &[Scalar], psi: &[Scalar]) -> Vec<Scalar> {
    (0..h.dim())
        .map(|i| h.comult_terms(i).iter().map(|(a, b, c)| c * &(&chi[*a] * &psi[*b])).sum())
        .collect()
}

/// Character of `H*` under `(h ▷ f)(a) = f(S(h₂) a h₁)`, read off the structure constants.
pub fn coadjoint_character(h: &HopfAlgebra) -> Vec<Scalar> {
    let n = h.dim();
    (0..n)
        .map(|i| {
            let mut t = Scalar::zero();
            for (a, b, c) in h.comult_terms(i) {
                let sb = h.antipode(&h.basis_vector(*b));
                for k in 0..n {
                    let v = h.mul(&h.mul(&sb, &h.basis_vector(k)), &h.basis_vector(*a));
                    t += &(c * &v[k]);
                }
            }
            t
        })
        .collect()
}

/// Dimension of the invariants of `u^ε ⊗ L^{⊗g}` as `χ(Λ)`, using only traces of the insertion
/// actions and the structure constants. For a group algebra this is `(1/|G|) Σ_g χ(g)`.
pub fn character_oracle(h: &HopfAlgebra, spec: &WorldSheetSpec) -> Result<usize> {
    if spec.algebra() != h {
        return Err(Error::AlgebraMismatch);
    }
    let lambda = normalized_integral(h)?;
    let mut total = h.counit().to_vec();
    for m in spec.outgoing() {
        total = product_character(h, &total, &character(m));
    }
    for m in spec.incoming() {
        total = product_character(h, &total, &dual_character(h, &character(m)));
    }
    let chi_l = coadjoint_character(h);
    for _ in 0..spec.genus() {
        total = product_character(h, &total, &chi_l);
    }
    let d: Scalar = total.iter().zip(&lambda).map(|(a, b)| a * b).sum();
    d.to_i64()
        .filter(|&x| x >= 0 && d.is_integer())
        .map(|x| x as usize)
        .ok_or_else(|| Error::Unsupported(format!("character sum {d} is not a dimension")))
}
