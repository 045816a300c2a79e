use super::coend::{LyubashenkoCoend, Ordering};
use crate::error::{Error, Result};
use crate::hopf::catalog::{is_semisimple, simple_modules};
use crate::hopf::{braiding, is_intertwiner, permute, right_coevaluation, right_evaluation, HopfAlgebra, ModuleRep};
use crate::linalg::{kernel_basis, rank, solve_left, Matrix, Scalar};

/// Hopf algebra structure on `L` in the braided category, and its pairing.
#[derive(Clone, Debug)]
pub struct HopfStructure {
    pub product: Matrix,
    pub unit: Matrix,
    pub coproduct: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    pub pairing: Matrix,
    /// `Λ: 1 -> L` with `m(id ⊗ Λ) = Λ ε`, absent when only zero solves it.
    pub integral: Option<Matrix>,
}

/// Drinfeld element `u = Σ S(R₂) R₁`.
pub fn drinfeld_element(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let mut u = vec![Scalar::zero(); h.dim()];
    for (i, j, c) in h.r_terms()? {
        let t = h.mul(&h.antipode(&h.basis_vector(j)), &h.basis_vector(i));
        for (k, v) in t.iter().enumerate() {
            u[k] += &(&c * v);
        }
    }
    Ok(u)
}

/// Objects whose `ι` jointly cover `L`: the simples when the algebra is semisimple, else the regular module.
pub fn test_objects(l: &LyubashenkoCoend) -> Result<Vec<ModuleRep>> {
    let h = l.algebra();
    if is_semisimple(h) {
        if let Ok(s) = simple_modules(h) {
            return Ok(s);
        }
    }
    Ok(vec![ModuleRep::regular(h)])
}

fn require_object_dual(l: &LyubashenkoCoend) -> Result<()> {
    if l.ordering() != Ordering::ObjectDual {
        return Err(Error::Unsupported("Hopf structure is built for the x⊗x∨ ordering".into()));
    }
    if !l.algebra().has_r_matrix() {
        return Err(Error::MissingRMatrix(l.algebra().name().to_string()));
    }
    Ok(())
}

/// `(x ⊗ y) ⊗ (y∨ ⊗ x∨) -> (x ⊗ y) ⊗ (x ⊗ y)∨`.
fn dual_of_tensor(dx: usize, dy: usize) -> Matrix {
    Matrix::identity(dx * dy).kron(&permute(&[dy, dx], &[1, 0]))
}

/// Product family on the `(x, y)` block: `ι_{x⊗y} ∘ (id_x ⊗ c_{x∨, y⊗y∨})`.
fn product_component(l: &LyubashenkoCoend, x: &ModuleRep, y: &ModuleRep) -> Result<Matrix> {
    let xd = x.dual();
    let yy = y.tensor(&y.dual())?;
    let c = braiding(&xd, &yy)?;
    let xy = x.tensor(y)?;
    let moved = Matrix::identity(x.dim()).kron(&c);
    Ok(l.iota(&xy)?.mul(&dual_of_tensor(x.dim(), y.dim())).mul(&moved))
}

/// Pairing family on the `(x, y)` block: monodromy of the middle factors `x∨ ⊗ y`, then `ev'_x ⊗ ev'_y`.
pub fn pairing_component(x: &ModuleRep, y: &ModuleRep) -> Result<Matrix> {
    let xd = x.dual();
    let monodromy = braiding(y, &xd)?.mul(&braiding(&xd, y)?);
    let middle = Matrix::identity(x.dim()).kron(&monodromy).kron(&Matrix::identity(y.dim()));
    Ok(right_evaluation(x)?.kron(&right_evaluation(y)?).mul(&middle))
}

/// Solves `m ∘ (ι_x ⊗ ι_y) = f_{x,y}` over all pairs of test objects.
fn factor_two(l: &LyubashenkoCoend, objs: &[ModuleRep], f: impl Fn(&ModuleRep, &ModuleRep) -> Result<Matrix>) -> Result<Matrix> {
    let iotas: Vec<Matrix> = objs.iter().map(|x| l.iota(x)).collect::<Result<_>>()?;
    let mut domain = Vec::new();
    let mut values = Vec::new();
    for (x, ix) in objs.iter().zip(&iotas) {
        for (y, iy) in objs.iter().zip(&iotas) {
            domain.push(ix.kron(iy));
            values.push(f(x, y)?);
        }
    }
    let d = Matrix::hstack(&domain.iter().collect::<Vec<_>>())?;
    let v = Matrix::hstack(&values.iter().collect::<Vec<_>>())?;
    let m = solve_left(&d, &v).map_err(|_| Error::NotDinatural("family does not factor through L⊗L".into()))?;
    Ok(m)
}

/// Solves `m ∘ ι_x = f_x` over the test objects.
fn factor_one(l: &LyubashenkoCoend, objs: &[ModuleRep], f: impl Fn(&ModuleRep) -> Result<Matrix>) -> Result<Matrix> {
    let mut domain = Vec::new();
    let mut values = Vec::new();
    for x in objs {
        domain.push(l.iota(x)?);
        values.push(f(x)?);
    }
    let d = Matrix::hstack(&domain.iter().collect::<Vec<_>>())?;
    let v = Matrix::hstack(&values.iter().collect::<Vec<_>>())?;
    solve_left(&d, &v).map_err(|_| Error::NotDinatural("family does not factor through L".into()))
}

pub fn hopf_pairing(l: &LyubashenkoCoend) -> Result<Matrix> {
    require_object_dual(l)?;
    let objs = test_objects(l)?;
    factor_two(l, &objs, pairing_component)
}

/// Structure maps defined on the blocks `x ⊗ x∨` and factored through `L` (or `L ⊗ L`):
///
/// - `m ∘ (ι_x ⊗ ι_y) = ι_{x⊗y} ∘ (id_x ⊗ c_{x∨, y⊗y∨})`
/// - `η = ι_1`
/// - `Δ ∘ ι_x = (ι_x ⊗ ι_x) ∘ (id_x ⊗ coev'_x ⊗ id_{x∨})`
/// - `ε ∘ ι_x = ev'_x`
/// - `S ∘ ι_x = ι_{x∨} ∘ (id_{x∨} ⊗ u_x) ∘ c_{x, x∨}`, with `u_x: x -> x∨∨` the Drinfeld element
/// - `ω ∘ (ι_x ⊗ ι_y) = (ev'_x ⊗ ev'_y) ∘ (id_x ⊗ c_{y, x∨} c_{x∨, y} ⊗ id_{y∨})`
pub fn hopf_structure(l: &LyubashenkoCoend) -> Result<HopfStructure> {
    require_object_dual(l)?;
    let objs = test_objects(l)?;
    let h = l.algebra();
    let product = factor_two(l, &objs, |x, y| product_component(l, x, y))?;
    let unit = l.iota(&ModuleRep::trivial(h))?;
    let coproduct = factor_one(l, &objs, |x| {
        let ix = l.iota(x)?;
        let d = x.dim();
        let insert = Matrix::identity(d).kron(&right_coevaluation(x)?).kron(&Matrix::identity(d));
        Ok(ix.kron(&ix).mul(&insert))
    })?;
    let counit = factor_one(l, &objs, right_evaluation)?;
    let u = drinfeld_element(h)?;
    let antipode = factor_one(l, &objs, |x| {
        let c = braiding(x, &x.dual())?;
        let ux = Matrix::identity(x.dim()).kron(&x.act(&u));
        Ok(l.iota(&x.dual())?.mul(&ux).mul(&c))
    })?;
    let pairing = factor_two(l, &objs, pairing_component)?;
    let integral = integral(&product, &counit, l.dim());
    Ok(HopfStructure { product, unit, coproduct, counit, antipode, pairing, integral })
}

/// Basis of `{Λ : m(a ⊗ Λ) = ε(a) Λ for all a}`; the first vector is returned.
pub fn integral(product: &Matrix, counit: &Matrix, n: usize) -> Option<Matrix> {
    // rows indexed by (a, k): Σ_j m[k][a*n+j] Λ_j - ε(a) Λ_k
    let mut eq = Matrix::zeros(n * n, n);
    for a in 0..n {
        for k in 0..n {
            for j in 0..n {
                let mut v = product.get(k, a * n + j).clone();
                if j == k {
                    v -= counit.get(0, a);
                }
                eq.set(a * n + k, j, v);
            }
        }
    }
    let ker = kernel_basis(&eq);
    (ker.cols() > 0).then(|| ker.column_range(0, 1))
}

/// Named Hopf identities on `L` and whether each holds exactly.
pub fn check_structure(l: &LyubashenkoCoend, s: &HopfStructure) -> Result<Vec<(&'static str, bool)>> {
    let m = l.module();
    let n = l.dim();
    let id = Matrix::identity(n);
    let ll = m.tensor(m)?;
    let triv = ModuleRep::trivial(l.algebra());
    let c = braiding(m, m)?;
    let mut out = vec![(
        "structure maps are intertwiners",
        is_intertwiner(&s.product, &ll, m)
            && is_intertwiner(&s.coproduct, m, &ll)
            && is_intertwiner(&s.unit, &triv, m)
            && is_intertwiner(&s.counit, m, &triv)
            && is_intertwiner(&s.antipode, m, m)
            && is_intertwiner(&s.pairing, &ll, &triv),
    )];
    out.push(("associativity", s.product.mul(&s.product.kron(&id)) == s.product.mul(&id.kron(&s.product))));
    out.push(("unit", s.product.mul(&s.unit.kron(&id)) == id && s.product.mul(&id.kron(&s.unit)) == id));
    out.push((
        "coassociativity",
        s.coproduct.kron(&id).mul(&s.coproduct) == id.kron(&s.coproduct).mul(&s.coproduct),
    ));
    out.push(("counit", s.counit.kron(&id).mul(&s.coproduct) == id && id.kron(&s.counit).mul(&s.coproduct) == id));
    let middle = id.kron(&c).kron(&id);
    out.push((
        "bialgebra",
        s.coproduct.mul(&s.product) == s.product.kron(&s.product).mul(&middle).mul(&s.coproduct.kron(&s.coproduct)),
    ));
    out.push((
        "unit and counit",
        s.counit.mul(&s.product) == s.counit.kron(&s.counit)
            && s.coproduct.mul(&s.unit) == s.unit.kron(&s.unit)
            && s.counit.mul(&s.unit).is_identity(),
    ));
    let eta_eps = s.unit.mul(&s.counit);
    out.push((
        "antipode",
        s.product.mul(&s.antipode.kron(&id)).mul(&s.coproduct) == eta_eps
            && s.product.mul(&id.kron(&s.antipode)).mul(&s.coproduct) == eta_eps,
    ));
    out.push(("integral exists", s.integral.is_some()));
    Ok(out)
}

/// `rank(ω)`.
pub fn pairing_rank(omega: &Matrix, n: usize) -> Result<usize> {
    Ok(rank(&omega.reshape(n, n)?))
}
