use std::collections::HashMap;

use super::functor::{check_functorial, Carrier, Functor, Variance};
use super::subcategory::GeneratingSubcategory;
use crate::error::{Error, Result};
use crate::hopf::ModuleRep;
use crate::linalg::{kernel_basis, left_inverse, solve_left, Matrix, QuotientSpace};

// diagonal tuples, their objects, offsets into the direct sum, carriers
type DiagonalData = (Vec<Vec<usize>>, Vec<Vec<ModuleRep>>, Vec<usize>, Vec<Carrier>);

/// A pair of slots (contravariant, covariant) integrated over a subcategory.
#[derive(Clone, Copy, Debug)]
pub struct CoendVariable<'a> {
    pub contra: usize,
    pub co: usize,
    pub sub: &'a GeneratingSubcategory,
}

/// Coequalizer of `G(f, id)` and `G(id, f)` over the basis morphisms, with its dinatural family.
#[derive(Clone, Debug)]
pub struct CoendResult {
    quotient: QuotientSpace,
    module: Option<ModuleRep>,
    diagonal: Vec<Vec<usize>>,
    objects: Vec<Vec<ModuleRep>>,
    offsets: Vec<usize>,
    carriers: Vec<Carrier>,
    dinatural: Vec<Matrix>,
    relations: Matrix,
}

/// Equalizer of `G(id, f)` and `G(f, id)` with its components.
#[derive(Clone, Debug)]
pub struct EndResult {
    inclusion: Matrix,
    retraction: Matrix,
    module: Option<ModuleRep>,
    diagonal: Vec<Vec<usize>>,
    objects: Vec<Vec<ModuleRep>>,
    offsets: Vec<usize>,
    carriers: Vec<Carrier>,
    components: Vec<Matrix>,
    relations: Matrix,
}

/// Components `j_x: G(x,x) -> target` (coend side) or `target -> G(x,x)` (end side).
#[derive(Clone, Debug)]
pub struct DinaturalFamily {
    pub target_dim: usize,
    pub components: Vec<Matrix>,
}

struct Layout<'a> {
    functor: &'a dyn Functor,
    vars: &'a [CoendVariable<'a>],
    fixed: &'a [Option<ModuleRep>],
    cache: HashMap<Vec<usize>, Carrier>,
}

impl<'a> Layout<'a> {
    fn new(functor: &'a dyn Functor, vars: &'a [CoendVariable<'a>], fixed: &'a [Option<ModuleRep>], check: bool) -> Result<Self> {
        let variances = functor.variances();
        let mut owner = vec![None; variances.len()];
        for (v, var) in vars.iter().enumerate() {
            for (slot, want) in [(var.contra, Variance::Contravariant), (var.co, Variance::Covariant)] {
                match variances.get(slot) {
                    Some(have) if *have == want => {}
                    Some(_) => return Err(Error::Presentation(format!("slot {slot} has the wrong variance"))),
                    None => return Err(Error::Presentation(format!("functor has no slot {slot}"))),
                }
                if owner[slot].replace(v).is_some() {
                    return Err(Error::Presentation(format!("slot {slot} is bound twice")));
                }
            }
            if var.sub.is_empty() {
                return Err(Error::Presentation("empty subcategory".into()));
            }
        }
        for (slot, o) in owner.iter().enumerate() {
            if o.is_none() && fixed.get(slot).and_then(Option::as_ref).is_none() {
                return Err(Error::Presentation(format!("slot {slot} is neither bound nor fixed")));
            }
        }
        if check {
            let singles: Vec<GeneratingSubcategory> = (0..variances.len())
                .filter(|s| owner[*s].is_none())
                .map(|s| GeneratingSubcategory::identity_only(vec![fixed[s].clone().expect("checked")]))
                .collect::<Result<_>>()?;
            let mut singles = singles.iter();
            let subs: Vec<&GeneratingSubcategory> = owner
                .iter()
                .map(|o| match o {
                    Some(v) => vars[*v].sub,
                    None => singles.next().expect("one per fixed slot"),
                })
                .collect();
            check_functorial(functor, &subs)?;
        }
        Ok(Layout { functor, vars, fixed, cache: HashMap::new() })
    }

    fn objects(&self, key: &[usize]) -> Vec<&'a ModuleRep> {
        let n = self.functor.variances().len();
        (0..n)
            .map(|slot| {
                for (v, var) in self.vars.iter().enumerate() {
                    if var.contra == slot {
                        return var.sub.object(key[2 * v]);
                    }
                    if var.co == slot {
                        return var.sub.object(key[2 * v + 1]);
                    }
                }
                self.fixed[slot].as_ref().expect("checked in new")
            })
            .collect()
    }

    fn ensure(&mut self, key: &[usize]) -> Result<()> {
        if !self.cache.contains_key(key) {
            let c = self.functor.carrier(&self.objects(key))?;
            self.cache.insert(key.to_vec(), c);
        }
        Ok(())
    }

    fn carrier(&mut self, key: &[usize]) -> Result<&Carrier> {
        self.ensure(key)?;
        Ok(&self.cache[key])
    }

    /// `F` applied to per-variable (contra, co) arrows between two configurations.
    fn map(&mut self, from: &[usize], to: &[usize], arrows: &[(&Matrix, &Matrix)]) -> Result<Matrix> {
        self.ensure(from)?;
        self.ensure(to)?;
        let n = self.functor.variances().len();
        let ids: Vec<Matrix> = self.objects(from).iter().map(|m| Matrix::identity(m.dim())).collect();
        let mut slot_arrows: Vec<&Matrix> = ids.iter().collect();
        for (v, var) in self.vars.iter().enumerate() {
            slot_arrows[var.contra] = arrows[v].0;
            slot_arrows[var.co] = arrows[v].1;
        }
        debug_assert_eq!(slot_arrows.len(), n);
        self.functor.map(&slot_arrows, &self.cache[from], &self.cache[to])
    }

    fn diagonal(&self) -> Vec<Vec<usize>> {
        product(&self.vars.iter().map(|v| v.sub.len()).collect::<Vec<_>>())
    }

    fn morphism_tuples(&self) -> Vec<Vec<usize>> {
        product(&self.vars.iter().map(|v| v.sub.morphisms().len()).collect::<Vec<_>>())
    }

    fn diag_key(t: &[usize]) -> Vec<usize> {
        t.iter().flat_map(|&i| [i, i]).collect()
    }

    fn diagonal_data(&mut self) -> Result<DiagonalData> {
        let diagonal = self.diagonal();
        let mut offsets = Vec::with_capacity(diagonal.len());
        let mut carriers = Vec::with_capacity(diagonal.len());
        let mut objects = Vec::with_capacity(diagonal.len());
        let mut total = 0;
        for t in &diagonal {
            let c = self.carrier(&Self::diag_key(t))?.clone();
            offsets.push(total);
            total += c.dim();
            carriers.push(c);
            objects.push(t.iter().zip(self.vars).map(|(&i, v)| v.sub.object(i).clone()).collect());
        }
        offsets.push(total);
        Ok((diagonal, objects, offsets, carriers))
    }
}

/// All index tuples with `t[i] < lens[i]`, first coordinate most significant.
pub(crate) fn product(lens: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in lens {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn block_diag_action(carriers: &[Carrier]) -> Option<(crate::hopf::HopfAlgebra, Vec<Matrix>)> {
    let mods: Option<Vec<&ModuleRep>> = carriers.iter().map(Carrier::module).collect();
    let mods = mods?;
    let h = mods.first()?.algebra().clone();
    let action = (0..h.dim())
        .map(|i| Matrix::block_diag(&mods.iter().map(|m| m.basis_action(i)).collect::<Vec<_>>()))
        .collect();
    Some((h, action))
}

/// Coend over the given variables, with the remaining slots held at `fixed` objects.
pub fn coend_over(f: &dyn Functor, vars: &[CoendVariable], fixed: &[Option<ModuleRep>]) -> Result<CoendResult> {
    coend_impl(f, vars, fixed, true)
}

/// As [`coend_over`] without the functoriality check.
pub fn coend_over_unchecked(f: &dyn Functor, vars: &[CoendVariable], fixed: &[Option<ModuleRep>]) -> Result<CoendResult> {
    coend_impl(f, vars, fixed, false)
}

/// `∫^{x ∈ sub} G(x, x)` for a bifunctor with slot 0 contravariant and slot 1 covariant.
pub fn coend(sub: &GeneratingSubcategory, g: &dyn Functor) -> Result<CoendResult> {
    coend_over(g, &[CoendVariable { contra: 0, co: 1, sub }], &[])
}

/// `∫_{x ∈ sub} G(x, x)`.
pub fn end(sub: &GeneratingSubcategory, g: &dyn Functor) -> Result<EndResult> {
    end_over(g, &[CoendVariable { contra: 0, co: 1, sub }], &[])
}

fn coend_impl(f: &dyn Functor, vars: &[CoendVariable], fixed: &[Option<ModuleRep>], check: bool) -> Result<CoendResult> {
    let mut layout = Layout::new(f, vars, fixed, check)?;
    let (diagonal, objects, offsets, carriers) = layout.diagonal_data()?;
    let index: HashMap<Vec<usize>, usize> = diagonal.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let ambient = *offsets.last().expect("sentinel");
    let mut columns: Vec<Matrix> = Vec::new();
    for mt in layout.morphism_tuples() {
        let mors: Vec<_> = mt.iter().zip(vars).map(|(&m, v)| &v.sub.morphisms()[m]).collect();
        let a: Vec<usize> = mors.iter().map(|m| m.source).collect();
        let b: Vec<usize> = mors.iter().map(|m| m.target).collect();
        let summand: Vec<usize> = a.iter().zip(&b).flat_map(|(&a, &b)| [b, a]).collect();
        let id_a: Vec<Matrix> = a.iter().zip(vars).map(|(&i, v)| Matrix::identity(v.sub.object(i).dim())).collect();
        let id_b: Vec<Matrix> = b.iter().zip(vars).map(|(&i, v)| Matrix::identity(v.sub.object(i).dim())).collect();
        let s_arrows: Vec<(&Matrix, &Matrix)> = mors.iter().zip(&id_a).map(|(m, i)| (&m.matrix, i)).collect();
        let t_arrows: Vec<(&Matrix, &Matrix)> = mors.iter().zip(&id_b).map(|(m, i)| (i, &m.matrix)).collect();
        let s = layout.map(&summand, &Layout::diag_key(&a), &s_arrows)?;
        let t = layout.map(&summand, &Layout::diag_key(&b), &t_arrows)?;
        let (ia, ib) = (index[&a], index[&b]);
        let mut block = Matrix::zeros(ambient, s.cols());
        for c in 0..s.cols() {
            for r in 0..s.rows() {
                let v = s.get(r, c);
                if !v.is_zero() {
                    *block.get_mut(offsets[ia] + r, c) += v;
                }
            }
            for r in 0..t.rows() {
                let v = t.get(r, c);
                if !v.is_zero() {
                    *block.get_mut(offsets[ib] + r, c) -= v;
                }
            }
        }
        columns.push(block);
    }
    let relations = if columns.is_empty() {
        Matrix::zeros(ambient, 0)
    } else {
        Matrix::hstack(&columns.iter().collect::<Vec<_>>())?
    };
    let quotient = QuotientSpace::of_subspace(ambient, &relations)?;
    let dinatural = (0..diagonal.len())
        .map(|i| quotient.projection.column_range(offsets[i], offsets[i + 1]))
        .collect();
    let module = match block_diag_action(&carriers) {
        Some((h, action)) => {
            let induced = action.iter().map(|a| quotient.induced_endomorphism(a)).collect();
            Some(ModuleRep::new(&h, "coend", induced)?)
        }
        None => None,
    };
    Ok(CoendResult { quotient, module, diagonal, objects, offsets, carriers, dinatural, relations })
}

/// End over the given variables.
pub fn end_over(f: &dyn Functor, vars: &[CoendVariable], fixed: &[Option<ModuleRep>]) -> Result<EndResult> {
    let mut layout = Layout::new(f, vars, fixed, true)?;
    let (diagonal, objects, offsets, carriers) = layout.diagonal_data()?;
    let index: HashMap<Vec<usize>, usize> = diagonal.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let ambient = *offsets.last().expect("sentinel");
    let mut rows: Vec<Matrix> = Vec::new();
    for mt in layout.morphism_tuples() {
        let mors: Vec<_> = mt.iter().zip(vars).map(|(&m, v)| &v.sub.morphisms()[m]).collect();
        let a: Vec<usize> = mors.iter().map(|m| m.source).collect();
        let b: Vec<usize> = mors.iter().map(|m| m.target).collect();
        let summand: Vec<usize> = a.iter().zip(&b).flat_map(|(&a, &b)| [a, b]).collect();
        let id_a: Vec<Matrix> = a.iter().zip(vars).map(|(&i, v)| Matrix::identity(v.sub.object(i).dim())).collect();
        let id_b: Vec<Matrix> = b.iter().zip(vars).map(|(&i, v)| Matrix::identity(v.sub.object(i).dim())).collect();
        // G(id_a, f): G(a,a) -> G(a,b) and G(f, id_b): G(b,b) -> G(a,b)
        let s_arrows: Vec<(&Matrix, &Matrix)> = mors.iter().zip(&id_a).map(|(m, i)| (i, &m.matrix)).collect();
        let t_arrows: Vec<(&Matrix, &Matrix)> = mors.iter().zip(&id_b).map(|(m, i)| (&m.matrix, i)).collect();
        let s = layout.map(&Layout::diag_key(&a), &summand, &s_arrows)?;
        let t = layout.map(&Layout::diag_key(&b), &summand, &t_arrows)?;
        let (ia, ib) = (index[&a], index[&b]);
        let mut block = Matrix::zeros(s.rows(), ambient);
        for r in 0..s.rows() {
            for c in 0..s.cols() {
                let v = s.get(r, c);
                if !v.is_zero() {
                    *block.get_mut(r, offsets[ia] + c) += v;
                }
            }
            for c in 0..t.cols() {
                let v = t.get(r, c);
                if !v.is_zero() {
                    *block.get_mut(r, offsets[ib] + c) -= v;
                }
            }
        }
        rows.push(block);
    }
    let relations = if rows.is_empty() {
        Matrix::zeros(0, ambient)
    } else {
        Matrix::vstack(&rows.iter().collect::<Vec<_>>())?
    };
    let inclusion = kernel_basis(&relations);
    let retraction = if inclusion.cols() == 0 {
        Matrix::zeros(0, ambient)
    } else {
        left_inverse(&inclusion)?
    };
    let components = (0..diagonal.len())
        .map(|i| inclusion.row_range(offsets[i], offsets[i + 1]))
        .collect();
    let module = match block_diag_action(&carriers) {
        Some((h, action)) => {
            let induced = action.iter().map(|a| retraction.mul(a).mul(&inclusion)).collect();
            Some(ModuleRep::new(&h, "end", induced)?)
        }
        None => None,
    };
    Ok(EndResult { inclusion, retraction, module, diagonal, objects, offsets, carriers, components, relations })
}

impl CoendResult {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn module(&self) -> Option<&ModuleRep> {
        self.module.as_ref()
    }

    /// Object-index tuples of the diagonal blocks, one index per variable.
    pub fn diagonal(&self) -> &[Vec<usize>] {
        &self.diagonal
    }

    pub fn diagonal_objects(&self, block: usize) -> &[ModuleRep] {
        &self.objects[block]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn carrier(&self, block: usize) -> &Carrier {
        &self.carriers[block]
    }

    pub fn carriers(&self) -> &[Carrier] {
        &self.carriers
    }

    pub fn dinatural(&self) -> &[Matrix] {
        &self.dinatural
    }

    pub fn component(&self, block: usize) -> &Matrix {
        &self.dinatural[block]
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn block_of(&self, tuple: &[usize]) -> Option<usize> {
        self.diagonal.iter().position(|t| t == tuple)
    }

    /// `ι` kills every relation `G(f,id) - G(id,f)`.
    pub fn is_dinatural(&self) -> bool {
        self.quotient.projection.mul(&self.relations).is_zero()
    }

    /// Rank of the concatenated family, which equals the dimension when jointly surjective.
    pub fn joint_rank(&self) -> usize {
        crate::linalg::rank(&self.quotient.projection)
    }

    /// This coend's own family, as a family into itself.
    pub fn family(&self) -> DinaturalFamily {
        DinaturalFamily { target_dim: self.dim(), components: self.dinatural.clone() }
    }

    fn stacked(&self, j: &DinaturalFamily) -> Result<Matrix> {
        if j.components.len() != self.diagonal.len() {
            return Err(Error::Dimension(format!(
                "family has {} components, coend has {} blocks",
                j.components.len(),
                self.diagonal.len()
            )));
        }
        let mut out = Matrix::zeros(j.target_dim, self.quotient.ambient_dim);
        for (i, c) in j.components.iter().enumerate() {
            if c.shape() != (j.target_dim, self.carriers[i].dim()) {
                return Err(Error::Dimension(format!("component {i} has shape {:?}", c.shape())));
            }
            for r in 0..c.rows() {
                for k in 0..c.cols() {
                    out.set(r, self.offsets[i] + k, c.get(r, k).clone());
                }
            }
        }
        Ok(out)
    }

    /// Checks that `j` kills every relation.
    pub fn accepts(&self, j: &DinaturalFamily) -> Result<bool> {
        Ok(self.stacked(j)?.mul(&self.relations).is_zero())
    }
}

/// The unique `m` with `m ∘ ι_x = j_x` for all `x`.
///
/// Computed from the section of the quotient and again by an independent solve;
/// the two must agree entry for entry.
pub fn factor_through_coend(c: &CoendResult, j: &DinaturalFamily) -> Result<Matrix> {
    let stacked = c.stacked(j)?;
    if !stacked.mul(&c.relations).is_zero() {
        return Err(Error::NotDinatural("family does not coequalize the basis relations".into()));
    }
    let m = c.quotient.factor(&stacked)?;
    let again = c.quotient.factor_by_solve(&stacked)?;
    if m != again {
        return Err(Error::NotDinatural("mediating map is not unique".into()));
    }
    Ok(m)
}

impl EndResult {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn module(&self) -> Option<&ModuleRep> {
        self.module.as_ref()
    }

    pub fn diagonal(&self) -> &[Vec<usize>] {
        &self.diagonal
    }

    pub fn diagonal_objects(&self, block: usize) -> &[ModuleRep] {
        &self.objects[block]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn carrier(&self, block: usize) -> &Carrier {
        &self.carriers[block]
    }

    /// `π_x: E -> G(x,x)`.
    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn is_natural(&self) -> bool {
        self.relations.mul(&self.inclusion).is_zero()
    }

    fn stacked(&self, j: &DinaturalFamily) -> Result<Matrix> {
        if j.components.len() != self.diagonal.len() {
            return Err(Error::Dimension("family does not match the end's blocks".into()));
        }
        let ambient = *self.offsets.last().expect("sentinel");
        let mut out = Matrix::zeros(ambient, j.target_dim);
        for (i, c) in j.components.iter().enumerate() {
            if c.shape() != (self.carriers[i].dim(), j.target_dim) {
                return Err(Error::Dimension(format!("component {i} has shape {:?}", c.shape())));
            }
            for r in 0..c.rows() {
                for k in 0..c.cols() {
                    out.set(self.offsets[i] + r, k, c.get(r, k).clone());
                }
            }
        }
        Ok(out)
    }

    /// Checks that every relation vanishes on `j`.
    pub fn accepts(&self, j: &DinaturalFamily) -> Result<bool> {
        Ok(self.relations.mul(&self.stacked(j)?).is_zero())
    }
}

/// The unique `m` with `π_x ∘ m = j_x` for all `x`.
pub fn factor_through_end(e: &EndResult, j: &DinaturalFamily) -> Result<Matrix> {
    let stacked = e.stacked(j)?;
    if !e.relations.mul(&stacked).is_zero() {
        return Err(Error::NotNatural("family does not equalize the basis relations".into()));
    }
    let m = e.retraction.mul(&stacked);
    if e.inclusion.mul(&m) != stacked {
        return Err(Error::NotNatural("family does not land in the end".into()));
    }
    let again = solve_left(&e.inclusion.transpose(), &stacked.transpose())?.transpose();
    if m != again {
        return Err(Error::NotNatural("mediating map is not unique".into()));
    }
    Ok(m)
}
