use super::coend::{coend_over, coend_over_unchecked, factor_through_coend, CoendResult, CoendVariable, DinaturalFamily};
use super::functor::{Carrier, Functor, Payload, Variance};
use super::subcategory::GeneratingSubcategory;
use crate::error::{Error, Result};
use crate::hopf::ModuleRep;
use crate::linalg::{inverse, is_invertible, Matrix};

/// The functor of the remaining slots obtained by integrating out some variables.
pub struct PartialCoend<'a> {
    inner: &'a dyn Functor,
    vars: Vec<CoendVariable<'a>>,
    outer: Vec<usize>,
}

impl<'a> PartialCoend<'a> {
    pub fn new(inner: &'a dyn Functor, vars: Vec<CoendVariable<'a>>) -> Self {
        let n = inner.variances().len();
        let outer = (0..n).filter(|s| !vars.iter().any(|v| v.contra == *s || v.co == *s)).collect();
        PartialCoend { inner, vars, outer }
    }

    /// Slots of the wrapped functor that remain, in order.
    pub fn outer_slots(&self) -> &[usize] {
        &self.outer
    }

    fn fixed(&self, objects: &[&ModuleRep]) -> Vec<Option<ModuleRep>> {
        let mut fixed = vec![None; self.inner.variances().len()];
        for (o, m) in self.outer.iter().zip(objects) {
            fixed[*o] = Some((*m).clone());
        }
        fixed
    }
}

impl Functor for PartialCoend<'_> {
    fn variances(&self) -> Vec<Variance> {
        let v = self.inner.variances();
        self.outer.iter().map(|&s| v[s]).collect()
    }

    fn carrier(&self, objects: &[&ModuleRep]) -> Result<Carrier> {
        if objects.len() != self.outer.len() {
            return Err(Error::Presentation(format!("expected {} objects", self.outer.len())));
        }
        let c = coend_over_unchecked(self.inner, &self.vars, &self.fixed(objects))?;
        Ok(Carrier::new(c.dim(), c.module().cloned(), Payload::Coend(Box::new(c))))
    }

    fn map(&self, arrows: &[&Matrix], from: &Carrier, to: &Carrier) -> Result<Matrix> {
        let (Payload::Coend(cf), Payload::Coend(ct)) = (from.payload(), to.payload()) else {
            return Err(Error::Presentation("carrier is not a partial coend".into()));
        };
        let n = self.inner.variances().len();
        let mut blocks = Vec::with_capacity(cf.diagonal().len());
        for i in 0..cf.diagonal().len() {
            let objs = cf.diagonal_objects(i);
            let ids: Vec<Matrix> = objs.iter().map(|m| Matrix::identity(m.dim())).collect();
            let mut full: Vec<&Matrix> = Vec::with_capacity(n);
            for slot in 0..n {
                if let Some(k) = self.outer.iter().position(|&s| s == slot) {
                    full.push(arrows[k]);
                } else {
                    let v = self.vars.iter().position(|v| v.contra == slot || v.co == slot).expect("bound");
                    full.push(&ids[v]);
                }
            }
            blocks.push(self.inner.map(&full, cf.carrier(i), ct.carrier(i))?);
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Ok(ct.quotient().projection.mul(&Matrix::block_diag(&refs)).mul(&cf.quotient().section))
    }
}

/// The three coends of a four-slot functor `F(u, u', x, x')` and the maps between them.
#[derive(Clone, Debug)]
pub struct FubiniReport {
    pub u_then_x: usize,
    pub x_then_u: usize,
    pub product: usize,
    /// Mediating maps are invertible and compose to identities, for each iterated order.
    pub u_then_x_iso: bool,
    pub x_then_u_iso: bool,
}

impl FubiniReport {
    pub fn passed(&self) -> bool {
        self.u_then_x_iso && self.x_then_u_iso && self.u_then_x == self.product && self.x_then_u == self.product
    }
}

/// Compares `∫^u ∫^x F`, `∫^x ∫^u F` and `∫^{(u,x)} F` for `F` with slots
/// (u contra, u co, x contra, x co).
pub fn fubini_check(sub_u: &GeneratingSubcategory, sub_x: &GeneratingSubcategory, f: &dyn Functor) -> Result<FubiniReport> {
    if f.variances().len() != 4 {
        return Err(Error::Presentation("Fubini check needs a four-slot functor".into()));
    }
    let u = CoendVariable { contra: 0, co: 1, sub: sub_u };
    let x = CoendVariable { contra: 2, co: 3, sub: sub_x };
    let joint = coend_over(f, &[u, x], &[])?;

    let inner_x = PartialCoend::new(f, vec![x]);
    let ux = coend_over(&inner_x, &[CoendVariable { contra: 0, co: 1, sub: sub_u }], &[])?;
    let ux_iso = compare(&joint, &ux, |t| (t[0], t[1]))?.is_some();

    let inner_u = PartialCoend::new(f, vec![u]);
    let xu = coend_over(&inner_u, &[CoendVariable { contra: 0, co: 1, sub: sub_x }], &[])?;
    let xu_iso = compare(&joint, &xu, |t| (t[1], t[0]))?.is_some();

    Ok(FubiniReport {
        u_then_x: ux.dim(),
        x_then_u: xu.dim(),
        product: joint.dim(),
        u_then_x_iso: ux_iso,
        x_then_u_iso: xu_iso,
    })
}

/// Builds the canonical maps `joint -> iterated` and back; returns the first if they are mutually inverse.
/// `split` sends a joint diagonal tuple to (outer index, inner index).
pub(crate) fn compare(
    joint: &CoendResult,
    iterated: &CoendResult,
    split: impl Fn(&[usize]) -> (usize, usize),
) -> Result<Option<Matrix>> {
    let inner = |outer_block: usize| -> Result<&CoendResult> {
        match iterated.carrier(outer_block).payload() {
            Payload::Coend(c) => Ok(c),
            _ => Err(Error::Presentation("iterated coend lacks its inner coend".into())),
        }
    };
    let mut to_iter = Vec::with_capacity(joint.diagonal().len());
    for t in joint.diagonal() {
        let (o, i) = split(t);
        let ob = iterated.block_of(&[o]).expect("outer block");
        let q = inner(ob)?;
        let ib = q.block_of(&[i]).expect("inner block");
        to_iter.push(iterated.component(ob).mul(q.component(ib)));
    }
    let forward = factor_through_coend(joint, &DinaturalFamily { target_dim: iterated.dim(), components: to_iter })?;

    let mut to_joint = Vec::with_capacity(iterated.diagonal().len());
    for (ob, t) in iterated.diagonal().iter().enumerate() {
        let q = inner(ob)?;
        let parts: Vec<Matrix> = q
            .diagonal()
            .iter()
            .map(|s| {
                let jb = joint
                    .diagonal()
                    .iter()
                    .position(|jt| split(jt) == (t[0], s[0]))
                    .expect("joint block");
                joint.component(jb).clone()
            })
            .collect();
        let refs: Vec<&Matrix> = parts.iter().collect();
        to_joint.push(Matrix::hstack(&refs)?.mul(&q.quotient().section));
    }
    let backward = factor_through_coend(iterated, &DinaturalFamily { target_dim: joint.dim(), components: to_joint })?;

    let iso = is_invertible(&forward)
        && backward.mul(&forward).is_identity()
        && forward.mul(&backward).is_identity()
        && inverse(&forward)? == backward;
    Ok(iso.then_some(forward))
}
