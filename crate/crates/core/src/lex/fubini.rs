use super::presentation::post_compose;
use crate::category::{coend_over, compare, CoendVariable, Functor, GeneratingSubcategory, PartialCoend};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, is_intertwiner, ModuleRep};
use crate::linalg::{inverse, is_invertible, Matrix};

/// Both iterated orders of `∮^u ∫^x Hom(w, A(u, u, x, x))`, per object `w`.
#[derive(Clone, Debug)]
pub struct LexFubiniReport {
    pub u_then_x: Vec<usize>,
    pub x_then_u: Vec<usize>,
    pub joint: Vec<usize>,
    /// The inner coends are related by a module isomorphism commuting with both composite families.
    pub isomorphic: bool,
    /// Post-composition with that isomorphism is invertible on every `Hom(w, -)`.
    pub interchange: bool,
    /// The isomorphism `∫^u ∫^x A -> ∫^x ∫^u A` of modules.
    pub iso: Option<Matrix>,
}

impl LexFubiniReport {
    pub fn passed(&self) -> bool {
        self.isomorphic && self.interchange && self.u_then_x == self.x_then_u && self.u_then_x == self.joint
    }
}

/// `A` has slots (u contra, u co, x contra, x co) and module values; the outer coend is taken
/// in representable form `Hom(w, ∫ A)`.
pub fn lex_fubini(
    a: &dyn Functor,
    sub_u: &GeneratingSubcategory,
    sub_x: &GeneratingSubcategory,
    ws: &[ModuleRep],
) -> Result<LexFubiniReport> {
    if a.variances().len() != 4 {
        return Err(Error::Presentation("expected four slots".into()));
    }
    let u = CoendVariable { contra: 0, co: 1, sub: sub_u };
    let x = CoendVariable { contra: 2, co: 3, sub: sub_x };
    let joint = coend_over(a, &[u, x], &[])?;
    let inner_x = PartialCoend::new(a, vec![x]);
    let ux = coend_over(&inner_x, &[CoendVariable { contra: 0, co: 1, sub: sub_u }], &[])?;
    let inner_u = PartialCoend::new(a, vec![u]);
    let xu = coend_over(&inner_u, &[CoendVariable { contra: 0, co: 1, sub: sub_x }], &[])?;
    let not_modules = || Error::Presentation("iterated coends must be module-valued".into());
    let (mj, m1, m2) = (
        joint.module().ok_or_else(not_modules)?,
        ux.module().ok_or_else(not_modules)?,
        xu.module().ok_or_else(not_modules)?,
    );
    let f1 = compare(&joint, &ux, |t| (t[0], t[1]))?;
    let f2 = compare(&joint, &xu, |t| (t[1], t[0]))?;
    let iso = match (&f1, &f2) {
        (Some(f1), Some(f2)) if is_intertwiner(f1, mj, m1) && is_intertwiner(f2, mj, m2) => Some(f2.mul(&inverse(f1)?)),
        _ => None,
    };
    let dims = |m: &ModuleRep| ws.iter().map(|w| Ok(hom_space(w, m)?.dim())).collect::<Result<Vec<_>>>();
    let mut interchange = iso.is_some();
    if let Some(iso) = &iso {
        for w in ws {
            let s = hom_space(w, m1)?;
            let t = hom_space(w, m2)?;
            let p = post_compose(&s, &t, iso)?;
            interchange &= p.is_square() && is_invertible(&p);
        }
    }
    Ok(LexFubiniReport {
        u_then_x: dims(m1)?,
        x_then_u: dims(m2)?,
        joint: dims(mj)?,
        isomorphic: iso.is_some(),
        interchange,
        iso,
    })
}
