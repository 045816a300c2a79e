use super::space::{block_space, tensor_word, WorldSheetSpec};
use crate::category::{coend, factor_through_coend, DinaturalFamily, Factor, FactorCarrier, GeneratingSubcategory, Letter, Payload, WordFunctor};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, ModuleRep};
use crate::lex::lex_coend_inner_hom;
use crate::linalg::{is_invertible, Matrix};
use crate::lyubashenko::LyubashenkoCoend;

/// Sewing of two genus-0 world sheets along the last outgoing insertion of the first
/// and the first incoming insertion of the second.
#[derive(Clone, Debug)]
pub struct SewingReport {
    pub coend_dim: usize,
    pub direct_dim: usize,
    pub invertible: bool,
    /// The sewn world sheet.
    pub sewn: WorldSheetSpec,
}

impl SewingReport {
    pub fn passed(&self) -> bool {
        self.coend_dim == self.direct_dim && self.invertible
    }
}

/// `∫^x Hom(u, ũ ⊗ x) ⊗ Hom(x ⊗ v, ṽ) ≅ Hom(u ⊗ v, ũ ⊗ ṽ)`, with `x` running over `sub`.
pub fn sew_genus0(s1: &WorldSheetSpec, s2: &WorldSheetSpec, sub: &GeneratingSubcategory) -> Result<SewingReport> {
    if s1.genus() != 0 || s2.genus() != 0 {
        return Err(Error::SewingMismatch("both world sheets must have genus 0".into()));
    }
    if s1.algebra() != s2.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let (Some((x1, u_out)), Some((x2, v_in))) = (s1.outgoing().split_last(), s2.incoming().split_first()) else {
        return Err(Error::SewingMismatch("no insertion to sew along".into()));
    };
    if x1 != x2 {
        return Err(Error::SewingMismatch(format!("{} is sewn to {}", x1.name(), x2.name())));
    }
    let h = s1.algebra();
    let u = tensor_word(h, s1.incoming())?;
    let ut = tensor_word(h, u_out)?;
    let v = tensor_word(h, v_in)?;
    let vt = tensor_word(h, s2.outgoing())?;
    let f = WordFunctor::inferred(
        h,
        vec![
            Factor::Hom(vec![Letter::Fixed(u.clone())], vec![Letter::Fixed(ut.clone()), Letter::Slot(1)]),
            Factor::Hom(vec![Letter::Slot(0), Letter::Fixed(v.clone())], vec![Letter::Fixed(vt.clone())]),
        ],
    )?;
    let c = coend(sub, &f)?;
    let target = hom_space(&u.tensor(&v)?, &ut.tensor(&vt)?)?;
    let mut components = Vec::with_capacity(c.diagonal().len());
    for i in 0..c.diagonal().len() {
        let Payload::Factors(parts) = c.carrier(i).payload() else { unreachable!("word functor carrier") };
        let [FactorCarrier::Hom(first), FactorCarrier::Hom(second)] = parts.as_slice() else { unreachable!("two Hom factors") };
        let mut m = Matrix::zeros(target.dim(), first.dim() * second.dim());
        for (a, alpha) in first.basis().iter().enumerate() {
            let left = alpha.kron(&Matrix::identity(v.dim()));
            for (b, beta) in second.basis().iter().enumerate() {
                let image = Matrix::identity(ut.dim()).kron(beta).mul(&left);
                for (r, val) in target.coordinates(&image)?.into_iter().enumerate() {
                    m.set(r, a * second.dim() + b, val);
                }
            }
        }
        components.push(m);
    }
    let mediating = factor_through_coend(&c, &DinaturalFamily { target_dim: target.dim(), components })?;
    let incoming = s1.incoming().iter().chain(v_in).cloned().collect();
    let outgoing = u_out.iter().chain(s2.outgoing()).cloned().collect();
    Ok(SewingReport {
        coend_dim: c.dim(),
        direct_dim: target.dim(),
        invertible: is_invertible(&mediating),
        sewn: WorldSheetSpec::new(h, 0, incoming, outgoing)?,
    })
}

/// Self-sewing of the last outgoing insertion to the first incoming one.
#[derive(Clone, Debug)]
pub struct SelfSewReport {
    pub lex_dim: usize,
    pub block_dim: usize,
    /// The left exact coend family is dinatural and its carrier is the block space of `sewn`.
    pub compatible: bool,
    pub sewn: WorldSheetSpec,
}

impl SelfSewReport {
    pub fn passed(&self) -> bool {
        self.lex_dim == self.block_dim && self.compatible
    }
}

/// `∮^x Hom(1, W ⊗ x ⊗ x∨) = Hom(1, W ⊗ L)` with `W` the residual insertions followed by `L^{⊗g}`,
/// compared with the block space at genus `g + 1`.
pub fn self_sew(spec: &WorldSheetSpec, l: &LyubashenkoCoend) -> Result<SelfSewReport> {
    let (Some((x1, out)), Some((x2, inc))) = (spec.outgoing().split_last(), spec.incoming().split_first()) else {
        return Err(Error::SewingMismatch("self-sewing needs an outgoing and an incoming insertion".into()));
    };
    if x1 != x2 {
        return Err(Error::SewingMismatch(format!("{} is sewn to {}", x1.name(), x2.name())));
    }
    let h = spec.algebra();
    let sewn = WorldSheetSpec::new(h, spec.genus() + 1, inc.to_vec(), out.to_vec())?;
    let mut word = WorldSheetSpec::new(h, spec.genus(), inc.to_vec(), out.to_vec())?.insertion_word();
    word.extend(std::iter::repeat_n(l.module().clone(), spec.genus()));
    let w = tensor_word(h, &word)?;
    let lex = lex_coend_inner_hom(&ModuleRep::trivial(h), &w, l)?;
    let block = block_space(&sewn, l)?;
    let compatible = lex.is_dinatural()? && lex.carrier().basis() == block.carrier.basis();
    Ok(SelfSewReport { lex_dim: lex.dim(), block_dim: block.dimension, compatible, sewn })
}
