use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{hom_space, HopfAlgebra, IntertwinerSpace, ModuleRep};
use crate::lyubashenko::LyubashenkoCoend;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Incoming,
    Outgoing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub module: String,
    pub orientation: Orientation,
}

/// A connected world sheet: genus and ordered incoming and outgoing insertions.
#[derive(Clone, Debug)]
pub struct WorldSheetSpec {
    algebra: HopfAlgebra,
    genus: usize,
    incoming: Vec<ModuleRep>,
    outgoing: Vec<ModuleRep>,
}

impl WorldSheetSpec {
    pub fn new(algebra: &HopfAlgebra, genus: usize, incoming: Vec<ModuleRep>, outgoing: Vec<ModuleRep>) -> Result<Self> {
        for m in incoming.iter().chain(&outgoing) {
            if m.algebra() != algebra {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(WorldSheetSpec { algebra: algebra.clone(), genus, incoming, outgoing })
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        &self.algebra
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn incoming(&self) -> &[ModuleRep] {
        &self.incoming
    }

    pub fn outgoing(&self) -> &[ModuleRep] {
        &self.outgoing
    }

    /// Outgoing insertions first, then the incoming ones.
    pub fn signature(&self) -> Vec<Insertion> {
        let tag = |m: &ModuleRep, orientation| Insertion { module: m.name().to_string(), orientation };
        self.outgoing
            .iter()
            .map(|m| tag(m, Orientation::Outgoing))
            .chain(self.incoming.iter().map(|m| tag(m, Orientation::Incoming)))
            .collect()
    }

    /// `u^ε`: the outgoing modules, then the duals of the incoming ones.
    pub fn insertion_word(&self) -> Vec<ModuleRep> {
        self.outgoing.iter().cloned().chain(self.incoming.iter().map(ModuleRep::dual)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct BlockResult {
    pub dimension: usize,
    pub carrier: IntertwinerSpace,
    pub genus_used: usize,
    pub insertion_signature: Vec<Insertion>,
}

/// Tensor product of a word, the trivial module when empty.
pub(crate) fn tensor_word(h: &HopfAlgebra, word: &[ModuleRep]) -> Result<ModuleRep> {
    if word.is_empty() {
        Ok(ModuleRep::trivial(h))
    } else {
        ModuleRep::tensor_all(h, word)
    }
}

/// `Hom(1, u₁^ε ⊗ … ⊗ u_n^ε ⊗ L^{⊗g})`.
pub fn block_space(spec: &WorldSheetSpec, l: &LyubashenkoCoend) -> Result<BlockResult> {
    if spec.algebra() != l.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let mut word = spec.insertion_word();
    word.extend(std::iter::repeat_n(l.module().clone(), spec.genus));
    let target = tensor_word(spec.algebra(), &word)?;
    let carrier = hom_space(&ModuleRep::trivial(spec.algebra()), &target)?;
    Ok(BlockResult { dimension: carrier.dim(), carrier, genus_used: spec.genus, insertion_signature: spec.signature() })
}

/// `Hom(u₁ ⊗ … ⊗ u_p, ũ₁ ⊗ … ⊗ ũ_q)`.
pub fn genus0_blocks(h: &HopfAlgebra, incoming: &[ModuleRep], outgoing: &[ModuleRep]) -> Result<BlockResult> {
    let spec = WorldSheetSpec::new(h, 0, incoming.to_vec(), outgoing.to_vec())?;
    let carrier = hom_space(&tensor_word(h, incoming)?, &tensor_word(h, outgoing)?)?;
    Ok(BlockResult { dimension: carrier.dim(), carrier, genus_used: 0, insertion_signature: spec.signature() })
}
