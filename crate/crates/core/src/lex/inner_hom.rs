use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::presentation::{post_compose, yoneda_extract};
use crate::category::{coend, CoendResult, DinaturalFamily, Factor, GeneratingSubcategory, Letter, WordFunctor};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, IntertwinerSpace, ModuleRep};
use crate::linalg::{rank, solve_left, Matrix, Scalar};
use crate::lyubashenko::LyubashenkoCoend;

/// `∮^x Hom(u, v ⊗ x ⊗ x∨)` realized as `Hom(u, v ⊗ L)` with the family `(id_v ⊗ ι_x)_*`.
#[derive(Clone, Debug)]
pub struct LexCoend {
    u: ModuleRep,
    v: ModuleRep,
    vl: ModuleRep,
    carrier: IntertwinerSpace,
    sub: GeneratingSubcategory,
    sources: Vec<IntertwinerSpace>,
    legs: Vec<Matrix>,
    components: Vec<Matrix>,
    objects: CoendResult,
}

/// A family `Hom(w, v ⊗ x ⊗ x∨) -> Hom(w, y)`, indexed `[x][w]` over the generating
/// objects `x` of the coend and `w` of a domain subcategory.
#[derive(Clone, Debug)]
pub struct LexTestFamily {
    pub target: ModuleRep,
    pub components: Vec<Vec<Matrix>>,
}

/// Output of the universal-property executor.
#[derive(Clone, Debug)]
pub struct Mediation {
    /// `κ: v ⊗ L -> y`.
    pub morphism: Matrix,
    /// Post-composition with `κ`, per domain object.
    pub kappa: Vec<Matrix>,
    /// The legs `id_v ⊗ ι_x` are jointly epic and a second solve returns the same matrix.
    pub unique: bool,
    /// `κ ∘ (id_v ⊗ ι_x)_* = j_x` on every domain object.
    pub triangle: bool,
}

impl Mediation {
    pub fn passed(&self) -> bool {
        self.unique && self.triangle
    }
}

fn tensor_word(v: &ModuleRep) -> Vec<Letter> {
    vec![Letter::Fixed(v.clone()), Letter::Slot(1), Letter::DualSlot(0)]
}

pub fn lex_coend_inner_hom(u: &ModuleRep, v: &ModuleRep, l: &LyubashenkoCoend) -> Result<LexCoend> {
    u.same_algebra(v)?;
    v.same_algebra(l.module())?;
    let h = l.algebra();
    let vl = v.tensor(l.module())?;
    let carrier = hom_space(u, &vl)?;
    let sub = l.sub().clone();
    let mut sources = Vec::with_capacity(sub.len());
    let mut legs = Vec::with_capacity(sub.len());
    let mut components = Vec::with_capacity(sub.len());
    for x in sub.objects() {
        let vxx = ModuleRep::tensor_all(h, &[v.clone(), x.clone(), x.dual()])?;
        let s = hom_space(u, &vxx)?;
        let leg = Matrix::identity(v.dim()).kron(&l.iota(x)?);
        components.push(post_compose(&s, &carrier, &leg)?);
        sources.push(s);
        legs.push(leg);
    }
    let objects = coend(&sub, &WordFunctor::inferred(h, vec![Factor::Object(tensor_word(v))])?)?;
    Ok(LexCoend { u: u.clone(), v: v.clone(), vl, carrier, sub, sources, legs, components, objects })
}

impl LexCoend {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn carrier(&self) -> &IntertwinerSpace {
        &self.carrier
    }

    pub fn sub(&self) -> &GeneratingSubcategory {
        &self.sub
    }

    pub fn sources(&self) -> &[IntertwinerSpace] {
        &self.sources
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    /// `v ⊗ L`.
    pub fn object(&self) -> &ModuleRep {
        &self.vl
    }

    /// The maps `id_v ⊗ ι_x`.
    pub fn legs(&self) -> &[Matrix] {
        &self.legs
    }

    /// Checks `j_b ∘ (id ⊗ f ⊗ id)_* = j_a ∘ (id ⊗ id ⊗ f∨)_*` on `Hom(u, v ⊗ a ⊗ b∨)` for every basis `f: a -> b`.
    pub fn is_dinatural(&self) -> Result<bool> {
        let h = self.vl.algebra();
        let iv = Matrix::identity(self.v.dim());
        for f in self.sub.morphisms() {
            let (a, b) = (self.sub.object(f.source), self.sub.object(f.target));
            let mixed = hom_space(&self.u, &ModuleRep::tensor_all(h, &[self.v.clone(), a.clone(), b.dual()])?)?;
            let s = iv.kron(&f.matrix).kron(&Matrix::identity(b.dim()));
            let t = iv.kron(&Matrix::identity(a.dim())).kron(&f.matrix.transpose());
            let lhs = self.components[f.target].mul(&post_compose(&mixed, &self.sources[f.target], &s)?);
            let rhs = self.components[f.source].mul(&post_compose(&mixed, &self.sources[f.source], &t)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The family `(id_v ⊗ ι_x)_*` on a domain subcategory, with target `v ⊗ L`.
    pub fn own_family(&self, domain: &GeneratingSubcategory) -> Result<LexTestFamily> {
        self.family_of(domain, &self.vl, &self.legs)
    }

    /// Post-composition with the morphisms `φ_x: v ⊗ x ⊗ x∨ -> y`.
    pub fn family_of(&self, domain: &GeneratingSubcategory, y: &ModuleRep, phis: &[Matrix]) -> Result<LexTestFamily> {
        let h = self.vl.algebra();
        let mut components = Vec::with_capacity(self.sub.len());
        for (x, phi) in self.sub.objects().iter().zip(phis) {
            let vxx = ModuleRep::tensor_all(h, &[self.v.clone(), x.clone(), x.dual()])?;
            let per_w = domain
                .objects()
                .iter()
                .map(|w| post_compose(&hom_space(w, &vxx)?, &hom_space(w, y)?, phi))
                .collect::<Result<Vec<_>>>()?;
            components.push(per_w);
        }
        Ok(LexTestFamily { target: y.clone(), components })
    }

    /// A random dinatural family into `y`: a random intertwiner out of the ordinary coend of
    /// `v ⊗ x ⊗ x∨` over a randomly rebased subcategory, composed with its legs.
    pub fn generated_family(&self, domain: &GeneratingSubcategory, y: &ModuleRep, seed: u64) -> Result<LexTestFamily> {
        let h = self.vl.algebra();
        let rebased = self.sub.rebased(seed);
        let q = coend(&rebased, &WordFunctor::inferred(h, vec![Factor::Object(tensor_word(&self.v))])?)?;
        let qm = q.module().expect("module-valued").clone();
        let space = hom_space(&qm, y)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let coeffs: Vec<Scalar> = (0..space.dim()).map(|_| Scalar::from(rng.gen_range(-4i64..=4))).collect();
        let psi = space.combine(&coeffs);
        let phis: Vec<Matrix> = (0..rebased.len()).map(|i| psi.mul(q.component(i))).collect();
        self.family_of(domain, y, &phis)
    }

    /// Produces the unique `κ` with `κ ∘ (id_v ⊗ ι_x)_* = j_x`: each `j_x` is reduced to a morphism
    /// `φ_x` by Yoneda, the `φ_x` are factored through `v ⊗ L`, and `κ` is post-composition.
    pub fn mediate(&self, domain: &GeneratingSubcategory, family: &LexTestFamily) -> Result<Mediation> {
        if family.components.len() != self.sub.len() {
            return Err(Error::Dimension("one component list per generating object".into()));
        }
        let h = self.vl.algebra();
        let y = &family.target;
        let mut phis = Vec::with_capacity(self.sub.len());
        for (x, comps) in self.sub.objects().iter().zip(&family.components) {
            let vxx = ModuleRep::tensor_all(h, &[self.v.clone(), x.clone(), x.dual()])?;
            phis.push(yoneda_extract(domain, &vxx, y, comps)?);
        }
        let as_family = DinaturalFamily { target_dim: y.dim(), components: phis.clone() };
        if !self.objects.accepts(&as_family)? {
            return Err(Error::NotDinatural("extracted morphisms are not dinatural in x".into()));
        }
        let stacked_legs = Matrix::hstack(&self.legs.iter().collect::<Vec<_>>())?;
        let stacked_phis = Matrix::hstack(&phis.iter().collect::<Vec<_>>())?;
        let morphism = solve_left(&stacked_legs, &stacked_phis)
            .map_err(|_| Error::NotDinatural("family does not factor through v ⊗ L".into()))?;
        let rev_legs: Vec<&Matrix> = self.legs.iter().rev().collect();
        let rev_phis: Vec<&Matrix> = phis.iter().rev().collect();
        let again = solve_left(&Matrix::hstack(&rev_legs)?, &Matrix::hstack(&rev_phis)?)?;
        let unique = rank(&stacked_legs) == self.vl.dim() && again == morphism;
        let mut kappa = Vec::with_capacity(domain.len());
        let mut triangle = true;
        for (k, w) in domain.objects().iter().enumerate() {
            let wl = hom_space(w, &self.vl)?;
            let wy = hom_space(w, y)?;
            let kw = post_compose(&wl, &wy, &morphism)?;
            for (i, x) in self.sub.objects().iter().enumerate() {
                let vxx = ModuleRep::tensor_all(h, &[self.v.clone(), x.clone(), x.dual()])?;
                let legs_w = post_compose(&hom_space(w, &vxx)?, &wl, &self.legs[i])?;
                triangle &= kw.mul(&legs_w) == family.components[i][k];
            }
            kappa.push(kw);
        }
        Ok(Mediation { morphism, kappa, unique, triangle })
    }
}
