use super::presentation::{pre_compose, LexFunctorPresentation};
use crate::category::{
    check_functorial, factor_through_coend, CoendResult, CoendVariable, DinaturalFamily, Factor, Functor, GeneratingSubcategory,
    Letter, PartialCoend, Payload, Variance, WordFunctor,
};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, right_coevaluation, IntertwinerSpace, ModuleRep};
use crate::linalg::{is_invertible, Matrix};

/// Coends of `F(d; -, -)` for each parameter object `d`, with the maps induced by the
/// basis morphisms of the parameter subcategory.
#[derive(Clone, Debug)]
pub struct WithParameters {
    params: GeneratingSubcategory,
    variance: Variance,
    coends: Vec<CoendResult>,
    transitions: Vec<Matrix>,
    natural: bool,
}

/// Mediating maps from the per-parameter coends to a target functor.
#[derive(Clone, Debug)]
pub struct Identification {
    pub mediating: Vec<Matrix>,
    pub invertible: bool,
    /// Mediating maps commute with the transitions on both sides.
    pub natural: bool,
}

impl Identification {
    pub fn passed(&self) -> bool {
        self.invertible && self.natural
    }
}

/// Slot 0 is the parameter; slots 1 and 2 are integrated over `sub`.
pub fn parameterized_coend(f: &dyn Functor, params: &GeneratingSubcategory, sub: &GeneratingSubcategory) -> Result<WithParameters> {
    let variances = f.variances();
    if variances.len() != 3 || variances[1] != Variance::Contravariant || variances[2] != Variance::Covariant {
        return Err(Error::Presentation("expected slots (parameter, contravariant, covariant)".into()));
    }
    check_functorial(f, &[params, sub, sub])?;
    let partial = PartialCoend::new(f, vec![CoendVariable { contra: 1, co: 2, sub }]);
    let carriers = params.objects().iter().map(|d| partial.carrier(&[d])).collect::<Result<Vec<_>>>()?;
    let coends: Vec<CoendResult> = carriers
        .iter()
        .map(|c| match c.payload() {
            Payload::Coend(r) => (**r).clone(),
            _ => unreachable!("partial coend carrier"),
        })
        .collect();
    let variance = variances[0];
    let mut transitions = Vec::with_capacity(params.morphisms().len());
    let mut natural = true;
    for m in params.morphisms() {
        let (from, to) = match variance {
            Variance::Covariant => (m.source, m.target),
            Variance::Contravariant => (m.target, m.source),
        };
        let t = partial.map(&[&m.matrix], &carriers[from], &carriers[to])?;
        let (cf, ct) = (&coends[from], &coends[to]);
        for (i, objs) in cf.diagonal().iter().enumerate() {
            let x = &cf.diagonal_objects(i)[0];
            let id = Matrix::identity(x.dim());
            let j = ct.block_of(objs).expect("same diagonal");
            let fm = f.map(&[&m.matrix, &id, &id], cf.carrier(i), ct.carrier(j))?;
            natural &= t.mul(cf.component(i)) == ct.component(j).mul(&fm);
        }
        transitions.push(t);
    }
    Ok(WithParameters { params: params.clone(), variance, coends, transitions, natural })
}

impl WithParameters {
    pub fn params(&self) -> &GeneratingSubcategory {
        &self.params
    }

    pub fn coends(&self) -> &[CoendResult] {
        &self.coends
    }

    pub fn dims(&self) -> Vec<usize> {
        self.coends.iter().map(CoendResult::dim).collect()
    }

    /// Transition per parameter basis morphism, in the direction of the parameter's variance.
    pub fn transitions(&self) -> &[Matrix] {
        &self.transitions
    }

    /// Transitions commute with the dinatural families.
    pub fn is_natural(&self) -> bool {
        self.natural
    }

    /// Factors `families[d]` through each coend and compares transitions with `targets`,
    /// given per parameter basis morphism in the same direction.
    pub fn identify(&self, families: &[DinaturalFamily], targets: &[Matrix]) -> Result<Identification> {
        if families.len() != self.coends.len() || targets.len() != self.transitions.len() {
            return Err(Error::Dimension("one family per parameter and one target map per morphism".into()));
        }
        let mediating = self
            .coends
            .iter()
            .zip(families)
            .map(|(c, j)| factor_through_coend(c, j))
            .collect::<Result<Vec<_>>>()?;
        let invertible = mediating.iter().all(is_invertible);
        let mut natural = true;
        for ((m, t), target) in self.params.morphisms().iter().zip(&self.transitions).zip(targets) {
            let (from, to) = match self.variance {
                Variance::Covariant => (m.source, m.target),
                Variance::Contravariant => (m.target, m.source),
            };
            natural &= mediating[to].mul(t) == target.mul(&mediating[from]);
        }
        Ok(Identification { mediating, invertible, natural })
    }
}

/// Pre-composition transitions of `Hom(-, y)` on the parameter subcategory.
pub fn representable_transitions(params: &GeneratingSubcategory, y: &ModuleRep) -> Result<(Vec<IntertwinerSpace>, Vec<Matrix>)> {
    let spaces = params.objects().iter().map(|d| hom_space(d, y)).collect::<Result<Vec<_>>>()?;
    let maps = params
        .morphisms()
        .iter()
        .map(|m| pre_compose(&spaces[m.target], &spaces[m.source], &m.matrix))
        .collect::<Result<Vec<_>>>()?;
    Ok((spaces, maps))
}

/// Comparison of the convolution `∫^u G1(- ⊗ u∨) ⊗ G2(u)` with `Hom(-, y1 ⊗ y2)`.
#[derive(Clone, Debug)]
pub struct ConvolutionReport {
    pub coend_dims: Vec<usize>,
    pub hom_dims: Vec<usize>,
    pub identification: Identification,
}

impl ConvolutionReport {
    pub fn passed(&self) -> bool {
        self.coend_dims == self.hom_dims && self.identification.passed()
    }
}

/// Convolution of two represented functors, evaluated through `G1(w ⊗ u∨) ≅ Hom(w ⊗ u∨, y1)` and
/// `G2(u) ≅ Hom(u, y2)`, over `w` in the subcategory of `g1` and `u` in that of `g2`.
/// The family sends `α ⊗ β` to `(α ⊗ β) ∘ (id_w ⊗ coev'_u)`.
pub fn convolution(g1: &LexFunctorPresentation, g2: &LexFunctorPresentation) -> Result<ConvolutionReport> {
    let missing = || Error::Presentation("convolution needs representing objects".into());
    let y1 = &g1.representing().ok_or_else(missing)?.object;
    let y2 = &g2.representing().ok_or_else(missing)?.object;
    y1.same_algebra(y2)?;
    let h = y1.algebra();
    let f = WordFunctor::new(
        h,
        vec![
            Factor::Hom(vec![Letter::Slot(0), Letter::DualSlot(2)], vec![Letter::Fixed(y1.clone())]),
            Factor::Hom(vec![Letter::Slot(1)], vec![Letter::Fixed(y2.clone())]),
        ],
        vec![Variance::Contravariant, Variance::Contravariant, Variance::Covariant],
    )?;
    let params = g1.sub();
    let p = parameterized_coend(&f, params, g2.sub())?;
    let y = y1.tensor(y2)?;
    let (spaces, targets) = representable_transitions(params, &y)?;
    let mut families = Vec::with_capacity(params.len());
    for (k, w) in params.objects().iter().enumerate() {
        let c = &p.coends()[k];
        let mut components = Vec::with_capacity(c.diagonal().len());
        for i in 0..c.diagonal().len() {
            let u = &c.diagonal_objects(i)[0];
            let Payload::Factors(parts) = c.carrier(i).payload() else { unreachable!("word functor carrier") };
            let hs: Vec<&IntertwinerSpace> = parts
                .iter()
                .map(|p| match p {
                    crate::category::FactorCarrier::Hom(s) => s,
                    _ => unreachable!("Hom factors"),
                })
                .collect();
            let lift = Matrix::identity(w.dim()).kron(&right_coevaluation(u)?);
            let mut m = Matrix::zeros(spaces[k].dim(), hs[0].dim() * hs[1].dim());
            for (a, alpha) in hs[0].basis().iter().enumerate() {
                for (b, beta) in hs[1].basis().iter().enumerate() {
                    let image = alpha.kron(beta).mul(&lift);
                    for (r, val) in spaces[k].coordinates(&image)?.into_iter().enumerate() {
                        m.set(r, a * hs[1].dim() + b, val);
                    }
                }
            }
            components.push(m);
        }
        families.push(DinaturalFamily { target_dim: spaces[k].dim(), components });
    }
    let identification = p.identify(&families, &targets)?;
    Ok(ConvolutionReport { coend_dims: p.dims(), hom_dims: spaces.iter().map(IntertwinerSpace::dim).collect(), identification })
}
