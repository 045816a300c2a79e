use super::presentation::pre_compose;
use crate::category::{coend, factor_through_coend, Carrier, DinaturalFamily, FactorCarrier, Functor, GeneratingSubcategory, Payload, Variance};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, IntertwinerSpace, ModuleRep};
use crate::linalg::{is_invertible, solve, Matrix};

/// `(c, d) ↦ G(d) ⊗ Hom(c, b)`.
struct DeltaIntegrand<'a> {
    g: &'a dyn Functor,
    b: ModuleRep,
}

fn split(c: &Carrier) -> Result<(&Carrier, &IntertwinerSpace)> {
    if let Payload::Tensor(parts) = c.payload() {
        if let [g, hc] = parts.as_slice() {
            if let Payload::Factors(f) = hc.payload() {
                if let [FactorCarrier::Hom(hs)] = f.as_slice() {
                    return Ok((g, hs));
                }
            }
        }
    }
    Err(Error::Presentation("carrier was not produced by the delta integrand".into()))
}

impl Functor for DeltaIntegrand<'_> {
    fn variances(&self) -> Vec<Variance> {
        vec![Variance::Contravariant, Variance::Covariant]
    }

    fn carrier(&self, objects: &[&ModuleRep]) -> Result<Carrier> {
        let [c, d] = objects else {
            return Err(Error::Presentation("expected two objects".into()));
        };
        let gd = self.g.carrier(&[d])?;
        let hs = hom_space(c, &self.b)?;
        let hc = Carrier::new(hs.dim(), None, Payload::Factors(vec![FactorCarrier::Hom(hs)]));
        Ok(Carrier::new(gd.dim() * hc.dim(), None, Payload::Tensor(vec![gd, hc])))
    }

    fn map(&self, arrows: &[&Matrix], from: &Carrier, to: &Carrier) -> Result<Matrix> {
        let (gf, hf) = split(from)?;
        let (gt, ht) = split(to)?;
        let g = self.g.map(&arrows[1..2], gf, gt)?;
        Ok(g.kron(&pre_compose(hf, ht, arrows[0])?))
    }
}

/// Coend of `G(d) ⊗ Hom(d, b)` against `G(b)`.
#[derive(Clone, Debug)]
pub struct DeltaReport {
    pub coend_dim: usize,
    pub target_dim: usize,
    /// Mediating map of the family `w ⊗ f ↦ G(f) w`.
    pub mediating: Matrix,
    pub invertible: bool,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.coend_dim == self.target_dim && self.invertible
    }
}

/// Whether `id_b` is a sum of maps factoring through the generating objects.
pub fn in_span(b: &ModuleRep, sub: &GeneratingSubcategory) -> Result<bool> {
    let mut composites = Vec::new();
    for x in sub.objects() {
        let into = hom_space(b, x)?;
        let back = hom_space(x, b)?;
        for f in into.basis() {
            for g in back.basis() {
                composites.push(g.mul(f).vectorize());
            }
        }
    }
    if composites.is_empty() {
        return Ok(b.dim() == 0);
    }
    let span = Matrix::hstack(&composites.iter().collect::<Vec<_>>())?;
    Ok(solve(&span, &Matrix::identity(b.dim()).vectorize()).is_ok())
}

/// `∫^d G(d) ⊗ Hom(d, b) ≅ G(b)` for a covariant one-slot functor `G`.
pub fn delta_coend(g: &dyn Functor, b: &ModuleRep, sub: &GeneratingSubcategory) -> Result<DeltaReport> {
    if g.variances() != [Variance::Covariant] {
        return Err(Error::Presentation("expected a single covariant slot".into()));
    }
    if !in_span(b, sub)? {
        return Err(Error::Unsupported(format!("{} is not a retract of sums of generating objects", b.name())));
    }
    let integrand = DeltaIntegrand { g, b: b.clone() };
    let c = coend(sub, &integrand)?;
    let gb = g.carrier(&[b])?;
    let mut components = Vec::with_capacity(c.diagonal().len());
    for i in 0..c.diagonal().len() {
        let (gd, hs) = split(c.carrier(i))?;
        let mut m = Matrix::zeros(gb.dim(), gd.dim() * hs.dim());
        for (j, f) in hs.basis().iter().enumerate() {
            let gf = g.map(&[f], gd, &gb)?;
            for w in 0..gd.dim() {
                for r in 0..gb.dim() {
                    m.set(r, w * hs.dim() + j, gf.get(r, w).clone());
                }
            }
        }
        components.push(m);
    }
    let mediating = factor_through_coend(&c, &DinaturalFamily { target_dim: gb.dim(), components })?;
    let invertible = is_invertible(&mediating);
    Ok(DeltaReport { coend_dim: c.dim(), target_dim: gb.dim(), mediating, invertible })
}
