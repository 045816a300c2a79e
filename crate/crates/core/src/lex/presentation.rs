use crate::category::{Functor, GeneratingSubcategory, Variance, WordFunctor};
use crate::category::{Factor, Letter};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, IntertwinerSpace, ModuleRep};
use crate::linalg::{is_invertible, solve, Matrix};

/// Coordinates of `φ ∘ b` in `dst` for each basis map `b` of `src`.
pub fn post_compose(src: &IntertwinerSpace, dst: &IntertwinerSpace, phi: &Matrix) -> Result<Matrix> {
    let mut m = Matrix::zeros(dst.dim(), src.dim());
    for (j, b) in src.basis().iter().enumerate() {
        for (i, c) in dst.coordinates(&phi.mul(b))?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// Coordinates of `b ∘ f` in `dst` for each basis map `b` of `src`.
pub fn pre_compose(src: &IntertwinerSpace, dst: &IntertwinerSpace, f: &Matrix) -> Result<Matrix> {
    let mut m = Matrix::zeros(dst.dim(), src.dim());
    for (j, b) in src.basis().iter().enumerate() {
        for (i, c) in dst.coordinates(&b.mul(f))?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// `G(x_i) ≅ Hom(x_i, y)`, each component in the coordinates of [`hom_space`].
#[derive(Clone, Debug)]
pub struct Representation {
    pub object: ModuleRep,
    pub iso: Vec<Matrix>,
}

/// A functor `C^op -> Vect` given on a full generating subcategory:
/// the dimension of `G(x)` per object and `G(f): G(b) -> G(a)` per basis morphism `f: a -> b`.
#[derive(Clone, Debug)]
pub struct LexFunctorPresentation {
    sub: GeneratingSubcategory,
    values: Vec<usize>,
    action: Vec<Matrix>,
    representing: Option<Representation>,
}

impl LexFunctorPresentation {
    pub fn new(sub: GeneratingSubcategory, values: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        if !sub.is_full() {
            return Err(Error::Presentation("presentation needs a full subcategory".into()));
        }
        if values.len() != sub.len() || action.len() != sub.morphisms().len() {
            return Err(Error::Dimension("one value per object and one matrix per basis morphism".into()));
        }
        for (f, a) in sub.morphisms().iter().zip(&action) {
            if a.shape() != (values[f.source], values[f.target]) {
                return Err(Error::Dimension(format!("action of a morphism has shape {:?}", a.shape())));
            }
        }
        let g = LexFunctorPresentation { sub, values, action, representing: None };
        g.check_functorial()?;
        Ok(g)
    }

    /// Presentation of a one-slot contravariant functor.
    pub fn from_functor(sub: GeneratingSubcategory, f: &dyn Functor) -> Result<Self> {
        if f.variances() != [Variance::Contravariant] {
            return Err(Error::Presentation("expected a single contravariant slot".into()));
        }
        let carriers = sub.objects().iter().map(|x| f.carrier(&[x])).collect::<Result<Vec<_>>>()?;
        let values = carriers.iter().map(|c| c.dim()).collect();
        let action = sub
            .morphisms()
            .iter()
            .map(|m| f.map(&[&m.matrix], &carriers[m.target], &carriers[m.source]))
            .collect::<Result<Vec<_>>>()?;
        LexFunctorPresentation::new(sub, values, action)
    }

    /// `Hom(-, y)`, with its identity representation.
    pub fn representable(sub: GeneratingSubcategory, y: &ModuleRep) -> Result<Self> {
        let h = y.algebra().clone();
        let f = WordFunctor::new(
            &h,
            vec![Factor::Hom(vec![Letter::Slot(0)], vec![Letter::Fixed(y.clone())])],
            vec![Variance::Contravariant],
        )?;
        let g = LexFunctorPresentation::from_functor(sub, &f)?;
        let iso = g.values.iter().map(|&d| Matrix::identity(d)).collect();
        g.with_representation(Representation { object: y.clone(), iso })
    }

    /// Pointwise direct sum; both must be presented on the same subcategory.
    pub fn direct_sum(&self, other: &LexFunctorPresentation) -> Result<Self> {
        if self.sub.objects() != other.sub.objects() || self.sub.morphisms().len() != other.sub.morphisms().len() {
            return Err(Error::Presentation("direct sum needs a common subcategory".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        let action = self.action.iter().zip(&other.action).map(|(a, b)| Matrix::block_diag(&[a, b])).collect();
        LexFunctorPresentation::new(self.sub.clone(), values, action)
    }

    pub fn sub(&self) -> &GeneratingSubcategory {
        &self.sub
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn representing(&self) -> Option<&Representation> {
        self.representing.as_ref()
    }

    /// Attaches a representation after checking it is a natural isomorphism.
    pub fn with_representation(mut self, rep: Representation) -> Result<Self> {
        self.check_representation(&rep)?;
        self.representing = Some(rep);
        Ok(self)
    }

    /// `G(m)` for an intertwiner `m: x_a -> x_b`, by linearity in the basis morphisms.
    pub fn morphism_action(&self, a: usize, b: usize, m: &Matrix) -> Result<Matrix> {
        let block: Vec<usize> = (0..self.sub.morphisms().len())
            .filter(|&k| self.sub.morphisms()[k].source == a && self.sub.morphisms()[k].target == b)
            .collect();
        let mut out = Matrix::zeros(self.values[a], self.values[b]);
        if block.is_empty() {
            return if m.is_zero() {
                Ok(out)
            } else {
                Err(Error::NotNatural("morphism is not in the span of the basis".into()))
            };
        }
        let cols: Vec<Matrix> = block.iter().map(|&k| self.sub.morphisms()[k].matrix.vectorize()).collect();
        let basis = Matrix::hstack(&cols.iter().collect::<Vec<_>>())?;
        let coeffs = solve(&basis, &m.vectorize()).map_err(|_| Error::NotNatural("morphism is not in the span of the basis".into()))?;
        for (i, &k) in block.iter().enumerate() {
            let c = coeffs.get(i, 0);
            if !c.is_zero() {
                out = &out + &self.action[k].scale(c);
            }
        }
        Ok(out)
    }

    fn check_functorial(&self) -> Result<()> {
        for (i, x) in self.sub.objects().iter().enumerate() {
            if !self.morphism_action(i, i, &Matrix::identity(x.dim()))?.is_identity() {
                return Err(Error::Presentation(format!("G(id) is not the identity at object {i}")));
            }
        }
        for p in self.sub.morphisms() {
            for (kq, q) in self.sub.morphisms().iter().enumerate() {
                if q.source != p.target {
                    continue;
                }
                let kp = self.index(p);
                let lhs = self.morphism_action(p.source, q.target, &q.matrix.mul(&p.matrix))?;
                if lhs != self.action[kp].mul(&self.action[kq]) {
                    return Err(Error::Presentation("G(q∘p) differs from G(p)G(q)".into()));
                }
            }
        }
        Ok(())
    }

    fn index(&self, p: &crate::category::BasisMorphism) -> usize {
        self.sub
            .morphisms()
            .iter()
            .position(|m| std::ptr::eq(m, p))
            .expect("morphism of this subcategory")
    }

    fn check_representation(&self, rep: &Representation) -> Result<()> {
        if rep.iso.len() != self.sub.len() {
            return Err(Error::Dimension("one isomorphism component per object".into()));
        }
        let spaces = self.sub.objects().iter().map(|x| hom_space(x, &rep.object)).collect::<Result<Vec<_>>>()?;
        for (i, (c, s)) in rep.iso.iter().zip(&spaces).enumerate() {
            if c.shape() != (s.dim(), self.values[i]) || !is_invertible(c) {
                return Err(Error::NotNatural(format!("component {i} is not invertible")));
            }
        }
        for (f, act) in self.sub.morphisms().iter().zip(&self.action) {
            let pre = pre_compose(&spaces[f.target], &spaces[f.source], &f.matrix)?;
            if rep.iso[f.source].mul(act) != pre.mul(&rep.iso[f.target]) {
                return Err(Error::NotNatural("representation does not commute with a basis morphism".into()));
            }
        }
        Ok(())
    }
}

/// Right multiplication by `e_i` on the regular module.
fn right_translation(h: &crate::hopf::HopfAlgebra, i: usize) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        for (k, c) in h.mult_terms(j, i) {
            m.set(*k, j, c.clone());
        }
    }
    m
}

/// `a ↦ a v`, an intertwiner from the regular module to `x`.
fn orbit_map(x: &ModuleRep, v: usize) -> Matrix {
    let n = x.algebra().dim();
    let mut m = Matrix::zeros(x.dim(), n);
    for k in 0..n {
        for r in 0..x.dim() {
            m.set(r, k, x.basis_action(k).get(r, v).clone());
        }
    }
    m
}

/// `y = G(regular)` with `a` acting by `G(right translation by a)`, and the isomorphism
/// `G(x) -> Hom(x, y)`, `w ↦ (v ↦ G(a ↦ a v) w)`, verified on every object and basis morphism.
pub fn representify(g: &LexFunctorPresentation) -> Result<Representation> {
    let h = g.sub.algebra().ok_or_else(|| Error::Presentation("empty subcategory".into()))?.clone();
    let r = g
        .sub
        .index_of(&ModuleRep::regular(&h))
        .ok_or_else(|| Error::Unsupported("presentation must contain the regular module".into()))?;
    let action = (0..h.dim())
        .map(|i| g.morphism_action(r, r, &right_translation(&h, i)))
        .collect::<Result<Vec<_>>>()?;
    let y = ModuleRep::checked(&h, "y", action)
        .map_err(|e| Error::NotLeftExact(format!("G(regular) is not a module under right translation: {e}")))?;
    let mut iso = Vec::with_capacity(g.sub.len());
    for (i, x) in g.sub.objects().iter().enumerate() {
        let space = hom_space(x, &y)?;
        let images = (0..x.dim()).map(|v| g.morphism_action(r, i, &orbit_map(x, v))).collect::<Result<Vec<_>>>()?;
        let mut c = Matrix::zeros(space.dim(), g.values[i]);
        for w in 0..g.values[i] {
            let mut f = Matrix::zeros(y.dim(), x.dim());
            for (v, img) in images.iter().enumerate() {
                for row in 0..y.dim() {
                    f.set(row, v, img.get(row, w).clone());
                }
            }
            let coords = space
                .coordinates(&f)
                .map_err(|_| Error::NotLeftExact(format!("G(x) does not land in Hom(x, y) at object {i}")))?;
            for (k, val) in coords.into_iter().enumerate() {
                c.set(k, w, val);
            }
        }
        iso.push(c);
    }
    let rep = Representation { object: y, iso };
    g.check_representation(&rep).map_err(|e| Error::NotLeftExact(e.to_string()))?;
    Ok(rep)
}

/// The morphism `a -> b` behind a natural family `Hom(-, a) -> Hom(-, b)`.
///
/// `components[i]` maps coordinates of `Hom(x_i, a)` to those of `Hom(x_i, b)`.
/// The family is evaluated on `id_a` when `a` is a generating object, otherwise on
/// the maps `h ↦ h v` out of the regular module.
pub fn yoneda_extract(sub: &GeneratingSubcategory, a: &ModuleRep, b: &ModuleRep, components: &[Matrix]) -> Result<Matrix> {
    if components.len() != sub.len() {
        return Err(Error::Dimension("one component per object".into()));
    }
    let src = sub.objects().iter().map(|x| hom_space(x, a)).collect::<Result<Vec<_>>>()?;
    let dst = sub.objects().iter().map(|x| hom_space(x, b)).collect::<Result<Vec<_>>>()?;
    for (i, c) in components.iter().enumerate() {
        if c.shape() != (dst[i].dim(), src[i].dim()) {
            return Err(Error::Dimension(format!("component {i} has shape {:?}", c.shape())));
        }
    }
    for f in sub.morphisms() {
        let lhs = components[f.source].mul(&pre_compose(&src[f.target], &src[f.source], &f.matrix)?);
        let rhs = pre_compose(&dst[f.target], &dst[f.source], &f.matrix)?.mul(&components[f.target]);
        if lhs != rhs {
            return Err(Error::NotNatural("family does not commute with a basis morphism".into()));
        }
    }
    let apply = |i: usize, m: &Matrix| -> Result<Matrix> {
        let coords = components[i].apply(&src[i].coordinates(m)?);
        Ok(dst[i].combine(&coords))
    };
    let m = if let Some(i) = sub.index_of(a) {
        apply(i, &Matrix::identity(a.dim()))?
    } else if let Some(r) = sub.index_of(&ModuleRep::regular(a.algebra())) {
        let unit = Matrix::column_vector(a.algebra().unit().to_vec());
        let cols = (0..a.dim()).map(|v| Ok(apply(r, &orbit_map(a, v))?.mul(&unit))).collect::<Result<Vec<_>>>()?;
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())?
    } else {
        return Err(Error::Unsupported("source is neither a generating object nor reachable from the regular module".into()));
    };
    for i in 0..sub.len() {
        if post_compose(&src[i], &dst[i], &m)? != components[i] {
            return Err(Error::NotNatural("family is not post-composition with a morphism".into()));
        }
    }
    Ok(m)
}
