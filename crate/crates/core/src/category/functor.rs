use super::coend::CoendResult;
use super::subcategory::{BasisMorphism, GeneratingSubcategory};
use crate::error::{Error, Result};
use crate::hopf::{hom_space, HopfAlgebra, IntertwinerSpace, ModuleRep};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// Value of a functor at a tuple of objects.
#[derive(Clone, Debug)]
pub struct Carrier {
    dim: usize,
    module: Option<ModuleRep>,
    payload: Payload,
}

#[derive(Clone, Debug)]
pub enum Payload {
    Plain,
    Factors(Vec<FactorCarrier>),
    Coend(Box<CoendResult>),
    /// Carriers of the tensor factors of a product functor.
    Tensor(Vec<Carrier>),
}

#[derive(Clone, Debug)]
pub enum FactorCarrier {
    Hom(IntertwinerSpace),
    Object(ModuleRep),
}

impl FactorCarrier {
    pub fn dim(&self) -> usize {
        match self {
            FactorCarrier::Hom(h) => h.dim(),
            FactorCarrier::Object(m) => m.dim(),
        }
    }
}

impl Carrier {
    pub fn plain(dim: usize) -> Self {
        Carrier { dim, module: None, payload: Payload::Plain }
    }

    pub fn of_module(m: ModuleRep) -> Self {
        Carrier { dim: m.dim(), module: Some(m), payload: Payload::Plain }
    }

    pub fn new(dim: usize, module: Option<ModuleRep>, payload: Payload) -> Self {
        Carrier { dim, module, payload }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn module(&self) -> Option<&ModuleRep> {
        self.module.as_ref()
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }
}

/// A multi-variable functor on module categories, presented by its values on
/// objects and on morphisms.
///
/// `map(arrows, from, to)` returns `F(arrows): F(from) -> F(to)`. For a
/// covariant slot the arrow runs `from[k] -> to[k]`; for a contravariant slot it
/// runs `to[k] -> from[k]`.
pub trait Functor {
    fn variances(&self) -> Vec<Variance>;
    fn carrier(&self, objects: &[&ModuleRep]) -> Result<Carrier>;
    fn map(&self, arrows: &[&Matrix], from: &Carrier, to: &Carrier) -> Result<Matrix>;
}

/// Letter of a tensor word.
#[derive(Clone, Debug)]
pub enum Letter {
    Fixed(ModuleRep),
    Slot(usize),
    DualSlot(usize),
}

#[derive(Clone, Debug)]
pub enum Factor {
    /// `Hom_H(A, B)` for tensor words `A`, `B`.
    Hom(Vec<Letter>, Vec<Letter>),
    /// The module `A` itself.
    Object(Vec<Letter>),
}

/// Tensor product of factors, each a tensor word or a Hom space between tensor words.
#[derive(Clone, Debug)]
pub struct WordFunctor {
    algebra: HopfAlgebra,
    factors: Vec<Factor>,
    variances: Vec<Variance>,
}

impl WordFunctor {
    /// Checks every slot occurrence against `variances`.
    pub fn new(algebra: &HopfAlgebra, factors: Vec<Factor>, variances: Vec<Variance>) -> Result<Self> {
        for (slot, v) in occurrences(&factors) {
            match variances.get(slot) {
                None => return Err(Error::Presentation(format!("slot {slot} has no declared variance"))),
                Some(d) if *d != v => {
                    return Err(Error::Presentation(format!("slot {slot} occurs with both variances")));
                }
                _ => {}
            }
        }
        for f in &factors {
            let (Factor::Hom(a, _) | Factor::Object(a)) = f;
            let b = match f {
                Factor::Hom(_, b) => b.as_slice(),
                Factor::Object(_) => &[],
            };
            for l in a.iter().chain(b) {
                if let Letter::Fixed(m) = l {
                    if m.algebra() != algebra {
                        return Err(Error::AlgebraMismatch);
                    }
                }
            }
        }
        Ok(WordFunctor { algebra: algebra.clone(), factors, variances })
    }

    /// Variances read off from the slot occurrences; every slot below the maximum must occur.
    pub fn inferred(algebra: &HopfAlgebra, factors: Vec<Factor>) -> Result<Self> {
        let occ = occurrences(&factors);
        let n = occ.iter().map(|(s, _)| s + 1).max().unwrap_or(0);
        let mut variances = Vec::with_capacity(n);
        for slot in 0..n {
            match occ.iter().find(|(s, _)| *s == slot) {
                Some((_, v)) => variances.push(*v),
                None => return Err(Error::Presentation(format!("slot {slot} does not occur"))),
            }
        }
        WordFunctor::new(algebra, factors, variances)
    }

    /// `(c, d) ↦ d ⊗ c∨`.
    pub fn inner_hom(h: &HopfAlgebra) -> Self {
        WordFunctor::inferred(h, vec![Factor::Object(vec![Letter::Slot(1), Letter::DualSlot(0)])]).expect("valid")
    }

    /// `(c, d) ↦ c∨ ⊗ d`.
    pub fn inner_hom_left(h: &HopfAlgebra) -> Self {
        WordFunctor::inferred(h, vec![Factor::Object(vec![Letter::DualSlot(0), Letter::Slot(1)])]).expect("valid")
    }

    /// `(c, d) ↦ Hom_H(c, d)`.
    pub fn hom(h: &HopfAlgebra) -> Self {
        WordFunctor::inferred(h, vec![Factor::Hom(vec![Letter::Slot(0)], vec![Letter::Slot(1)])]).expect("valid")
    }

    pub fn algebra(&self) -> &HopfAlgebra {
        &self.algebra
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    fn word_module(&self, word: &[Letter], objects: &[&ModuleRep]) -> Result<ModuleRep> {
        let parts = self.word_parts(word, objects)?;
        ModuleRep::tensor_all(&self.algebra, &parts)
    }

    fn word_parts(&self, word: &[Letter], objects: &[&ModuleRep]) -> Result<Vec<ModuleRep>> {
        word.iter()
            .map(|l| {
                let get = |k: usize| {
                    objects
                        .get(k)
                        .copied()
                        .ok_or_else(|| Error::Presentation(format!("no object for slot {k}")))
                };
                Ok(match l {
                    Letter::Fixed(m) => m.clone(),
                    Letter::Slot(k) => get(*k)?.clone(),
                    Letter::DualSlot(k) => get(*k)?.dual(),
                })
            })
            .collect()
    }
}

fn occurrences(factors: &[Factor]) -> Vec<(usize, Variance)> {
    use Variance::*;
    let mut out = Vec::new();
    let mut scan = |word: &[Letter], flipped: bool| {
        for l in word {
            match (l, flipped) {
                (Letter::Slot(k), false) | (Letter::DualSlot(k), true) => out.push((*k, Covariant)),
                (Letter::Slot(k), true) | (Letter::DualSlot(k), false) => out.push((*k, Contravariant)),
                (Letter::Fixed(_), _) => {}
            }
        }
    };
    for f in factors {
        match f {
            Factor::Hom(a, b) => {
                scan(a, true);
                scan(b, false);
            }
            Factor::Object(a) => scan(a, false),
        }
    }
    out
}

/// Kronecker product of the letter maps: identity on fixed letters, `f` on a slot, `fᵀ` on a dual slot.
fn word_map(word: &[Letter], arrows: &[&Matrix]) -> Result<Matrix> {
    let mut mats = Vec::with_capacity(word.len());
    for l in word {
        mats.push(match l {
            Letter::Fixed(m) => Matrix::identity(m.dim()),
            Letter::Slot(k) => arrow(arrows, *k)?.clone(),
            Letter::DualSlot(k) => arrow(arrows, *k)?.transpose(),
        });
    }
    let refs: Vec<&Matrix> = mats.iter().collect();
    Ok(Matrix::kron_all(&refs))
}

fn arrow<'a>(arrows: &[&'a Matrix], k: usize) -> Result<&'a Matrix> {
    arrows.get(k).copied().ok_or_else(|| Error::Presentation(format!("no arrow for slot {k}")))
}

impl Functor for WordFunctor {
    fn variances(&self) -> Vec<Variance> {
        self.variances.clone()
    }

    fn carrier(&self, objects: &[&ModuleRep]) -> Result<Carrier> {
        let mut parts = Vec::with_capacity(self.factors.len());
        let mut all_objects = Vec::new();
        for f in &self.factors {
            match f {
                Factor::Hom(a, b) => {
                    let am = self.word_module(a, objects)?;
                    let bm = self.word_module(b, objects)?;
                    parts.push(FactorCarrier::Hom(hom_space(&am, &bm)?));
                }
                Factor::Object(a) => {
                    let m = self.word_module(a, objects)?;
                    all_objects.extend(self.word_parts(a, objects)?);
                    parts.push(FactorCarrier::Object(m));
                }
            }
        }
        let dim = parts.iter().map(FactorCarrier::dim).product();
        let module = if parts.iter().all(|p| matches!(p, FactorCarrier::Object(_))) {
            Some(ModuleRep::tensor_all(&self.algebra, &all_objects)?)
        } else {
            None
        };
        Ok(Carrier::new(dim, module, Payload::Factors(parts)))
    }

    fn map(&self, arrows: &[&Matrix], from: &Carrier, to: &Carrier) -> Result<Matrix> {
        let (Payload::Factors(src), Payload::Factors(dst)) = (from.payload(), to.payload()) else {
            return Err(Error::Presentation("carrier was not produced by this functor".into()));
        };
        let mut mats = Vec::with_capacity(self.factors.len());
        for ((f, s), t) in self.factors.iter().zip(src).zip(dst) {
            match (f, s, t) {
                (Factor::Object(a), FactorCarrier::Object(_), FactorCarrier::Object(_)) => {
                    mats.push(word_map(a, arrows)?);
                }
                (Factor::Hom(a, b), FactorCarrier::Hom(sh), FactorCarrier::Hom(th)) => {
                    let am = word_map(a, arrows)?;
                    let bm = word_map(b, arrows)?;
                    let mut m = Matrix::zeros(th.dim(), sh.dim());
                    for (j, h) in sh.basis().iter().enumerate() {
                        let image = bm.mul(h).mul(&am);
                        for (i, c) in th.coordinates(&image)?.into_iter().enumerate() {
                            m.set(i, j, c);
                        }
                    }
                    mats.push(m);
                }
                _ => return Err(Error::Presentation("carrier does not match the functor".into())),
            }
        }
        let refs: Vec<&Matrix> = mats.iter().collect();
        Ok(Matrix::kron_all(&refs))
    }
}

/// A functor constant at `k` with every morphism sent to the identity.
///
/// Only a functor on subcategories whose Hom bases consist of isomorphisms
/// compatible with composition; used with one-object subcategories `End = k·id`.
#[derive(Clone, Debug)]
pub struct ConstantFunctor {
    pub variances: Vec<Variance>,
    pub dim: usize,
}

impl Functor for ConstantFunctor {
    fn variances(&self) -> Vec<Variance> {
        self.variances.clone()
    }

    fn carrier(&self, _objects: &[&ModuleRep]) -> Result<Carrier> {
        Ok(Carrier::plain(self.dim))
    }

    fn map(&self, _arrows: &[&Matrix], _from: &Carrier, _to: &Carrier) -> Result<Matrix> {
        Ok(Matrix::identity(self.dim))
    }
}

/// Checks `F(q∘p) = F(q)F(p)` (or `F(p)F(q)` for contravariant slots) on every
/// composable pair of basis morphisms in each slot, and that arrows in
/// different slots commute, with all other slots held at their first object.
pub fn check_functorial(f: &dyn Functor, subs: &[&GeneratingSubcategory]) -> Result<()> {
    let variances = f.variances();
    if subs.len() != variances.len() {
        return Err(Error::Presentation(format!(
            "{} slots but {} subcategories",
            variances.len(),
            subs.len()
        )));
    }
    let base: Vec<usize> = vec![0; subs.len()];
    let carrier = |idx: &[usize]| -> Result<Carrier> {
        let objs: Vec<&ModuleRep> = idx.iter().zip(subs).map(|(&i, s)| s.object(i)).collect();
        f.carrier(&objs)
    };
    let identities = |idx: &[usize]| -> Vec<Matrix> {
        idx.iter().zip(subs).map(|(&i, s)| Matrix::identity(s.object(i).dim())).collect()
    };
    // Single-slot maps: returns F applied to `m` in slot k between the configurations
    // with slot k at `src` and at `dst` (in the functor's direction).
    let apply = |k: usize, m: &Matrix, from_obj: usize, to_obj: usize, cache: &mut Vec<(Vec<usize>, Carrier)>| -> Result<Matrix> {
        let mut fi = base.clone();
        fi[k] = from_obj;
        let mut ti = base.clone();
        ti[k] = to_obj;
        for key in [&fi, &ti] {
            if !cache.iter().any(|(c, _)| c == key) {
                cache.push((key.clone(), carrier(key)?));
            }
        }
        let get = |key: &Vec<usize>| cache.iter().find(|(c, _)| c == key).map(|(_, v)| v).expect("cached");
        let ids = identities(&base);
        let mut arrows: Vec<&Matrix> = ids.iter().collect();
        arrows[k] = m;
        f.map(&arrows, get(&fi), get(&ti))
    };
    let mut cache = Vec::new();
    for (k, sub) in subs.iter().enumerate() {
        let mor = sub.morphisms();
        for p in mor {
            for q in mor.iter().filter(|q| q.source == p.target) {
                let qp = q.matrix.mul(&p.matrix);
                let ok = match variances[k] {
                    Variance::Covariant => {
                        let fp = apply(k, &p.matrix, p.source, p.target, &mut cache)?;
                        let fq = apply(k, &q.matrix, q.source, q.target, &mut cache)?;
                        apply(k, &qp, p.source, q.target, &mut cache)? == fq.mul(&fp)
                    }
                    Variance::Contravariant => {
                        let fp = apply(k, &p.matrix, p.target, p.source, &mut cache)?;
                        let fq = apply(k, &q.matrix, q.target, q.source, &mut cache)?;
                        apply(k, &qp, q.target, p.source, &mut cache)? == fp.mul(&fq)
                    }
                };
                if !ok {
                    return Err(Error::Presentation(format!("functoriality fails in slot {k}")));
                }
            }
        }
        let first = &subs[k].object(0);
        let id = Matrix::identity(first.dim());
        let one = apply(k, &id, 0, 0, &mut cache)?;
        if !one.is_identity() {
            return Err(Error::Presentation(format!("identity not preserved in slot {k}")));
        }
    }
    check_interchange(f, subs, &variances)
}

fn check_interchange(f: &dyn Functor, subs: &[&GeneratingSubcategory], variances: &[Variance]) -> Result<()> {
    let n = subs.len();
    // Endpoints of a morphism in the functor's direction.
    let ends = |m: &BasisMorphism, v: Variance| match v {
        Variance::Covariant => (m.source, m.target),
        Variance::Contravariant => (m.target, m.source),
    };
    for j in 0..n {
        for k in (j + 1)..n {
            for p in subs[j].morphisms() {
                for q in subs[k].morphisms() {
                    let (p0, p1) = ends(p, variances[j]);
                    let (q0, q1) = ends(q, variances[k]);
                    let objects = |a: usize, b: usize| -> Vec<usize> {
                        (0..n).map(|s| if s == j { a } else if s == k { b } else { 0 }).collect()
                    };
                    let carrier = |idx: &[usize]| -> Result<Carrier> {
                        let objs: Vec<&ModuleRep> = idx.iter().zip(subs).map(|(&i, s)| s.object(i)).collect();
                        f.carrier(&objs)
                    };
                    let arrows = |a: usize, b: usize, pj: bool, qk: bool| -> Vec<Matrix> {
                        let idx = objects(a, b);
                        let mut out: Vec<Matrix> =
                            idx.iter().zip(subs).map(|(&i, s)| Matrix::identity(s.object(i).dim())).collect();
                        if pj {
                            out[j] = p.matrix.clone();
                        }
                        if qk {
                            out[k] = q.matrix.clone();
                        }
                        out
                    };
                    let c00 = carrier(&objects(p0, q0))?;
                    let c10 = carrier(&objects(p1, q0))?;
                    let c01 = carrier(&objects(p0, q1))?;
                    let c11 = carrier(&objects(p1, q1))?;
                    let apply = |a: Vec<Matrix>, from: &Carrier, to: &Carrier| -> Result<Matrix> {
                        let refs: Vec<&Matrix> = a.iter().collect();
                        f.map(&refs, from, to)
                    };
                    let lhs = apply(arrows(p1, q0, false, true), &c10, &c11)?.mul(&apply(arrows(p0, q0, true, false), &c00, &c10)?);
                    let rhs = apply(arrows(p0, q1, true, false), &c01, &c11)?.mul(&apply(arrows(p0, q0, false, true), &c00, &c01)?);
                    if lhs != rhs {
                        return Err(Error::Presentation(format!("slots {j} and {k} do not commute")));
                    }
                }
            }
        }
    }
    Ok(())
}
