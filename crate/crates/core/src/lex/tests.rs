use proptest::prelude::*;

use super::*;
use crate::category::{vector_spaces, Carrier, ConstantFunctor, DinaturalFamily, Factor, Functor, GeneratingSubcategory, Letter, Variance, WordFunctor};
use crate::error::{Error, Result};
use crate::hopf::catalog::{by_name, catalog, module_names, named_module};
use crate::hopf::{are_isomorphic, hom_space, HopfAlgebra, ModuleRep};
use crate::linalg::{Matrix, Scalar};
use crate::lyubashenko::build_l_default;

fn named(h: &HopfAlgebra, names: &[&str]) -> Vec<ModuleRep> {
    names.iter().map(|n| named_module(h, n).unwrap()).collect()
}

fn all_named(h: &HopfAlgebra) -> GeneratingSubcategory {
    GeneratingSubcategory::new(named(h, &module_names(h))).unwrap()
}

fn hom_from(u: &ModuleRep) -> WordFunctor {
    WordFunctor::new(
        u.algebra(),
        vec![Factor::Hom(vec![Letter::Fixed(u.clone())], vec![Letter::Slot(0)])],
        vec![Variance::Covariant],
    )
    .unwrap()
}

#[test]
fn delta_property_examples() {
    let z2 = by_name("z2").unwrap();
    let reg = ModuleRep::regular(&z2);
    let r = delta_coend(&hom_from(&reg), &reg, &GeneratingSubcategory::regular(&z2)).unwrap();
    assert_eq!((r.coend_dim, r.target_dim), (2, 2));
    assert!(r.passed());

    let triv = ModuleRep::trivial(&z2);
    let k = ConstantFunctor { variances: vec![Variance::Covariant], dim: 1 };
    let r = delta_coend(&k, &triv, &GeneratingSubcategory::new(vec![triv.clone()]).unwrap()).unwrap();
    assert_eq!(r.coend_dim, 1);
    assert!(r.passed());

    let s3 = by_name("s3").unwrap();
    let forget = WordFunctor::inferred(&s3, vec![Factor::Object(vec![Letter::Slot(0)])]).unwrap();
    let r = delta_coend(&forget, &ModuleRep::regular(&s3), &GeneratingSubcategory::regular(&s3)).unwrap();
    assert_eq!(r.coend_dim, 6);
    assert!(r.passed());
}

#[test]
fn delta_property_on_catalog_pairs() {
    for h in catalog() {
        let sub = all_named(&h);
        for u in sub.objects() {
            for v in sub.objects() {
                let r = delta_coend(&hom_from(u), v, &sub).unwrap();
                assert_eq!(r.coend_dim, hom_space(u, v).unwrap().dim(), "{} {} {}", h.name(), u.name(), v.name());
                assert!(r.passed());
            }
        }
    }
}

#[test]
fn delta_rejects_objects_outside_the_span() {
    let h = by_name("sweedler").unwrap();
    let triv = ModuleRep::trivial(&h);
    let err = delta_coend(&hom_from(&triv), &triv, &GeneratingSubcategory::regular(&h)).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)));
    assert!(in_span(&named_module(&h, "p0").unwrap(), &GeneratingSubcategory::regular(&h)).unwrap());
}

#[test]
fn representify_round_trip() {
    for h in catalog() {
        let sub = all_named(&h);
        for y in sub.objects() {
            let g = LexFunctorPresentation::representable(sub.clone(), y).unwrap();
            let rep = representify(&g).unwrap();
            assert!(are_isomorphic(&rep.object, y).unwrap(), "{} {}", h.name(), y.name());
            assert!(g.clone().with_representation(rep).is_ok());
        }
    }
}

#[test]
fn representify_sums() {
    let h = by_name("s3").unwrap();
    let sub = all_named(&h);
    let [a, b] = [named_module(&h, "sign").unwrap(), named_module(&h, "std").unwrap()];
    let g = LexFunctorPresentation::representable(sub.clone(), &a)
        .unwrap()
        .direct_sum(&LexFunctorPresentation::representable(sub, &b).unwrap())
        .unwrap();
    let rep = representify(&g).unwrap();
    assert!(are_isomorphic(&rep.object, &ModuleRep::direct_sum(&h, &[a, b]).unwrap()).unwrap());
}

#[test]
fn representify_detects_non_representable() {
    let h = by_name("sweedler").unwrap();
    let sub = GeneratingSubcategory::new(named(&h, &["reg", "triv"])).unwrap();
    let hom = LexFunctorPresentation::representable(sub.clone(), &ModuleRep::regular(&h)).unwrap();
    // a skyscraper at triv, killed by every non-identity morphism
    let values = vec![0, 1];
    let action = sub
        .morphisms()
        .iter()
        .map(|m| {
            if m.source == 1 && m.target == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(values[m.source], values[m.target])
            }
        })
        .collect();
    let sky = LexFunctorPresentation::new(sub, values, action).unwrap();
    let g = hom.direct_sum(&sky).unwrap();
    assert!(matches!(representify(&g), Err(Error::NotLeftExact(_))));

    let wrong = Representation { object: ModuleRep::trivial(&h), iso: vec![Matrix::identity(1), Matrix::identity(1)] };
    let triv = LexFunctorPresentation::representable(hom.sub().clone(), &ModuleRep::trivial(&h)).unwrap();
    let doubled = Representation { iso: wrong.iso.iter().map(|m| m.scale(&Scalar::from(2))).collect(), ..wrong };
    assert!(triv.clone().with_representation(doubled).is_ok());
    let bad = Representation { object: ModuleRep::regular(&h), iso: vec![Matrix::identity(4), Matrix::identity(2)] };
    assert!(triv.with_representation(bad).is_err());
}

fn post_family(sub: &GeneratingSubcategory, a: &ModuleRep, b: &ModuleRep, f: &Matrix) -> Vec<Matrix> {
    sub.objects()
        .iter()
        .map(|x| post_compose(&hom_space(x, a).unwrap(), &hom_space(x, b).unwrap(), f).unwrap())
        .collect()
}

#[test]
fn yoneda_examples() {
    let h = by_name("z2").unwrap();
    let sub = all_named(&h);
    let reg = ModuleRep::regular(&h);
    let id = post_family(&sub, &reg, &reg, &Matrix::identity(2));
    assert!(yoneda_extract(&sub, &reg, &reg, &id).unwrap().is_identity());

    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    assert_eq!(yoneda_extract(&sub, &reg, &reg, &post_family(&sub, &reg, &reg, &swap)).unwrap(), swap);

    // source outside the subcategory, reached from the regular module
    let sum = ModuleRep::direct_sum(&h, &[reg.clone(), ModuleRep::trivial(&h)]).unwrap();
    let f = hom_space(&sum, &reg).unwrap().combine(&[Scalar::from(1), Scalar::from(-2), Scalar::from(3)]);
    assert_eq!(yoneda_extract(&sub, &sum, &reg, &post_family(&sub, &sum, &reg, &f)).unwrap(), f);

    let mut broken = id.clone();
    broken[0] = broken[0].scale(&Scalar::from(2));
    assert!(matches!(yoneda_extract(&sub, &reg, &reg, &broken), Err(Error::NotNatural(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn yoneda_recovers_random_morphisms(c in proptest::collection::vec(-5i64..=5, 4)) {
        let h = by_name("z2").unwrap();
        let sub = all_named(&h);
        let a = named_module(&h, "reg").unwrap();
        let b = ModuleRep::direct_sum(&h, &[a.clone(), ModuleRep::trivial(&h)]).unwrap();
        let space = hom_space(&a, &b).unwrap();
        let coeffs: Vec<Scalar> = c.iter().take(space.dim()).map(|&x| Scalar::from(x)).collect();
        let f = space.combine(&coeffs);
        prop_assert_eq!(yoneda_extract(&sub, &a, &b, &post_family(&sub, &a, &b, &f)).unwrap(), f);
    }
}

#[test]
fn lex_coend_examples() {
    let z2 = by_name("z2").unwrap();
    let l = build_l_default(&z2).unwrap();
    let triv = ModuleRep::trivial(&z2);
    let c = lex_coend_inner_hom(&triv, &triv, &l).unwrap();
    assert_eq!(c.dim(), 2);
    assert!(c.is_dinatural().unwrap());

    let k = by_name("ground").unwrap();
    let lk = build_l_default(&k).unwrap();
    let spaces = vector_spaces(&k, &[2, 3]).unwrap();
    let c = lex_coend_inner_hom(&spaces[0], &spaces[1], &lk).unwrap();
    assert_eq!(c.dim(), 6);
    assert!(c.is_dinatural().unwrap());
    for comp in c.components() {
        assert!(comp.is_identity());
    }
}

#[test]
fn lex_coend_own_family_gives_identity() {
    for name in ["z2", "sweedler", "double-z2"] {
        let h = by_name(name).unwrap();
        let l = build_l_default(&h).unwrap();
        let v = ModuleRep::trivial(&h);
        let c = lex_coend_inner_hom(&v, &v, &l).unwrap();
        let domain = all_named(&h);
        let m = c.mediate(&domain, &c.own_family(&domain).unwrap()).unwrap();
        assert!(m.passed());
        assert!(m.morphism.is_identity());
    }
}

#[test]
fn lex_coend_universality_on_generated_families() {
    let mut count = 0;
    for name in ["z2", "sweedler", "s3"] {
        let h = by_name(name).unwrap();
        let l = build_l_default(&h).unwrap();
        let domain = GeneratingSubcategory::new(named(&h, &["reg", "triv"])).unwrap();
        let v = named_module(&h, "sign").unwrap();
        let c = lex_coend_inner_hom(&ModuleRep::trivial(&h), &v, &l).unwrap();
        for (seed, y) in [(1u64, c.object().clone()), (2, ModuleRep::regular(&h)), (3, v.tensor(&ModuleRep::regular(&h)).unwrap()), (4, c.object().clone())] {
            let fam = c.generated_family(&domain, &y, seed).unwrap();
            let m = c.mediate(&domain, &fam).unwrap();
            assert!(m.passed(), "{name} seed {seed}");
            let again = c.mediate(&domain, &fam).unwrap();
            assert_eq!(again.morphism, m.morphism);
            count += 1;
        }
    }
    assert!(count >= 10);
}

#[test]
fn lex_coend_rejects_non_dinatural_families() {
    let h = by_name("z2").unwrap();
    let l = build_l_default(&h).unwrap();
    let triv = ModuleRep::trivial(&h);
    let reg = ModuleRep::regular(&h);
    let c = lex_coend_inner_hom(&triv, &triv, &l).unwrap();
    let domain = GeneratingSubcategory::regular(&h);
    // the identity of reg ⊗ reg∨ is natural in w but not dinatural in x
    let y = reg.tensor(&reg.dual()).unwrap();
    let fam = c.family_of(&domain, &y, &[Matrix::identity(4)]).unwrap();
    assert!(matches!(c.mediate(&domain, &fam), Err(Error::NotDinatural(_))));
}

#[test]
fn lex_coend_iterates() {
    let h = by_name("sweedler").unwrap();
    let l = build_l_default(&h).unwrap();
    let u = ModuleRep::trivial(&h);
    let mut v = ModuleRep::trivial(&h);
    let mut direct = l.module().clone();
    for _ in 0..2 {
        let c = lex_coend_inner_hom(&u, &v, &l).unwrap();
        assert_eq!(c.dim(), hom_space(&u, &direct).unwrap().dim());
        v = c.object().clone();
        direct = direct.tensor(l.module()).unwrap();
    }
}

#[test]
fn parameters_with_the_delta_property() {
    let h = by_name("z2").unwrap();
    let b = named_module(&h, "sign").unwrap();
    let params = all_named(&h);
    let sub = GeneratingSubcategory::regular(&h);
    let f = WordFunctor::new(
        &h,
        vec![Factor::Hom(vec![Letter::Slot(0)], vec![Letter::Slot(2)]), Factor::Hom(vec![Letter::Slot(1)], vec![Letter::Fixed(b.clone())])],
        vec![Variance::Contravariant, Variance::Contravariant, Variance::Covariant],
    )
    .unwrap();
    let p = parameterized_coend(&f, &params, &sub).unwrap();
    assert!(p.is_natural());
    let (spaces, targets) = representable_transitions(&params, &b).unwrap();
    assert_eq!(p.dims(), spaces.iter().map(|s| s.dim()).collect::<Vec<_>>());
    let families: Vec<DinaturalFamily> = p
        .coends()
        .iter()
        .zip(&spaces)
        .map(|(c, target)| {
            let x = &c.diagonal_objects(0)[0];
            let d = target.source();
            let (hg, hh) = (hom_space(d, x).unwrap(), hom_space(x, &b).unwrap());
            let mut m = Matrix::zeros(target.dim(), hg.dim() * hh.dim());
            for (i, g) in hg.basis().iter().enumerate() {
                for (j, k) in hh.basis().iter().enumerate() {
                    for (r, val) in target.coordinates(&k.mul(g)).unwrap().into_iter().enumerate() {
                        m.set(r, i * hh.dim() + j, val);
                    }
                }
            }
            DinaturalFamily { target_dim: target.dim(), components: vec![m] }
        })
        .collect();
    assert!(p.identify(&families, &targets).unwrap().passed());
}

#[test]
fn parameters_constant_and_inner_hom() {
    let h = by_name("z2").unwrap();
    let sub = GeneratingSubcategory::regular(&h);
    let triv = GeneratingSubcategory::new(vec![ModuleRep::trivial(&h)]).unwrap();
    let constant = WordFunctor::new(
        &h,
        vec![Factor::Object(vec![Letter::Slot(2), Letter::DualSlot(1)])],
        vec![Variance::Contravariant, Variance::Contravariant, Variance::Covariant],
    )
    .unwrap();
    let p = parameterized_coend(&constant, &triv, &sub).unwrap();
    assert!(p.transitions().iter().all(Matrix::is_identity));

    let l = build_l_default(&h).unwrap();
    let params = all_named(&h);
    let f = WordFunctor::new(
        &h,
        vec![Factor::Hom(vec![Letter::Slot(0)], vec![Letter::Slot(2), Letter::DualSlot(1)])],
        vec![Variance::Contravariant, Variance::Contravariant, Variance::Covariant],
    )
    .unwrap();
    let p = parameterized_coend(&f, &params, &sub).unwrap();
    let (spaces, targets) = representable_transitions(&params, l.module()).unwrap();
    let families: Vec<DinaturalFamily> = params
        .objects()
        .iter()
        .zip(&spaces)
        .map(|(d, target)| {
            let reg = ModuleRep::regular(&h);
            let src = hom_space(d, &reg.tensor(&reg.dual()).unwrap()).unwrap();
            let m = post_compose(&src, target, &l.iota(&reg).unwrap()).unwrap();
            DinaturalFamily { target_dim: target.dim(), components: vec![m] }
        })
        .collect();
    assert!(p.identify(&families, &targets).unwrap().passed());
}

/// Doubles every arrow, so composites are off by a factor of two.
struct Doubling(WordFunctor);

impl Functor for Doubling {
    fn variances(&self) -> Vec<Variance> {
        self.0.variances()
    }

    fn carrier(&self, objects: &[&ModuleRep]) -> Result<Carrier> {
        self.0.carrier(objects)
    }

    fn map(&self, arrows: &[&Matrix], from: &Carrier, to: &Carrier) -> Result<Matrix> {
        Ok(self.0.map(arrows, from, to)?.scale(&Scalar::from(2)))
    }
}

#[test]
fn parameters_reject_non_functors() {
    let h = by_name("z2").unwrap();
    let sub = GeneratingSubcategory::regular(&h);
    let f = WordFunctor::inferred(&h, vec![Factor::Object(vec![Letter::DualSlot(0), Letter::Slot(2), Letter::DualSlot(1)])]).unwrap();
    assert!(parameterized_coend(&Doubling(f), &sub, &sub).is_err());
}

#[test]
fn convolution_examples() {
    let z2 = by_name("z2").unwrap();
    let sub = all_named(&z2);
    for (a, b) in [("triv", "triv"), ("reg", "reg"), ("sign", "reg")] {
        let g1 = LexFunctorPresentation::representable(sub.clone(), &named_module(&z2, a).unwrap()).unwrap();
        let g2 = LexFunctorPresentation::representable(sub.clone(), &named_module(&z2, b).unwrap()).unwrap();
        let r = convolution(&g1, &g2).unwrap();
        assert!(r.passed(), "{a} {b}");
        if (a, b) == ("reg", "reg") {
            assert_eq!(r.coend_dims[sub.index_of(&ModuleRep::regular(&z2)).unwrap()], 4);
        }
    }
    let k = by_name("ground").unwrap();
    let spaces = vector_spaces(&k, &[1, 2, 3]).unwrap();
    let sub = GeneratingSubcategory::new(spaces.clone()).unwrap();
    let g1 = LexFunctorPresentation::representable(sub.clone(), &spaces[1]).unwrap();
    let g2 = LexFunctorPresentation::representable(sub, &spaces[2]).unwrap();
    let r = convolution(&g1, &g2).unwrap();
    assert!(r.passed());
    assert_eq!(r.coend_dims, vec![6, 12, 18]);
}

fn block_functor(h: &HopfAlgebra) -> WordFunctor {
    WordFunctor::inferred(h, vec![Factor::Object(vec![Letter::Slot(1), Letter::DualSlot(0), Letter::Slot(3), Letter::DualSlot(2)])]).unwrap()
}

#[test]
fn lex_fubini_on_the_genus_two_functor() {
    for name in ["z2", "sweedler", "double-z2"] {
        let h = by_name(name).unwrap();
        let sub = GeneratingSubcategory::regular(&h);
        let l = build_l_default(&h).unwrap();
        let ll = l.module().tensor(l.module()).unwrap();
        let ws = named(&h, &module_names(&h));
        let r = lex_fubini(&block_functor(&h), &sub, &sub, &ws).unwrap();
        assert!(r.passed(), "{name}");
        let expect: Vec<usize> = ws.iter().map(|w| hom_space(w, &ll).unwrap().dim()).collect();
        assert_eq!(r.u_then_x, expect, "{name}");
    }
    let z2 = by_name("z2").unwrap();
    let r = lex_fubini(&block_functor(&z2), &GeneratingSubcategory::regular(&z2), &GeneratingSubcategory::regular(&z2), &[ModuleRep::trivial(&z2)]).unwrap();
    assert_eq!(r.u_then_x, vec![4]);
}

#[test]
fn lex_fubini_without_x() {
    let h = by_name("z2").unwrap();
    let sub = GeneratingSubcategory::regular(&h);
    let f = WordFunctor::new(
        &h,
        vec![Factor::Object(vec![Letter::Slot(1), Letter::DualSlot(0)])],
        vec![Variance::Contravariant, Variance::Covariant, Variance::Contravariant, Variance::Covariant],
    )
    .unwrap();
    let ws = [ModuleRep::trivial(&h), ModuleRep::regular(&h)];
    let r = lex_fubini(&f, &sub, &sub, &ws).unwrap();
    assert!(r.passed());
    // Hom(triv, L) and Hom(reg, L) with L = triv ⊕ triv
    assert_eq!(r.joint, vec![2, 2]);
}
