use super::*;
use crate::category::{end, end_from_coend, factor_through_end, GeneratingSubcategory, WordFunctor};
use crate::error::Error;
use crate::hopf::catalog::{by_name, catalog, module_names, named_module, simple_modules};
use crate::hopf::{are_isomorphic, hom_space, is_intertwiner, HopfAlgebra, ModuleRep};
use crate::linalg::{is_invertible, rank, Matrix};

#[test]
fn dimension_of_l_is_dimension_of_h() {
    for h in catalog() {
        let l = build_l_default(&h).unwrap();
        assert_eq!(l.dim(), h.dim(), "{}", h.name());
        assert!(l.coend().is_dinatural());
        assert_eq!(l.coend().joint_rank(), l.dim());
        let coad = coadjoint_module(&h, Ordering::ObjectDual).unwrap();
        assert!(is_intertwiner(l.coadjoint_iso(), l.module(), &coad));
        let reg = ModuleRep::regular(&h);
        assert_eq!(&l.iota(&reg).unwrap(), l.coend().component(0));
    }
}

#[test]
fn small_cases_of_l() {
    let k = by_name("ground").unwrap();
    let l = build_l_default(&k).unwrap();
    assert_eq!(l.module(), &ModuleRep::trivial(&k).with_name("L"));
    assert!(l.coadjoint_iso().is_identity());

    let z2 = by_name("z2").unwrap();
    let l = build_l_default(&z2).unwrap();
    let triv = ModuleRep::trivial(&z2);
    assert!(are_isomorphic(l.module(), &ModuleRep::direct_sum(&z2, &[triv.clone(), triv]).unwrap()).unwrap());
    assert_eq!(l.coadjoint_iso().shape(), (2, 2));

    let s3 = by_name("s3").unwrap();
    assert!(is_invertible(build_l_default(&s3).unwrap().coadjoint_iso()));
}

#[test]
fn semisimple_decomposition() {
    for name in ["z2", "s3", "double-z2"] {
        let h = by_name(name).unwrap();
        let l = build_l_default(&h).unwrap();
        let simples = simple_modules(&h).unwrap();
        let iotas: Vec<Matrix> = simples.iter().map(|s| l.iota(s).unwrap()).collect();
        for (s, i) in simples.iter().zip(&iotas) {
            assert_eq!(rank(i), s.dim() * s.dim());
        }
        let all = Matrix::hstack(&iotas.iter().collect::<Vec<_>>()).unwrap();
        assert_eq!(rank(&all), l.dim());
        // multiplicity of each simple in L matches that in ⊕ S ⊗ S∨
        let sum = ModuleRep::direct_sum(&h, &simples.iter().map(|s| s.tensor(&s.dual()).unwrap()).collect::<Vec<_>>()).unwrap();
        for t in &simples {
            assert_eq!(hom_space(t, l.module()).unwrap().dim(), hom_space(t, &sum).unwrap().dim());
        }
    }
}

#[test]
fn orderings_are_isomorphic() {
    for name in ["z2", "sweedler", "s3"] {
        let h = by_name(name).unwrap();
        let sub = GeneratingSubcategory::regular(&h);
        let right = build_l(&sub, Ordering::ObjectDual).unwrap();
        let left = build_l(&sub, Ordering::DualObject).unwrap();
        assert_eq!(left.dim(), h.dim());
        let c = right.comparison(&left).unwrap();
        assert!(is_invertible(&c));
        assert!(is_intertwiner(&c, right.module(), left.module()));
    }
}

#[test]
fn hopf_axioms_hold_on_l() {
    for h in catalog().into_iter().filter(HopfAlgebra::has_r_matrix) {
        let l = build_l_default(&h).unwrap();
        let s = hopf_structure(&l).unwrap();
        for (name, ok) in check_structure(&l, &s).unwrap() {
            assert!(ok, "{}: {name}", h.name());
        }
    }
    let k = by_name("ground").unwrap();
    let s = hopf_structure(&build_l_default(&k).unwrap()).unwrap();
    for m in [&s.product, &s.unit, &s.coproduct, &s.counit, &s.antipode, &s.pairing] {
        assert!(m.is_identity());
    }
}

#[test]
fn symmetric_case_is_the_dual_group_algebra() {
    for name in ["z2", "s3"] {
        let h = by_name(name).unwrap();
        let n = h.dim();
        let l = build_l_default(&h).unwrap();
        let s = hopf_structure(&l).unwrap();
        let phi = l.coadjoint_iso();
        // H*: (f g)(a) = f(a₁) g(a₂), Δ(f)(a ⊗ b) = f(ba)
        let mut prod = Matrix::zeros(n, n * n);
        let mut coprod = Matrix::zeros(n * n, n);
        for a in 0..n {
            for (i, j, c) in h.comult_terms(a) {
                prod.set(a, i * n + j, c.clone());
            }
            for b in 0..n {
                for (k, c) in h.mult_terms(b, a) {
                    coprod.set(a * n + b, *k, c.clone());
                }
            }
        }
        assert_eq!(phi.mul(&s.product), prod.mul(&phi.kron(phi)), "{name}");
        assert_eq!(phi.kron(phi).mul(&s.coproduct), coprod.mul(phi), "{name}");
    }
}

#[test]
fn pairing_matches_its_family_on_every_named_module() {
    for name in ["z2", "sweedler", "double-z2"] {
        let h = by_name(name).unwrap();
        let l = build_l_default(&h).unwrap();
        let omega = hopf_pairing(&l).unwrap();
        let mods: Vec<ModuleRep> = module_names(&h).iter().map(|m| named_module(&h, m).unwrap()).collect();
        for x in &mods {
            for y in &mods {
                let lhs = omega.mul(&l.iota(x).unwrap().kron(&l.iota(y).unwrap()));
                assert_eq!(lhs, pairing_component(x, y).unwrap(), "{name}: {} {}", x.name(), y.name());
            }
        }
    }
}

#[test]
fn pairing_family_is_dinatural() {
    let h = by_name("sweedler").unwrap();
    let objs = vec![ModuleRep::regular(&h), named_module(&h, "p0").unwrap(), named_module(&h, "sign").unwrap()];
    let sub = GeneratingSubcategory::new(objs.clone()).unwrap();
    let y = named_module(&h, "p1").unwrap();
    for f in sub.morphisms() {
        let (a, b) = (sub.object(f.source), sub.object(f.target));
        let ia = Matrix::identity(a.dim());
        let ib = Matrix::identity(b.dim());
        let iy = Matrix::identity(y.dim() * y.dim());
        // in x: P(b, y)(f ⊗ id ⊗ id) = P(a, y)(id ⊗ fᵀ ⊗ id)
        let lhs = pairing_component(b, &y).unwrap().mul(&f.matrix.kron(&ib).kron(&iy));
        let rhs = pairing_component(a, &y).unwrap().mul(&ia.kron(&f.matrix.transpose()).kron(&iy));
        assert_eq!(lhs, rhs);
        // in y
        let ix = Matrix::identity(y.dim() * y.dim());
        let lhs = pairing_component(&y, b).unwrap().mul(&ix.kron(&f.matrix).kron(&ib));
        let rhs = pairing_component(&y, a).unwrap().mul(&ix.kron(&ia).kron(&f.matrix.transpose()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn modularity_verdicts() {
    let expect = [("ground", true, 1), ("z2", false, 1), ("s3", false, 1), ("sweedler", false, 1), ("double-z2", true, 4)];
    for (name, modular, r) in expect {
        let v = modularity_test(&by_name(name).unwrap()).unwrap();
        assert_eq!((v.modular, v.rank), (modular, r), "{name}");
    }
    let mut data = by_name("s3").unwrap().data().clone();
    data.r_matrix = None;
    let bare = HopfAlgebra::new(data).unwrap();
    assert!(matches!(modularity_test(&bare), Err(Error::MissingRMatrix(_))));
    assert!(matches!(hopf_pairing(&build_l_default(&bare).unwrap()), Err(Error::MissingRMatrix(_))));
}

#[test]
fn double_has_an_integral() {
    let h = by_name("double-z2").unwrap();
    let l = build_l_default(&h).unwrap();
    let s = hopf_structure(&l).unwrap();
    let lam = s.integral.clone().unwrap();
    assert!(!lam.is_zero());
    let id = Matrix::identity(l.dim());
    assert_eq!(s.product.mul(&id.kron(&lam)), lam.mul(&s.counit));
}

#[test]
fn end_from_coend_with_the_hopf_pairing() {
    let h = by_name("double-z2").unwrap();
    let l = build_l_default(&h).unwrap();
    let omega = hopf_pairing(&l).unwrap();
    let j = end_from_coend(l.coend(), &omega).unwrap();
    let sub = GeneratingSubcategory::regular(&h);
    let e = end(&sub, &WordFunctor::inner_hom(&h)).unwrap();
    assert!(e.accepts(&j).unwrap());
    let m = factor_through_end(&e, &j).unwrap();
    assert!(is_invertible(&m));
    for (c, x) in j.components.iter().zip(l.coend().diagonal().iter().enumerate().map(|(i, _)| &l.coend().diagonal_objects(i)[0])) {
        assert!(is_intertwiner(c, l.module(), &x.tensor(&x.dual()).unwrap()));
    }
}

#[test]
fn central_objects() {
    let z2 = by_name("z2").unwrap();
    let sub = GeneratingSubcategory::regular(&z2);
    assert_eq!(central_object(&ModuleRep::trivial(&z2), &sub).unwrap().dim(), build_l_default(&z2).unwrap().dim());
    assert_eq!(central_object(&ModuleRep::regular(&z2), &sub).unwrap().dim(), 4);
    let k = by_name("ground").unwrap();
    assert_eq!(central_object(&ModuleRep::trivial(&k), &GeneratingSubcategory::regular(&k)).unwrap().dim(), 1);
}
