use super::*;
use crate::category::{vector_spaces, GeneratingSubcategory};
use crate::error::Error;
use crate::hopf::catalog::{by_name, catalog, module_names, named_module};
use crate::hopf::{HopfAlgebra, ModuleRep};
use crate::lyubashenko::build_l_small;

fn m(h: &HopfAlgebra, name: &str) -> ModuleRep {
    named_module(h, name).unwrap()
}

fn spec(h: &HopfAlgebra, g: usize, inc: &[&str], out: &[&str]) -> WorldSheetSpec {
    WorldSheetSpec::new(h, g, inc.iter().map(|n| m(h, n)).collect(), out.iter().map(|n| m(h, n)).collect()).unwrap()
}

#[test]
fn block_space_examples() {
    let k = by_name("ground").unwrap();
    let lk = build_l_small(&k).unwrap();
    for g in 0..4 {
        assert_eq!(block_space(&spec(&k, g, &[], &[]), &lk).unwrap().dimension, 1);
    }
    let z2 = by_name("z2").unwrap();
    let l = build_l_small(&z2).unwrap();
    let dims: Vec<usize> = (1..4).map(|g| block_space(&spec(&z2, g, &[], &[]), &l).unwrap().dimension).collect();
    assert_eq!(dims, vec![2, 4, 8]);
    let d = by_name("double-z2").unwrap();
    assert_eq!(block_space(&spec(&d, 1, &[], &[]), &build_l_small(&d).unwrap()).unwrap().dimension, 4);
    let other = build_l_small(&by_name("s3").unwrap()).unwrap();
    assert!(matches!(block_space(&spec(&z2, 1, &[], &[]), &other), Err(Error::AlgebraMismatch)));
}

#[test]
fn genus0_examples() {
    let s3 = by_name("s3").unwrap();
    let std = m(&s3, "std");
    assert_eq!(genus0_blocks(&s3, std::slice::from_ref(&std), std::slice::from_ref(&std)).unwrap().dimension, 1);
    let z2 = by_name("z2").unwrap();
    let reg = ModuleRep::regular(&z2);
    assert_eq!(genus0_blocks(&z2, std::slice::from_ref(&reg), std::slice::from_ref(&reg)).unwrap().dimension, 2);
    assert_eq!(genus0_blocks(&z2, &[], &[]).unwrap().dimension, 1);
}

#[test]
fn genus0_rigidity() {
    for h in catalog() {
        let names = module_names(&h);
        let objs: Vec<ModuleRep> = names.iter().map(|n| m(&h, n)).collect();
        for a in &objs {
            for b in &objs {
                for c in &objs {
                    let base = genus0_blocks(&h, &[a.clone(), b.clone()], std::slice::from_ref(c)).unwrap().dimension;
                    // Hom(a ⊗ b, c) ≅ Hom(b, a∨ ⊗ c) ≅ Hom(a, c ⊗ b∨)
                    let left = genus0_blocks(&h, std::slice::from_ref(b), &[a.dual(), c.clone()]).unwrap().dimension;
                    let right = genus0_blocks(&h, std::slice::from_ref(a), &[c.clone(), b.dual()]).unwrap().dimension;
                    assert_eq!((left, right), (base, base), "{}", h.name());
                }
            }
        }
    }
}

#[test]
fn incoming_equals_outgoing_dual() {
    for h in catalog() {
        let l = build_l_small(&h).unwrap();
        for n in module_names(&h) {
            let u = m(&h, n);
            let other = m(&h, module_names(&h)[0]);
            for g in 0..2 {
                let a = WorldSheetSpec::new(&h, g, vec![u.clone()], vec![other.clone()]).unwrap();
                let b = WorldSheetSpec::new(&h, g, vec![], vec![other.clone(), u.dual()]).unwrap();
                assert_eq!(block_space(&a, &l).unwrap().dimension, block_space(&b, &l).unwrap().dimension);
            }
        }
    }
}

#[test]
fn oracle_examples() {
    let z2 = by_name("z2").unwrap();
    assert_eq!(character_oracle(&z2, &spec(&z2, 2, &[], &[])).unwrap(), 4);
    let k = by_name("ground").unwrap();
    for g in 0..4 {
        assert_eq!(character_oracle(&k, &spec(&k, g, &[], &[])).unwrap(), 1);
    }
    let s3 = by_name("s3").unwrap();
    assert_eq!(character_oracle(&s3, &spec(&s3, 1, &[], &[])).unwrap(), 3);
    // χ_L on e, (12), (123): 6, 2, 3 centralizer orders
    let chi = coadjoint_character(&s3);
    let mut sorted: Vec<i64> = chi.iter().map(|c| c.to_i64().unwrap()).collect();
    sorted.sort();
    assert_eq!(sorted, vec![2, 2, 2, 3, 3, 6]);
    let sw = by_name("sweedler").unwrap();
    assert!(matches!(character_oracle(&sw, &spec(&sw, 1, &[], &[])), Err(Error::Unsupported(_))));
}

#[test]
fn block_space_matches_oracle() {
    for name in ["ground", "z2", "s3", "double-z2"] {
        let h = by_name(name).unwrap();
        let l = build_l_small(&h).unwrap();
        let names = module_names(&h);
        let configs: Vec<(Vec<&str>, Vec<&str>)> = vec![
            (vec![], vec![]),
            (vec![names[0]], vec![]),
            (vec![], vec![names[names.len() - 1]]),
            (vec![names[1 % names.len()]], vec![names[1 % names.len()]]),
            (vec![names[0], names[names.len() - 1]], vec![names[names.len() / 2]]),
        ];
        for g in 0..4 {
            for (inc, out) in &configs {
                let s = spec(&h, g, inc, out);
                let b = block_space(&s, &l).unwrap().dimension;
                assert_eq!(b, character_oracle(&h, &s).unwrap(), "{name} g={g} {inc:?} {out:?}");
            }
        }
    }
}

#[test]
fn sewing_examples() {
    let z2 = by_name("z2").unwrap();
    let sub = GeneratingSubcategory::regular(&z2);
    let r = sew_genus0(&spec(&z2, 0, &["reg"], &["reg", "reg"]), &spec(&z2, 0, &["reg", "reg"], &["reg"]), &sub).unwrap();
    assert_eq!((r.coend_dim, r.direct_dim), (8, 8));
    assert!(r.passed());

    let k = by_name("ground").unwrap();
    let one = vector_spaces(&k, &[1]).unwrap().remove(0);
    let s = WorldSheetSpec::new(&k, 0, vec![one.clone()], vec![one.clone(), one.clone()]).unwrap();
    let t = WorldSheetSpec::new(&k, 0, vec![one.clone(), one.clone()], vec![one.clone()]).unwrap();
    let r = sew_genus0(&s, &t, &GeneratingSubcategory::new(vec![one]).unwrap()).unwrap();
    assert_eq!((r.coend_dim, r.direct_dim), (1, 1));

    let s3 = by_name("s3").unwrap();
    let sub = GeneratingSubcategory::new(["triv", "sign", "std"].iter().map(|n| m(&s3, n)).collect()).unwrap();
    let r = sew_genus0(&spec(&s3, 0, &["triv"], &["triv", "std"]), &spec(&s3, 0, &["std", "triv"], &["triv"]), &sub).unwrap();
    assert_eq!((r.coend_dim, r.direct_dim), (1, 1));
    assert!(r.passed());

    let err = sew_genus0(&spec(&z2, 0, &[], &["reg"]), &spec(&z2, 0, &["triv"], &[]), &sub);
    assert!(matches!(err, Err(Error::SewingMismatch(_))));
}

#[test]
fn ordinary_sewing_needs_a_projective_side() {
    // sewing triv along sign: the ordinary coend misses the identity of triv
    let h = by_name("sweedler").unwrap();
    let sub = GeneratingSubcategory::regular(&h);
    let r = sew_genus0(&spec(&h, 0, &["triv"], &["triv", "sign"]), &spec(&h, 0, &["sign", "triv"], &["triv"]), &sub).unwrap();
    assert_eq!((r.coend_dim, r.direct_dim), (0, 1));
    assert!(!r.passed());
    let r = sew_genus0(&spec(&h, 0, &["triv"], &["reg", "sign"]), &spec(&h, 0, &["sign", "triv"], &["triv"]), &sub).unwrap();
    assert!(r.passed());
}

#[test]
fn sewing_is_associative() {
    for name in ["z2", "sweedler", "double-z2"] {
        let h = by_name(name).unwrap();
        let sub = GeneratingSubcategory::regular(&h);
        let a = spec(&h, 0, &["reg"], &["triv", "reg"]);
        let b = spec(&h, 0, &["reg", "reg"], &["reg", "reg"]);
        let c = spec(&h, 0, &["reg", "triv"], &["reg"]);
        let ab = sew_genus0(&a, &b, &sub).unwrap();
        let ab_c = sew_genus0(&ab.sewn, &c, &sub).unwrap();
        let bc = sew_genus0(&b, &c, &sub).unwrap();
        let a_bc = sew_genus0(&a, &bc.sewn, &sub).unwrap();
        assert!(ab.passed() && ab_c.passed() && bc.passed() && a_bc.passed(), "{name}");
        assert_eq!(ab_c.direct_dim, a_bc.direct_dim);
    }
}

#[test]
fn self_sew_examples() {
    let z2 = by_name("z2").unwrap();
    let l = build_l_small(&z2).unwrap();
    let r = self_sew(&spec(&z2, 0, &["reg"], &["reg"]), &l).unwrap();
    assert_eq!((r.lex_dim, r.block_dim), (2, 2));
    assert!(r.passed());
    let r = self_sew(&spec(&z2, 1, &["sign"], &["sign"]), &l).unwrap();
    assert_eq!(r.lex_dim, 4);
    assert!(r.passed());

    let k = by_name("ground").unwrap();
    let lk = build_l_small(&k).unwrap();
    let r = self_sew(&spec(&k, 0, &["triv"], &["triv"]), &lk).unwrap();
    assert_eq!(r.lex_dim, 1);

    assert!(matches!(self_sew(&spec(&z2, 0, &["sign"], &["reg"]), &l), Err(Error::SewingMismatch(_))));
}

#[test]
fn iterated_self_sewing_reaches_every_genus() {
    for h in catalog() {
        let l = build_l_small(&h).unwrap();
        let x = module_names(&h)[0];
        for g in 1..4 {
            let mut s = spec(&h, 0, &vec![x; g], &vec![x; g]);
            for _ in 0..g {
                let r = self_sew(&s, &l).unwrap();
                assert!(r.passed(), "{} g={g}", h.name());
                s = r.sewn;
            }
            assert_eq!(s.genus(), g);
            let direct = block_space(&spec(&h, g, &[], &[]), &l).unwrap();
            assert_eq!(block_space(&s, &l).unwrap().dimension, direct.dimension, "{}", h.name());
        }
    }
}

#[test]
fn records_serialize() {
    let z2 = by_name("z2").unwrap();
    let l = build_l_small(&z2).unwrap();
    let r = block_record(&spec(&z2, 2, &["sign"], &["sign"]), &l).unwrap();
    assert!(r.matched);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["match"], true);
    assert_eq!(json["dimension"], 4);
    assert_eq!(json["insertions"][1]["orientation"], "incoming");
}
