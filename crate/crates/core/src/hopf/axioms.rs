use serde::Serialize;

use super::algebra::{tensor_apply, tensor_mul, HopfAlgebra, TensorElement};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed(&self, axiom: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.axiom == axiom).map(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom.as_str()).collect()
    }

    fn push(&mut self, axiom: &str, passed: bool) {
        self.checks.push(AxiomCheck { axiom: axiom.to_string(), passed });
    }
}

fn basis(i: usize) -> TensorElement {
    TensorElement::from([(vec![i], Scalar::one())])
}

fn from_vec(v: &[Scalar]) -> TensorElement {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (vec![i], c.clone()))
        .collect()
}

fn comult_of(h: &HopfAlgebra, i: usize) -> Vec<(Vec<usize>, Scalar)> {
    h.comult_terms(i).iter().map(|(j, k, c)| (vec![*j, *k], c.clone())).collect()
}

fn antipode_of(h: &HopfAlgebra, i: usize) -> Vec<(Vec<usize>, Scalar)> {
    let s = h.antipode_matrix();
    (0..h.dim())
        .filter(|&k| !s.get(k, i).is_zero())
        .map(|k| (vec![k], s.get(k, i).clone()))
        .collect()
}

fn counit_of(h: &HopfAlgebra, i: usize) -> Vec<(Vec<usize>, Scalar)> {
    let e = &h.counit()[i];
    if e.is_zero() { vec![] } else { vec![(vec![], e.clone())] }
}

/// Collapses `x ⊗ y` (two factors) to `xy`.
fn multiply_pair(h: &HopfAlgebra, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::new();
    for (idx, c) in t {
        for (k, m) in h.mult_terms(idx[0], idx[1]) {
            *out.entry(vec![*k]).or_insert_with(Scalar::zero) += &(c * m);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn r_element(terms: &[(usize, usize, Scalar)]) -> TensorElement {
    terms.iter().map(|(i, j, c)| (vec![*i, *j], c.clone())).collect()
}

/// Embeds a two-factor element into three factors at the given slots, with the unit elsewhere.
fn embed(h: &HopfAlgebra, x: &TensorElement, slots: [usize; 2]) -> TensorElement {
    let unit: Vec<(usize, Scalar)> = h
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let other = 3 - slots[0] - slots[1];
    let mut out = TensorElement::new();
    for (idx, c) in x {
        for (u, cu) in &unit {
            let mut k = vec![0; 3];
            k[slots[0]] = idx[0];
            k[slots[1]] = idx[1];
            k[other] = *u;
            *out.entry(k).or_insert_with(Scalar::zero) += &(c * cu);
        }
    }
    out
}

/// Verifies every Hopf algebra identity on basis elements, plus quasitriangularity
/// and the pivot conditions when those data are present.
pub fn check_axioms(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let mut report = AxiomReport { algebra: h.name().to_string(), checks: vec![] };
    let unit = from_vec(h.unit());
    let mut one_one = TensorElement::new();
    for (a, ca) in &unit {
        for (b, cb) in &unit {
            one_one.insert(vec![a[0], b[0]], ca * cb);
        }
    }

    let assoc = (0..n).all(|i| {
        (0..n).all(|j| {
            let ij = tensor_mul(h, &basis(i), &basis(j));
            (0..n).all(|k| {
                let jk = tensor_mul(h, &basis(j), &basis(k));
                tensor_mul(h, &ij, &basis(k)) == tensor_mul(h, &basis(i), &jk)
            })
        })
    });
    report.push("associativity", assoc);

    let unit_law = (0..n).all(|i| {
        tensor_mul(h, &unit, &basis(i)) == basis(i) && tensor_mul(h, &basis(i), &unit) == basis(i)
    });
    report.push("unit", unit_law);

    let coassoc = (0..n).all(|i| {
        let d = tensor_apply(&basis(i), 0, |k| comult_of(h, k));
        tensor_apply(&d, 0, |k| comult_of(h, k)) == tensor_apply(&d, 1, |k| comult_of(h, k))
    });
    report.push("coassociativity", coassoc);

    let counit_law = (0..n).all(|i| {
        let d = tensor_apply(&basis(i), 0, |k| comult_of(h, k));
        tensor_apply(&d, 0, |k| counit_of(h, k)) == basis(i)
            && tensor_apply(&d, 1, |k| counit_of(h, k)) == basis(i)
    });
    report.push("counit", counit_law);

    let delta = |x: &TensorElement| tensor_apply(x, 0, |k| comult_of(h, k));
    let eps = |x: &TensorElement| tensor_apply(x, 0, |k| counit_of(h, k));
    let compat = (0..n).all(|i| {
        (0..n).all(|j| {
            let prod = tensor_mul(h, &basis(i), &basis(j));
            delta(&prod) == tensor_mul(h, &delta(&basis(i)), &delta(&basis(j)))
                && eps(&prod) == tensor_mul(h, &eps(&basis(i)), &eps(&basis(j)))
        })
    }) && delta(&unit) == one_one
        && eps(&unit) == TensorElement::from([(vec![], Scalar::one())]);
    report.push("bialgebra compatibility", compat);

    let antipode_law = (0..n).all(|i| {
        let d = delta(&basis(i));
        let counit_unit: TensorElement =
            unit.iter().map(|(k, c)| (k.clone(), c * &h.counit()[i])).filter(|(_, c)| !c.is_zero()).collect();
        multiply_pair(h, &tensor_apply(&d, 0, |k| antipode_of(h, k))) == counit_unit
            && multiply_pair(h, &tensor_apply(&d, 1, |k| antipode_of(h, k))) == counit_unit
    });
    report.push("antipode", antipode_law);

    if let (Ok(r), Ok(rinv)) = (h.r_terms(), h.r_inverse_terms()) {
        let r = r_element(&r);
        let rinv = r_element(&rinv);
        report.push(
            "R invertible",
            tensor_mul(h, &r, &rinv) == one_one && tensor_mul(h, &rinv, &r) == one_one,
        );
        let intertwines = (0..n).all(|i| {
            let d = delta(&basis(i));
            let dop: TensorElement = d.iter().map(|(k, c)| (vec![k[1], k[0]], c.clone())).collect();
            tensor_mul(h, &dop, &r) == tensor_mul(h, &r, &d)
        });
        report.push("R intertwines coproduct", intertwines);
        let r13 = embed(h, &r, [0, 2]);
        let r23 = embed(h, &r, [1, 2]);
        let r12 = embed(h, &r, [0, 1]);
        report.push("hexagon (Δ⊗id)R", tensor_apply(&r, 0, |k| comult_of(h, k)) == tensor_mul(h, &r13, &r23));
        report.push("hexagon (id⊗Δ)R", tensor_apply(&r, 1, |k| comult_of(h, k)) == tensor_mul(h, &r13, &r12));
    }

    if let (Ok(g), Ok(ginv)) = (h.pivot(), h.pivot_inverse()) {
        let gt = from_vec(&g);
        let mut gg = TensorElement::new();
        for (a, ca) in &gt {
            for (b, cb) in &gt {
                gg.insert(vec![a[0], b[0]], ca * cb);
            }
        }
        let grouplike = delta(&gt) == gg && h.counit_of(&g).is_one();
        report.push("pivot grouplike", grouplike);
        let ginv_t = from_vec(&ginv);
        report.push("pivot invertible", tensor_mul(h, &gt, &ginv_t) == unit);
        let s2 = h.antipode_matrix().mul(h.antipode_matrix());
        let conj = (0..n).all(|i| {
            let lhs = from_vec(&s2.column(i));
            lhs == tensor_mul(h, &tensor_mul(h, &gt, &basis(i)), &ginv_t)
        });
        report.push("pivot implements S²", conj);
    }
    report
}
