//! Named verification suites and their report records.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::blocks::{sew_genus0, WorldSheetSpec};
use crate::category::{
    end, end_from_coend, factor_through_end, fubini_check, stabilization_check, Factor, GeneratingSubcategory, Letter,
    WordFunctor,
};
use crate::error::{Error, Result};
use crate::hopf::catalog::{module_names, named_module, projective_covers, simple_modules};
use crate::hopf::{check_axioms, hom_space, HopfAlgebra, ModuleRep};
use crate::lex::{delta_coend, lex_fubini};
use crate::linalg::is_invertible;
use crate::lyubashenko::{
    build_l, build_l_small, check_structure, hopf_pairing, hopf_structure, modularity_test, pairing_component,
    pairing_rank, LyubashenkoCoend, Ordering,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Delta,
    Fubini,
    LexFubini,
    Sewing,
    Pairing,
    HopfAxioms,
    Stabilization,
    EndCoend,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Delta,
        Suite::Fubini,
        Suite::LexFubini,
        Suite::Sewing,
        Suite::Pairing,
        Suite::HopfAxioms,
        Suite::Stabilization,
        Suite::EndCoend,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Delta => "delta",
            Suite::Fubini => "fubini",
            Suite::LexFubini => "lex-fubini",
            Suite::Sewing => "sewing",
            Suite::Pairing => "pairing",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Stabilization => "stabilization",
            Suite::EndCoend => "end-coend",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("suite {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim does not apply to this input, e.g. no R-matrix.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: String,
    pub claim: String,
    pub status: Status,
    pub witnesses: BTreeMap<String, usize>,
    /// Fingerprints of mediating maps.
    pub hashes: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    fn new(suite: Suite, claim: impl Into<String>, ok: bool) -> Self {
        Record {
            suite: suite.name().to_string(),
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witnesses: BTreeMap::new(),
            hashes: BTreeMap::new(),
            note: None,
        }
    }

    fn skip(suite: Suite, claim: impl Into<String>, note: impl Into<String>) -> Self {
        Record { status: Status::Skip, note: Some(note.into()), ..Record::new(suite, claim, true) }
    }

    fn failed(suite: Suite, claim: impl Into<String>, e: &Error) -> Self {
        Record { note: Some(e.to_string()), ..Record::new(suite, claim, false) }
    }

    fn witness(mut self, key: &str, value: usize) -> Self {
        self.witnesses.insert(key.to_string(), value);
        self
    }

    fn hash(mut self, key: &str, value: String) -> Self {
        self.hashes.insert(key.to_string(), value);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub algebra: String,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub exit_code: i32,
}

impl Report {
    pub fn new(algebra: &str, mut records: Vec<Record>) -> Self {
        records.sort_by_key(|a| suite_rank(&a.suite));
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skip => summary.skipped += 1,
            }
        }
        let exit_code = i32::from(summary.failed > 0);
        Report { algebra: algebra.to_string(), records, summary, exit_code }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = write!(out, "{tag} [{}] {}", r.suite, r.claim);
            let dims: Vec<String> = r.witnesses.iter().map(|(k, v)| format!("{k}={v}")).collect();
            if !dims.is_empty() {
                let _ = write!(out, " ({})", dims.join(", "));
            }
            for (k, v) in &r.hashes {
                let _ = write!(out, " {k}#{v}");
            }
            if let Some(n) = &r.note {
                let _ = write!(out, " -- {n}");
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(out, "{}: {} passed, {} failed, {} skipped", self.algebra, s.passed, s.failed, s.skipped);
        out
    }
}

fn suite_rank(name: &str) -> usize {
    Suite::ALL.iter().position(|s| s.name() == name).unwrap_or(usize::MAX)
}

/// Named modules of `h` as a full subcategory.
pub fn named_subcategory(h: &HopfAlgebra) -> Result<GeneratingSubcategory> {
    GeneratingSubcategory::new(module_names(h).iter().map(|n| named_module(h, n)).collect::<Result<_>>()?)
}

/// The simples when semisimple, else the regular module.
fn compact_subcategory(h: &HopfAlgebra) -> Result<GeneratingSubcategory> {
    let l = build_l_small(h)?;
    Ok(l.sub().clone())
}

/// Four-slot test functors `(u contra, u co, x contra, x co)`.
pub fn fubini_functors(h: &HopfAlgebra) -> Result<Vec<(&'static str, WordFunctor)>> {
    use Letter::{DualSlot, Fixed, Slot};
    let reg = ModuleRep::regular(h);
    let word = |factors| WordFunctor::inferred(h, factors);
    Ok(vec![
        (
            "Hom(reg,u) ⊗ Hom(u,x) ⊗ Hom(x,reg)",
            word(vec![
                Factor::Hom(vec![Fixed(reg.clone())], vec![Slot(1)]),
                Factor::Hom(vec![Slot(0)], vec![Slot(3)]),
                Factor::Hom(vec![Slot(2)], vec![Fixed(reg)]),
            ])?,
        ),
        ("u ⊗ u∨ ⊗ x ⊗ x∨", word(vec![Factor::Object(vec![Slot(1), DualSlot(0), Slot(3), DualSlot(2)])])?),
        (
            "Hom(u,x) ⊗ Hom(x,u)",
            word(vec![Factor::Hom(vec![Slot(0)], vec![Slot(3)]), Factor::Hom(vec![Slot(2)], vec![Slot(1)])])?,
        ),
        ("u ⊗ u∨ ⊗ Hom(x,x)", word(vec![Factor::Object(vec![Slot(1), DualSlot(0)]), Factor::Hom(vec![Slot(2)], vec![Slot(3)])])?),
        ("Hom(u ⊗ x, x ⊗ u)", word(vec![Factor::Hom(vec![Slot(0), Slot(2)], vec![Slot(3), Slot(1)])])?),
        (
            "x ⊗ u∨ ⊗ u ⊗ x∨",
            word(vec![Factor::Object(vec![Slot(3), DualSlot(0)]), Factor::Object(vec![Slot(1), DualSlot(2)])])?,
        ),
    ])
}

/// Insertion configurations `(s1.in, s1.out, s2.in, s2.out)` for genus-0 sewing. Each first
/// world sheet keeps a regular insertion off the seam, so the ordinary coend computes the
/// sewn space even when the algebra is not semisimple.
pub fn sewing_configs(h: &HopfAlgebra) -> Vec<[Vec<&'static str>; 4]> {
    let names = module_names(h);
    let a = names[0];
    let b = names[1 % names.len()];
    let c = names[names.len() / 2];
    let r = "reg";
    vec![
        [vec![r], vec![r, r], vec![r, r], vec![r]],
        [vec![a], vec![r, b], vec![b, a], vec![a]],
        [vec![r], vec![a, r], vec![r, a], vec![r]],
        [vec![], vec![r, c], vec![c], vec![c]],
        [vec![b, r], vec![a], vec![a], vec![b, b]],
        [vec![r], vec![b], vec![b], vec![]],
    ]
}

fn modules(h: &HopfAlgebra, names: &[&str]) -> Result<Vec<ModuleRep>> {
    names.iter().map(|n| named_module(h, n)).collect()
}

fn l_for(h: &HopfAlgebra, gens: Option<&GeneratingSubcategory>) -> Result<LyubashenkoCoend> {
    match gens {
        Some(g) => build_l(g, Ordering::default()),
        None => build_l_small(h),
    }
}

/// Runs one suite; failures inside a case become failing records.
pub fn run_suite(suite: Suite, h: &HopfAlgebra, gens: Option<&GeneratingSubcategory>) -> Result<Vec<Record>> {
    if let Some(g) = gens {
        if g.algebra() != Some(h) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let mut out = Vec::new();
    match suite {
        Suite::Delta => {
            let sub = match gens {
                Some(g) => g.clone(),
                None => named_subcategory(h)?,
            };
            for u in sub.objects() {
                for v in sub.objects() {
                    let claim = format!("∫^d Hom(u,d) ⊗ Hom(d,v) ≅ Hom(u,v) for u={}, v={}", u.name(), v.name());
                    let g = || -> Result<Record> {
                        let f = WordFunctor::inferred(h, vec![Factor::Hom(vec![Letter::Fixed(u.clone())], vec![Letter::Slot(0)])])?;
                        let r = delta_coend(&f, v, &sub)?;
                        let direct = hom_space(u, v)?.dim();
                        Ok(Record::new(suite, claim.clone(), r.passed() && r.coend_dim == direct)
                            .witness("coend", r.coend_dim)
                            .witness("hom", direct)
                            .hash("mediating", r.mediating.fingerprint()))
                    };
                    out.push(g().unwrap_or_else(|e| Record::failed(suite, claim.clone(), &e)));
                }
            }
        }
        Suite::Fubini => {
            let sub = match gens {
                Some(g) => g.clone(),
                None => compact_subcategory(h)?,
            };
            for (name, f) in fubini_functors(h)? {
                let claim = format!("iterated coends of {name} agree with the joint coend");
                out.push(match fubini_check(&sub, &sub, &f) {
                    Ok(r) => Record::new(suite, claim, r.passed())
                        .witness("joint", r.product)
                        .witness("u_then_x", r.u_then_x)
                        .witness("x_then_u", r.x_then_u),
                    Err(e) => Record::failed(suite, claim, &e),
                });
            }
        }
        Suite::LexFubini => {
            let sub = match gens {
                Some(g) => g.clone(),
                None => compact_subcategory(h)?,
            };
            let ws = modules(h, &module_names(h))?;
            let claim = "left exact coends of u ⊗ u∨ ⊗ x ⊗ x∨ interchange";
            let g = || -> Result<Record> {
                let f = WordFunctor::inferred(
                    h,
                    vec![Factor::Object(vec![Letter::Slot(1), Letter::DualSlot(0), Letter::Slot(3), Letter::DualSlot(2)])],
                )?;
                let r = lex_fubini(&f, &sub, &sub, &ws)?;
                let mut rec = Record::new(suite, claim, r.passed());
                for (w, d) in ws.iter().zip(&r.joint) {
                    rec = rec.witness(&format!("Hom({},L⊗L)", w.name()), *d);
                }
                if let Some(iso) = &r.iso {
                    rec = rec.hash("interchange", iso.fingerprint());
                }
                Ok(rec)
            };
            out.push(g().unwrap_or_else(|e| Record::failed(suite, claim, &e)));
        }
        Suite::Sewing => {
            let sub = match gens {
                Some(g) => g.clone(),
                None => compact_subcategory(h)?,
            };
            for [i1, o1, i2, o2] in sewing_configs(h) {
                let claim = format!("sewing {:?}→{:?} with {:?}→{:?}", i1, o1, i2, o2);
                let g = || -> Result<Record> {
                    let s1 = WorldSheetSpec::new(h, 0, modules(h, &i1)?, modules(h, &o1)?)?;
                    let s2 = WorldSheetSpec::new(h, 0, modules(h, &i2)?, modules(h, &o2)?)?;
                    let r = sew_genus0(&s1, &s2, &sub)?;
                    Ok(Record::new(suite, claim.clone(), r.passed()).witness("coend", r.coend_dim).witness("direct", r.direct_dim))
                };
                out.push(g().unwrap_or_else(|e| Record::failed(suite, claim.clone(), &e)));
            }
        }
        Suite::Pairing => {
            if !h.has_r_matrix() {
                out.push(Record::skip(suite, "Hopf pairing on L", "no R-matrix"));
                return Ok(out);
            }
            let l = l_for(h, gens)?;
            let omega = hopf_pairing(&l)?;
            let mods = modules(h, &module_names(h))?;
            for x in &mods {
                for y in &mods {
                    let claim = format!("ω ∘ (ι_{} ⊗ ι_{}) is the pairing family", x.name(), y.name());
                    let ok = (|| Ok::<_, Error>(omega.mul(&l.iota(x)?.kron(&l.iota(y)?)) == pairing_component(x, y)?))();
                    out.push(match ok {
                        Ok(ok) => Record::new(suite, claim, ok),
                        Err(e) => Record::failed(suite, claim, &e),
                    });
                }
            }
            let v = modularity_test(h)?;
            let rank = pairing_rank(&omega, l.dim())?;
            let claim = format!("modularity verdict: {}", if v.modular { "modular" } else { "not modular" });
            out.push(
                Record::new(suite, claim, rank == v.rank && v.modular == (rank == l.dim()))
                    .witness("rank", rank)
                    .witness("dim", l.dim())
                    .hash("pairing", omega.fingerprint()),
            );
        }
        Suite::HopfAxioms => {
            for c in check_axioms(h).checks {
                out.push(Record::new(suite, format!("{}: {}", h.name(), c.axiom), c.passed));
            }
            if !h.has_r_matrix() {
                out.push(Record::skip(suite, "Hopf structure on L", "no R-matrix"));
                return Ok(out);
            }
            let l = l_for(h, gens)?;
            let s = hopf_structure(&l)?;
            for (name, ok) in check_structure(&l, &s)? {
                out.push(Record::new(suite, format!("L: {name}"), ok).witness("dim", l.dim()));
            }
        }
        Suite::Stabilization => {
            let large = match gens {
                Some(g) => g.clone(),
                None => {
                    let mut objs = vec![ModuleRep::regular(h)];
                    if let (Ok(simples), Ok(covers)) = (simple_modules(h), projective_covers(h)) {
                        objs.extend(simples);
                        objs.extend(covers);
                    }
                    GeneratingSubcategory::new(objs)?
                }
            };
            let mut small = GeneratingSubcategory::regular(h);
            if large.index_of(small.object(0)).is_none() {
                small = GeneratingSubcategory::new(vec![large.object(0).clone()])?;
            }
            let claim = format!("inner hom coend over {} objects matches {{reg}}", large.len());
            out.push(match stabilization_check(&small, &large, &WordFunctor::inner_hom(h)) {
                Ok(r) => Record::new(suite, claim, r.stable)
                    .witness("small", r.small_dim)
                    .witness("large", r.large_dim)
                    .witness("rank", r.map_rank),
                Err(e) => Record::failed(suite, claim, &e),
            });
        }
        Suite::EndCoend => {
            if !h.has_r_matrix() {
                out.push(Record::skip(suite, "end from coend", "no R-matrix"));
                return Ok(out);
            }
            let l = l_for(h, gens)?;
            let omega = hopf_pairing(&l)?;
            let claim = "the Hopf pairing turns L into an end";
            match end_from_coend(l.coend(), &omega) {
                Err(Error::DegeneratePairing { rank, dim }) => out.push(
                    Record::skip(suite, claim, "the pairing is degenerate").witness("rank", rank).witness("dim", dim),
                ),
                Err(e) => out.push(Record::failed(suite, claim, &e)),
                Ok(j) => {
                    let e = end(l.sub(), &WordFunctor::inner_hom(h))?;
                    let accepts = e.accepts(&j)?;
                    let rec = if accepts {
                        let m = factor_through_end(&e, &j)?;
                        Record::new(suite, claim, is_invertible(&m)).hash("mediating", m.fingerprint())
                    } else {
                        Record::new(suite, claim, false)
                    };
                    out.push(rec.witness("coend", l.dim()).witness("end", e.dim()));
                }
            }
        }
    }
    Ok(out)
}

pub fn run(suites: &[Suite], h: &HopfAlgebra, gens: Option<&GeneratingSubcategory>) -> Result<Report> {
    let mut records = Vec::new();
    for s in suites {
        records.extend(run_suite(*s, h, gens)?);
    }
    Ok(Report::new(h.name(), records))
}

/// The Hopf algebra axioms on `h` alone, without building `L`.
pub fn validate(h: &HopfAlgebra) -> Report {
    let records = check_axioms(h)
        .checks
        .into_iter()
        .map(|c| Record::new(Suite::HopfAxioms, format!("{}: {}", h.name(), c.axiom), c.passed))
        .collect();
    Report::new(h.name(), records)
}
