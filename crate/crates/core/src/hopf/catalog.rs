//! Built-in algebras and their named modules.

use super::algebra::{HopfAlgebra, HopfAlgebraData};
use super::format::parse_algebra;
use super::groups::{double, group_algebra, GroupTable};
use super::module::ModuleRep;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

pub const NAMES: [&str; 5] = ["ground", "z2", "s3", "sweedler", "double-z2"];

const GROUND: &str = include_str!("../../data/ground.json");
const Z2: &str = include_str!("../../data/z2.json");
const S3: &str = include_str!("../../data/s3.json");
const SWEEDLER: &str = include_str!("../../data/sweedler.json");
const DOUBLE_Z2: &str = include_str!("../../data/double-z2.json");

/// The catalog entries, loaded from the shipped data files.
pub fn catalog() -> Vec<HopfAlgebra> {
    NAMES.iter().map(|n| by_name(n).expect("catalog entries parse")).collect()
}

pub fn by_name(name: &str) -> Result<HopfAlgebra> {
    let text = match name {
        "ground" => GROUND,
        "z2" => Z2,
        "s3" => S3,
        "sweedler" => SWEEDLER,
        "double-z2" => DOUBLE_Z2,
        _ => return Err(Error::UnknownName(format!("algebra {name}"))),
    };
    parse_algebra(text)
}

/// Constructors that the data files are generated from.
pub fn construct(name: &str) -> Result<HopfAlgebraData> {
    Ok(match name {
        "ground" => ground(),
        "z2" => group_algebra("z2", &GroupTable::cyclic(2)),
        "s3" => group_algebra("s3", &GroupTable::symmetric3()),
        "sweedler" => sweedler(&Scalar::zero()),
        "double-z2" => double("double-z2", &GroupTable::cyclic(2)),
        _ => return Err(Error::UnknownName(format!("algebra {name}"))),
    })
}

pub fn ground() -> HopfAlgebraData {
    let one = || vec![Scalar::one()];
    HopfAlgebraData {
        name: "ground".into(),
        dim: 1,
        basis: vec!["1".into()],
        mult: vec![vec![one()]],
        unit: one(),
        comult: vec![vec![one()]],
        counit: one(),
        antipode: vec![one()],
        r_matrix: Some(one()),
        pivot: Some(one()),
        notes: Some("the ground field as a Hopf algebra".into()),
    }
}

/// Sweedler's algebra on the basis `1, g, x, gx` (index `a + 2b` for `g^a x^b`)
/// with `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`, `S(x) = -gx`, and
/// the R-matrix `R_λ = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + (λ/2)(x⊗x - x⊗gx + gx⊗x + gx⊗gx)`.
pub fn sweedler(lambda: &Scalar) -> HopfAlgebraData {
    let n = 4;
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (a, b, c, d) in (0..16).map(|t| (t & 1, (t >> 1) & 1, (t >> 2) & 1, (t >> 3) & 1)) {
        if b + d < 2 {
            let sign = if b * c == 1 { -1 } else { 1 };
            mult[idx(a, b)][idx(c, d)][idx((a + c) % 2, b + d)] = Scalar::from(sign);
        }
    }
    let mut comult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    comult[0][0][0] = Scalar::one();
    comult[1][1][1] = Scalar::one();
    comult[2][2][0] = Scalar::one();
    comult[2][1][2] = Scalar::one();
    comult[3][3][1] = Scalar::one();
    comult[3][0][3] = Scalar::one();
    let mut antipode = vec![vec![Scalar::zero(); n]; n];
    antipode[0][0] = Scalar::one();
    antipode[1][1] = Scalar::one();
    antipode[3][2] = Scalar::from(-1);
    antipode[2][3] = Scalar::one();
    let half = Scalar::new(1, 2);
    let lh = lambda * &half;
    let mut r = vec![Scalar::zero(); n * n];
    for (i, j, c) in [
        (0, 0, half.clone()),
        (0, 1, half.clone()),
        (1, 0, half.clone()),
        (1, 1, -&half),
        (2, 2, lh.clone()),
        (2, 3, -&lh),
        (3, 2, lh.clone()),
        (3, 3, lh.clone()),
    ] {
        r[i * n + j] = c;
    }
    HopfAlgebraData {
        name: "sweedler".into(),
        dim: n,
        basis: vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mult,
        unit: vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        comult,
        counit: vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        antipode,
        r_matrix: Some(r),
        pivot: Some(vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()]),
        notes: Some(format!(
            "R-matrix from the one-parameter family at lambda = {lambda}; pivot g"
        )),
    }
}

fn one_dim(h: &HopfAlgebra, name: &str, values: &[i64]) -> Result<ModuleRep> {
    let action = values.iter().map(|&v| Matrix::from_i64(&[&[v]])).collect();
    ModuleRep::checked(h, name, action)
}

fn base_module(h: &HopfAlgebra, name: &str) -> Result<ModuleRep> {
    match name {
        "triv" => return Ok(ModuleRep::trivial(h)),
        "reg" => return Ok(ModuleRep::regular(h)),
        _ => {}
    }
    let unknown = || Error::UnknownName(format!("module {name} over {}", h.name()));
    match (h.name(), name) {
        ("z2", "sign") => one_dim(h, "sign", &[1, -1]),
        ("s3", "sign") => {
            let signs: Vec<i64> = (0..6)
                .map(|a| {
                    let p = GroupTable::s3_permutation(a);
                    let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j)));
                    if inversions.filter(|&(i, j)| p[i] > p[j]).count() % 2 == 0 { 1 } else { -1 }
                })
                .collect();
            one_dim(h, "sign", &signs)
        }
        ("s3", "perm") | ("s3", "std") => {
            let action = (0..6)
                .map(|a| {
                    let p = GroupTable::s3_permutation(a);
                    let mut m = Matrix::zeros(3, 3);
                    for (i, &pi) in p.iter().enumerate() {
                        m.set(pi, i, Scalar::one());
                    }
                    m
                })
                .collect();
            let perm = ModuleRep::checked(h, "perm", action)?;
            if name == "perm" {
                Ok(perm)
            } else {
                perm.submodule("std", &Matrix::from_i64(&[&[1, 0], &[-1, 1], &[0, -1]]))
            }
        }
        ("sweedler", "sign") => one_dim(h, "sign", &[1, -1, 0, 0]),
        ("sweedler", "p0") | ("sweedler", "p1") => {
            let s = if name == "p0" { 1 } else { -1 };
            let idempotent = Matrix::column_vector(vec![
                Scalar::new(1, 2),
                Scalar::new(s, 2),
                Scalar::zero(),
                Scalar::zero(),
            ]);
            ModuleRep::regular(h).generated_submodule(name, &idempotent)
        }
        ("double-z2", label @ ("one" | "e" | "m" | "em")) => {
            // (x, g) ↦ δ_{x,a} θ(g) with flux a and charge θ
            let flux = usize::from(label.contains('m'));
            let charge = label.starts_with('e');
            let values: Vec<i64> = (0..4)
                .map(|i| {
                    let (x, g) = (i / 2, i % 2);
                    if x != flux {
                        0
                    } else if charge && g == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect();
            one_dim(h, label, &values)
        }
        _ => Err(unknown()),
    }
}

/// Looks up a named module; a trailing `*` takes duals, e.g. `std*`.
pub fn named_module(h: &HopfAlgebra, name: &str) -> Result<ModuleRep> {
    match name.strip_suffix('*') {
        Some(inner) => Ok(named_module(h, inner)?.dual()),
        None => base_module(h, name),
    }
}

/// Names of the modules [`named_module`] knows for a catalog algebra.
pub fn module_names(h: &HopfAlgebra) -> Vec<&'static str> {
    match h.name() {
        "z2" => vec!["triv", "sign", "reg"],
        "s3" => vec!["triv", "sign", "std", "perm", "reg"],
        "sweedler" => vec!["triv", "sign", "p0", "p1", "reg"],
        "double-z2" => vec!["one", "e", "m", "em", "reg"],
        _ => vec!["triv", "reg"],
    }
}

/// Simple modules, all split over the rationals, for catalog algebras.
pub fn simple_modules(h: &HopfAlgebra) -> Result<Vec<ModuleRep>> {
    let names: &[&str] = match h.name() {
        "z2" => &["triv", "sign"],
        "s3" => &["triv", "sign", "std"],
        "sweedler" => &["triv", "sign"],
        "double-z2" => &["one", "e", "m", "em"],
        "ground" => &["triv"],
        other => return Err(Error::Unsupported(format!("no simple modules recorded for {other}"))),
    };
    names.iter().map(|n| named_module(h, n)).collect()
}

/// Projective covers of the simples, in the same order as [`simple_modules`].
pub fn projective_covers(h: &HopfAlgebra) -> Result<Vec<ModuleRep>> {
    match h.name() {
        "sweedler" => Ok(vec![named_module(h, "p0")?, named_module(h, "p1")?]),
        _ => simple_modules(h),
    }
}

pub fn is_semisimple(h: &HopfAlgebra) -> bool {
    h.name() != "sweedler"
}
