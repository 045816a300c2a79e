use serde::Deserialize;

use super::algebra::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// A finite group as a multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Deserialize)]
struct RawTable {
    name: String,
    #[serde(default)]
    labels: Option<Vec<String>>,
    table: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not square over its labels".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for (x, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&y| row[y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(GroupTable { name: name.into(), labels, table, identity, inverses })
    }

    /// Reads `{"name": .., "labels": [..], "table": [[..], ..]}`; labels are optional.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTable = serde_json::from_str(text)?;
        let labels = raw
            .labels
            .unwrap_or_else(|| (0..raw.table.len()).map(|i| i.to_string()).collect());
        GroupTable::new(raw.name, labels, raw.table)
    }

    /// `trivial`, `z<n>` or `s3`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "trivial" | "1" => Ok(GroupTable::trivial()),
            "s3" | "S3" => Ok(GroupTable::symmetric3()),
            _ => name
                .strip_prefix('z')
                .or_else(|| name.strip_prefix('Z'))
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n > 0)
                .map(GroupTable::cyclic)
                .ok_or_else(|| Error::UnknownName(format!("group {name}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn trivial() -> Self {
        GroupTable::new("1", vec!["e".into()], vec![vec![0]]).expect("valid")
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("s{i}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(format!("Z{n}"), labels, table).expect("valid")
    }

    /// Permutations of `{0, 1, 2}` in lexicographic order of their images.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        // (a b)(i) = a(b(i))
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        GroupTable::new("S3", labels, table).expect("valid")
    }

    /// Images of `{0, 1, 2}` under element `a` of [`symmetric3`](Self::symmetric3).
    pub fn s3_permutation(a: usize) -> [usize; 3] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]][a]
    }
}

fn tensor3(n: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); n]; n]; n]
}

fn square(n: usize) -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::zero(); n]; n]
}

/// Group algebra `k[G]` with `R = 1 ⊗ 1` and pivot `1`.
pub fn group_algebra(name: impl Into<String>, g: &GroupTable) -> HopfAlgebraData {
    let n = g.order();
    let e = g.identity();
    let mut mult = tensor3(n);
    let mut comult = tensor3(n);
    let mut antipode = square(n);
    for a in 0..n {
        for b in 0..n {
            mult[a][b][g.mul(a, b)] = Scalar::one();
        }
        comult[a][a][a] = Scalar::one();
        antipode[g.inverse(a)][a] = Scalar::one();
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[e] = Scalar::one();
    let mut r = vec![Scalar::zero(); n * n];
    r[e * n + e] = Scalar::one();
    HopfAlgebraData {
        name: name.into(),
        dim: n,
        basis: g.labels.clone(),
        mult,
        unit: unit.clone(),
        comult,
        counit: vec![Scalar::one(); n],
        antipode,
        r_matrix: Some(r),
        pivot: Some(unit),
        notes: Some(format!("group algebra of {} with trivial R-matrix", g.name)),
    }
}

/// Drinfeld double `D(k[G]) = k^G ⋈ k[G]` on the basis `(x, g)`, indexed `x * |G| + g`.
///
/// `(x,g)(y,h) = δ_{x, g y g⁻¹} (x, gh)`, `Δ(x,g) = Σ_{x₁x₂=x} (x₁,g) ⊗ (x₂,g)`,
/// `S(x,g) = (g⁻¹x⁻¹g, g⁻¹)`, `R = Σ_{x,y} (x,e) ⊗ (y,x)`.
pub fn double(name: impl Into<String>, g: &GroupTable) -> HopfAlgebraData {
    let n = g.order();
    let dim = n * n;
    let e = g.identity();
    let idx = |x: usize, h: usize| x * n + h;
    let conj = |h: usize, y: usize| g.mul(g.mul(h, y), g.inverse(h));
    let mut mult = tensor3(dim);
    let mut comult = tensor3(dim);
    let mut antipode = square(dim);
    let mut counit = vec![Scalar::zero(); dim];
    let mut unit = vec![Scalar::zero(); dim];
    for x in 0..n {
        unit[idx(x, e)] = Scalar::one();
        for h in 0..n {
            if x == e {
                counit[idx(x, h)] = Scalar::one();
            }
            for y in 0..n {
                for k in 0..n {
                    if x == conj(h, y) {
                        mult[idx(x, h)][idx(y, k)][idx(x, g.mul(h, k))] = Scalar::one();
                    }
                }
                // x₁ = y, x₂ = y⁻¹x
                let x2 = g.mul(g.inverse(y), x);
                comult[idx(x, h)][idx(y, h)][idx(x2, h)] = Scalar::one();
            }
            let hi = g.inverse(h);
            antipode[idx(g.mul(g.mul(hi, g.inverse(x)), h), hi)][idx(x, h)] = Scalar::one();
        }
    }
    let mut r = vec![Scalar::zero(); dim * dim];
    for x in 0..n {
        for y in 0..n {
            r[idx(x, e) * dim + idx(y, x)] = Scalar::one();
        }
    }
    let basis = (0..n)
        .flat_map(|x| (0..n).map(move |h| (x, h)))
        .map(|(x, h)| format!("({},{})", g.labels[x], g.labels[h]))
        .collect();
    let pivot = unit.clone();
    HopfAlgebraData {
        name: name.into(),
        dim,
        basis,
        mult,
        unit,
        comult,
        counit,
        antipode,
        r_matrix: Some(r),
        pivot: Some(pivot),
        notes: Some(format!("Drinfeld double of the group algebra of {}", g.name)),
    }
}
