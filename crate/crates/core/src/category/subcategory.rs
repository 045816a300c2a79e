use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hopf::{hom_space, HopfAlgebra, IntertwinerSpace, ModuleRep};
use crate::linalg::{is_invertible, Matrix, Scalar};

/// A basis intertwiner `source -> target` between objects of a subcategory.
#[derive(Clone, Debug)]
pub struct BasisMorphism {
    pub source: usize,
    pub target: usize,
    pub matrix: Matrix,
}

/// Finite full (or identity-only) subcategory of `H`-mod with chosen Hom bases.
#[derive(Clone, Debug)]
pub struct GeneratingSubcategory {
    objects: Vec<ModuleRep>,
    homs: Option<Vec<Vec<IntertwinerSpace>>>,
    morphisms: Vec<BasisMorphism>,
}

impl GeneratingSubcategory {
    /// Full subcategory on `objects`, with every Hom space solved for.
    pub fn new(objects: Vec<ModuleRep>) -> Result<Self> {
        check_same_algebra(&objects)?;
        let mut homs = Vec::with_capacity(objects.len());
        let mut morphisms = Vec::new();
        for (a, x) in objects.iter().enumerate() {
            let mut row = Vec::with_capacity(objects.len());
            for (b, y) in objects.iter().enumerate() {
                let hom = hom_space(x, y)?;
                for m in hom.basis() {
                    morphisms.push(BasisMorphism { source: a, target: b, matrix: m.clone() });
                }
                row.push(hom);
            }
            homs.push(row);
        }
        Ok(GeneratingSubcategory { objects, homs: Some(homs), morphisms })
    }

    /// The discrete subcategory: objects with identity morphisms only.
    pub fn identity_only(objects: Vec<ModuleRep>) -> Result<Self> {
        check_same_algebra(&objects)?;
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(a, x)| BasisMorphism { source: a, target: a, matrix: Matrix::identity(x.dim()) })
            .collect();
        Ok(GeneratingSubcategory { objects, homs: None, morphisms })
    }

    /// The default generating set `{regular module}`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        GeneratingSubcategory::new(vec![ModuleRep::regular(h)]).expect("single object")
    }

    pub fn objects(&self) -> &[ModuleRep] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &ModuleRep {
        &self.objects[i]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn morphisms(&self) -> &[BasisMorphism] {
        &self.morphisms
    }

    pub fn is_full(&self) -> bool {
        self.homs.is_some()
    }

    pub fn algebra(&self) -> Option<&HopfAlgebra> {
        self.objects.first().map(ModuleRep::algebra)
    }

    pub fn hom(&self, a: usize, b: usize) -> Option<&IntertwinerSpace> {
        self.homs.as_ref().map(|h| &h[a][b])
    }

    pub fn index_of(&self, m: &ModuleRep) -> Option<usize> {
        self.objects.iter().position(|x| x == m)
    }

    /// Checks that `End(x)` contains the identity and that composites of basis
    /// morphisms expand in the stored bases.
    pub fn check(&self) -> Result<()> {
        let Some(homs) = &self.homs else { return Ok(()) };
        for (a, x) in self.objects.iter().enumerate() {
            if !homs[a][a].contains(&Matrix::identity(x.dim())) {
                return Err(Error::Presentation(format!("End({}) lacks the identity", x.name())));
            }
        }
        for f in &self.morphisms {
            for g in self.morphisms.iter().filter(|g| g.source == f.target) {
                if !homs[f.source][g.target].contains(&g.matrix.mul(&f.matrix)) {
                    return Err(Error::Presentation("composite leaves the Hom basis span".into()));
                }
            }
        }
        Ok(())
    }

    /// Same objects in a different order.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let objects = order.iter().map(|&i| self.objects[i].clone()).collect();
        if self.is_full() {
            GeneratingSubcategory::new(objects)
        } else {
            GeneratingSubcategory::identity_only(objects)
        }
    }

    /// Same objects with every Hom basis replaced by a seeded random invertible recombination.
    pub fn rebased(&self, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut morphisms = Vec::new();
        let n = self.objects.len();
        for a in 0..n {
            for b in 0..n {
                let block: Vec<&BasisMorphism> =
                    self.morphisms.iter().filter(|m| m.source == a && m.target == b).collect();
                let k = block.len();
                let change = loop {
                    let entries = (0..k * k).map(|_| Scalar::from(rng.gen_range(-3i64..=3))).collect();
                    let c = Matrix::new(k, k, entries).expect("square");
                    if is_invertible(&c) {
                        break c;
                    }
                };
                for j in 0..k {
                    let mut acc = Matrix::zeros(self.objects[b].dim(), self.objects[a].dim());
                    for (i, m) in block.iter().enumerate() {
                        let c = change.get(i, j);
                        if !c.is_zero() {
                            acc = &acc + &m.matrix.scale(c);
                        }
                    }
                    morphisms.push(BasisMorphism { source: a, target: b, matrix: acc });
                }
            }
        }
        GeneratingSubcategory { objects: self.objects.clone(), homs: self.homs.clone(), morphisms }
    }
}

fn check_same_algebra(objects: &[ModuleRep]) -> Result<()> {
    if let Some(first) = objects.first() {
        for o in objects {
            first.same_algebra(o)?;
        }
    }
    Ok(())
}

/// Objects `k^d` of finite-dimensional vector spaces, as modules over the ground field.
pub fn vector_spaces(ground: &HopfAlgebra, dims: &[usize]) -> Result<Vec<ModuleRep>> {
    if ground.dim() != 1 {
        return Err(Error::Unsupported(format!("{} is not the ground field", ground.name())));
    }
    dims.iter()
        .map(|&d| ModuleRep::new(ground, format!("k^{d}"), vec![Matrix::identity(d)]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::catalog::{by_name, named_module};

    #[test]
    fn subcategory_invariants() {
        let h = by_name("z2").unwrap();
        let objs = vec![
            ModuleRep::trivial(&h),
            named_module(&h, "sign").unwrap(),
            ModuleRep::regular(&h),
        ];
        let sub = GeneratingSubcategory::new(objs).unwrap();
        sub.check().unwrap();
        // End: 1 + 1 + 2, Hom(triv, reg) = Hom(reg, triv) = Hom(sign, reg) = Hom(reg, sign) = 1
        assert_eq!(sub.morphisms().len(), 8);
        let rebased = sub.rebased(7);
        assert_eq!(rebased.morphisms().len(), 8);
        let ground = by_name("ground").unwrap();
        let vect = GeneratingSubcategory::new(vector_spaces(&ground, &[1, 2, 3]).unwrap()).unwrap();
        assert_eq!(vect.morphisms().len(), 36);
    }
}
