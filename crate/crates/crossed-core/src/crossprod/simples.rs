use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{CrossedProduct, ExtObject, GradeInfo};
use crate::category::ConcreteCategory;
use crate::error::Result;
use crate::frobenius::FrobeniusAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A simple object of C⋊S with its invariants.
#[derive(Clone, Debug)]
pub struct CrossedSimple<F> {
    pub object: ExtObject<F>,
    /// Index of the base simple of C.
    pub base: usize,
    /// Index of the ~-class of the base.
    pub class: usize,
    pub dim: F,
    pub grade: GradeInfo<F>,
    /// Multiplicity N_X in ι(base).
    pub multiplicity: usize,
    /// Central idempotent of the block of End(ι(base)) this simple belongs to.
    pub central: Matrix<F>,
}

impl<F: Scalar> CrossedSimple<F> {
    pub fn label(&self) -> &str {
        &self.object.label
    }
}

/// C⋊S with its simples enumerated.
#[derive(Clone, Debug)]
pub struct CrossedCategory<'a, F> {
    pub product: CrossedProduct<'a, F>,
    /// relation[i][j]: Hom_C(Γ⊗X_i, X_j) ≠ 0.
    pub relation: Vec<Vec<bool>>,
    /// Classes of the transitive closure of the relation, each sorted, ordered by first element.
    pub classes: Vec<Vec<usize>>,
    pub simples: Vec<CrossedSimple<F>>,
    pub seed: u64,
}

impl<'a, F: Scalar> CrossedCategory<'a, F> {
    /// Computes the ~ relation, decomposes ι of one representative per class and
    /// grades every summand.
    pub fn build(cat: &'a ConcreteCategory<F>, frob: &'a FrobeniusAlgebra<F>, seed: u64) -> Result<Self> {
        Self::build_with(CrossedProduct::new(cat, frob), seed)
    }

    pub fn build_with(product: CrossedProduct<'a, F>, seed: u64) -> Result<Self> {
        let (cat, frob) = (product.cat, product.frob);
        let k = cat.simples().len();
        let relation: Vec<Vec<bool>> = (0..k)
            .map(|i| {
                let gx = cat.tensor(&frob.object, cat.simple(i));
                (0..k).map(|j| cat.hom_dim(&gx, cat.simple(j)) > 0).collect()
            })
            .collect();
        let classes = closure_classes(&relation);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut simples = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            let rep = class[0];
            let x = product.iota_object(cat.simple(rep));
            let blocks = product.central_blocks(&x, &mut rng)?;
            let start = simples.len();
            for (central, minimal) in blocks {
                let obj = ExtObject {
                    base: x.base.clone(),
                    p: minimal[0].clone(),
                    label: String::from(cat.labels()[rep].as_str()),
                };
                let dim = product.dim(&obj);
                let grade = product.grade(&obj)?;
                simples.push(CrossedSimple {
                    object: obj,
                    base: rep,
                    class: ci,
                    dim,
                    grade,
                    multiplicity: minimal.len(),
                    central,
                });
            }
            let mine = &mut simples[start..];
            if mine.len() > 1 {
                let mut grades: Vec<Option<usize>> = mine.iter().map(|s| s.grade.element).collect();
                grades.sort_unstable();
                grades.dedup();
                let distinct = grades.len() == mine.len() && grades.iter().all(|g| g.is_some());
                for (k, s) in mine.iter_mut().enumerate() {
                    s.object.label = match (distinct, s.grade.element) {
                        (true, Some(g)) => format!("{}@{}", s.object.label, frob.group.name(g)),
                        _ => format!("{}.{}", s.object.label, k),
                    };
                }
            }
        }
        simples.sort_by(|a, b| {
            let ga = a.grade.element.unwrap_or(usize::MAX);
            let gb = b.grade.element.unwrap_or(usize::MAX);
            ga.cmp(&gb)
                .then(a.dim.to_complex().re.partial_cmp(&b.dim.to_complex().re).unwrap_or(core::cmp::Ordering::Equal))
                .then(a.object.label.cmp(&b.object.label))
        });
        Ok(CrossedCategory {
            product,
            relation,
            classes,
            simples,
            seed,
        })
    }

    pub fn cat(&self) -> &'a ConcreteCategory<F> {
        self.product.cat
    }

    pub fn frob(&self) -> &'a FrobeniusAlgebra<F> {
        self.product.frob
    }

    /// Grade element of every simple (None where matching failed).
    pub fn grades(&self) -> Vec<Option<usize>> {
        self.simples.iter().map(|s| s.grade.element).collect()
    }

    /// {∂Z : Z simple}, sorted.
    pub fn spectrum(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.simples.iter().filter_map(|s| s.grade.element).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Σ d(Z)² over the simples.
    pub fn total_dimension(&self) -> F {
        self.simples.iter().fold(F::zero(), |acc, s| acc.add(&s.dim.mul(&s.dim)))
    }

    /// Σ d(Z)² over simples of grade g.
    pub fn graded_dimension(&self, g: usize) -> F {
        self.simples.iter().filter(|s| s.grade.element == Some(g)).fold(F::zero(), |acc, s| acc.add(&s.dim.mul(&s.dim)))
    }

    /// Index of the simple isomorphic to `x`, by the compressed hom test.
    pub fn find_simple(&self, x: &ExtObject<F>) -> Option<usize> {
        self.simples.iter().position(|s| self.product.hom_dim(&s.object, x) > 0)
    }

    /// The class of a base simple.
    pub fn class_of(&self, base: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&base)).expect("classes partition the simples")
    }
}

/// Classes of the reflexive, symmetric, transitive closure of `relation`.
fn closure_classes(relation: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let k = relation.len();
    let mut class = vec![usize::MAX; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if class[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class[start] = id;
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for b in 0..k {
                if class[b] == usize::MAX && (relation[a][b] || relation[b][a]) {
                    class[b] = id;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}
