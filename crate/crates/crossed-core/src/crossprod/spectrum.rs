use alloc::string::String;
use alloc::vec::Vec;

use super::CrossedCategory;
use crate::category::ConcreteCategory;
use crate::error::{Error, Result};
use crate::frobenius::{fiber, regular_frobenius, FrobeniusAlgebra};
use crate::generators::Subcategory;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Simples of C that centralize a given set, found by two criteria.
#[derive(Clone, Debug, PartialEq)]
pub struct Transparency {
    /// S(X,Y) = d(X)d(Y) for every Y in the set.
    pub by_s_matrix: Vec<usize>,
    /// c_{Y,X}∘c_{X,Y} = 1 for every Y in the set.
    pub by_monodromy: Vec<usize>,
}

impl Transparency {
    pub fn members(&self) -> &[usize] {
        &self.by_monodromy
    }

    pub fn agree(&self) -> bool {
        self.by_s_matrix == self.by_monodromy
    }
}

/// C∩S′ for S given by its simples.
pub fn transparent_relative<F: Scalar>(cat: &ConcreteCategory<F>, among: &[usize]) -> Transparency {
    let tol = cat.tol();
    let mut by_s_matrix = Vec::new();
    let mut by_monodromy = Vec::new();
    for i in 0..cat.simples().len() {
        let x = cat.simple(i);
        let dx = cat.dim(x);
        let mut s_ok = true;
        let mut m_ok = true;
        for &j in among {
            let y = cat.simple(j);
            let target = dx.mul(&cat.dim(y));
            if !cat.s_entry(x, y).approx_eq(&target, tol * target.magnitude().max(1.0)) {
                s_ok = false;
            }
            let mono = cat.monodromy_sparse(x, y).to_dense();
            if mono.residual(&Matrix::identity(x.dim() * y.dim())) > tol {
                m_ok = false;
            }
        }
        if s_ok {
            by_s_matrix.push(i);
        }
        if m_ok {
            by_monodromy.push(i);
        }
    }
    Transparency { by_s_matrix, by_monodromy }
}

/// Z₂(C): simples transparent to everything.
pub fn zcenter<F: Scalar>(cat: &ConcreteCategory<F>) -> Transparency {
    let all: Vec<usize> = (0..cat.simples().len()).collect();
    transparent_relative(cat, &all)
}

/// N = {g ∈ G : g acts trivially on E(X) for every X in `objects`}.
pub fn fixed_subgroup<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, objects: &[usize]) -> Result<Vec<usize>> {
    let tol = cat.tol();
    let mut keep: Vec<bool> = alloc::vec![true; frob.order()];
    for &i in objects {
        let e = fiber(cat, frob, cat.simple(i))?;
        for (g, k) in keep.iter_mut().enumerate() {
            if e.action[g].residual(&Matrix::identity(e.dim())) > tol {
                *k = false;
            }
        }
    }
    Ok((0..frob.order()).filter(|&g| keep[g]).collect())
}

/// The grade-e part of C⋊S next to an independent construction of (C∩S′)⋊S.
#[derive(Clone, Debug)]
pub struct GradeZero<F> {
    /// (label, dim) of the grade-e simples of C⋊S.
    pub grade_e: Vec<(String, F)>,
    /// (label, dim) of the simples of (C∩S′)⋊S.
    pub independent: Vec<(String, F)>,
    /// Labels of C∩S′.
    pub relative_commutant: Vec<String>,
}

impl<F: Scalar> GradeZero<F> {
    /// Same count and same dimension multiset (within tol).
    pub fn matches(&self, tol: f64) -> bool {
        if self.grade_e.len() != self.independent.len() {
            return false;
        }
        let mut a: Vec<f64> = self.grade_e.iter().map(|(_, d)| d.to_complex().re).collect();
        let mut b: Vec<f64> = self.independent.iter().map(|(_, d)| d.to_complex().re).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
        b.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol.max(1e-12) * 10.0)
    }
}

pub fn grade_zero_part<F: Scalar>(cc: &CrossedCategory<'_, F>) -> Result<GradeZero<F>> {
    let cat = cc.cat();
    let frob = cc.frob();
    let e = frob.group.identity();
    let grade_e = cc
        .simples
        .iter()
        .filter(|s| s.grade.element == Some(e))
        .map(|s| (s.object.label.clone(), s.dim.clone()))
        .collect();
    let commutant = transparent_relative(cat, &frob.subcategory.simples).by_monodromy;
    let sub_cat = cat.restricted(alloc::format!("{}∩S'", cat.name()), &commutant);
    let remapped = Subcategory {
        simples: frob
            .subcategory
            .simples
            .iter()
            .map(|i| {
                commutant
                    .iter()
                    .position(|c| c == i)
                    .ok_or_else(|| Error::NotSymmetric(cat.labels()[*i].clone(), "S".into()))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let sub_frob = regular_frobenius(&sub_cat, &remapped)?;
    let inner = CrossedCategory::build(&sub_cat, &sub_frob, cc.seed)?;
    let independent = inner.simples.iter().map(|s| (s.object.label.clone(), s.dim.clone())).collect();
    Ok(GradeZero {
        grade_e,
        independent,
        relative_commutant: commutant.iter().map(|&i| cat.labels()[i].clone()).collect(),
    })
}
