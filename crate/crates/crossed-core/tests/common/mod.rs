#![allow(dead_code)]

use crossed_core::category::ConcreteCategory;
use crossed_core::crossprod::CrossedCategory;
use crossed_core::frobenius::{regular_frobenius, FrobeniusAlgebra};
use crossed_core::generators::{drinfeld_double, pointed_category, rep_category, tannakian_subcategory, BuildOptions, PointedSpec};
use crossed_core::group::FiniteGroup;
use crossed_core::Scalar;

pub fn opts() -> BuildOptions {
    BuildOptions::default()
}

pub fn labels(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

/// Vec(Z2×Z2) with b((a1,a2),(b1,b2)) = (−1)^{a1·b2}.
pub fn toric<F: Scalar>() -> ConcreteCategory<F> {
    let spec = PointedSpec {
        orders: vec![2, 2],
        exponents: vec![vec![0, 1], vec![0, 0]],
        root_order: Some(2),
        labels: Some(labels(&["1", "m", "e", "psi"])),
    };
    pointed_category(&spec, opts()).unwrap()
}

/// Vec(Z4) with b(a, a') = i^{a·a'}; labels "0".."3".
pub fn pointed_z4<F: Scalar>() -> ConcreteCategory<F> {
    let spec = PointedSpec {
        orders: vec![4],
        exponents: vec![vec![1]],
        root_order: Some(4),
        labels: Some(labels(&["0", "1", "2", "3"])),
    };
    pointed_category(&spec, opts()).unwrap()
}

/// Vec(Z3×Z3) with b((a1,a2),(b1,b2)) = ζ3^{a1·b2}.
pub fn z3_double<F: Scalar>() -> ConcreteCategory<F> {
    let spec = PointedSpec {
        orders: vec![3, 3],
        exponents: vec![vec![0, 1], vec![0, 0]],
        root_order: Some(3),
        labels: None,
    };
    pointed_category(&spec, opts()).unwrap()
}

/// The toric code times a symmetric Z2 factor.
pub fn toric_x_z2<F: Scalar>() -> ConcreteCategory<F> {
    let spec = PointedSpec {
        orders: vec![2, 2, 2],
        exponents: vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]],
        root_order: Some(2),
        labels: None,
    };
    pointed_category(&spec, opts()).unwrap()
}

/// Vec(Z2) with b(1,1) = −1: the fermion has twist −1.
pub fn fermion<F: Scalar>() -> ConcreteCategory<F> {
    let spec = PointedSpec {
        orders: vec![2],
        exponents: vec![vec![1]],
        root_order: Some(2),
        labels: Some(labels(&["1", "f"])),
    };
    pointed_category(&spec, opts()).unwrap()
}

pub fn ds3<F: Scalar>() -> ConcreteCategory<F> {
    drinfeld_double(&FiniteGroup::symmetric3(), opts()).unwrap()
}

pub fn dz2<F: Scalar>() -> ConcreteCategory<F> {
    drinfeld_double(&FiniteGroup::cyclic(2), opts()).unwrap()
}

pub fn rep<F: Scalar>(g: &FiniteGroup) -> ConcreteCategory<F> {
    rep_category(g, opts()).unwrap()
}

pub fn frob<F: Scalar>(cat: &ConcreteCategory<F>, s: &[&str]) -> FrobeniusAlgebra<F> {
    let sub = tannakian_subcategory(cat, &labels(s)).unwrap();
    regular_frobenius(cat, &sub).unwrap()
}

pub fn crossed<'a, F: Scalar>(cat: &'a ConcreteCategory<F>, frob: &'a FrobeniusAlgebra<F>) -> CrossedCategory<'a, F> {
    CrossedCategory::build(cat, frob, 0).unwrap()
}

/// Index of the simple of a Rep(Z_n) category whose character sends the generator to ζ_n^k.
pub fn rep_zn_index<F: Scalar>(cat: &ConcreteCategory<F>, n: u32, k: i64) -> usize {
    let target = F::root_of_unity(k, n).unwrap();
    (0..cat.simples().len())
        .find(|&i| cat.simple(i).rho(1).to_dense().get(0, 0).approx_eq(&target, 1e-9))
        .unwrap()
}
