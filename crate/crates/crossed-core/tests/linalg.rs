mod common;

use crossed_core::generators::irreps;
use crossed_core::group::FiniteGroup;
use crossed_core::linalg::{split_idempotents, AlgebraPresentation, Decomposition, Matrix, SplitOptions, Subspace};
use crossed_core::{ComplexFloat, Cyclotomic, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m<F: Scalar>(rows: &[&[i64]]) -> Matrix<F> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
}

/// The algebra spanned by `basis` (closed under products) in the coordinates of `basis`.
fn presentation<F: Scalar>(basis: &[Matrix<F>], unit: &Matrix<F>) -> AlgebraPresentation<F> {
    let d = basis[0].rows();
    let space = Subspace::new(basis.iter().map(|b| b.data().to_vec()).collect(), d * d, 1e-9).unwrap();
    let k = basis.len();
    AlgebraPresentation::from_products(k, space.coords(unit.data()), |a, b| space.coords(basis[a].mul(&basis[b]).data()), 1e-9).unwrap()
}

fn split<F: Scalar>(alg: &AlgebraPresentation<F>, seed: u64) -> Decomposition<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    split_idempotents(alg, SplitOptions::new(1e-9, 12), &mut rng).unwrap()
}

/// Σe = 1, e² = e, eᵢeⱼ = 0, e·A·e one-dimensional; returns the worst residual.
fn check_split<F: Scalar>(alg: &AlgebraPresentation<F>, d: &Decomposition<F>) -> f64 {
    let es = d.minimal_idempotents();
    let mut sum = vec![F::zero(); alg.dim()];
    let mut worst: f64 = 0.0;
    for (i, e) in es.iter().enumerate() {
        sum = alg.add(&sum, e);
        worst = worst.max(alg.idempotent_residual(e));
        assert_eq!(alg.corner_dim(e, 1e-9), 1, "non-minimal idempotent");
        for (j, f) in es.iter().enumerate() {
            if i != j {
                worst = worst.max(Matrix::column(alg.mul(e, f)).max_abs());
            }
        }
    }
    worst.max(Matrix::column(sum).residual(&Matrix::column(alg.unit().to_vec())))
}

#[test]
fn identity_system_has_trivial_kernel() {
    let a: Matrix<Cyclotomic> = Matrix::identity(2);
    let (x, hom) = a.solve_linear(&Matrix::zeros(2, 1), 0.0).unwrap();
    assert!(hom.is_empty());
    assert!(x.is_zero_tol(0.0));
}

#[test]
fn zero_system_has_full_kernel() {
    let a: Matrix<Cyclotomic> = Matrix::zeros(2, 2);
    let (_, hom) = a.solve_linear(&Matrix::zeros(2, 2), 0.0).unwrap();
    assert_eq!(hom.len(), 4);
    assert_eq!(a.nullspace(0.0).len(), 2);
}

#[test]
fn inconsistent_system_has_no_solution() {
    let a: Matrix<Cyclotomic> = m(&[&[1, 1], &[2, 2]]);
    assert!(a.solve_linear(&m(&[&[1], &[3]]), 0.0).is_none());
    let (x, hom) = a.solve_linear(&m(&[&[1], &[2]]), 0.0).unwrap();
    assert_eq!(hom.len(), 1);
    assert_eq!(a.mul(&x), m(&[&[1], &[2]]));
}

fn intertwiner_dim<F: Scalar>(a: &[Matrix<F>], b: &[Matrix<F>]) -> usize {
    // vec(T) with T: V_a → V_b, constraints ρ_b(g)·T − T·ρ_a(g) = 0, written row-major.
    let (da, db) = (a[0].rows(), b[0].rows());
    let mut rows = Vec::new();
    for (ra, rb) in a.iter().zip(b) {
        for i in 0..db {
            for j in 0..da {
                let mut row = vec![F::zero(); db * da];
                for k in 0..db {
                    row[k * da + j] = row[k * da + j].add(rb.get(i, k));
                }
                for k in 0..da {
                    row[i * da + k] = row[i * da + k].sub(ra.get(k, j));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows).nullspace(1e-9).len()
}

fn schur<F: Scalar>() {
    let g = FiniteGroup::symmetric3();
    let irr = irreps::<F>(&g, common::opts()).unwrap();
    assert_eq!(irr.len(), 3);
    for a in &irr {
        for b in &irr {
            // oracle: the character inner product ⟨χ_a, χ_b⟩
            let ip = a.character().iter().zip(b.character()).fold(F::zero(), |acc, (x, y)| acc.add(&x.mul(&y.conj())));
            let ip = ip.mul(&F::from_i64(6).inv().unwrap()).as_integer(1e-9).unwrap();
            assert_eq!(intertwiner_dim(&a.matrices, &b.matrices) as i64, ip, "{} vs {}", a.label, b.label);
        }
    }
}

#[test]
fn schur_intertwiners_exact() {
    schur::<Cyclotomic>();
}

#[test]
fn schur_intertwiners_float() {
    schur::<ComplexFloat>();
}

fn diagonal_split<F: Scalar>() {
    let basis = vec![m::<F>(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])];
    let alg = presentation(&basis, &Matrix::identity(2));
    let d = split(&alg, 0);
    let mut es = d.minimal_idempotents();
    es.sort_by(|a, b| b[0].to_complex().re.partial_cmp(&a[0].to_complex().re).unwrap());
    assert!(es[0][0].approx_eq(&F::one(), 1e-9) && es[0][1].approx_eq(&F::zero(), 1e-9));
    assert!(es[1][0].approx_eq(&F::zero(), 1e-9) && es[1][1].approx_eq(&F::one(), 1e-9));
    assert_eq!(d.central_idempotents().len(), 2);
}

#[test]
fn diagonal_algebra_splits_into_coordinate_idempotents() {
    diagonal_split::<Cyclotomic>();
    diagonal_split::<ComplexFloat>();
}

fn matrix_units<F: Scalar>(n: usize) -> Vec<Matrix<F>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut e = Matrix::zeros(n, n);
            e.set(i, j, F::one());
            out.push(e);
        }
    }
    out
}

fn m2_split<F: Scalar>() {
    let alg = presentation(&matrix_units::<F>(2), &Matrix::identity(2));
    let d = split(&alg, 3);
    assert_eq!(d.blocks.len(), 1);
    assert_eq!(d.blocks[0].size, 2);
    assert_eq!(d.minimal_idempotents().len(), 2);
    let r = check_split(&alg, &d);
    assert!(if F::EXACT { r == 0.0 } else { r < 1e-9 }, "residual {r}");
}

#[test]
fn m2_splits_into_two_rank_one_idempotents() {
    m2_split::<Cyclotomic>();
    m2_split::<ComplexFloat>();
}

/// End(ι(X)) for the 2-dimensional unit-class simple X of D(S3) after condensing Rep(S3),
/// multiplied by t·s = t ∘ (1_Γ⊗s) ∘ (Δ⊗1_X) with dense Kronecker products.
fn end_iota_ds3<F: Scalar>() {
    let cat = common::ds3::<F>();
    let frob = common::frob(&cat, &["e:r1", "e:r2"]);
    let e = 0;
    let xi = (0..cat.simples().len()).find(|&i| cat.simple(i).dim() == 2 && cat.simple(i).grades().iter().all(|&g| g == e)).unwrap();
    let x = cat.simple(xi);
    let n = frob.dim();
    let gx = cat.tensor(&frob.object, x);
    let basis = cat.hom_basis(&gx, x);
    assert_eq!(basis.len(), 4);
    let delta1 = frob.delta.to_dense().kron(&Matrix::identity(2));
    let product = |t: &Matrix<F>, s: &Matrix<F>| t.mul(&Matrix::identity(n).kron(s)).mul(&delta1);
    let unit = frob.epsilon.to_dense().kron(&Matrix::identity(2));
    let flat: Vec<Vec<F>> = basis.iter().map(|b| b.data().to_vec()).collect();
    let space = Subspace::new(flat, 2 * 2 * n, 1e-9).unwrap();
    let alg = AlgebraPresentation::from_products(4, space.coords(unit.data()), |a, b| space.coords(product(&basis[a], &basis[b]).data()), 1e-9).unwrap();
    assert_eq!(alg.center(1e-9).len(), 1);
    let d = split(&alg, 0);
    assert_eq!(d.blocks.len(), 1);
    assert_eq!(d.minimal_idempotents().len(), 2);
    assert!(check_split(&alg, &d) < 1e-9);
}

#[test]
fn end_of_iota_of_the_two_dimensional_simple_is_m2_exact() {
    end_iota_ds3::<Cyclotomic>();
}

#[test]
fn end_of_iota_of_the_two_dimensional_simple_is_m2_float() {
    end_iota_ds3::<ComplexFloat>();
}

#[test]
fn group_algebra_of_s3_splits_into_dims_1_1_4() {
    let g = FiniteGroup::symmetric3();
    let alg = crossed_core::generators::group_algebra::<Cyclotomic>(&g, 0.0).unwrap();
    let d = split(&alg, 1);
    let mut sizes: Vec<usize> = d.blocks.iter().map(|b| b.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 2]);
    assert_eq!(alg.center(0.0).len(), d.central_idempotents().len());
    assert_eq!(check_split(&alg, &d), 0.0);
}

/// A direct sum of matrix algebras, written in a basis twisted by an invertible
/// integer matrix so that no basis element is a matrix unit.
fn twisted_semisimple<F: Scalar>(sizes: &[usize], twist: &[(usize, usize, i64)]) -> (AlgebraPresentation<F>, usize) {
    let total: usize = sizes.iter().sum();
    let mut units = Vec::new();
    let mut offset = 0;
    for &s in sizes {
        for e in matrix_units::<F>(s) {
            let mut big = Matrix::zeros(total, total);
            for i in 0..s {
                for j in 0..s {
                    big.set(offset + i, offset + j, e.get(i, j).clone());
                }
            }
            units.push(big);
        }
        offset += s;
    }
    // elementary row operations b_i += c·b_j keep the span and stay invertible
    for &(i, j, c) in twist {
        let (i, j) = (i % units.len(), j % units.len());
        if i != j {
            let add = units[j].scale(&F::from_i64(c));
            units[i] = units[i].add(&add);
        }
    }
    let center_dim = sizes.len();
    (presentation(&units, &Matrix::identity(total)), center_dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn split_invariants_exact(sizes in prop::collection::vec(1usize..=2, 1..=3), twist in prop::collection::vec((0usize..12, 0usize..12, -2i64..=2), 0..6), seed in 0u64..1000) {
        let (alg, center_dim) = twisted_semisimple::<Cyclotomic>(&sizes, &twist);
        let d = split(&alg, seed);
        prop_assert_eq!(check_split(&alg, &d), 0.0);
        prop_assert_eq!(d.central_idempotents().len(), center_dim);
        prop_assert_eq!(alg.center(0.0).len(), center_dim);
        prop_assert_eq!(d.minimal_idempotents().len(), sizes.iter().sum::<usize>());
    }

    #[test]
    fn split_invariants_float(sizes in prop::collection::vec(1usize..=3, 1..=3), twist in prop::collection::vec((0usize..20, 0usize..20, -2i64..=2), 0..6), seed in 0u64..1000) {
        let (alg, center_dim) = twisted_semisimple::<ComplexFloat>(&sizes, &twist);
        let d = split(&alg, seed);
        prop_assert!(check_split(&alg, &d) < 1e-9);
        prop_assert_eq!(d.central_idempotents().len(), center_dim);
        prop_assert_eq!(alg.center(1e-9).len(), center_dim);
    }
}

