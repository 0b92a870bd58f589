mod common;

use crossed_core::category::{ConcreteCategory, Object};
use crossed_core::generators::{drinfeld_double, pointed_category, rep_category, PointedSpec};
use crossed_core::group::FiniteGroup;
use crossed_core::linalg::{Matrix, Sparse};
use crossed_core::{ComplexFloat, Cyclotomic, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn simple<'a, F: Scalar>(cat: &'a ConcreteCategory<F>, label: &str) -> &'a Object<F> {
    cat.simple(cat.label_index(label).unwrap())
}

fn close<F: Scalar>(a: &F, b: &F) -> bool {
    if F::EXACT {
        a == b
    } else {
        a.approx_eq(b, 1e-9)
    }
}

fn zero<F: Scalar>(r: f64) -> bool {
    if F::EXACT {
        r == 0.0
    } else {
        r < 1e-9
    }
}

#[test]
fn double_of_z2_fuses_charge_and_flux_into_the_fermion() {
    let cat = common::dz2::<Cyclotomic>();
    assert_eq!(cat.simples().len(), 4);
    // (a, χ)⊗(b, ψ) = (ab, χψ): charge e:r1 times flux g:1 is g:r1
    let prod = cat.tensor(simple(&cat, "e:r1"), simple(&cat, "g:1"));
    let expected: Vec<usize> = cat.labels().iter().map(|l| usize::from(l == "g:r1")).collect();
    assert_eq!(cat.decompose(&prod), expected);
}

#[test]
fn gamma_tensor_flux_contains_the_flux_once() {
    let cat = common::dz2::<Cyclotomic>();
    let gamma = cat.direct_sum(&[simple(&cat, "e:1").clone(), simple(&cat, "e:r1").clone()]);
    let m = simple(&cat, "g:1");
    assert_eq!(cat.hom_dim(&cat.tensor(&gamma, m), m), 1);
}

fn toric_scalars<F: Scalar>() {
    let cat = common::toric::<F>();
    // b(x, y) = (−1)^{x1·y2} with e = (1,0), m = (0,1), ψ = (1,1)
    let (e, m, psi) = (simple(&cat, "e"), simple(&cat, "m"), simple(&cat, "psi"));
    let mono = cat.monodromy_sparse(e, m).to_dense();
    assert!(close(mono.get(0, 0), &F::from_i64(-1)));
    assert!(close(cat.twist(psi).get(0, 0), &F::from_i64(-1)));
    assert!(close(cat.twist(e).get(0, 0), &F::one()));
    assert!(close(cat.twist(m).get(0, 0), &F::one()));
    assert!(close(&cat.global_dimension(), &F::from_i64(4)));
}

#[test]
fn toric_code_monodromy_and_twists() {
    toric_scalars::<Cyclotomic>();
    toric_scalars::<ComplexFloat>();
}

fn unit_is_trivial<F: Scalar>(cat: &ConcreteCategory<F>) {
    let u = cat.unit();
    assert!(close(&cat.dim(&u), &F::one()));
    assert!(close(cat.twist(&u).get(0, 0), &F::one()));
    for x in cat.simples() {
        let id = Matrix::<F>::identity(x.dim());
        assert!(zero::<F>(cat.braiding_sparse(&u, x).to_dense().residual(&id)));
        assert!(zero::<F>(cat.braiding_sparse(x, &u).to_dense().residual(&id)));
    }
}

#[test]
fn unit_braids_trivially() {
    unit_is_trivial(&common::ds3::<Cyclotomic>());
    unit_is_trivial(&common::toric::<ComplexFloat>());
    unit_is_trivial(&common::rep::<Cyclotomic>(&FiniteGroup::quaternion()));
}

fn rep_dims<F: Scalar>(g: &FiniteGroup) {
    let cat = common::rep::<F>(g);
    assert_eq!(cat.simples().len(), g.conjugacy_classes().len());
    let mut total = 0;
    for x in cat.simples() {
        let d = cat.dim(x).as_integer(1e-9).expect("integral dimension");
        assert_eq!(d, x.dim() as i64);
        total += d * d;
    }
    assert_eq!(total, g.order() as i64);
}

#[test]
fn rep_dimensions_are_positive_integers() {
    for g in [FiniteGroup::cyclic(3), FiniteGroup::symmetric3(), FiniteGroup::dihedral4(), FiniteGroup::quaternion()] {
        rep_dims::<Cyclotomic>(&g);
        rep_dims::<ComplexFloat>(&g);
    }
}

#[test]
fn double_of_s3_has_total_dimension_36() {
    let cat = common::ds3::<Cyclotomic>();
    assert_eq!(cat.simples().len(), 8);
    assert_eq!(cat.global_dimension(), Cyclotomic::from_i64(36));
    assert_eq!(cat.declared_global_dimension(), &Cyclotomic::from_i64(36));
}

/// A well-defined bicharacter on Z_{n_1}×…: E_ij must be a multiple of M/gcd(n_i, n_j).
fn random_pointed<F: Scalar>(orders: &[usize], ks: &[i64]) -> ConcreteCategory<F> {
    let m = orders.iter().fold(1usize, |a, &b| num_integer::lcm(a, b));
    let r = orders.len();
    let exponents = (0..r).map(|i| (0..r).map(|j| ks[(i * r + j) % ks.len()] * (m / num_integer::gcd(orders[i], orders[j])) as i64).collect()).collect();
    let spec = PointedSpec {
        orders: orders.to_vec(),
        exponents,
        root_order: Some(m as u32),
        labels: None,
    };
    pointed_category(&spec, common::opts()).unwrap()
}

fn category_from<F: Scalar>(which: usize, orders: &[usize], ks: &[i64]) -> ConcreteCategory<F> {
    let opts = common::opts();
    match which {
        0 => random_pointed(orders, ks),
        1 => drinfeld_double(&FiniteGroup::symmetric3(), opts).unwrap(),
        2 => rep_category(&FiniteGroup::dihedral4(), opts).unwrap(),
        _ => drinfeld_double(&FiniteGroup::cyclic(3), opts).unwrap(),
    }
}

fn random_object<F: Scalar>(cat: &ConcreteCategory<F>, rng: &mut ChaCha8Rng, max: usize) -> Object<F> {
    let k = rng.gen_range(1..=max);
    let parts: Vec<Object<F>> = (0..k).map(|_| cat.simple(rng.gen_range(0..cat.simples().len())).clone()).collect();
    cat.direct_sum(&parts)
}

fn random_morphism<F: Scalar>(cat: &ConcreteCategory<F>, x: &Object<F>, y: &Object<F>, rng: &mut ChaCha8Rng) -> Matrix<F> {
    cat.hom_basis(x, y).iter().fold(Matrix::zeros(y.dim(), x.dim()), |acc, b| acc.add(&b.scale(&F::from_i64(rng.gen_range(-3..=3)))))
}

fn kron_id<F: Scalar>(f: &Matrix<F>, right: usize) -> Matrix<F> {
    f.kron(&Matrix::identity(right))
}

fn id_kron<F: Scalar>(left: usize, f: &Matrix<F>) -> Matrix<F> {
    Matrix::identity(left).kron(f)
}

fn axioms<F: Scalar>(cat: &ConcreteCategory<F>, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_object(cat, &mut rng, 2);
    let y = random_object(cat, &mut rng, 2);
    let z = random_object(cat, &mut rng, 1);
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());

    // zigzag: (1_X⊗ev)(coev⊗1_X) = 1_X and (ev⊗1_X̄)(1_X̄⊗coev) = 1_X̄
    let ev = cat.ev(&x).to_dense();
    let coev = cat.coev(&x).to_dense();
    let z1 = id_kron(dx, &ev).mul(&kron_id(&coev, dx));
    let z2 = kron_id(&ev, dx).mul(&id_kron(dx, &coev));
    prop_assert!(zero::<F>(z1.residual(&Matrix::identity(dx))));
    prop_assert!(zero::<F>(z2.residual(&Matrix::identity(dx))));
    let xbar = cat.dual(&x);
    prop_assert!(zero::<F>(cat.morphism_residual(&cat.tensor(&xbar, &x), &cat.unit(), &ev)));
    prop_assert!(zero::<F>(cat.morphism_residual(&cat.unit(), &cat.tensor(&x, &xbar), &coev)));

    // hexagons
    let c = |a: &Object<F>, b: &Object<F>| cat.braiding_sparse(a, b).to_dense();
    let lhs = c(&x, &cat.tensor(&y, &z));
    let rhs = id_kron(dy, &c(&x, &z)).mul(&kron_id(&c(&x, &y), dz));
    prop_assert!(zero::<F>(lhs.residual(&rhs)), "c(X, Y⊗Z)");
    let lhs = c(&cat.tensor(&x, &y), &z);
    let rhs = kron_id(&c(&x, &z), dy).mul(&id_kron(dx, &c(&y, &z)));
    prop_assert!(zero::<F>(lhs.residual(&rhs)), "c(X⊗Y, Z)");

    // braiding is a morphism and natural in the first variable
    prop_assert!(zero::<F>(cat.morphism_residual(&cat.tensor(&x, &y), &cat.tensor(&y, &x), &c(&x, &y))));
    let f = random_morphism(cat, &x, &y, &mut rng);
    let lhs = c(&y, &z).mul(&kron_id(&f, dz));
    let rhs = id_kron(dz, &f).mul(&c(&x, &z));
    prop_assert!(zero::<F>(lhs.residual(&rhs)), "naturality");

    // inverse braiding
    let inv = cat.inverse_braiding_sparse(&x, &y).to_dense();
    prop_assert!(zero::<F>(inv.mul(&c(&x, &y)).residual(&Matrix::identity(dx * dy))));

    // sphericality: left and right traces agree on End(X)
    let g = random_morphism(cat, &x, &x, &mut rng);
    prop_assert!(close(&cat.trace(&g, &x), &cat.left_trace(&g, &x)));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rigid_braided_spherical_exact(which in 0usize..4, orders in prop::sample::select(vec![vec![2], vec![3], vec![4], vec![2, 2], vec![2, 3]]), ks in prop::collection::vec(-2i64..=2, 4), seed in any::<u64>()) {
        let cat = category_from::<Cyclotomic>(which, &orders, &ks);
        axioms(&cat, seed)?;
    }

    #[test]
    fn rigid_braided_spherical_float(which in 0usize..4, orders in prop::sample::select(vec![vec![2], vec![3], vec![4], vec![2, 2], vec![2, 3]]), ks in prop::collection::vec(-2i64..=2, 4), seed in any::<u64>()) {
        let cat = category_from::<ComplexFloat>(which, &orders, &ks);
        axioms(&cat, seed)?;
    }

    #[test]
    fn global_dimension_matches_declared(which in 0usize..4, orders in prop::sample::select(vec![vec![2], vec![3], vec![2, 2], vec![2, 3]]), ks in prop::collection::vec(-2i64..=2, 4)) {
        let cat = category_from::<Cyclotomic>(which, &orders, &ks);
        prop_assert_eq!(&cat.global_dimension(), cat.declared_global_dimension());
    }

    #[test]
    fn pointed_twist_is_self_pairing(orders in prop::sample::select(vec![vec![2], vec![3], vec![4], vec![2, 2]]), ks in prop::collection::vec(-2i64..=2, 4)) {
        let cat = random_pointed::<Cyclotomic>(&orders, &ks);
        for x in cat.simples() {
            let b = cat.braiding_sparse(x, x);
            let (t, c) = (cat.twist(x), b.to_dense());
            prop_assert_eq!(t.get(0, 0), c.get(0, 0));
        }
    }
}

#[test]
fn sparse_embed_is_identity_kronecker() {
    let f: Matrix<Cyclotomic> = Matrix::from_fn(2, 3, |i, j| Cyclotomic::from_i64((i * 3 + j) as i64));
    let got = Sparse::from_dense(&f).embed(2, 3).to_dense();
    let want = Matrix::identity(2).kron(&f).kron(&Matrix::identity(3));
    assert_eq!(got, want);
}
