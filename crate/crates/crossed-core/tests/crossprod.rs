mod common;

use crossed_core::category::{ConcreteCategory, Object};
use crossed_core::crossprod::{abelian_grade, character_of, crossed_braiding, crossed_braiding_inverse, fixed_subgroup, grade_zero_part, module_oracle, zcenter, CrossedProduct, ExtMorphism};
use crossed_core::frobenius::{fiber, FrobeniusAlgebra};
use crossed_core::linalg::Matrix;
use crossed_core::{ComplexFloat, Cyclotomic, Error, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zero<F: Scalar>(r: f64) -> bool {
    if F::EXACT {
        r == 0.0
    } else {
        r < 1e-9
    }
}

fn simple<'a, F: Scalar>(cat: &'a ConcreteCategory<F>, label: &str) -> &'a Object<F> {
    cat.simple(cat.label_index(label).unwrap())
}

fn random_carrier<F: Scalar>(cp: &CrossedProduct<'_, F>, x: &Object<F>, y: &Object<F>, rng: &mut ChaCha8Rng) -> Matrix<F> {
    let n = cp.frob.dim();
    cp.hom(x, y).iter().fold(Matrix::zeros(y.dim(), n * x.dim()), |acc, b| acc.add(&b.s.scale(&F::from_i64(rng.gen_range(-3..=3)))))
}

/// t ∘̂ s = t ∘ (1_Γ⊗s) ∘ (Δ⊗1_X), written with dense Kronecker products.
fn dense_compose<F: Scalar>(frob: &FrobeniusAlgebra<F>, t: &Matrix<F>, s: &Matrix<F>, dx: usize) -> Matrix<F> {
    let n = frob.dim();
    t.mul(&Matrix::identity(n).kron(s)).mul(&frob.delta.to_dense().kron(&Matrix::identity(dx)))
}

/// s ⊗̂ t = (s⊗t) ∘ (1_Γ⊗c_{Γ,X}⊗1_Z) ∘ (Δ⊗1_X⊗1_Z).
fn dense_tensor<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, s: &Matrix<F>, t: &Matrix<F>, x: &Object<F>, dz: usize) -> Matrix<F> {
    let n = frob.dim();
    let c = cat.braiding_sparse(&frob.object, x).to_dense();
    let mid = Matrix::identity(n).kron(&c).kron(&Matrix::identity(dz));
    let first = frob.delta.to_dense().kron(&Matrix::identity(x.dim() * dz));
    s.kron(t).mul(&mid).mul(&first)
}

fn calculus<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, seed: u64) -> Result<(), TestCaseError> {
    let cp = CrossedProduct::new(cat, frob);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = cat.simples().len();
    let pick = |rng: &mut ChaCha8Rng| cat.simple(rng.gen_range(0..k)).clone();
    let (x, y, z, w) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
    let s = random_carrier(&cp, &x, &y, &mut rng);
    let t = random_carrier(&cp, &y, &z, &mut rng);
    let u = random_carrier(&cp, &z, &w, &mut rng);
    prop_assert!(zero::<F>(cp.compose_raw(&t, &s).residual(&dense_compose(frob, &t, &s, x.dim()))));
    // associativity and units
    let lhs = cp.compose_raw(&u, &cp.compose_raw(&t, &s));
    let rhs = cp.compose_raw(&cp.compose_raw(&u, &t), &s);
    prop_assert!(zero::<F>(lhs.residual(&rhs)));
    prop_assert!(zero::<F>(cp.compose_raw(&cp.identity(&y).s, &s).residual(&s)));
    prop_assert!(zero::<F>(cp.compose_raw(&s, &cp.identity(&x).s).residual(&s)));
    // tensor against the dense formula, and the interchange law
    let st = cp.tensor(&ExtMorphism { source: x.clone(), target: y.clone(), s: s.clone() }, &ExtMorphism { source: z.clone(), target: w.clone(), s: u.clone() });
    prop_assert!(zero::<F>(st.s.residual(&dense_tensor(cat, frob, &s, &u, &x, z.dim()))));
    let s2 = random_carrier(&cp, &y, &x, &mut rng);
    let u2 = random_carrier(&cp, &w, &z, &mut rng);
    let ext = |a: &Object<F>, b: &Object<F>, m: &Matrix<F>| ExtMorphism { source: a.clone(), target: b.clone(), s: m.clone() };
    let lhs = cp.compose(&cp.tensor(&ext(&y, &x, &s2), &ext(&w, &z, &u2)), &cp.tensor(&ext(&x, &y, &s), &ext(&z, &w, &u))).unwrap();
    let rhs = cp.tensor(&cp.compose(&ext(&y, &x, &s2), &ext(&x, &y, &s)).unwrap(), &cp.compose(&ext(&w, &z, &u2), &ext(&z, &w, &u)).unwrap());
    prop_assert!(zero::<F>(lhs.s.residual(&rhs.s)), "interchange");
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn calculus_exact(which in 0usize..3, seed in any::<u64>()) {
        match which {
            0 => { let c = common::toric::<Cyclotomic>(); let f = common::frob(&c, &["e"]); calculus(&c, &f, seed)?; }
            1 => { let c = common::ds3::<Cyclotomic>(); let f = common::frob(&c, &["e:r1"]); calculus(&c, &f, seed)?; }
            _ => { let c = common::pointed_z4::<Cyclotomic>(); let f = common::frob(&c, &["2"]); calculus(&c, &f, seed)?; }
        }
    }

    #[test]
    fn calculus_float(seed in any::<u64>()) {
        let c = common::ds3::<ComplexFloat>();
        let f = common::frob(&c, &["e:r2"]);
        calculus(&c, &f, seed)?;
    }

    #[test]
    fn action_is_a_monoidal_group_action(seed in any::<u64>()) {
        let cat = common::ds3::<Cyclotomic>();
        let frob = common::frob(&cat, &["e:r2"]);
        let cp = CrossedProduct::new(&cat, &frob);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = cat.simples().len();
        let (x, y, z) = (cat.simple(rng.gen_range(0..k)), cat.simple(rng.gen_range(0..k)), cat.simple(rng.gen_range(0..k)));
        let s = ExtMorphism { source: x.clone(), target: y.clone(), s: random_carrier(&cp, x, y, &mut rng) };
        let t = ExtMorphism { source: y.clone(), target: z.clone(), s: random_carrier(&cp, y, z, &mut rng) };
        let g = &frob.group;
        let (a, b) = (rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
        // γ_a γ_b = γ_{ab}, γ_a preserves ∘̂ and fixes ι
        prop_assert_eq!(cp.act(a, &cp.act(b, &s)).s, cp.act(g.mul(a, b), &s).s);
        prop_assert_eq!(cp.act(a, &cp.compose(&t, &s).unwrap()).s, cp.compose(&cp.act(a, &t), &cp.act(a, &s)).unwrap().s);
        let f = cat.hom_basis(x, x);
        let iota = cp.iota(&f[0], x, x);
        prop_assert_eq!(cp.act(a, &iota).s, iota.s);
    }
}

#[test]
fn iota_is_a_monoidal_functor() {
    let cat = common::ds3::<Cyclotomic>();
    let frob = common::frob(&cat, &["e:r1", "e:r2"]);
    let cp = CrossedProduct::new(&cat, &frob);
    let x = simple(&cat, "e:r2");
    let xx = cat.tensor(x, x);
    for f in cat.hom_basis(&xx, &xx) {
        for g in cat.hom_basis(&xx, &xx).iter().take(3) {
            let lhs = cp.compose(&cp.iota(g, &xx, &xx), &cp.iota(&f, &xx, &xx)).unwrap();
            assert_eq!(lhs.s, cp.iota(&g.mul(&f), &xx, &xx).s);
        }
    }
    let f = cat.hom_basis(x, x)[0].clone();
    let y = simple(&cat, "e:r1");
    let h = cat.hom_basis(y, y)[0].clone();
    let lhs = cp.tensor(&cp.iota(&f, x, x), &cp.iota(&h, y, y));
    assert_eq!(lhs.s, cp.iota(&f.kron(&h), &cat.tensor(x, y), &cat.tensor(x, y)).s);
}

#[test]
fn ext_object_validates_its_idempotent() {
    let cat = common::toric::<Cyclotomic>();
    let frob = common::frob(&cat, &["e"]);
    let cp = CrossedProduct::new(&cat, &frob);
    let m = simple(&cat, "m");
    let p = cp.identity(m).s;
    assert!(cp.ext_object(m, p.clone(), "M").is_ok());
    assert!(matches!(cp.ext_object(m, p.scale(&Cyclotomic::from_i64(2)), "2M"), Err(Error::NotIdempotent(_))));
    assert!(matches!(cp.ext_object(m, Matrix::identity(1), "bad"), Err(Error::Shape(_))));
    let ds3 = common::ds3::<Cyclotomic>();
    let f = common::frob(&ds3, &["e:r1"]);
    let cp = CrossedProduct::new(&ds3, &f);
    let x = simple(&ds3, "e:r2");
    let junk = Matrix::from_fn(2, 4, |i, j| Cyclotomic::from_i64((i + 2 * j) as i64));
    assert!(matches!(cp.ext_object(x, junk, "junk"), Err(Error::NotAMorphism(..))));
}

fn toric_simples<F: Scalar>() {
    let cat = common::toric::<F>();
    let frob = common::frob(&cat, &["e"]);
    let cc = common::crossed(&cat, &frob);
    assert_eq!(cc.classes.len(), 2);
    let labels: Vec<&str> = cc.simples.iter().map(|s| s.label()).collect();
    assert_eq!(labels, vec!["1", "m"]);
    let grades: Vec<&str> = cc.simples.iter().map(|s| frob.group.name(s.grade.element.unwrap())).collect();
    assert_eq!(grades, vec!["e", "g"]);
    for s in &cc.simples {
        assert!(s.dim.approx_eq(&F::one(), 1e-9));
    }
    assert!(cc.total_dimension().approx_eq(&F::from_i64(2), 1e-9));
}

#[test]
fn toric_code_condenses_to_two_graded_simples() {
    toric_simples::<Cyclotomic>();
    toric_simples::<ComplexFloat>();
}

fn ds3_simples<F: Scalar>() {
    let cat = common::ds3::<F>();
    let frob = common::frob(&cat, &["e:r1", "e:r2"]);
    let cc = common::crossed(&cat, &frob);
    assert_eq!(cc.simples.len(), 6);
    let mut grades: Vec<usize> = cc.simples.iter().map(|s| s.grade.element.unwrap()).collect();
    grades.sort();
    assert_eq!(grades, (0..6).collect::<Vec<_>>());
    assert_eq!(cc.simples.iter().filter(|s| s.grade.element == Some(frob.group.identity())).count(), 1);
    for s in &cc.simples {
        assert!(s.dim.approx_eq(&F::one(), 1e-9));
    }
    // Σ d² = dim C / dim S = 36 / 6
    assert!(cc.total_dimension().approx_eq(&F::from_i64(6), 1e-9));
}

#[test]
fn double_of_s3_condenses_to_six_invertibles() {
    ds3_simples::<Cyclotomic>();
    ds3_simples::<ComplexFloat>();
}

#[test]
fn summands_are_named_by_grade_when_grades_differ() {
    let cat = common::ds3::<Cyclotomic>();
    let frob = common::frob(&cat, &["e:r1", "e:r2"]);
    let cc = common::crossed(&cat, &frob);
    let labels: Vec<&str> = cc.simples.iter().map(|s| s.label()).collect();
    assert_eq!(labels, vec!["e:1", "(12):1@(12)", "(12):1@(13)", "(12):1@(23)", "(123):1@(123)", "(123):1@(132)"]);
    // with S = {1, sign}, ι(e:r2) splits into two summands of the same grade
    let frob = common::frob(&cat, &["e:r1"]);
    let cc = common::crossed(&cat, &frob);
    let split: Vec<&crossed_core::crossprod::CrossedSimple<Cyclotomic>> = cc.simples.iter().filter(|s| s.label().starts_with("e:r2")).collect();
    assert_eq!(split.iter().map(|s| s.label()).collect::<Vec<_>>(), vec!["e:r2.0", "e:r2.1"]);
    assert_eq!(split[0].grade.element, split[1].grade.element);
}

#[test]
fn spectra() {
    // modular: every grade occurs
    let toric = common::toric::<Cyclotomic>();
    let f = common::frob(&toric, &["e"]);
    assert_eq!(common::crossed(&toric, &f).spectrum().len(), 2);
    let ds3 = common::ds3::<Cyclotomic>();
    let f = common::frob(&ds3, &["e:r1"]);
    assert_eq!(common::crossed(&ds3, &f).spectrum().len(), 2);
    // symmetric: S ⊂ Z₂(C) and only the trivial grade occurs
    let g = crossed_core::group::FiniteGroup::cyclic(4);
    let rep = common::rep::<Cyclotomic>(&g);
    let two = rep.labels()[common::rep_zn_index(&rep, 4, 2)].clone();
    let f = common::frob(&rep, &[two.as_str()]);
    let cc = common::crossed(&rep, &f);
    assert_eq!(cc.spectrum(), vec![f.group.identity()]);
    assert_eq!(cc.simples.len(), 2);
    assert!(cc.simples.iter().all(|s| s.grade.element == Some(f.group.identity())));
    // toric × Z2 with S ∋ the transparent boson: half the grades
    let t = common::toric_x_z2::<Cyclotomic>();
    let f = common::frob(&t, &["(1,0,0)", "(0,0,1)"]);
    let cc = common::crossed(&t, &f);
    let z2: Vec<usize> = zcenter(&t).members().iter().copied().filter(|i| f.subcategory.contains(*i)).collect();
    assert_eq!(cc.spectrum(), fixed_subgroup(&t, &f, &z2).unwrap());
    assert_eq!(cc.spectrum().len(), 2);
}

#[test]
fn grade_zero_part_is_the_commutant_condensation() {
    let toric = common::toric::<Cyclotomic>();
    let f = common::frob(&toric, &["e"]);
    let cc = common::crossed(&toric, &f);
    let gz = grade_zero_part(&cc).unwrap();
    assert_eq!(gz.relative_commutant, vec!["1".to_string(), "e".to_string()]);
    assert_eq!(gz.grade_e.len(), 1);
    assert!(gz.matches(1e-9));
    let ds3 = common::ds3::<Cyclotomic>();
    let f = common::frob(&ds3, &["e:r1"]);
    let cc = common::crossed(&ds3, &f);
    assert!(grade_zero_part(&cc).unwrap().matches(1e-9));
}

#[test]
fn toric_code_has_two_simple_modules() {
    let toric = common::toric::<Cyclotomic>();
    let f = common::frob(&toric, &["e"]);
    let mo = module_oracle(&toric, &f, 0).unwrap();
    assert_eq!(mo.simples.len(), 2);
    assert_eq!(mo.total_dimension, mo.expected_total);
    assert!(mo.adjunction_failures.is_empty());
    assert_eq!(mo.unit_endomorphisms, 1);
}

#[test]
fn invariant_morphisms_from_the_unit_to_gamma() {
    let toric = common::toric::<Cyclotomic>();
    let f = common::frob(&toric, &["e"]);
    let cp = CrossedProduct::new(&toric, &f);
    let (one, gamma) = (toric.unit(), f.object.clone());
    // End(ι𝟙) = Hom(Γ, 𝟙) is one-dimensional
    assert_eq!(cp.hom(&one, &one).len(), 1);
    let homs = cp.hom(&one, &gamma);
    assert_eq!(homs.len(), 2);
    // invariants: Σ c_i s_i with γ_g(Σ c_i s_i) = Σ c_i s_i for every g
    let k = homs.len();
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    for g in 0..f.order() {
        let diffs: Vec<Vec<Cyclotomic>> = homs.iter().map(|s| cp.act(g, s).s.sub(&s.s).into_data()).collect();
        for r in 0..diffs[0].len() {
            rows.push((0..k).map(|i| diffs[i][r].clone()).collect());
        }
    }
    assert_eq!(Matrix::from_rows(rows).nullspace(0.0).len(), 1);
}

fn toric_self_braiding<F: Scalar>() {
    let toric = common::toric::<F>();
    let f = common::frob(&toric, &["e"]);
    let cc = common::crossed(&toric, &f);
    let cp = &cc.product;
    let mm = cc.simples.iter().find(|s| s.label() == "m").unwrap();
    let g = mm.grade.element.unwrap();
    // γ_g(M) = M on the nose
    assert!(zero::<F>(cp.act_object(g, &mm.object).p.residual(&mm.object.p)));
    let c = crossed_braiding(cp, &mm.object, &mm.object).unwrap();
    let pp = cp.tensor(&mm.object.idempotent(), &mm.object.idempotent());
    // b(m, m) = (−1)^{0·1} = 1
    assert!(zero::<F>(c.s.residual(&pp.s)));
    let inv = crossed_braiding_inverse(cp, &mm.object, g, &mm.object).unwrap();
    assert!(zero::<F>(cp.compose(&inv, &c).unwrap().s.residual(&pp.s)));
}

#[test]
fn toric_flux_braids_trivially_with_itself() {
    toric_self_braiding::<Cyclotomic>();
    toric_self_braiding::<ComplexFloat>();
}

#[test]
fn reducible_iota_is_inhomogeneous() {
    let toric = common::toric::<Cyclotomic>();
    let f = common::frob(&toric, &["e"]);
    let cp = CrossedProduct::new(&toric, &f);
    let x = toric.direct_sum(&[simple(&toric, "1").clone(), simple(&toric, "m").clone()]);
    let info = cp.grade(&cp.iota_object(&x)).unwrap();
    assert!(!info.homogeneous);
    assert!(matches!(info.element(), Err(Error::Inhomogeneous(_))));
    let m = cp.grade(&cp.iota_object(simple(&toric, "m"))).unwrap();
    assert!(m.homogeneous);
    assert_eq!(f.group.name(m.element().unwrap()), "g");
}

/// χ_k(∂₀X) against φ_X(k) on Vec(Z3×Z3), b = ζ3^{a1·b2}, S = ⟨(1,0)⟩, X = (0,1).
fn character_convention<F: Scalar>() {
    let cat = common::z3_double::<F>();
    let frob = common::frob(&cat, &["(1,0)"]);
    let cp = CrossedProduct::new(&cat, &frob);
    let x = simple(&cat, "(0,1)");
    let d0 = abelian_grade(&cp, x).unwrap().element().unwrap();
    let phi = character_of(&cp, x).unwrap();
    for (k, &i) in frob.subcategory.simples.iter().enumerate() {
        let xk = cat.simple(i);
        // X_k = (k,0): the monodromy with X is b((k,0),(0,1))·b((0,1),(k,0)) = ζ^k
        let kk = cat.labels()[i].trim_start_matches('(').split(',').next().unwrap().parse::<i64>().unwrap();
        assert!(phi[k].approx_eq(&F::root_of_unity(kk, 3).unwrap(), 1e-9));
        let chi = fiber(&cat, &frob, xk).unwrap().action[d0].get(0, 0).clone();
        assert!(chi.approx_eq(&phi[k], 1e-9), "χ_{}(∂₀X) = {:?}, φ = {:?}", cat.labels()[i], chi.to_complex(), phi[k].to_complex());
    }
    assert!(!phi.iter().all(|p| p.approx_eq(&F::one(), 1e-9)));
}

#[test]
fn abelian_grading_matches_the_monodromy_character() {
    character_convention::<Cyclotomic>();
    character_convention::<ComplexFloat>();
}
