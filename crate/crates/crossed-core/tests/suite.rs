mod common;

use crossed_core::category::ConcreteCategory;
use crossed_core::generators::{corrupted_pointed_category, PointedSpec};
use crossed_core::group::FiniteGroup;
use crossed_core::verify::{run_suite, Faults, Report, Status, SuiteOptions, CHECKS};
use crossed_core::{ComplexFloat, Cyclotomic, Scalar};

fn run<F: Scalar>(name: &str, cat: &ConcreteCategory<F>, s: &[&str]) -> Report {
    run_suite(name, cat, &common::labels(s), &SuiteOptions::default())
}

fn describe(r: &Report) -> String {
    r.checks
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {} {}", c.name, c.status.as_str(), c.detail))
        .collect::<Vec<_>>()
        .join("\n")
}

fn all_pass<F: Scalar>() {
    let rz4 = common::rep::<F>(&FiniteGroup::cyclic(4));
    let two = rz4.labels()[common::rep_zn_index(&rz4, 4, 2)].clone();
    let reports = vec![
        run("toric-code", &common::toric::<F>(), &["e"]),
        run("dz2", &common::dz2::<F>(), &["e:r1"]),
        run("ds3", &common::ds3::<F>(), &["e:r1", "e:r2"]),
        run("ds3-sign", &common::ds3::<F>(), &["e:r1"]),
        run("repz4-z2", &rz4, &[two.as_str()]),
        run("pointed-z4", &common::pointed_z4::<F>(), &["2"]),
        run("toric-x-z2", &common::toric_x_z2::<F>(), &["(1,0,0)", "(0,0,1)"]),
        run("rep-s3", &common::rep::<F>(&FiniteGroup::symmetric3()), &["r1", "r2"]),
        run("z3-double", &common::z3_double::<F>(), &["(1,0)"]),
    ];
    for r in &reports {
        assert!(r.passed(), "{} [{}]:\n{}", r.example, r.backend, describe(r));
        assert_eq!(r.checks.len(), CHECKS.len());
        assert!(r.checks.iter().any(|c| c.status == Status::Pass));
    }
    let toric = &reports[0];
    assert_eq!(toric.simples.len(), 2);
    assert_eq!(toric.spectrum.len(), 2);
    assert_eq!(toric.group.as_deref(), Some("L^"));
    assert_eq!(reports[2].simples.len(), 6);
    assert_eq!(reports[2].group.as_deref(), Some("S3/N"));
    assert!(reports[4].simples.iter().all(|s| s.grade.as_deref() == Some("e")));
}

#[test]
fn every_example_passes_exact() {
    all_pass::<Cyclotomic>();
}

#[test]
fn every_example_passes_float() {
    all_pass::<ComplexFloat>();
}

#[test]
fn abelian_grading_is_exercised() {
    let r = run("z3-double", &common::z3_double::<Cyclotomic>(), &["(1,0)"]);
    assert_eq!(r.check("crossprod.abelian_grading").unwrap().status, Status::Pass);
    let r = run("ds3", &common::ds3::<Cyclotomic>(), &["e:r2"]);
    assert_eq!(r.check("crossprod.abelian_grading").unwrap().status, Status::Skipped);
}

#[test]
fn corrupted_hexagon_is_caught_and_blocks_downstream() {
    let spec = PointedSpec {
        orders: vec![4],
        exponents: vec![vec![2]],
        root_order: Some(4),
        labels: Some(common::labels(&["0", "1", "2", "3"])),
    };
    let cat = corrupted_pointed_category::<Cyclotomic>(&spec, (1, 2), Cyclotomic::from_i64(-1), common::opts()).unwrap();
    let r = run("corrupted-hexagon", &cat, &["2"]);
    assert!(!r.passed());
    let hex = r.check("category.hexagon").unwrap();
    assert_eq!(hex.status, Status::Fail);
    assert!(hex.detail.contains('(') && hex.detail.contains(','), "detail should name a triple: {}", hex.detail);
    for c in &r.checks {
        if c.name.starts_with("frobenius.") || c.name.starts_with("crossprod.") {
            assert_eq!(c.status, Status::Skipped, "{}", c.name);
        }
    }
}

#[test]
fn wrong_sign_comultiplication_fails_the_laws() {
    let cat = common::toric::<Cyclotomic>();
    let opts = SuiteOptions {
        faults: Faults {
            frobenius: Some(Box::new(|f| f.delta = f.delta.scale(&Cyclotomic::from_i64(-1)))),
            ..Faults::default()
        },
        ..SuiteOptions::default()
    };
    let r = run_suite("toric-code", &cat, &common::labels(&["e"]), &opts);
    assert_eq!(r.check("frobenius.laws").unwrap().status, Status::Fail);
    assert!(r.checks.iter().filter(|c| c.name.starts_with("crossprod.")).all(|c| c.status == Status::Skipped));
}

#[test]
fn identity_action_index_breaks_the_action() {
    let cat = common::ds3::<Cyclotomic>();
    let opts = SuiteOptions {
        faults: Faults {
            action_index: Some(|_, g| g),
            ..Faults::default()
        },
        ..SuiteOptions::default()
    };
    let r = run_suite("ds3", &cat, &common::labels(&["e:r1", "e:r2"]), &opts);
    assert_eq!(r.check("crossprod.action").unwrap().status, Status::Fail, "{}", describe(&r));
    assert_eq!(r.check("crossprod.grade_covariance").unwrap().status, Status::Skipped);
}

#[test]
fn fermion_is_not_a_valid_subcategory() {
    let cat = common::fermion::<Cyclotomic>();
    let r = run("fermion", &cat, &["f"]);
    assert_eq!(r.check("category.tannakian").unwrap().status, Status::Fail);
    assert!(r.checks.iter().filter(|c| c.name.starts_with("frobenius.")).all(|c| c.status == Status::Skipped));
    // the category itself is fine
    assert_eq!(r.check("category.hexagon").unwrap().status, Status::Pass);
}

#[test]
fn filter_selects_by_substring() {
    let cat = common::toric::<Cyclotomic>();
    let opts = SuiteOptions {
        filter: Some("grade".into()),
        ..SuiteOptions::default()
    };
    let r = run_suite("toric-code", &cat, &common::labels(&["e"]), &opts);
    assert!(!r.checks.is_empty());
    assert!(r.checks.iter().all(|c| c.name.contains("grade")));
    let full = run("toric-code", &cat, &["e"]);
    for c in &r.checks {
        let f = full.check(&c.name).unwrap();
        assert_eq!(c.status, f.status, "{}", c.name);
        assert_eq!(c.residual, f.residual, "{}", c.name);
    }
}

#[test]
fn fixed_seed_is_deterministic() {
    let cat = common::ds3::<ComplexFloat>();
    let opts = SuiteOptions {
        seed: 11,
        ..SuiteOptions::default()
    };
    let a = run_suite("ds3", &cat, &common::labels(&["e:r2"]), &opts);
    let b = run_suite("ds3", &cat, &common::labels(&["e:r2"]), &opts);
    let strip = |r: &Report| r.checks.iter().map(|c| (c.name.clone(), c.status, c.residual, c.detail.clone())).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
    let labels = |r: &Report| r.simples.iter().map(|s| (s.label.clone(), s.grade.clone())).collect::<Vec<_>>();
    assert_eq!(labels(&a), labels(&b));
}

#[test]
fn seeds_do_not_change_outcomes() {
    let cat = common::ds3::<ComplexFloat>();
    for seed in [1u64, 2, 3, 99] {
        let opts = SuiteOptions { seed, ..SuiteOptions::default() };
        let r = run_suite("ds3", &cat, &common::labels(&["e:r1", "e:r2"]), &opts);
        assert!(r.passed(), "seed {seed}:\n{}", describe(&r));
    }
}

#[test]
fn check_names_are_unique_and_anchored() {
    let mut names: Vec<&str> = CHECKS.iter().map(|c| c.0).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), CHECKS.len());
    assert!(CHECKS.iter().all(|(n, a)| !a.is_empty() && n.contains('.')));
}
