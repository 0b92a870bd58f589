//! Acceptance criteria, one line each. Runs without the libtest harness so the lines are
//! always printed; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use crossed::config::{Backend, ExampleConfig};
use crossed::pipeline::{build_category, run};
use crossed::presets::{preset, PASSING};
use crossed_core::crossprod::{fixed_subgroup, zcenter, CrossedCategory};
use crossed_core::frobenius::regular_frobenius;
use crossed_core::generators::tannakian_subcategory;
use crossed_core::verify::{run_suite, Faults, Report, Status, SuiteOptions};
use crossed_core::{ComplexFloat, Cyclotomic, Scalar};

const TOL: f64 = 1e-9;
const TORIC_LIMIT_S: f64 = 1.0;
const DS3_LIMIT_S: f64 = 60.0;
const POINTED: &[&str] = &["toric-code", "pointed-z4", "toric-x-z2"];

type Outcome = Result<String, String>;

fn config(name: &str, backend: Backend) -> ExampleConfig {
    let mut cfg = preset(name).expect("preset");
    cfg.run.backend = backend;
    cfg.run.tol = TOL;
    cfg
}

fn report(name: &str, backend: Backend) -> Report {
    run(&config(name, backend), None).expect("run")
}

struct Runs {
    float: Vec<Report>,
    exact: Vec<Report>,
}

impl Runs {
    fn all(&self) -> impl Iterator<Item = &Report> {
        self.float.iter().chain(&self.exact)
    }

    fn get(&self, name: &str, backend: Backend) -> &Report {
        let v = match backend {
            Backend::Float => &self.float,
            Backend::Exact => &self.exact,
        };
        v.iter().find(|r| r.example == name).expect("report")
    }
}

fn tag(r: &Report) -> String {
    format!("{}[{}]", r.example, r.backend)
}

fn require_pass(runs: &Runs, names: &[&str], examples: &[&str]) -> Outcome {
    let mut count = 0;
    for r in runs.all().filter(|r| examples.contains(&r.example.as_str())) {
        for n in names {
            let c = r.check(n).ok_or_else(|| format!("{}: no check {n}", tag(r)))?;
            if c.status != Status::Pass {
                return Err(format!("{}: {n} {} ({})", tag(r), c.status.as_str(), c.detail));
            }
            count += 1;
        }
    }
    Ok(format!("{count} check runs over {} presets × 2 backends", examples.len()))
}

fn dimension_formula(runs: &Runs) -> Outcome {
    let cfg = config("toric-code", Backend::Exact);
    let start = Instant::now();
    let cat = build_category::<Cyclotomic>(&cfg).map_err(|e| e.to_string())?;
    let sub = tannakian_subcategory(&cat, &cfg.subcategory.generators).map_err(|e| e.to_string())?;
    let frob = regular_frobenius(&cat, &sub).map_err(|e| e.to_string())?;
    let cc = CrossedCategory::build(&cat, &frob, 0).map_err(|e| e.to_string())?;
    let total = cc.total_dimension();
    if total != Cyclotomic::from_i64(2) {
        return Err(format!("toric exact Σd² = {}", total.serialize()));
    }
    let _ = report("toric-code", Backend::Float);
    let toric_s = start.elapsed().as_secs_f64();

    let toric = runs.get("toric-code", Backend::Float);
    if (toric.dims.total - 2.0).abs() > TOL {
        return Err(format!("toric float Σd² = {}", toric.dims.total));
    }
    let start = Instant::now();
    let ds3 = report("ds3", Backend::Exact);
    let ds3_s = start.elapsed().as_secs_f64();
    for r in [&ds3, runs.get("ds3", Backend::Float)] {
        if (r.dims.total - 6.0).abs() > TOL || (r.dims.ambient - 36.0).abs() > TOL {
            return Err(format!("{} Σd² = {}, dim C = {}", tag(r), r.dims.total, r.dims.ambient));
        }
    }
    if toric_s >= TORIC_LIMIT_S || ds3_s >= DS3_LIMIT_S {
        return Err(format!("runtime toric {toric_s:.3}s, D(S3) {ds3_s:.3}s"));
    }
    Ok(format!("toric Σd² = 2 exactly, D(S3) Σd² = 6; toric {toric_s:.3}s < {TORIC_LIMIT_S}s, D(S3) {ds3_s:.2}s < {DS3_LIMIT_S}s"))
}

fn full_spectrum(runs: &Runs) -> Outcome {
    for backend in [Backend::Float, Backend::Exact] {
        let toric = runs.get("toric-code", backend);
        let spec: BTreeSet<&str> = toric.spectrum.iter().map(String::as_str).collect();
        if spec != BTreeSet::from(["e", "g"]) || toric.group_order != Some(2) {
            return Err(format!("{} spectrum {:?}", tag(toric), toric.spectrum));
        }
        let ds3 = runs.get("ds3", backend);
        if ds3.spectrum.len() != 6 || ds3.group_order != Some(6) {
            return Err(format!("{} spectrum {:?}", tag(ds3), ds3.spectrum));
        }
        for g in &ds3.spectrum {
            let carriers: Vec<_> = ds3.simples.iter().filter(|s| s.grade.as_deref() == Some(g.as_str())).collect();
            if carriers.len() != 1 || (carriers[0].dim_value - 1.0).abs() > TOL {
                return Err(format!("{}: grade {g} carried by {} simples", tag(ds3), carriers.len()));
            }
        }
    }
    Ok("toric spectrum Z2; D(S3) spectrum all 6 elements, one dim-1 simple each".into())
}

fn trivial_spectrum(runs: &Runs) -> Outcome {
    for backend in [Backend::Float, Backend::Exact] {
        let r = runs.get("repz4-z2", backend);
        if r.spectrum != ["e"] {
            return Err(format!("{} spectrum {:?}", tag(r), r.spectrum));
        }
        let c = r.check("crossprod.ordinary_braiding").ok_or("missing ordinary_braiding")?;
        if c.status != Status::Pass || !c.detail.contains("holds") {
            return Err(format!("{}: {}", tag(r), c.detail));
        }
    }
    Ok("Rep(Z4) ⋊ ⟨order-2 character⟩: spectrum {e}, ordinary braiding natural".into())
}

fn spectrum_theorem() -> Outcome {
    fn one<F: Scalar>(backend: Backend) -> Outcome {
        let cfg = config("toric-x-z2", backend);
        let cat = build_category::<F>(&cfg).map_err(|e| e.to_string())?;
        let sub = tannakian_subcategory(&cat, &cfg.subcategory.generators).map_err(|e| e.to_string())?;
        let frob = regular_frobenius(&cat, &sub).map_err(|e| e.to_string())?;
        let z2 = zcenter(&cat);
        let meet: Vec<usize> = sub.simples.iter().copied().filter(|i| z2.members().contains(i)).collect();
        if meet.len() <= 1 || meet.len() >= sub.simples.len() {
            return Err(format!("S ∩ Z₂(C) has {} of {} simples", meet.len(), sub.simples.len()));
        }
        let n: BTreeSet<usize> = fixed_subgroup(&cat, &frob, &meet).map_err(|e| e.to_string())?.into_iter().collect();
        let cc = CrossedCategory::build(&cat, &frob, cfg.run.seed).map_err(|e| e.to_string())?;
        let spec: BTreeSet<usize> = cc.spectrum().into_iter().collect();
        if n != spec {
            return Err(format!("N = {n:?}, Spec = {spec:?}"));
        }
        Ok(format!("|S ∩ Z₂| = {}, |N| = |Spec| = {}", meet.len(), n.len()))
    }
    let f = one::<ComplexFloat>(Backend::Float)?;
    let e = one::<Cyclotomic>(Backend::Exact)?;
    if f != e {
        return Err(format!("backends disagree: {f} vs {e}"));
    }
    Ok(format!("toric-x-z2: {e} in both backends"))
}

fn grade_zero(runs: &Runs) -> Outcome {
    require_pass(runs, &["crossprod.grade_zero", "crossprod.graded_dimensions"], PASSING)
}

fn crossed_structure(runs: &Runs) -> Outcome {
    require_pass(
        runs,
        &[
            "crossprod.grade_multiplicative",
            "crossprod.grade_covariance",
            "crossprod.action",
            "crossprod.braiding_naturality",
            "crossprod.braiding_relations",
            "crossprod.braiding_invertible",
        ],
        PASSING,
    )
}

fn frobenius_suite(runs: &Runs) -> Outcome {
    const NAMES: &[&str] = &[
        "frobenius.laws",
        "frobenius.normalization",
        "frobenius.unit_multiplicity",
        "frobenius.absorption",
        "frobenius.automorphisms",
        "frobenius.fiber_functor",
    ];
    for r in &runs.exact {
        if !r.notes.is_empty() {
            return Err(format!("{} did not stay exact: {:?}", tag(r), r.notes));
        }
        for n in NAMES {
            let c = r.check(n).ok_or_else(|| format!("{}: no check {n}", tag(r)))?;
            if c.status != Status::Pass || c.residual.is_some_and(|x| x != 0.0) {
                return Err(format!("{}: {n} {} ({})", tag(r), c.status.as_str(), c.detail));
            }
        }
    }
    Ok(format!("{} checks exact on {} presets", NAMES.len(), runs.exact.len()))
}

fn oracle_equivalence(runs: &Runs) -> Outcome {
    require_pass(runs, &["crossprod.module_oracle"], PASSING)
}

fn abelian_grading(runs: &Runs) -> Outcome {
    require_pass(runs, &["crossprod.abelian_grading"], POINTED)
}

fn property_suites(runs: &Runs) -> Outcome {
    for r in runs.all() {
        if let Some(c) = r.checks.iter().find(|c| c.status == Status::Fail) {
            return Err(format!("{}: {} failed ({})", tag(r), c.name, c.detail));
        }
        for c in r.checks.iter().filter(|c| c.status == Status::Skipped) {
            if c.name != "crossprod.abelian_grading" || r.group.is_none() {
                return Err(format!("{}: {} skipped", tag(r), c.name));
            }
        }
    }

    let hex = report("corrupted-hexagon", Backend::Exact);
    only_fails(&hex, &["category.hexagon"])?;

    let cfg = config("toric-code", Backend::Exact);
    let cat = build_category::<Cyclotomic>(&cfg).map_err(|e| e.to_string())?;
    let opts = SuiteOptions {
        faults: Faults {
            frobenius: Some(Box::new(|f| f.delta = f.delta.scale(&Cyclotomic::from_i64(-1)))),
            ..Faults::default()
        },
        ..SuiteOptions::default()
    };
    let r = run_suite("toric-code/Δ-negated", &cat, &cfg.subcategory.generators, &opts);
    only_fails(&r, &["frobenius.laws"])?;

    let cfg = config("ds3", Backend::Float);
    let cat = build_category::<ComplexFloat>(&cfg).map_err(|e| e.to_string())?;
    let opts = SuiteOptions {
        faults: Faults {
            action_index: Some(|_, g| g),
            ..Faults::default()
        },
        ..SuiteOptions::default()
    };
    let r = run_suite("ds3/γ_g-without-inverse", &cat, &cfg.subcategory.generators, &opts);
    only_fails(&r, &["crossprod.action"])?;

    let checks: usize = runs.all().map(|r| r.checks.len()).sum();
    Ok(format!("{checks} check runs pass; 3 negative controls fail exactly their target"))
}

fn only_fails(r: &Report, expected: &[&str]) -> Result<(), String> {
    let failed: Vec<&str> = r.failed().iter().map(|c| c.name.as_str()).collect();
    if failed != expected {
        return Err(format!("{}: failed {failed:?}, expected {expected:?}", r.example));
    }
    Ok(())
}

fn main() {
    let runs = Runs {
        float: PASSING.iter().map(|p| report(p, Backend::Float)).collect(),
        exact: PASSING.iter().map(|p| report(p, Backend::Exact)).collect(),
    };
    let criteria: Vec<(&str, Outcome)> = vec![
        ("dimension formula", dimension_formula(&runs)),
        ("full spectrum for modular C", full_spectrum(&runs)),
        ("trivial spectrum when S ⊂ Z₂(C)", trivial_spectrum(&runs)),
        ("spectrum equals the fixed subgroup N", spectrum_theorem()),
        ("grade-e part", grade_zero(&runs)),
        ("crossed structure", crossed_structure(&runs)),
        ("Frobenius suite", frobenius_suite(&runs)),
        ("module oracle", oracle_equivalence(&runs)),
        ("abelian grading", abelian_grading(&runs)),
        ("property suites and negative controls", property_suites(&runs)),
    ];
    let mut failures = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} (tol {TOL:e}): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} (tol {TOL:e}): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
