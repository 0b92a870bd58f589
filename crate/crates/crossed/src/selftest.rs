//! Arithmetic, linear algebra and category properties on built-in fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crossed_core::generators::{drinfeld_double, pointed_category, rep_category, BuildOptions, PointedSpec};
use crossed_core::group::FiniteGroup;
use crossed_core::linalg::{split_idempotents, AlgebraPresentation, Matrix, SplitOptions};
use crossed_core::scalar::residual;
use crossed_core::verify::{run_suite, Status, SuiteOptions};
use crossed_core::Scalar;

pub struct SelfCheck {
    pub name: String,
    pub residual: f64,
    pub ok: bool,
    pub detail: String,
}

fn within<F: Scalar>(r: f64, tol: f64) -> bool {
    if F::EXACT {
        r == 0.0
    } else {
        r <= tol
    }
}

fn random_scalar<F: Scalar>(rng: &mut ChaCha8Rng) -> F {
    let order = [1u32, 3, 4, 5, 8, 12][rng.gen_range(0..6)];
    (0..3).fold(F::zero(), |acc, _| {
        let c = F::from_i64(rng.gen_range(-5..=5));
        acc.add(&c.mul(&F::root_of_unity(rng.gen_range(0..order as i64), order).expect("both backends have these roots")))
    })
}

fn scalar_checks<F: Scalar>(rng: &mut ChaCha8Rng, tol: f64, out: &mut Vec<SelfCheck>) {
    let mut worst: f64 = 0.0;
    for _ in 0..32 {
        let (a, b, c) = (random_scalar::<F>(rng), random_scalar::<F>(rng), random_scalar::<F>(rng));
        worst = worst.max(residual(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        worst = worst.max(residual(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        worst = worst.max(residual(&a.add(&b).sub(&b), &a));
        if let Some(inv) = a.inv() {
            worst = worst.max(residual(&a.mul(&inv), &F::one()));
        }
    }
    out.push(SelfCheck {
        name: "scalar.field_axioms".into(),
        residual: worst,
        ok: within::<F>(worst, tol),
        detail: "associativity, distributivity, inverses on 32 random triples".into(),
    });
    let mut worst: f64 = 0.0;
    for n in 1..=12u32 {
        let z = F::root_of_unity(1, n).expect("roots of unity");
        let zn = (0..n).fold(F::one(), |acc, _| acc.mul(&z));
        worst = worst.max(residual(&zn, &F::one()));
        worst = worst.max(residual(&z.mul(&z.conj()), &F::one()));
    }
    out.push(SelfCheck {
        name: "scalar.roots_of_unity".into(),
        residual: worst,
        ok: within::<F>(worst, tol),
        detail: "ζ_n^n = 1 and |ζ_n| = 1 for n ≤ 12".into(),
    });
}

fn linalg_checks<F: Scalar>(rng: &mut ChaCha8Rng, tol: f64, out: &mut Vec<SelfCheck>) {
    // unit lower times unit upper triangular: invertible with integer entries
    let n = 5;
    let l: Matrix<F> = Matrix::from_fn(n, n, |i, j| if i == j { F::one() } else if i > j { random_scalar(rng) } else { F::zero() });
    let u: Matrix<F> = Matrix::from_fn(n, n, |i, j| if i == j { F::one() } else if i < j { random_scalar(rng) } else { F::zero() });
    let a = l.mul(&u);
    let x: Matrix<F> = Matrix::from_fn(n, 1, |_, _| random_scalar(rng));
    let b = a.mul(&x);
    let (solve_r, detail) = match a.solve_linear(&b, tol) {
        Some((y, hom)) => (a.mul(&y).residual(&b), format!("{n}×{n} system, kernel dimension {}", hom.len())),
        None => (f64::INFINITY, "solver reported no solution".into()),
    };
    out.push(SelfCheck {
        name: "linalg.solve".into(),
        residual: solve_r,
        ok: within::<F>(solve_r, tol),
        detail,
    });
    let inv_r = match a.inverse(tol) {
        Ok(ai) => a.mul(&ai).residual(&Matrix::identity(n)),
        Err(_) => f64::INFINITY,
    };
    out.push(SelfCheck {
        name: "linalg.inverse".into(),
        residual: inv_r,
        ok: within::<F>(inv_r, tol),
        detail: "A·A⁻¹ = 1".into(),
    });
    // M₂ ⊕ 𝔽 in the basis of matrix units
    let units: Vec<(usize, usize)> = vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)];
    let product = |a: usize, b: usize| -> Vec<F> {
        let ((i, j), (k, l)) = (units[a], units[b]);
        let mut v = vec![F::zero(); units.len()];
        if j == k {
            v[units.iter().position(|&e| e == (i, l)).unwrap()] = F::one();
        }
        v
    };
    let unit: Vec<F> = vec![F::one(), F::zero(), F::zero(), F::one(), F::one()];
    let (r, detail) = match AlgebraPresentation::from_products(units.len(), unit.clone(), product, tol)
        .and_then(|alg| split_idempotents(&alg, SplitOptions::new(tol, 12), rng).map(|d| (alg, d)))
    {
        Ok((alg, d)) => {
            let es = d.minimal_idempotents();
            let mut worst: f64 = 0.0;
            let mut sum = vec![F::zero(); units.len()];
            for e in &es {
                worst = worst.max(alg.idempotent_residual(e));
                sum = alg.add(&sum, e);
            }
            worst = worst.max(Matrix::column(sum).residual(&Matrix::column(unit)));
            let ok_shape = es.len() == 3 && d.blocks.len() == 2;
            (if ok_shape { worst } else { f64::INFINITY }, format!("{} minimal idempotents in {} blocks", es.len(), d.blocks.len()))
        }
        Err(e) => (f64::INFINITY, e.to_string()),
    };
    out.push(SelfCheck {
        name: "linalg.split".into(),
        residual: r,
        ok: within::<F>(r, tol),
        detail,
    });
}

fn category_checks<F: Scalar>(tol: f64, seed: u64, out: &mut Vec<SelfCheck>) {
    let opts = BuildOptions { tol, seed };
    let toric = PointedSpec {
        orders: vec![2, 2],
        exponents: vec![vec![0, 1], vec![0, 0]],
        root_order: Some(2),
        labels: None,
    };
    let fixtures = [
        ("rep-s3", rep_category::<F>(&FiniteGroup::symmetric3(), opts)),
        ("dz2", drinfeld_double::<F>(&FiniteGroup::cyclic(2), opts)),
        ("toric", pointed_category::<F>(&toric, opts)),
    ];
    for (name, cat) in fixtures {
        let cat = match cat {
            Ok(c) => c,
            Err(e) => {
                out.push(SelfCheck {
                    name: format!("category.build[{name}]"),
                    residual: f64::INFINITY,
                    ok: false,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let sopts = SuiteOptions {
            seed,
            filter: Some("category.".into()),
            ..SuiteOptions::default()
        };
        let report = run_suite(name, &cat, &[], &sopts);
        for c in report.checks.iter().filter(|c| c.name != "category.tannakian") {
            out.push(SelfCheck {
                name: format!("{}[{name}]", c.name),
                residual: c.residual.unwrap_or(0.0),
                ok: c.status == Status::Pass,
                detail: c.detail.clone(),
            });
        }
    }
}

pub fn run<F: Scalar>(tol: f64, seed: u64) -> Vec<SelfCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    scalar_checks::<F>(&mut rng, tol, &mut out);
    linalg_checks::<F>(&mut rng, tol, &mut out);
    category_checks::<F>(tol, seed, &mut out);
    out
}
