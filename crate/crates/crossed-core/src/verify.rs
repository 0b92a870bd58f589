//! The theorem suite: named checks run against one example, with pass/fail status and
//! residuals. Checks downstream of a failed stage are reported as skipped.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{ConcreteCategory, Object};
use crate::crossprod::{
    abelian_grade, character_of, crossed_braiding, crossed_braiding_inverse, fixed_subgroup, grade_zero_part, module_oracle, transparent_relative, zcenter, CrossedCategory,
    CrossedProduct, ExtMorphism, ExtObject,
};
use crate::error::Error;
use crate::frobenius::{fiber, fiber_tensor_map, regular_frobenius, solve_automorphisms, FrobeniusAlgebra};
use crate::generators::{tannakian_subcategory, Subcategory};
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, Sparse};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub anchor: &'static str,
    pub status: Status,
    /// Worst residual observed; `None` for purely combinatorial checks.
    pub residual: Option<f64>,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug)]
pub struct SimpleSummary {
    pub label: String,
    pub base: String,
    pub dim: String,
    pub dim_value: f64,
    pub grade: Option<String>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Default)]
pub struct DimensionSummary {
    /// Σ d² over the simples of C⋊S.
    pub total: f64,
    /// dim C / |G|.
    pub expected: f64,
    pub ambient: f64,
    /// (grade name, Σ d² over simples of that grade).
    pub graded: Vec<(String, f64)>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub example: String,
    pub backend: &'static str,
    pub category: String,
    pub subcategory: Vec<String>,
    pub group: Option<String>,
    pub group_order: Option<usize>,
    pub checks: Vec<CheckResult>,
    pub simples: Vec<SimpleSummary>,
    pub spectrum: Vec<String>,
    pub dims: DimensionSummary,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failed(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Fault hooks for negative controls.
pub struct Faults<F> {
    /// Applied to Γ after construction.
    pub frobenius: Option<Box<dyn Fn(&mut FrobeniusAlgebra<F>)>>,
    /// Replaces the g ↦ g⁻¹ used by γ_g.
    pub action_index: Option<fn(&FiniteGroup, usize) -> usize>,
}

impl<F> Default for Faults<F> {
    fn default() -> Self {
        Faults {
            frobenius: None,
            action_index: None,
        }
    }
}

pub struct SuiteOptions<F> {
    pub seed: u64,
    /// Random samples per hom space.
    pub samples: usize,
    /// Only checks whose name contains this substring are run.
    pub filter: Option<String>,
    /// Milliseconds since an arbitrary origin, for timings.
    pub clock: Option<fn() -> f64>,
    pub expected_group: Option<FiniteGroup>,
    pub faults: Faults<F>,
}

impl<F> Default for SuiteOptions<F> {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            samples: 8,
            filter: None,
            clock: None,
            expected_group: None,
            faults: Faults::default(),
        }
    }
}

/// Every check name with its anchor, in execution order.
pub const CHECKS: &[(&str, &str)] = &[
    ("category.zigzag", "rigidity: zig-zag identities"),
    ("category.hexagon", "braiding: hexagon identities"),
    ("category.braiding_naturality", "braiding: naturality in both variables"),
    ("category.spherical", "left and right traces agree"),
    ("category.global_dimension", "dim C = Σ d(X_i)²"),
    ("category.tannakian", "S symmetric with trivial twist and integral dimensions, S ≅ Rep(G)"),
    ("frobenius.laws", "(Γ, m, η, Δ, ε) is a commutative, cocommutative Frobenius algebra in C"),
    ("frobenius.normalization", "m∘Δ = α·1, ε∘η = β, αβ = |G|, β = 1"),
    ("frobenius.unit_multiplicity", "dim Hom(1, Γ) = 1"),
    ("frobenius.absorption", "Γ⊗X ≅ d(X)·Γ for X in S"),
    ("frobenius.automorphisms", "Aut(Γ, m, η) ≅ G"),
    ("frobenius.fiber_functor", "E(X) = Hom(1, Γ⊗X) is a monoidal G-equivariant fiber functor"),
    ("crossprod.calculus", "composition and tensor product of C⋊₀S: associativity, units, interchange"),
    ("crossprod.iota_functor", "ι: C → C⋊S is a faithful tensor functor"),
    ("crossprod.iota_s", "ι(X) ≅ d(X)·1 for X in S"),
    ("crossprod.naturality_left", "ι(c) is natural in the first variable"),
    ("crossprod.naturality_transparent", "ι(c_{Z,-}) is natural for Z in C∩S′"),
    ("crossprod.fixpoint", "G-invariant morphisms = p₀-stable morphisms = ι(Hom_C)"),
    ("crossprod.equivalence_relation", "X ~ Y iff Hom(Γ⊗X, Y) ≠ 0 is an equivalence relation on simples"),
    ("crossprod.block_theorem", "ι(X) ≅ N_X·⊕Z_i, shared across a ~-class"),
    ("crossprod.dimension", "dim C⋊S = dim C / |G|"),
    ("crossprod.grade_group_element", "∂(X, p) is a homogeneous grade in Aut(Γ, m, η)"),
    ("crossprod.grade_multiplicative", "∂(X⊗Y) = ∂X·∂Y"),
    ("crossprod.grade_covariance", "∂γ_g(X) = g·∂X·g⁻¹"),
    ("crossprod.action", "γ is a strict monoidal G-action fixing ι(C)"),
    ("crossprod.braiding_naturality", "c_{X,Y}: X⊗Y → γ_{∂X}(Y)⊗X is natural"),
    ("crossprod.braiding_relations", "crossed braid relations for X⊗(Z⊗T) and (X⊗Y)⊗Z"),
    ("crossprod.braiding_invertible", "the crossed braiding is invertible"),
    ("crossprod.spectrum_subgroup", "the G-spectrum is a normal subgroup"),
    ("crossprod.spectrum_theorem", "Spec C⋊S = N, the kernel of G on S∩Z₂(C)"),
    ("crossprod.grade_zero", "(C⋊S)_e ≅ (C∩S′)⋊S"),
    ("crossprod.graded_dimensions", "dim D_g = dim D_e for g in the spectrum"),
    ("crossprod.module_oracle", "C⋊S ≃ Γ-Mod_C and dim Γ-Mod_C = dim C / dim Γ"),
    ("crossprod.abelian_grading", "∂₀X from the monodromy with Γ = character φ_X = grade of ι(X)"),
    ("crossprod.ordinary_braiding", "ι(c) is natural in both variables iff S ⊂ Z₂(C)"),
    ("crossprod.transparent_center", "C∩S′ and Z₂(C) agree by S-matrix and by monodromy"),
];

fn anchor(name: &str) -> &'static str {
    CHECKS.iter().find(|(n, _)| *n == name).map(|(_, a)| *a).unwrap_or("")
}

struct Outcome {
    ok: bool,
    residual: Option<f64>,
    detail: String,
}

impl Outcome {
    fn measured(residual: f64, limit: f64, exact: bool, detail: String) -> Self {
        let ok = if exact { residual == 0.0 } else { residual <= limit };
        Outcome {
            ok,
            residual: Some(residual),
            detail,
        }
    }

    fn flag(ok: bool, detail: String) -> Self {
        Outcome { ok, residual: None, detail }
    }

    fn error(e: Error) -> Self {
        Outcome {
            ok: false,
            residual: None,
            detail: e.to_string(),
        }
    }
}

struct Runner<'o> {
    checks: Vec<CheckResult>,
    filter: Option<&'o str>,
    clock: Option<fn() -> f64>,
}

impl Runner<'_> {
    fn selected(&self, name: &str) -> bool {
        self.filter.map_or(true, |f| name.contains(f))
    }

    /// Runs a check unless filtered out; returns true if it failed.
    fn run(&mut self, name: &str, blocked: Option<&str>, f: impl FnOnce() -> Outcome) -> bool {
        if !self.selected(name) {
            return false;
        }
        if let Some(reason) = blocked {
            self.checks.push(CheckResult {
                name: name.to_string(),
                anchor: anchor(name),
                status: Status::Skipped,
                residual: None,
                detail: format!("skipped: {reason}"),
                elapsed_ms: 0.0,
            });
            return false;
        }
        let t0 = self.clock.map(|c| c());
        let out = f();
        let elapsed_ms = match (self.clock, t0) {
            (Some(c), Some(t)) => c() - t,
            _ => 0.0,
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            anchor: anchor(name),
            status: if out.ok { Status::Pass } else { Status::Fail },
            residual: out.residual,
            detail: out.detail,
            elapsed_ms,
        });
        !out.ok
    }

    fn skip_rest(&mut self, prefix: &str, reason: &str) {
        for (name, _) in CHECKS.iter().filter(|(n, _)| n.starts_with(prefix)) {
            if self.selected(name) && !self.checks.iter().any(|c| c.name == *name) {
                self.run(name, Some(reason), || unreachable!());
            }
        }
    }
}

fn check_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a, so that filtering does not change the samples of the remaining checks.
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h ^ seed
}

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(check_seed(seed, name))
}

/// A random combination of `basis` with small nonzero integer coefficients.
fn random_combination<F: Scalar, R: Rng>(basis: &[Matrix<F>], rng: &mut R) -> Option<Matrix<F>> {
    let first = basis.first()?;
    let mut m = Matrix::zeros(first.rows(), first.cols());
    let mut any = false;
    for b in basis {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            any = true;
            m.axpy(&F::from_i64(c), b);
        }
    }
    if !any {
        m.axpy(&F::one(), first);
    }
    Some(m)
}

fn random_ext<F: Scalar, R: Rng>(cp: &CrossedProduct<'_, F>, x: &Object<F>, y: &Object<F>, rng: &mut R) -> Option<ExtMorphism<F>> {
    let basis: Vec<Matrix<F>> = cp.hom(x, y).into_iter().map(|m| m.s).collect();
    random_combination(&basis, rng).map(|s| ExtMorphism {
        source: x.clone(),
        target: y.clone(),
        s,
    })
}

/// Runs every selected check on (C, S).
pub fn run_suite<F: Scalar>(example: &str, cat: &ConcreteCategory<F>, s_labels: &[String], opts: &SuiteOptions<F>) -> Report {
    let tol = cat.tol();
    let exact = F::EXACT;
    let mut r = Runner {
        checks: Vec::new(),
        filter: opts.filter.as_deref(),
        clock: opts.clock,
    };
    let mut report = Report {
        example: example.to_string(),
        backend: F::BACKEND,
        category: cat.name().to_string(),
        subcategory: s_labels.to_vec(),
        group: None,
        group_order: None,
        checks: Vec::new(),
        simples: Vec::new(),
        spectrum: Vec::new(),
        dims: DimensionSummary::default(),
        notes: Vec::new(),
    };
    let k = cat.simples().len();
    let seed = opts.seed;

    // Ambient category.
    let mut cat_failed = false;
    cat_failed |= r.run("category.zigzag", None, || {
        let mut worst: f64 = 0.0;
        for x in cat.simples() {
            let n = x.dim();
            let id = Sparse::identity(n);
            let xd = cat.dual(x);
            let z1 = cat.ev(x).embed(n, 1).mul(&cat.coev(x).embed(1, n));
            let z2 = cat.ev(x).embed(1, n).mul(&cat.coev(x).embed(n, 1));
            let z3 = cat.ev_right(x).embed(1, n).mul(&cat.coev_right(x).embed(n, 1));
            let z4 = cat.ev_right(x).embed(n, 1).mul(&cat.coev_right(x).embed(1, n));
            for z in [z1, z2, z3, z4] {
                worst = worst.max(z.residual(&id));
            }
            let unit = cat.unit();
            worst = worst
                .max(cat.morphism_residual(&cat.tensor(&xd, x), &unit, &cat.ev(x).to_dense()))
                .max(cat.morphism_residual(&unit, &cat.tensor(x, &xd), &cat.coev(x).to_dense()))
                .max(cat.morphism_residual(&cat.tensor(x, &xd), &unit, &cat.ev_right(x).to_dense()))
                .max(cat.morphism_residual(&unit, &cat.tensor(&xd, x), &cat.coev_right(x).to_dense()));
        }
        Outcome::measured(worst, tol, exact, format!("{k} simples"))
    });
    cat_failed |= r.run("category.hexagon", None, || {
        let mut worst: f64 = 0.0;
        let mut culprit = None;
        for (a, x) in cat.simples().iter().enumerate() {
            for (b, y) in cat.simples().iter().enumerate() {
                for (c, z) in cat.simples().iter().enumerate() {
                    let yz = cat.tensor(y, z);
                    let lhs = cat.braiding_sparse(x, &yz);
                    let rhs = cat.braiding_sparse(x, z).embed(y.dim(), 1).mul(&cat.braiding_sparse(x, y).embed(1, z.dim()));
                    let xy = cat.tensor(x, y);
                    let lhs2 = cat.braiding_sparse(&xy, z);
                    let rhs2 = cat.braiding_sparse(x, z).embed(1, y.dim()).mul(&cat.braiding_sparse(y, z).embed(x.dim(), 1));
                    let res = lhs.residual(&rhs).max(lhs2.residual(&rhs2));
                    if res > worst {
                        worst = res;
                        culprit = Some((a, b, c));
                    }
                }
            }
        }
        let detail = match culprit {
            Some((a, b, c)) if worst > 0.0 => format!(
                "worst triple ({}, {}, {})",
                cat.labels()[a],
                cat.labels()[b],
                cat.labels()[c]
            ),
            _ => format!("{} triples", k * k * k),
        };
        Outcome::measured(worst, tol, exact, detail)
    });
    cat_failed |= r.run("category.braiding_naturality", None, || {
        let mut rng = rng_for(seed, "category.braiding_naturality");
        let mut worst: f64 = 0.0;
        let mut count = 0;
        for a in 0..k {
            for b in 0..k {
                let src = cat.tensor(cat.simple(a), cat.simple(b));
                for t in 0..k {
                    let tgt = cat.simple(t);
                    let basis = cat.hom_basis(&src, tgt);
                    let Some(f) = random_combination(&basis, &mut rng) else { continue };
                    for y in cat.simples() {
                        // first variable: c_{T,Y}∘(f⊗1) = (1⊗f)∘c_{X,Y}
                        let fy = Sparse::from_dense(&f).embed(1, y.dim());
                        let lhs = cat.braiding_sparse(tgt, y).mul(&fy);
                        let yf = Sparse::from_dense(&f).embed(y.dim(), 1);
                        let rhs = yf.mul(&cat.braiding_sparse(&src, y));
                        // second variable: c_{Y,T}∘(1⊗f) = (f⊗1)∘c_{Y,X}
                        let lhs2 = cat.braiding_sparse(y, tgt).mul(&yf);
                        let rhs2 = fy.mul(&cat.braiding_sparse(y, &src));
                        worst = worst.max(lhs.residual(&rhs)).max(lhs2.residual(&rhs2));
                        count += 1;
                    }
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{count} squares"))
    });
    cat_failed |= r.run("category.spherical", None, || {
        let mut rng = rng_for(seed, "category.spherical");
        let mut worst: f64 = 0.0;
        for a in 0..k {
            for b in 0..k {
                let x = cat.tensor(cat.simple(a), cat.simple(b));
                let basis = cat.hom_basis(&x, &x);
                for _ in 0..opts.samples.min(2) {
                    if let Some(f) = random_combination(&basis, &mut rng) {
                        worst = worst.max(crate::scalar::residual(&cat.trace(&f, &x), &cat.left_trace(&f, &x)));
                    }
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{} objects", k * k))
    });
    cat_failed |= r.run("category.global_dimension", None, || {
        let gd = cat.global_dimension();
        let res = crate::scalar::residual(&gd, cat.declared_global_dimension());
        Outcome::measured(res, tol * gd.magnitude().max(1.0), exact, format!("Σd² = {gd}, declared {}", cat.declared_global_dimension()))
    });
    let mut sub: Option<Subcategory> = None;
    cat_failed |= r.run("category.tannakian", None, || match tannakian_subcategory(cat, s_labels) {
        Ok(s) => {
            let labels: Vec<&str> = s.simples.iter().map(|&i| cat.labels()[i].as_str()).collect();
            let detail = format!("S = {{{}}}", labels.join(", "));
            sub = Some(s);
            Outcome::flag(true, detail)
        }
        Err(e) => Outcome::error(e),
    });
    if sub.is_none() && !r.selected("category.tannakian") {
        sub = tannakian_subcategory(cat, s_labels).ok();
    }
    if cat_failed || sub.is_none() {
        r.skip_rest("frobenius.", "the ambient category or S failed its checks");
        r.skip_rest("crossprod.", "the ambient category or S failed its checks");
        report.checks = r.checks;
        return report;
    }
    let sub = sub.expect("checked above");

    // Regular algebra.
    let frob = match regular_frobenius(cat, &sub) {
        Ok(mut f) => {
            if let Some(hook) = &opts.faults.frobenius {
                hook(&mut f);
            }
            f
        }
        Err(e) => {
            r.run("frobenius.laws", None, || Outcome::error(e));
            r.skip_rest("frobenius.", "no regular algebra");
            r.skip_rest("crossprod.", "no regular algebra");
            report.checks = r.checks;
            return report;
        }
    };
    report.group = Some(frob.group.label().to_string());
    report.group_order = Some(frob.order());
    let laws_failed = r.run("frobenius.laws", None, || {
        let laws = frob.law_residuals(cat);
        let (worst_name, worst) = laws.iter().fold(("", 0.0f64), |acc, (n, v)| if *v > acc.1 { (n, *v) } else { acc });
        let detail = if worst > 0.0 { format!("worst: {worst_name}") } else { format!("{} identities", laws.len()) };
        Outcome::measured(worst, tol, exact, detail)
    });
    let blocked_by_laws = laws_failed.then_some("the Frobenius laws failed");
    let mut frob_failed = laws_failed;
    frob_failed |= r.run("frobenius.normalization", blocked_by_laws, || {
        let worst = frob.normalization_residuals().iter().fold(0.0f64, |a, (_, v)| a.max(*v));
        Outcome::measured(worst, tol, exact, format!("α = {}, β = {}, |G| = {}", frob.alpha, frob.beta, frob.order()))
    });
    frob_failed |= r.run("frobenius.unit_multiplicity", blocked_by_laws, || {
        let d = cat.hom_dim(&cat.unit(), &frob.object);
        Outcome::flag(d == 1, format!("dim Hom(1, Γ) = {d}"))
    });
    frob_failed |= r.run("frobenius.absorption", blocked_by_laws, || {
        let base = cat.decompose(&frob.object);
        let mut bad = Vec::new();
        for &i in &sub.simples {
            let x = cat.simple(i);
            let d = cat.dim(x).as_integer(tol).unwrap_or(-1);
            let got = cat.decompose(&cat.tensor(&frob.object, x));
            let want: Vec<usize> = base.iter().map(|&m| m * d.max(0) as usize).collect();
            if got != want {
                bad.push(cat.labels()[i].clone());
            }
        }
        Outcome::flag(bad.is_empty(), if bad.is_empty() { format!("{} simples of S", sub.len()) } else { format!("fails for {}", bad.join(", ")) })
    });
    frob_failed |= r.run("frobenius.automorphisms", blocked_by_laws, || {
        let g = &frob.group;
        let mut worst: f64 = 0.0;
        for a in 0..g.order() {
            worst = worst.max(frob.automorphism_residual(cat, &frob.automorphisms[a].to_dense()));
            for b in 0..g.order() {
                let prod = frob.automorphisms[a].mul(&frob.automorphisms[b]);
                worst = worst.max(prod.residual(&frob.automorphisms[g.mul(a, b)]));
            }
        }
        let solved = match solve_automorphisms(cat, &frob, check_seed(seed, "frobenius.automorphisms")) {
            Ok(s) => s,
            Err(e) => return Outcome::error(e),
        };
        if solved.len() != g.order() {
            return Outcome::flag(false, format!("solver found {} automorphisms, |G| = {}", solved.len(), g.order()));
        }
        let mut hit = vec![false; g.order()];
        for s in &solved {
            let (idx, res, _) = frob.match_automorphism(s);
            worst = worst.max(res);
            hit[idx] = true;
        }
        if hit.iter().any(|h| !h) {
            return Outcome::flag(false, "solved and constructed automorphisms differ".into());
        }
        let mut detail = format!("|Aut| = {}", g.order());
        if let Some(expected) = &opts.expected_group {
            if g.isomorphism_to(expected).is_none() {
                return Outcome::flag(false, format!("Aut(Γ) is not isomorphic to {}", expected.label()));
            }
            detail = format!("{detail}, ≅ {}", expected.label());
        }
        Outcome::measured(worst, tol, exact, detail)
    });
    frob_failed |= r.run("frobenius.fiber_functor", blocked_by_laws, || {
        let mut worst: f64 = 0.0;
        let mut spaces = Vec::new();
        for &i in &sub.simples {
            let e = match fiber(cat, &frob, cat.simple(i)) {
                Ok(e) => e,
                Err(err) => return Outcome::error(err),
            };
            let d = cat.dim(cat.simple(i)).as_integer(tol).unwrap_or(-1);
            if e.dim() as i64 != d {
                return Outcome::flag(false, format!("dim E({}) = {} ≠ d = {d}", cat.labels()[i], e.dim()));
            }
            spaces.push(e);
        }
        for a in 0..spaces.len() {
            for b in 0..spaces.len() {
                let (ex, ey) = (&spaces[a], &spaces[b]);
                let xy = cat.tensor(&ex.object, &ey.object);
                let exy = match fiber(cat, &frob, &xy) {
                    Ok(e) => e,
                    Err(err) => return Outcome::error(err),
                };
                let d = fiber_tensor_map(cat, &frob, ex, ey, &exy);
                if exy.dim() != ex.dim() * ey.dim() || d.rank(tol) != exy.dim() {
                    return Outcome::flag(false, format!("d_{{X,Y}} not invertible for ({}, {})", ex.object.label(), ey.object.label()));
                }
                for g in 0..frob.order() {
                    let lhs = d.mul(&ex.action[g].kron(&ey.action[g]));
                    let rhs = exy.action[g].mul(&d);
                    worst = worst.max(lhs.residual(&rhs));
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{} simples of S", spaces.len()))
    });
    if frob_failed || cat_failed {
        r.skip_rest("crossprod.", "the regular algebra failed its checks");
        report.checks = r.checks;
        return report;
    }

    // Crossed product.
    let mut cp = CrossedProduct::new(cat, &frob);
    if let Some(f) = opts.faults.action_index {
        cp.action_index = f;
    }
    let cc = match CrossedCategory::build_with(cp, seed) {
        Ok(cc) => cc,
        Err(e) => {
            r.run("crossprod.block_theorem", None, || Outcome::error(e));
            r.skip_rest("crossprod.", "C⋊S could not be built");
            report.checks = r.checks;
            return report;
        }
    };
    fill_summary(&mut report, &cc);
    let g = &frob.group;
    let samples = opts.samples.max(1);

    r.run("crossprod.calculus", None, || {
        let mut rng = rng_for(seed, "crossprod.calculus");
        let mut worst: f64 = 0.0;
        let pick = |rng: &mut ChaCha8Rng| rng.gen_range(0..k);
        let mut done = 0;
        for _ in 0..samples * 8 {
            if done >= samples {
                break;
            }
            let (a, b, c, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let (xa, xb, xc, xd) = (cat.simple(a), cat.simple(b), cat.simple(c), cat.simple(d));
            let (Some(s), Some(t), Some(u)) = (random_ext(&cp, xa, xb, &mut rng), random_ext(&cp, xb, xc, &mut rng), random_ext(&cp, xc, xd, &mut rng)) else {
                continue;
            };
            done += 1;
            let ut_s = cp.compose(&cp.compose(&u, &t).unwrap(), &s).unwrap();
            let u_ts = cp.compose(&u, &cp.compose(&t, &s).unwrap()).unwrap();
            worst = worst.max(ut_s.s.residual(&u_ts.s));
            let ls = cp.compose(&cp.identity(xb), &s).unwrap();
            let rs = cp.compose(&s, &cp.identity(xa)).unwrap();
            worst = worst.max(ls.s.residual(&s.s)).max(rs.s.residual(&s.s));
            // interchange with a second pair of composable morphisms
            let (Some(s2), Some(t2)) = (random_ext(&cp, xc, xd, &mut rng), random_ext(&cp, xd, xa, &mut rng)) else {
                continue;
            };
            let lhs = cp.tensor(&cp.compose(&t, &s).unwrap(), &cp.compose(&t2, &s2).unwrap());
            let rhs = cp.compose(&cp.tensor(&t, &t2), &cp.tensor(&s, &s2)).unwrap();
            worst = worst.max(lhs.s.residual(&rhs.s));
            let assoc_l = cp.tensor(&cp.tensor(&s, &t), &u);
            let assoc_r = cp.tensor(&s, &cp.tensor(&t, &u));
            worst = worst.max(assoc_l.s.residual(&assoc_r.s));
        }
        Outcome::measured(worst, tol, exact, format!("{done} samples"))
    });
    r.run("crossprod.iota_functor", None, || {
        let mut rng = rng_for(seed, "crossprod.iota_functor");
        let mut worst: f64 = 0.0;
        let mut done = 0;
        for a in 0..k {
            for b in 0..k {
                let src = cat.tensor(cat.simple(a), cat.simple(b));
                for c in 0..k {
                    let tgt = cat.simple(c);
                    let Some(f) = random_combination(&cat.hom_basis(&src, tgt), &mut rng) else { continue };
                    let Some(h) = random_combination(&cat.hom_basis(tgt, tgt), &mut rng) else { continue };
                    let lhs = cp.iota(&h.mul(&f), &src, tgt);
                    let rhs = cp.compose(&cp.iota(&h, tgt, tgt), &cp.iota(&f, &src, tgt)).unwrap();
                    worst = worst.max(lhs.s.residual(&rhs.s));
                    let y = cat.simple((a + c) % k);
                    let Some(u) = random_combination(&cat.hom_basis(y, y), &mut rng) else { continue };
                    let lhs = cp.iota(&f.kron(&u), &cat.tensor(&src, y), &cat.tensor(tgt, y));
                    let rhs = cp.tensor(&cp.iota(&f, &src, tgt), &cp.iota(&u, y, y));
                    worst = worst.max(lhs.s.residual(&rhs.s));
                    // faithfulness: ι(f) = 0 only if f = 0
                    if cp.iota(&f, &src, tgt).s.is_zero_tol(tol) && !f.is_zero_tol(tol) {
                        return Outcome::flag(false, "ι is not faithful".into());
                    }
                    done += 1;
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{done} samples"))
    });
    r.run("crossprod.iota_s", None, || {
        let mut rng = rng_for(seed, "crossprod.iota_s");
        let unit = cp.iota_object(&cat.unit());
        for &i in &sub.simples {
            let x = cp.iota_object(cat.simple(i));
            let d = cat.dim(cat.simple(i)).as_integer(tol).unwrap_or(-1);
            let end = cp.compressed_hom(&x, &x).len() as i64;
            if end != d * d {
                return Outcome::flag(false, format!("dim End(ι({})) = {end} ≠ d² = {}", cat.labels()[i], d * d));
            }
            let parts = match cp.decompose(&x, &mut rng) {
                Ok(p) => p,
                Err(e) => return Outcome::error(e),
            };
            if parts.len() != 1 || parts[0].1 as i64 != d || cp.hom_dim(&unit, &parts[0].0) != 1 {
                return Outcome::flag(false, format!("ι({}) is not {d}·1", cat.labels()[i]));
            }
        }
        Outcome::flag(true, format!("{} simples of S", sub.len()))
    });
    r.run("crossprod.naturality_left", None, || {
        let mut rng = rng_for(seed, "crossprod.naturality_left");
        let mut worst: f64 = 0.0;
        let mut done = 0;
        for a in 0..k {
            for b in 0..k {
                let (x, y) = (cat.simple(a), cat.simple(b));
                let Some(s) = random_ext(&cp, x, y, &mut rng) else { continue };
                for z in cat.simples() {
                    let (lhs, rhs) = naturality_left_sides(&cp, &s, z);
                    worst = worst.max(lhs.residual(&rhs));
                    // the same identity evaluated directly in C
                    let n = frob.dim();
                    let direct_l = cat.braiding_sparse(y, z).mul_dense(&Sparse::from_dense(&s.s).embed(1, z.dim()).to_dense());
                    let c_xz = cat.braiding_sparse(x, z).embed(n, 1);
                    let c_gz = cat.braiding_sparse(&frob.object, z).embed(1, x.dim());
                    let direct_r = Sparse::from_dense(&s.s).embed(z.dim(), 1).mul(&c_gz).mul(&c_xz).to_dense();
                    worst = worst.max(direct_l.residual(&direct_r)).max(lhs.residual(&direct_l));
                    done += 1;
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{done} samples"))
    });
    let commutant = transparent_relative(cat, &sub.simples);
    r.run("crossprod.naturality_transparent", None, || {
        let mut rng = rng_for(seed, "crossprod.naturality_transparent");
        let mut worst: f64 = 0.0;
        let mut done = 0;
        for &zi in commutant.members() {
            let z = cat.simple(zi);
            for a in 0..k {
                for b in 0..k {
                    let (x, y) = (cat.simple(a), cat.simple(b));
                    let Some(s) = random_ext(&cp, x, y, &mut rng) else { continue };
                    let zx = cat.tensor(z, x);
                    let xz = cat.tensor(x, z);
                    let zy = cat.tensor(z, y);
                    let yz = cat.tensor(y, z);
                    let lhs = cp
                        .compose(&cp.iota(&cat.braiding_sparse(z, y).to_dense(), &zy, &yz), &cp.tensor(&cp.identity(z), &s))
                        .unwrap();
                    let rhs = cp
                        .compose(&cp.tensor(&s, &cp.identity(z)), &cp.iota(&cat.braiding_sparse(z, x).to_dense(), &zx, &xz))
                        .unwrap();
                    worst = worst.max(lhs.s.residual(&rhs.s));
                    done += 1;
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{done} samples over {} objects of C∩S′", commutant.members().len()))
    });
    r.run("crossprod.fixpoint", None, || {
        let p0 = frob.p0();
        let mut mismatches = Vec::new();
        for a in 0..k {
            for b in 0..k {
                let (x, y) = (cat.simple(a), cat.simple(b));
                let homs = cp.hom(x, y);
                let flat: Vec<Vec<F>> = homs.iter().map(|h| h.s.clone().into_data()).collect();
                // invariant: s∘(g⊗1) = s for every g, i.e. γ_g(s) = s
                let inv = invariant_subspace(&flat, |v| {
                    let s = Matrix::from_vec(y.dim(), frob.dim() * x.dim(), v.to_vec());
                    let mut out = Vec::new();
                    for h in 0..g.order() {
                        let m = ExtMorphism {
                            source: x.clone(),
                            target: y.clone(),
                            s: s.clone(),
                        };
                        out.push(cp.act(h, &m).s.sub(&s).into_data());
                    }
                    out
                }, tol);
                let stable = invariant_subspace(&flat, |v| {
                    let s = Matrix::from_vec(y.dim(), frob.dim() * x.dim(), v.to_vec());
                    alloc::vec![s.mul_sparse(&p0.embed(1, x.dim())).sub(&s).into_data()]
                }, tol);
                let images: Vec<Vec<F>> = cat.hom_basis(x, y).iter().map(|f| cp.iota(f, x, y).s.into_data()).collect();
                let di = inv.len();
                let ds = stable.len();
                let dc = images.len();
                let mut all = inv.clone();
                all.extend(stable.iter().cloned());
                all.extend(images.iter().cloned());
                let span = crate::linalg::independent_subset(&all, tol).len();
                if !(di == ds && ds == dc && span == dc) {
                    mismatches.push(format!("({}, {}): invariant {di}, p₀-stable {ds}, ι-image {dc}", cat.labels()[a], cat.labels()[b]));
                }
            }
        }
        let ok = mismatches.is_empty();
        Outcome::flag(ok, if ok { format!("{} pairs", k * k) } else { mismatches.join("; ") })
    });
    r.run("crossprod.equivalence_relation", None, || {
        let rel = &cc.relation;
        let mut bad = Vec::new();
        for a in 0..k {
            if !rel[a][a] {
                bad.push(format!("not reflexive at {}", cat.labels()[a]));
            }
            for b in 0..k {
                if rel[a][b] != rel[b][a] {
                    bad.push(format!("not symmetric at ({}, {})", cat.labels()[a], cat.labels()[b]));
                }
                for c in 0..k {
                    if rel[a][b] && rel[b][c] && !rel[a][c] {
                        bad.push(format!("not transitive at ({}, {}, {})", cat.labels()[a], cat.labels()[b], cat.labels()[c]));
                    }
                }
            }
        }
        let ok = bad.is_empty();
        Outcome::flag(ok, if ok { format!("{} classes", cc.classes.len()) } else { bad.join("; ") })
    });
    r.run("crossprod.block_theorem", None, || {
        let mut worst: f64 = 0.0;
        let mut bad = Vec::new();
        for (ci, class) in cc.classes.iter().enumerate() {
            let members: Vec<&crate::crossprod::CrossedSimple<F>> = cc.simples.iter().filter(|s| s.class == ci).collect();
            let sizes: Vec<usize> = members.iter().map(|s| s.multiplicity).collect();
            if sizes.windows(2).any(|w| w[0] != w[1]) {
                bad.push(format!("unequal multiplicities {:?} in ι({})", sizes, cat.labels()[class[0]]));
            }
            for s in &members {
                worst = worst.max(cp.idempotent_residual(&s.object));
                if cp.hom_dim(&s.object, &s.object) != 1 {
                    bad.push(format!("{} is not simple", s.label()));
                }
                for t in &members {
                    if !core::ptr::eq(*s, *t) && cp.hom_dim(&s.object, &t.object) != 0 {
                        bad.push(format!("{} ≅ {}", s.label(), t.label()));
                    }
                }
            }
            for &y in class {
                let iy = cp.iota_object(cat.simple(y));
                let mults: Vec<usize> = members.iter().map(|s| cp.hom_dim(&s.object, &iy)).collect();
                if mults.iter().any(|&m| m == 0) || mults.windows(2).any(|w| w[0] != w[1]) {
                    bad.push(format!("ι({}) contains the class simples with multiplicities {:?}", cat.labels()[y], mults));
                    continue;
                }
                let sum = members.iter().fold(F::zero(), |acc, s| acc.add(&s.dim));
                let predicted = sum.mul(&F::from_i64(mults[0] as i64));
                worst = worst.max(crate::scalar::residual(&predicted, &cat.dim(cat.simple(y))));
            }
        }
        for s in &cc.simples {
            for t in &cc.simples {
                if s.class != t.class && cp.hom_dim(&s.object, &t.object) != 0 {
                    bad.push(format!("{} ≅ {} across classes", s.label(), t.label()));
                }
            }
        }
        if !bad.is_empty() {
            return Outcome {
                ok: false,
                residual: Some(worst),
                detail: bad.join("; "),
            };
        }
        Outcome::measured(worst, tol, exact, format!("{} classes, {} simples", cc.classes.len(), cc.simples.len()))
    });
    r.run("crossprod.dimension", None, || {
        let total = cc.total_dimension();
        let expected = cat.global_dimension().mul(&F::from_i64(frob.order() as i64).inv().expect("|G| ≠ 0"));
        let res = crate::scalar::residual(&total, &expected);
        Outcome::measured(res, tol * expected.magnitude().max(1.0), exact, format!("Σd² = {total}, dim C/|G| = {expected}"))
    });
    let grade_failed = r.run("crossprod.grade_group_element", None, || {
        let mut worst: f64 = 0.0;
        let mut bad = Vec::new();
        for s in &cc.simples {
            worst = worst.max(s.grade.residual).max(s.grade.homogeneity).max(s.grade.consistency);
            worst = worst.max(frob.automorphism_residual(cat, &s.grade.matrix));
            if s.grade.element.is_none() {
                bad.push(format!("{}: no automorphism within tolerance (best {:.3e}, runner-up {:.3e})", s.label(), s.grade.residual, s.grade.runner_up));
            }
        }
        if !bad.is_empty() {
            return Outcome {
                ok: false,
                residual: Some(worst),
                detail: bad.join("; "),
            };
        }
        Outcome::measured(worst, tol, exact, format!("{} simples", cc.simples.len()))
    });
    let grades_blocked = grade_failed.then_some("some simple has no grade");
    r.run("crossprod.grade_multiplicative", grades_blocked, || {
        let mut worst: f64 = 0.0;
        let mut bad = Vec::new();
        for x in &cc.simples {
            for y in &cc.simples {
                let xy = cp.tensor_object(&x.object, &y.object);
                let gi = match cp.grade(&xy) {
                    Ok(gi) => gi,
                    Err(e) => return Outcome::error(e),
                };
                let want = g.mul(x.grade.element.unwrap(), y.grade.element.unwrap());
                worst = worst.max(gi.matrix.residual(&frob.automorphisms[want].to_dense()));
                if gi.element != Some(want) {
                    bad.push(format!("∂({}⊗{})", x.label(), y.label()));
                }
            }
        }
        if !bad.is_empty() {
            return Outcome {
                ok: false,
                residual: Some(worst),
                detail: bad.join("; "),
            };
        }
        Outcome::measured(worst, tol, exact, format!("{} pairs", cc.simples.len() * cc.simples.len()))
    });
    let action_failed = r.run("crossprod.action", None, || {
        let mut rng = rng_for(seed, "crossprod.action");
        let mut worst: f64 = 0.0;
        let mut done = 0;
        for _ in 0..samples * 8 {
            if done >= samples {
                break;
            }
            let (a, b, c) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k));
            let (x, y, z) = (cat.simple(a), cat.simple(b), cat.simple(c));
            let (Some(s), Some(t)) = (random_ext(&cp, x, y, &mut rng), random_ext(&cp, y, z, &mut rng)) else { continue };
            done += 1;
            let Some(f) = random_combination(&cat.hom_basis(x, x), &mut rng) else { continue };
            worst = worst.max(cp.act(g.identity(), &s).s.residual(&s.s));
            for h1 in 0..g.order() {
                let fixed = cp.act(h1, &cp.iota(&f, x, x));
                worst = worst.max(fixed.s.residual(&cp.iota(&f, x, x).s));
                let ts = cp.compose(&t, &s).unwrap();
                let lhs = cp.act(h1, &ts);
                let rhs = cp.compose(&cp.act(h1, &t), &cp.act(h1, &s)).unwrap();
                worst = worst.max(lhs.s.residual(&rhs.s));
                let lhs = cp.act(h1, &cp.tensor(&s, &t));
                let rhs = cp.tensor(&cp.act(h1, &s), &cp.act(h1, &t));
                worst = worst.max(lhs.s.residual(&rhs.s));
                for h2 in 0..g.order() {
                    let lhs = cp.act(h1, &cp.act(h2, &s));
                    let rhs = cp.act(g.mul(h1, h2), &s);
                    worst = worst.max(lhs.s.residual(&rhs.s));
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{done} samples, |G| = {}", g.order()))
    });
    let action_blocked = if action_failed {
        Some("the G-action failed")
    } else {
        grades_blocked
    };
    r.run("crossprod.grade_covariance", action_blocked, || {
        let mut worst: f64 = 0.0;
        let mut bad = Vec::new();
        for x in &cc.simples {
            let gx = x.grade.element.unwrap();
            for h in 0..g.order() {
                let y = cp.act_object(h, &x.object);
                let gi = match cp.grade(&y) {
                    Ok(gi) => gi,
                    Err(e) => return Outcome::error(e),
                };
                let want = g.conj(h, gx);
                worst = worst.max(gi.matrix.residual(&frob.automorphisms[want].to_dense()));
                if gi.element != Some(want) {
                    bad.push(format!("∂γ_{}({})", g.name(h), x.label()));
                }
            }
        }
        if !bad.is_empty() {
            return Outcome {
                ok: false,
                residual: Some(worst),
                detail: bad.join("; "),
            };
        }
        Outcome::measured(worst, tol, exact, format!("{} simples × {} elements", cc.simples.len(), g.order()))
    });
    r.run("crossprod.braiding_naturality", action_blocked, || {
        let mut rng = rng_for(seed, "crossprod.braiding_naturality");
        let mut worst: f64 = 0.0;
        let mut done = 0;
        for x in &cc.simples {
            let gx = x.grade.element.unwrap();
            // the compatibility of the two forms of the braiding
            for y in &cc.simples {
                let c = match crossed_braiding(&cp, &x.object, &y.object) {
                    Ok(c) => c,
                    Err(e) => return Outcome::error(e),
                };
                let qp = cp.tensor(&cp.act(gx, &y.object.idempotent()), &x.object.idempotent());
                worst = worst.max(cp.compose(&qp, &c).unwrap().s.residual(&c.s));
            }
            let xs = ExtObject {
                base: x.object.base.clone(),
                p: x.central.clone(),
                label: format!("N·{}", x.label()),
            };
            let homs = cp.compressed_hom(&x.object, &xs);
            for b in 0..k {
                for b2 in 0..k {
                    let (y, y2) = (cat.simple(b), cat.simple(b2));
                    let Some(t) = random_ext(&cp, y, y2, &mut rng) else { continue };
                    let Some(sm) = random_combination(&homs, &mut rng) else { continue };
                    let s = ExtMorphism {
                        source: x.object.base.clone(),
                        target: xs.base.clone(),
                        s: sm,
                    };
                    let (iy, iy2) = (cp.iota_object(y), cp.iota_object(y2));
                    let c1 = crossed_braiding(&cp, &x.object, &iy).unwrap();
                    let c2 = crossed_braiding(&cp, &xs, &iy2).unwrap();
                    let lhs = cp.compose(&c2, &cp.tensor(&s, &t)).unwrap();
                    let rhs = cp.compose(&cp.tensor(&cp.act(gx, &t), &s), &c1).unwrap();
                    worst = worst.max(lhs.s.residual(&rhs.s));
                    done += 1;
                }
            }
        }
        Outcome::measured(worst, tol, exact, format!("{done} squares"))
    });
    r.run("crossprod.braiding_relations", action_blocked, || {
        let mut worst: f64 = 0.0;
        let mut culprit = String::new();
        let n = cc.simples.len();
        for a in 0..n {
            let x = &cc.simples[a];
            let gx = x.grade.element.unwrap();
            for b in 0..n {
                let z = &cc.simples[b];
                let gz_obj = cp.act_object(gx, &z.object);
                let c_xz = crossed_braiding(&cp, &x.object, &z.object).unwrap();
                for c in 0..n {
                    let t = &cc.simples[c];
                    // c_{x, z⊗t} = (1_{γz} ⊗ c_{x,t}) ∘ (c_{x,z} ⊗ 1_t)
                    let zt = cp.tensor_object(&z.object, &t.object);
                    let lhs = crossed_braiding(&cp, &x.object, &zt).unwrap();
                    let c_xt = crossed_braiding(&cp, &x.object, &t.object).unwrap();
                    let rhs = cp.compose(&cp.tensor(&gz_obj.idempotent(), &c_xt), &cp.tensor(&c_xz, &t.object.idempotent())).unwrap();
                    let r1 = lhs.s.residual(&rhs.s);
                    // c_{x⊗z, t} = (c_{x, γ_{∂z} t} ⊗ 1_z) ∘ (1_x ⊗ c_{z,t})
                    let xz = cp.tensor_object(&x.object, &z.object);
                    let lhs = crossed_braiding(&cp, &xz, &t.object).unwrap();
                    let gz = z.grade.element.unwrap();
                    let zt_obj = cp.act_object(gz, &t.object);
                    let c_zt = crossed_braiding(&cp, &z.object, &t.object).unwrap();
                    let c_x_zt = crossed_braiding(&cp, &x.object, &zt_obj).unwrap();
                    let rhs = cp.compose(&cp.tensor(&c_x_zt, &z.object.idempotent()), &cp.tensor(&x.object.idempotent(), &c_zt)).unwrap();
                    let r2 = lhs.s.residual(&rhs.s);
                    let res = r1.max(r2);
                    if res > worst {
                        worst = res;
                        culprit = format!("worst triple ({}, {}, {})", x.label(), z.label(), t.label());
                    }
                }
            }
        }
        let detail = if worst > 0.0 { culprit } else { format!("{} triples", n * n * n) };
        Outcome::measured(worst, tol, exact, detail)
    });
    r.run("crossprod.braiding_invertible", action_blocked, || {
        let mut worst: f64 = 0.0;
        for x in &cc.simples {
            let gx = x.grade.element.unwrap();
            for y in &cc.simples {
                let c = crossed_braiding(&cp, &x.object, &y.object).unwrap();
                let ci = crossed_braiding_inverse(&cp, &x.object, gx, &y.object).unwrap();
                let pq = cp.tensor(&x.object.idempotent(), &y.object.idempotent());
                let qp = cp.tensor(&cp.act(gx, &y.object.idempotent()), &x.object.idempotent());
                worst = worst.max(cp.compose(&ci, &c).unwrap().s.residual(&pq.s));
                worst = worst.max(cp.compose(&c, &ci).unwrap().s.residual(&qp.s));
            }
        }
        Outcome::measured(worst, tol, exact, format!("{} pairs", cc.simples.len() * cc.simples.len()))
    });
    let spectrum = cc.spectrum();
    r.run("crossprod.spectrum_subgroup", grades_blocked, || {
        let mut bad = Vec::new();
        if !spectrum.contains(&g.identity()) {
            bad.push("e ∉ Spec".to_string());
        }
        for &a in &spectrum {
            if !spectrum.contains(&g.inv(a)) {
                bad.push(format!("{}⁻¹ ∉ Spec", g.name(a)));
            }
            for &b in &spectrum {
                if !spectrum.contains(&g.mul(a, b)) {
                    bad.push(format!("{}·{} ∉ Spec", g.name(a), g.name(b)));
                }
            }
            for h in 0..g.order() {
                if !spectrum.contains(&g.conj(h, a)) {
                    bad.push(format!("Spec not normal at {}", g.name(h)));
                }
            }
        }
        let ok = bad.is_empty();
        Outcome::flag(ok, if ok { format!("|Spec| = {}", spectrum.len()) } else { bad.join("; ") })
    });
    let z2 = zcenter(cat);
    r.run("crossprod.spectrum_theorem", grades_blocked, || {
        let s_z2: Vec<usize> = sub.simples.iter().copied().filter(|i| z2.members().contains(i)).collect();
        match fixed_subgroup(cat, &frob, &s_z2) {
            Ok(nn) => {
                let names = |v: &[usize]| v.iter().map(|&x| g.name(x).to_string()).collect::<Vec<_>>().join(", ");
                Outcome::flag(nn == spectrum, format!("Spec = {{{}}}, N = {{{}}}", names(&spectrum), names(&nn)))
            }
            Err(e) => Outcome::error(e),
        }
    });
    r.run("crossprod.grade_zero", grades_blocked, || match grade_zero_part(&cc) {
        Ok(gz) => {
            let ok = gz.matches(tol);
            Outcome::flag(
                ok,
                format!(
                    "{} grade-e simples, {} simples of (C∩S′)⋊S, C∩S′ = {{{}}}",
                    gz.grade_e.len(),
                    gz.independent.len(),
                    gz.relative_commutant.join(", ")
                ),
            )
        }
        Err(e) => Outcome::error(e),
    });
    r.run("crossprod.graded_dimensions", grades_blocked, || {
        let de = cc.graded_dimension(g.identity());
        let mut worst: f64 = 0.0;
        for &h in &spectrum {
            worst = worst.max(crate::scalar::residual(&cc.graded_dimension(h), &de));
        }
        let total = de.mul(&F::from_i64(spectrum.len() as i64));
        worst = worst.max(crate::scalar::residual(&total, &cc.total_dimension()));
        Outcome::measured(worst, tol * de.magnitude().max(1.0), exact, format!("dim D_e = {de}, |Spec| = {}", spectrum.len()))
    });
    r.run("crossprod.module_oracle", None, || match module_oracle(cat, &frob, check_seed(seed, "crossprod.module_oracle")) {
        Ok(mo) => {
            let mut a: Vec<f64> = mo.simples.iter().map(|m| m.dim.to_complex().re).collect();
            let mut b: Vec<f64> = cc.simples.iter().map(|s| s.dim.to_complex().re).collect();
            a.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
            b.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
            let multiset = a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol.max(1e-12) * 10.0);
            let res = crate::scalar::residual(&mo.total_dimension, &mo.expected_total).max(mo.axiom_residual);
            let structural = multiset && mo.adjunction_failures.is_empty() && mo.unit_endomorphisms == 1;
            let mut out = Outcome::measured(res, tol * mo.expected_total.magnitude().max(1.0), exact, format!("{} simple modules, Σdim² = {}, dim C/dim Γ = {}", mo.simples.len(), mo.total_dimension, mo.expected_total));
            if !structural {
                out.ok = false;
                out.detail = format!(
                    "{}; multiset match {multiset}, adjunction failures {}, dim End(F(1)) = {}",
                    out.detail,
                    mo.adjunction_failures.len(),
                    mo.unit_endomorphisms
                );
            }
            out
        }
        Err(e) => Outcome::error(e),
    });
    let abelian = g.is_abelian() && sub.simples.iter().all(|&i| cat.simple(i).dim() == 1 && cat.dim(cat.simple(i)).is_one());
    r.run("crossprod.abelian_grading", if abelian { grades_blocked } else { Some("G is not abelian") }, || {
        let mut worst: f64 = 0.0;
        let mut bad = Vec::new();
        let mut d0 = Vec::with_capacity(k);
        // characters χ_k(g) of the S-simples, read off the fiber functor
        let chars: Vec<Vec<F>> = match sub
            .simples
            .iter()
            .map(|&i| fiber(cat, &frob, cat.simple(i)).map(|e| e.action.iter().map(|m| m.get(0, 0).clone()).collect()))
            .collect::<crate::error::Result<Vec<Vec<F>>>>()
        {
            Ok(c) => c,
            Err(e) => return Outcome::error(e),
        };
        for i in 0..k {
            let x = cat.simple(i);
            let a = match abelian_grade(&cp, x) {
                Ok(a) => a,
                Err(e) => return Outcome::error(e),
            };
            worst = worst.max(a.residual);
            let Some(e0) = a.element else {
                bad.push(format!("∂₀{} is not a group element", cat.labels()[i]));
                d0.push(usize::MAX);
                continue;
            };
            d0.push(e0);
            let phi = match character_of(&cp, x) {
                Ok(p) => p,
                Err(e) => return Outcome::error(e),
            };
            for (kk, chi) in chars.iter().enumerate() {
                worst = worst.max(crate::scalar::residual(&phi[kk], &chi[e0]));
            }
            let cl = cc.class_of(i);
            for s in cc.simples.iter().filter(|s| s.class == cl) {
                if s.grade.element != Some(e0) {
                    bad.push(format!("∂₀{} ≠ ∂{}", cat.labels()[i], s.label()));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if d0[i] == usize::MAX || d0[j] == usize::MAX {
                    continue;
                }
                let t = cat.tensor(cat.simple(i), cat.simple(j));
                for c in cat.constituents(&t) {
                    if d0[c] != g.mul(d0[i], d0[j]) {
                        bad.push(format!("∂₀ not multiplicative on {}⊗{}", cat.labels()[i], cat.labels()[j]));
                    }
                }
            }
        }
        if !bad.is_empty() {
            return Outcome {
                ok: false,
                residual: Some(worst),
                detail: bad.join("; "),
            };
        }
        Outcome::measured(worst, tol, exact, format!("{k} simples of C"))
    });
    r.run("crossprod.ordinary_braiding", None, || {
        let mut rng = rng_for(seed, "crossprod.ordinary_braiding");
        let mut worst: f64 = 0.0;
        for a in 0..k {
            for a2 in 0..k {
                let (x, x2) = (cat.simple(a), cat.simple(a2));
                let Some(s) = random_ext(&cp, x, x2, &mut rng) else { continue };
                for b in 0..k {
                    for b2 in 0..k {
                        let (y, y2) = (cat.simple(b), cat.simple(b2));
                        let Some(t) = random_ext(&cp, y, y2, &mut rng) else { continue };
                        let c1 = cp.iota(&cat.braiding_sparse(x, y).to_dense(), &cat.tensor(x, y), &cat.tensor(y, x));
                        let c2 = cp.iota(&cat.braiding_sparse(x2, y2).to_dense(), &cat.tensor(x2, y2), &cat.tensor(y2, x2));
                        let lhs = cp.compose(&c2, &cp.tensor(&s, &t)).unwrap();
                        let rhs = cp.compose(&cp.tensor(&t, &s), &c1).unwrap();
                        worst = worst.max(lhs.s.residual(&rhs.s));
                    }
                }
            }
        }
        let natural = if exact { worst == 0.0 } else { worst <= tol };
        let central = sub.simples.iter().all(|i| z2.members().contains(i));
        let detail = format!(
            "two-sided naturality {} (residual {worst:.3e}); S ⊂ Z₂(C): {central}",
            if natural { "holds" } else { "fails" }
        );
        Outcome {
            ok: natural == central,
            residual: if central { Some(worst) } else { None },
            detail,
        }
    });
    r.run("crossprod.transparent_center", None, || {
        let s_in = sub.simples.iter().all(|i| commutant.members().contains(i));
        let ok = commutant.agree() && z2.agree() && s_in && z2.members().contains(&crate::generators::unit_index(cat));
        let names = |v: &[usize]| v.iter().map(|&i| cat.labels()[i].clone()).collect::<Vec<_>>().join(", ");
        Outcome::flag(ok, format!("C∩S′ = {{{}}}, Z₂(C) = {{{}}}", names(commutant.members()), names(z2.members())))
    });

    report.checks = r.checks;
    report
}

/// Both sides of ι(c_{Y,Z}) ∘̂ (s ⊗̂ 1_Z) = (1_Z ⊗̂ s) ∘̂ ι(c_{X,Z}).
fn naturality_left_sides<F: Scalar>(cp: &CrossedProduct<'_, F>, s: &ExtMorphism<F>, z: &Object<F>) -> (Matrix<F>, Matrix<F>) {
    let cat = cp.cat;
    let (x, y) = (&s.source, &s.target);
    let c_yz = cp.iota(&cat.braiding_sparse(y, z).to_dense(), &cat.tensor(y, z), &cat.tensor(z, y));
    let c_xz = cp.iota(&cat.braiding_sparse(x, z).to_dense(), &cat.tensor(x, z), &cat.tensor(z, x));
    let lhs = cp.compose(&c_yz, &cp.tensor(s, &cp.identity(z))).unwrap();
    let rhs = cp.compose(&cp.tensor(&cp.identity(z), s), &c_xz).unwrap();
    (lhs.s, rhs.s)
}

/// Basis (in coordinates of the ambient vectors) of {v ∈ span(basis) : L(v) = 0} where
/// L returns a list of vectors that must vanish.
fn invariant_subspace<F: Scalar>(basis: &[Vec<F>], constraints: impl Fn(&[F]) -> Vec<Vec<F>>, tol: f64) -> Vec<Vec<F>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<F>> = basis.iter().map(|b| constraints(b).concat()).collect();
    let rows = cols[0].len();
    let system = Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone());
    system
        .nullspace(tol)
        .into_iter()
        .map(|c| {
            let mut v = vec![F::zero(); basis[0].len()];
            for (coef, b) in c.iter().zip(basis) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    vi.mul_acc(coef, bi);
                }
            }
            v
        })
        .collect()
}

/// Exact values verbatim; floats rounded to an integer when within 1e-9 of one.
fn display_dim<F: Scalar>(d: &F) -> String {
    if F::EXACT {
        return d.serialize();
    }
    let z = d.to_complex();
    let r = num_traits::Float::round(z.re);
    if num_traits::Float::abs(z.re - r) <= 1e-9 && num_traits::Float::abs(z.im) <= 1e-9 {
        format!("{r}")
    } else if num_traits::Float::abs(z.im) <= 1e-9 {
        format!("{:.9}", z.re)
    } else {
        format!("{:.9}{:+.9}i", z.re, z.im)
    }
}

fn fill_summary<F: Scalar>(report: &mut Report, cc: &CrossedCategory<'_, F>) {
    let cat = cc.cat();
    let frob = cc.frob();
    let g = &frob.group;
    report.simples = cc
        .simples
        .iter()
        .map(|s| SimpleSummary {
            label: s.label().to_string(),
            base: cat.labels()[s.base].clone(),
            dim: display_dim(&s.dim),
            dim_value: s.dim.to_complex().re,
            grade: s.grade.element.map(|e| g.name(e).to_string()),
            multiplicity: s.multiplicity,
        })
        .collect();
    report.spectrum = cc.spectrum().iter().map(|&e| g.name(e).to_string()).collect();
    let ambient = cat.global_dimension().to_complex().re;
    report.dims = DimensionSummary {
        total: cc.total_dimension().to_complex().re,
        expected: ambient / frob.order() as f64,
        ambient,
        graded: (0..g.order()).map(|h| (g.name(h).to_string(), cc.graded_dimension(h).to_complex().re)).collect(),
    };
}
