//! From a configuration to a verified report.

use crossed_core::category::ConcreteCategory;
use crossed_core::crossprod::CrossedCategory;
use crossed_core::frobenius::regular_frobenius;
use crossed_core::generators::{corrupted_pointed_category, drinfeld_double, pointed_category, rep_category, tannakian_subcategory, BuildOptions, PointedSpec};
use crossed_core::group::FiniteGroup;
use crossed_core::verify::{run_suite, Report, SuiteOptions};
use crossed_core::{ComplexFloat, Cyclotomic, Error, Scalar};

use crate::config::{Backend, ExampleConfig, Kind};
use crate::CliError;

fn group_of(cfg: &ExampleConfig) -> Result<FiniteGroup, CliError> {
    let g = cfg.group.as_ref().ok_or_else(|| CliError::Config("missing [group]".into()))?;
    let group = match (&g.preset, &g.table) {
        (Some(p), None) => FiniteGroup::preset(p)?,
        (None, Some(t)) => FiniteGroup::from_table(t.clone(), None)?.with_label("G"),
        _ => return Err(CliError::Config("[group] needs exactly one of `preset` or `table`".into())),
    };
    match &g.names {
        Some(names) => Ok(group.with_names(names.clone())?),
        None => Ok(group),
    }
}

/// The ambient category described by `cfg`.
pub fn build_category<F: Scalar>(cfg: &ExampleConfig) -> Result<ConcreteCategory<F>, CliError> {
    let opts = BuildOptions {
        tol: cfg.run.tol,
        seed: cfg.run.seed,
    };
    let cat = match cfg.category.kind {
        Kind::Rep => rep_category(&group_of(cfg)?, opts)?,
        Kind::Double => drinfeld_double(&group_of(cfg)?, opts)?,
        Kind::Pointed => {
            let p = cfg.pointed.as_ref().ok_or_else(|| CliError::Config("missing [pointed]".into()))?;
            let spec = PointedSpec {
                orders: p.group.clone(),
                exponents: p.bichar_exponents.clone(),
                root_order: p.root_order,
                labels: p.labels.clone(),
            };
            match &cfg.corrupt {
                None => pointed_category(&spec, opts)?,
                Some(c) => {
                    let value = F::root_of_unity(c.exponent, spec.root()).ok_or_else(|| CliError::Config(format!("no {}-th roots of unity in the {} backend", spec.root(), F::BACKEND)))?;
                    let n: usize = spec.orders.iter().product();
                    if c.entry[0] >= n || c.entry[1] >= n {
                        return Err(CliError::Config(format!("[corrupt] entry {:?} out of range for {n} simples", c.entry)));
                    }
                    corrupted_pointed_category(&spec, (c.entry[0], c.entry[1]), value, opts)?
                }
            }
        }
    };
    for l in &cfg.subcategory.generators {
        if cat.label_index(l).is_err() {
            return Err(CliError::Config(format!("unknown simple {l:?}; the category has {}", cat.labels().join(", "))));
        }
    }
    Ok(cat)
}

fn clock() -> f64 {
    use std::sync::OnceLock;
    static ORIGIN: OnceLock<std::time::Instant> = OnceLock::new();
    ORIGIN.get_or_init(std::time::Instant::now).elapsed().as_secs_f64() * 1e3
}

/// Whether the exact backend can split the endomorphism algebras of this example.
fn exact_split_error(cat: &ConcreteCategory<Cyclotomic>, generators: &[String], seed: u64) -> Option<String> {
    let sub = tannakian_subcategory(cat, generators).ok()?;
    let frob = regular_frobenius(cat, &sub).ok()?;
    match CrossedCategory::build(cat, &frob, seed) {
        Err(e @ (Error::ExactSplitUnsupported(_) | Error::FieldTooSmall(_))) => Some(e.to_string()),
        _ => None,
    }
}

fn suite<F: Scalar>(cfg: &ExampleConfig, cat: &ConcreteCategory<F>, filter: Option<&str>) -> Report {
    let opts = SuiteOptions {
        seed: cfg.run.seed,
        filter: filter.map(str::to_string),
        clock: Some(clock),
        ..SuiteOptions::default()
    };
    run_suite(cfg.name(), cat, &cfg.subcategory.generators, &opts)
}

/// Runs the check suite (restricted by `filter`) in the configured backend. The exact
/// backend falls back to floating point, with a note, when exact splitting fails.
pub fn run(cfg: &ExampleConfig, filter: Option<&str>) -> Result<Report, CliError> {
    match cfg.run.backend {
        Backend::Float => Ok(suite(cfg, &build_category::<ComplexFloat>(cfg)?, filter)),
        Backend::Exact => {
            let cat = build_category::<Cyclotomic>(cfg)?;
            match exact_split_error(&cat, &cfg.subcategory.generators, cfg.run.seed) {
                None => Ok(suite(cfg, &cat, filter)),
                Some(why) => {
                    let mut report = suite(cfg, &build_category::<ComplexFloat>(cfg)?, filter);
                    report.notes.push(format!("exact backend unavailable ({why}); computed in floating point"));
                    Ok(report)
                }
            }
        }
    }
}
