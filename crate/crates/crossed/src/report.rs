//! JSON and text renderings of a report.

use serde::Serialize;

use crossed_core::verify::{Report, Status};

#[derive(Serialize)]
pub struct JsonCheck<'a> {
    pub name: &'a str,
    pub anchor: &'a str,
    pub status: &'a str,
    pub residual: Option<f64>,
    pub detail: &'a str,
    pub elapsed_ms: f64,
}

#[derive(Serialize)]
pub struct JsonSimple<'a> {
    pub label: &'a str,
    pub base: &'a str,
    pub dim: &'a str,
    pub dim_value: f64,
    pub grade: Option<&'a str>,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct JsonGraded<'a> {
    pub grade: &'a str,
    pub dimension: f64,
}

#[derive(Serialize)]
pub struct JsonDimensions<'a> {
    pub total: f64,
    pub expected: f64,
    pub ambient: f64,
    pub graded: Vec<JsonGraded<'a>>,
}

#[derive(Serialize)]
pub struct JsonReport<'a> {
    pub example: &'a str,
    pub backend: &'a str,
    pub category: &'a str,
    pub subcategory: &'a [String],
    pub group: Option<&'a str>,
    pub group_order: Option<usize>,
    pub seed: u64,
    pub tol: f64,
    pub passed: bool,
    pub checks: Vec<JsonCheck<'a>>,
    pub simples: Vec<JsonSimple<'a>>,
    pub spectrum: &'a [String],
    pub dimensions: JsonDimensions<'a>,
    pub notes: &'a [String],
}

pub fn to_json(r: &Report, seed: u64, tol: f64) -> String {
    let json = JsonReport {
        example: &r.example,
        backend: r.backend,
        category: &r.category,
        subcategory: &r.subcategory,
        group: r.group.as_deref(),
        group_order: r.group_order,
        seed,
        tol,
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| JsonCheck {
                name: &c.name,
                anchor: c.anchor,
                status: c.status.as_str(),
                residual: c.residual,
                detail: &c.detail,
                elapsed_ms: c.elapsed_ms,
            })
            .collect(),
        simples: r
            .simples
            .iter()
            .map(|s| JsonSimple {
                label: &s.label,
                base: &s.base,
                dim: &s.dim,
                dim_value: s.dim_value,
                grade: s.grade.as_deref(),
                multiplicity: s.multiplicity,
            })
            .collect(),
        spectrum: &r.spectrum,
        dimensions: JsonDimensions {
            total: r.dims.total,
            expected: r.dims.expected,
            ambient: r.dims.ambient,
            graded: r.dims.graded.iter().map(|(g, d)| JsonGraded { grade: g, dimension: *d }).collect(),
        },
        notes: &r.notes,
    };
    serde_json::to_string_pretty(&json).expect("reports serialize") + "\n"
}

fn residual(r: Option<f64>) -> String {
    r.map(|x| format!("{x:.1e}")).unwrap_or_else(|| "-".into())
}

/// label / dim / grade table of the simples.
pub fn simples_table(r: &Report) -> String {
    let mut rows = vec![("label".to_string(), "dim".to_string(), "grade".to_string())];
    for s in &r.simples {
        rows.push((s.label.clone(), s.dim.clone(), s.grade.clone().unwrap_or_else(|| "?".into())));
    }
    let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (a, b, c) in rows {
        out += &format!("{a:<w0$}  {b:<w1$}  {c}\n");
    }
    out
}

pub fn summary(r: &Report) -> String {
    let mut out = format!("{} [{}] {} ⋊ ⟨{}⟩", r.example, r.backend, r.category, r.subcategory.join(", "));
    if let (Some(g), Some(n)) = (&r.group, r.group_order) {
        out += &format!(", G = {g} of order {n}");
    }
    out.push('\n');
    if !r.simples.is_empty() {
        out += &format!("spectrum: {{{}}}\n", r.spectrum.join(", "));
        out += &format!("Σd² = {:.6} (dim C / |G| = {:.6})\n", r.dims.total, r.dims.expected);
    }
    for n in &r.notes {
        out += &format!("note: {n}\n");
    }
    out
}

pub fn checks_table(r: &Report) -> String {
    let w = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &r.checks {
        out += &format!("{:<7} {:<w$}  {:>8}  {}\n", c.status.as_str(), c.name, residual(c.residual), c.detail);
    }
    let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
    out += &format!("{} passed, {} failed, {} skipped\n", count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    out
}
