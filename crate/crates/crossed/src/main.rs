use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crossed::config::{check_tol, Backend, ExampleConfig};
use crossed::{pipeline, presets, report, selftest, CliError};
use crossed_core::{ComplexFloat, Cyclotomic};

#[derive(Parser)]
#[command(name = "crossed", version, about = "Condense Tannakian subcategories of braided fusion categories and verify the result")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the simples of C⋊S with their dimensions and grades.
    Condense(RunArgs),
    /// Run the check suite.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Arithmetic, linear algebra and category properties on built-in fixtures.
    Selftest {
        #[arg(long, value_enum, default_value = "float")]
        backend: Backend,
        #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the built-in presets.
    Presets,
}

#[derive(Args)]
struct RunArgs {
    /// A built-in example.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    preset: Option<String>,
    /// A TOML (or .json) example file.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    backend: Option<Backend>,
    #[arg(long, allow_hyphen_values = true)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Where to write the JSON report; `-` prints it instead of the tables.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> Result<ExampleConfig, CliError> {
        let mut cfg = match (&self.preset, &self.spec) {
            (Some(p), None) => presets::preset(p)?,
            (None, Some(path)) => ExampleConfig::load(path)?,
            _ => return Err(CliError::Config("give exactly one of --preset or --spec".into())),
        };
        if let Some(b) = self.backend {
            cfg.run.backend = b;
        }
        if let Some(t) = self.tol {
            check_tol(t)?;
            cfg.run.tol = t;
        }
        if let Some(s) = self.seed {
            cfg.run.seed = s;
        }
        if let Some(o) = &self.out {
            cfg.run.out = Some(o.clone());
        }
        Ok(cfg)
    }
}

fn emit(cfg: &ExampleConfig, r: &crossed_core::verify::Report, tables: impl Fn() -> String) -> Result<(), CliError> {
    let json = report::to_json(r, cfg.run.seed, cfg.run.tol);
    match cfg.run.out.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{json}"),
        Some(p) => {
            std::fs::write(p, &json).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            print!("{}", tables());
        }
        None => print!("{}", tables()),
    }
    Ok(())
}

fn condense(args: &RunArgs) -> Result<bool, CliError> {
    let cfg = args.config()?;
    let r = pipeline::run(&cfg, None)?;
    emit(&cfg, &r, || {
        let mut s = report::summary(&r);
        s += &report::simples_table(&r);
        let failed = r.failed();
        if !failed.is_empty() {
            s += &format!("{} checks failed:\n", failed.len());
            for c in failed {
                s += &format!("  {}: {}\n", c.name, c.detail);
            }
        }
        s
    })?;
    Ok(r.passed())
}

fn verify(args: &RunArgs, filter: Option<&str>) -> Result<bool, CliError> {
    let cfg = args.config()?;
    let r = pipeline::run(&cfg, filter)?;
    if r.checks.is_empty() {
        return Err(CliError::Config(format!("no check name contains {:?}", filter.unwrap_or(""))));
    }
    emit(&cfg, &r, || report::summary(&r) + &report::checks_table(&r))?;
    Ok(r.passed())
}

fn run_selftest(backend: Backend, tol: f64, seed: u64) -> Result<bool, CliError> {
    check_tol(tol)?;
    let checks = match backend {
        Backend::Exact => selftest::run::<Cyclotomic>(tol, seed),
        Backend::Float => selftest::run::<ComplexFloat>(tol, seed),
    };
    let w = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &checks {
        println!("{:<4} {:<w$}  {:>8.1e}  {}", if c.ok { "pass" } else { "FAIL" }, c.name, c.residual, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.ok).count();
    if failed == 0 {
        println!("selftest passed ({} checks, {} backend, τ = {tol:e})", checks.len(), backend.as_str());
        return Ok(true);
    }
    eprintln!("selftest failed: {failed} of {} checks exceed τ = {tol:e} in the {} backend", checks.len(), backend.as_str());
    if backend == Backend::Float && tol == 0.0 {
        eprintln!("floating-point residuals are rarely exactly zero; τ = 0 demands exact equality. Use a positive tolerance such as 1e-9, or --backend exact.");
    }
    Ok(false)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Condense(args) => condense(args),
        Command::Verify { run, filter } => verify(run, filter.as_deref()),
        Command::Selftest { backend, tol, seed } => run_selftest(*backend, *tol, *seed),
        Command::Presets => {
            for name in presets::names() {
                println!("{name}");
            }
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
