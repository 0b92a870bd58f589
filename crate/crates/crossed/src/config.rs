//! Example configuration files.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    #[default]
    Float,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Rep(G) with the symmetric braiding.
    Rep,
    /// Rep(D(G)).
    Double,
    /// Vec(A) with a bicharacter braiding.
    Pointed,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySection {
    pub kind: Kind,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub preset: Option<String>,
    /// Multiplication table, identity at index 0 not required.
    pub table: Option<Vec<Vec<usize>>>,
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointedSection {
    /// Orders of the cyclic factors.
    pub group: Vec<usize>,
    /// b(a, a') = ζ^{Σ a_i E_ij a'_j}.
    pub bichar_exponents: Vec<Vec<i64>>,
    pub root_order: Option<u32>,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubcategorySection {
    pub generators: Vec<String>,
}

/// Overwrites one bicharacter value with ζ^exponent, skipping validation.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorruptSection {
    pub entry: [usize; 2],
    pub exponent: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunSection {
    pub backend: Backend,
    pub tol: f64,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunSection {
    fn default() -> Self {
        RunSection {
            backend: Backend::Float,
            tol: 1e-9,
            seed: 0,
            out: None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExampleConfig {
    pub name: Option<String>,
    pub category: CategorySection,
    pub group: Option<GroupSection>,
    pub pointed: Option<PointedSection>,
    pub subcategory: SubcategorySection,
    #[serde(default)]
    pub run: RunSection,
    pub corrupt: Option<CorruptSection>,
}

impl ExampleConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: ExampleConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: ExampleConfig = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads TOML, or JSON when the extension is `.json`.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        let mut cfg = if path.extension().is_some_and(|e| e == "json") {
            Self::from_json(&text)?
        } else {
            Self::from_toml(&text)?
        };
        if cfg.name.is_none() {
            cfg.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        }
        Ok(cfg)
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("example")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Config(m.to_string()));
        match self.category.kind {
            Kind::Pointed => {
                if self.pointed.is_none() {
                    return bad("kind = \"pointed\" needs a [pointed] section");
                }
                if self.group.is_some() {
                    return bad("[group] is not used by pointed categories; use [pointed] group");
                }
            }
            Kind::Rep | Kind::Double => {
                let Some(g) = &self.group else {
                    return bad("this category kind needs a [group] section");
                };
                if g.preset.is_some() == g.table.is_some() {
                    return bad("[group] needs exactly one of `preset` or `table`");
                }
                if self.pointed.is_some() || self.corrupt.is_some() {
                    return bad("[pointed] and [corrupt] apply only to pointed categories");
                }
            }
        }
        check_tol(self.run.tol)
    }
}

/// Negative or non-finite tolerances are rejected; zero is allowed and demands exact
/// equality.
pub fn check_tol(tol: f64) -> Result<(), CliError> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(CliError::Config(format!("tolerance must be a finite number ≥ 0, got {tol}")));
    }
    Ok(())
}
