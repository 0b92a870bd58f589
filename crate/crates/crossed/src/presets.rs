//! Example configurations compiled into the binary.

use crate::config::ExampleConfig;
use crate::CliError;

pub const PRESETS: &[(&str, &str)] = &[
    ("toric-code", include_str!("../presets/toric-code.toml")),
    ("dz2", include_str!("../presets/dz2.toml")),
    ("ds3", include_str!("../presets/ds3.toml")),
    ("ds3-sign", include_str!("../presets/ds3-sign.toml")),
    ("repz4-z2", include_str!("../presets/repz4-z2.toml")),
    ("pointed-z4", include_str!("../presets/pointed-z4.toml")),
    ("toric-x-z2", include_str!("../presets/toric-x-z2.toml")),
    ("rep-s3", include_str!("../presets/rep-s3.toml")),
    ("z3-double", include_str!("../presets/z3-double.toml")),
    ("corrupted-hexagon", include_str!("../presets/corrupted-hexagon.toml")),
];

/// Presets expected to pass every check.
pub const PASSING: &[&str] = &["toric-code", "dz2", "ds3", "ds3-sign", "repz4-z2", "pointed-z4", "toric-x-z2", "rep-s3", "z3-double"];

pub fn preset(name: &str) -> Result<ExampleConfig, CliError> {
    let (_, text) = PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| CliError::Config(format!("unknown preset {name:?}; known: {}", names().join(", "))))?;
    ExampleConfig::from_toml(text)
}

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}
