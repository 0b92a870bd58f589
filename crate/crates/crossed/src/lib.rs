//! Configuration files, presets, reports and the command-line pipeline for
//! [`crossed_core`].

pub mod config;
pub mod pipeline;
pub mod presets;
pub mod report;
pub mod selftest;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cannot write {0}")]
    Io(String),
}

impl From<crossed_core::Error> for CliError {
    fn from(e: crossed_core::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
