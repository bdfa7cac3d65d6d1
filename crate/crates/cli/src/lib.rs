//! The `typegraph` command line: argument parsing, config merging and
//! dispatch to the library crates.

mod args;
mod config;
mod run;

pub use args::{Cli, Format};
pub use config::merge_config;
pub use run::{execute, DISPATCH};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_from!(
    typegraph_core::CoreError,
    typegraph_k3graph::K3Error,
    typegraph_k4graph::K4Error,
    typegraph_hexcharts::HexError,
    typegraph_analysis::AnalysisError,
    typegraph_lambda::LambdaError
);
