//! Outward-facing surfaces: plot data, the `workbench` CLI and the HTTP
//! service. Both the CLI and the service emit canonical JSON, so the same
//! request yields the same bytes on either path.

pub mod cli;
pub mod http;
mod plot;

pub use plot::{plot_data, PlotData, PlotKind, PlotPoint};

use serde::{Deserialize, Serialize};

use crate::kb::KbError;
use crate::mcda::McdaError;
use crate::scenario::ScenarioError;
use crate::ErrorKind;

/// Environment variable naming the default KB file.
pub const KB_PATH_ENV: &str = "WORKBENCH_KB_PATH";
pub const DEFAULT_ADDR: &str = "127.0.0.1:8080";

/// Error body returned by the service and printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    pub path: String,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Kb(#[from] KbError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Mcda(#[from] McdaError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed {what}: {source}")]
    Json {
        what: &'static str,
        #[source]
        source: serde_json::Error,
    },
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Kb(e) => e.code(),
            Error::Scenario(e) => e.code(),
            Error::Mcda(e) => e.code(),
            Error::Io { .. } => "IO_ERROR",
            Error::Json { .. } => "MALFORMED_BODY",
            Error::UnknownScenario(_) => "UNKNOWN_SCENARIO",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Kb(e) => e.kind(),
            Error::Scenario(e) => e.kind(),
            Error::Mcda(e) => e.kind(),
            _ => ErrorKind::Data,
        }
    }

    pub fn path(&self) -> String {
        match self {
            Error::Kb(e) => e.path(),
            Error::Scenario(e) => e.path(),
            Error::Io { path, .. } => path.clone(),
            _ => String::new(),
        }
    }

    pub fn body(&self) -> ErrorBody {
        ErrorBody {
            code: self.code().to_string(),
            message: self.to_string(),
            path: self.path(),
        }
    }
}
