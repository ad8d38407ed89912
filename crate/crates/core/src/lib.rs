//! Decision-support workbench: a file-backed knowledge base of techniques
//! and hierarchical criteria, ranked with PROMETHEE I/II in exact rational
//! arithmetic, with what-if scenarios layered on top.
//!
//! The library is the primary interface; see the crate's `examples/`
//! directory for one runnable program per capability. The `workbench`
//! binary exposes the same operations as a CLI and an HTTP service.
//!
//! ```
//! use mcda_workbench::kb::default_kb;
//! use mcda_workbench::scenario::{fixtures, run_scenario};
//!
//! let kb = default_kb();
//! let report = run_scenario(&kb, &fixtures::experiment_2()).unwrap();
//! assert!(report.flows.net_sum().is_zero());
//! ```

pub mod canonical;
pub mod interface;
pub mod kb;
pub mod mcda;
pub mod rational;
pub mod scenario;

pub use rational::Rational;

/// Broad error category, used for CLI exit codes and HTTP statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Caller asked for something ill-formed (too few alternatives, bad index).
    Usage,
    /// Input data is invalid or incomplete.
    Data,
    /// Criterion configuration (weights, thresholds) is invalid.
    Config,
}
