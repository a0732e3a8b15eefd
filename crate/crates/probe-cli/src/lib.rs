//! Experiment harness for the multiplier toolkit: probe configuration,
//! input families, ratio probes, sharpness sweeps, and report emission.

pub mod cli;
pub mod config;
pub mod error;
pub mod inputs;
pub mod probe;
pub mod report;
pub mod sweep;

pub use config::{InputFamily, OutputNorm, ProbeConfig};
pub use error::CliError;
pub use probe::{ratio_probe, tomita_check};
pub use report::{config_hash, strip_timestamp, ProbeReport, SweepReport};
pub use sweep::sharpness_sweep;
