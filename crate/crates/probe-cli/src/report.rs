//! Report structures and emission.
//!
//! Reports serialize to a JSON document with fixed field order and to CSV
//! tables. Exact rationals are printed as `num/den`. The `generated_at`
//! timestamp is excluded from the hash, which digests the canonical config
//! text (seed included); everything else is a pure function of the config.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Hex SHA-256 of the canonical config text.
pub fn config_hash(canonical: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Unix-seconds timestamp; excluded from hashing and from replay diffs.
pub fn timestamp() -> String {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_else(|_| "0".into())
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialRow {
    pub trial: usize,
    pub output_norm: f64,
    pub input_norm_product: f64,
    pub ratio: f64,
    pub families: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeSummary {
    pub max_ratio: f64,
    pub median_ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub config: String,
    pub seed: u64,
    pub hash: String,
    pub generated_at: String,
    pub a_constant: f64,
    pub output_norm_kind: String,
    pub rows: Vec<TrialRow>,
    pub summary: ProbeSummary,
}

impl ProbeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,output_norm,input_norm_product,ratio\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.trial, row.output_norm, row.input_norm_product, row.ratio
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    /// Line parameter as an exact fraction.
    pub t: String,
    /// Sampled smoothness orders as exact fractions.
    pub s: Vec<String>,
    pub a_constant: f64,
    pub max_ratio: f64,
    /// Exact inside/outside flag from the admissibility predicate.
    pub inside: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub config: String,
    pub seed: u64,
    pub hash: String,
    pub generated_at: String,
    /// 1-based facet subset indices.
    pub facet: Vec<usize>,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,s,a_constant,max_ratio,inside\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.t,
                row.s.join(";"),
                row.a_constant,
                row.max_ratio,
                row.inside
            ));
        }
        out
    }
}

/// Drops the `generated_at` line so replayed reports compare bytewise.
pub fn strip_timestamp(json: &str) -> String {
    json.lines()
        .filter(|line| !line.trim_start().starts_with("\"generated_at\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hashing_is_stable() {
        assert_eq!(config_hash("m = 2\n"), config_hash("m = 2\n"));
        assert_ne!(config_hash("m = 2\n"), config_hash("m = 3\n"));
    }

    #[test]
    fn timestamp_stripping() {
        let report = ProbeReport {
            config: "m = 1\n".into(),
            seed: 1,
            hash: "deadbeef".into(),
            generated_at: "123".into(),
            a_constant: 1.0,
            output_norm_kind: "lp".into(),
            rows: vec![],
            summary: ProbeSummary {
                max_ratio: 0.0,
                median_ratio: 0.0,
            },
        };
        let stripped = strip_timestamp(&report.to_json());
        assert!(!stripped.contains("generated_at"));
        assert!(stripped.contains("deadbeef"));
    }
}
