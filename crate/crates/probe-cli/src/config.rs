//! Flat key-value probe configuration.
//!
//! The config file is line-oriented `key = value` text with `#` comments.
//! Rationals are written as `num/den`; lists are comma-separated. Unknown
//! keys are errors so typos fail loudly.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;

use exponent_geometry::{ReciprocalExponents, SmoothnessProfile};
use fourier_core::{GridSpec, Partition, SymbolGrid};

use crate::error::CliError;

/// Which norm the probe measures on the operator output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputNorm {
    Lp,
    Hp,
    Weak,
}

impl OutputNorm {
    pub fn name(&self) -> &'static str {
        match self {
            OutputNorm::Lp => "lp",
            OutputNorm::Hp => "hp",
            OutputNorm::Weak => "weak",
        }
    }
}

/// Input family override; `Auto` follows the per-slot exponent casework.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFamily {
    Auto,
    RandomBandlimited,
    Atoms,
    Constants,
}

impl InputFamily {
    pub fn name(&self) -> &'static str {
        match self {
            InputFamily::Auto => "auto",
            InputFamily::RandomBandlimited => "random_bandlimited",
            InputFamily::Atoms => "atoms",
            InputFamily::Constants => "constants",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProbeConfig {
    pub m: usize,
    pub n: usize,
    pub grid_points: usize,
    pub period: f64,
    pub seed: u64,
    pub trials: usize,
    pub symbol: String,
    pub symbol_params: Vec<f64>,
    pub s: Vec<BigRational>,
    pub exponents: Vec<BigRational>,
    pub family: InputFamily,
    pub band: i64,
    pub atom_moments: Option<usize>,
    pub j_min: i32,
    pub j_max: i32,
    pub output_norm: OutputNorm,
    // Sweep-only fields.
    pub facet: Vec<usize>,
    pub sweep_from: Vec<BigRational>,
    pub sweep_to: Vec<BigRational>,
    pub sweep_steps: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        Self {
            m: 2,
            n: 1,
            grid_points: 64,
            period: 1.0,
            seed: 7,
            trials: 32,
            symbol: "constant".into(),
            symbol_params: Vec::new(),
            s: Vec::new(),
            exponents: Vec::new(),
            family: InputFamily::Auto,
            band: 8,
            atom_moments: None,
            j_min: -4,
            j_max: 4,
            output_norm: OutputNorm::Lp,
            facet: Vec::new(),
            sweep_from: Vec::new(),
            sweep_to: Vec::new(),
            sweep_steps: 8,
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(text.trim())
        .map_err(|_| CliError::Config(format!("bad rational `{text}` (expected num/den)")))
}

fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_rational)
        .collect()
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad number `{t}`")))
        })
        .collect()
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Config(format!("bad integer `{t}`")))
        })
        .collect()
}

impl ProbeConfig {
    /// Parses the flat key-value text.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Config(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    lineno + 1
                )));
            };
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Self::from_map(map)
    }

    fn from_map(map: BTreeMap<String, String>) -> Result<Self, CliError> {
        let mut config = ProbeConfig::default();
        for (key, value) in &map {
            match key.as_str() {
                "m" => config.m = parse_scalar(key, value)?,
                "n" => config.n = parse_scalar(key, value)?,
                "grid_points" => config.grid_points = parse_scalar(key, value)?,
                "period" => config.period = parse_scalar(key, value)?,
                "seed" => config.seed = parse_scalar(key, value)?,
                "trials" => config.trials = parse_scalar(key, value)?,
                "symbol" => config.symbol = value.clone(),
                "symbol_params" => config.symbol_params = parse_f64_list(value)?,
                "s" => config.s = parse_rational_list(value)?,
                "exponents" => config.exponents = parse_rational_list(value)?,
                "family" => {
                    config.family = match value.as_str() {
                        "auto" => InputFamily::Auto,
                        "random_bandlimited" => InputFamily::RandomBandlimited,
                        "atoms" => InputFamily::Atoms,
                        "constants" => InputFamily::Constants,
                        other => {
                            return Err(CliError::Config(format!("unknown family `{other}`")))
                        }
                    }
                }
                "band" => config.band = parse_scalar(key, value)?,
                "atom_moments" => {
                    config.atom_moments = if value.is_empty() {
                        None
                    } else {
                        Some(parse_scalar(key, value)?)
                    }
                }
                "jmin" => config.j_min = parse_scalar(key, value)?,
                "jmax" => config.j_max = parse_scalar(key, value)?,
                "output_norm" => {
                    config.output_norm = match value.as_str() {
                        "lp" => OutputNorm::Lp,
                        "hp" => OutputNorm::Hp,
                        "weak" => OutputNorm::Weak,
                        other => {
                            return Err(CliError::Config(format!("unknown output norm `{other}`")))
                        }
                    }
                }
                "facet" => config.facet = parse_usize_list(value)?,
                "sweep_from" => config.sweep_from = parse_rational_list(value)?,
                "sweep_to" => config.sweep_to = parse_rational_list(value)?,
                "sweep_steps" => config.sweep_steps = parse_scalar(key, value)?,
                other => return Err(CliError::Config(format!("unknown config key `{other}`"))),
            }
        }
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.m == 0 || self.m != self.s.len() || self.m != self.exponents.len() {
            return Err(CliError::Config(format!(
                "m = {} must match the lengths of s ({}) and exponents ({})",
                self.m,
                self.s.len(),
                self.exponents.len()
            )));
        }
        if self.trials == 0 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        if self.j_min >= self.j_max {
            return Err(CliError::Config(format!(
                "jmin = {} must be below jmax = {}",
                self.j_min, self.j_max
            )));
        }
        if self.band < 1 || self.band as usize >= self.grid_points / 2 {
            return Err(CliError::Config(format!(
                "band = {} must lie in [1, N/2) with N = {}",
                self.band, self.grid_points
            )));
        }
        Ok(())
    }

    /// Canonical text form: every field, sorted keys, exact fractions.
    /// This is what the config hash digests.
    pub fn canonical_string(&self) -> String {
        let rational_list = |v: &[BigRational]| -> String {
            v.iter()
                .map(exponent_geometry::format_rational)
                .collect::<Vec<_>>()
                .join(",")
        };
        let f64_list = |v: &[f64]| -> String {
            v.iter()
                .map(|x| format!("{x}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let usize_list = |v: &[usize]| -> String {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut lines = vec![
            format!("atom_moments = {}", match self.atom_moments {
                Some(k) => k.to_string(),
                None => String::new(),
            }),
            format!("band = {}", self.band),
            format!("exponents = {}", rational_list(&self.exponents)),
            format!("facet = {}", usize_list(&self.facet)),
            format!("family = {}", self.family.name()),
            format!("grid_points = {}", self.grid_points),
            format!("jmax = {}", self.j_max),
            format!("jmin = {}", self.j_min),
            format!("m = {}", self.m),
            format!("n = {}", self.n),
            format!("output_norm = {}", self.output_norm.name()),
            format!("period = {}", self.period),
            format!("s = {}", rational_list(&self.s)),
            format!("seed = {}", self.seed),
            format!("sweep_from = {}", rational_list(&self.sweep_from)),
            format!("sweep_steps = {}", self.sweep_steps),
            format!("sweep_to = {}", rational_list(&self.sweep_to)),
            format!("symbol = {}", self.symbol),
            format!("symbol_params = {}", f64_list(&self.symbol_params)),
            format!("trials = {}", self.trials),
        ];
        lines.push(String::new());
        lines.join("\n")
    }

    pub fn grid_spec(&self) -> Result<GridSpec, CliError> {
        Ok(GridSpec::new(self.n, self.grid_points, self.period)?)
    }

    pub fn profile(&self) -> Result<SmoothnessProfile, CliError> {
        SmoothnessProfile::new(self.n as u32, self.s.clone())
            .map_err(|e| CliError::Config(format!("invalid smoothness profile: {e}")))
    }

    pub fn reciprocals(&self) -> Result<ReciprocalExponents, CliError> {
        ReciprocalExponents::new(self.exponents.clone())
            .map_err(|e| CliError::Config(format!("invalid exponents: {e}")))
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.j_min, self.j_max)
    }

    pub fn symbol_grid(&self) -> Result<SymbolGrid, CliError> {
        Ok(SymbolGrid::make_symbol(
            self.grid_spec()?,
            self.m,
            &self.symbol,
            &self.symbol_params,
        )?)
    }
}

fn parse_scalar<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse::<T>()
        .map_err(|_| CliError::Config(format!("bad value for `{key}`: `{value}`")))
}
