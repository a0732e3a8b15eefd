//! Sharpness sweeps along a line in smoothness space.
//!
//! A sweep fixes the symbol, the exponent point, and a facet subset J, then
//! samples s along a segment crossing the facet
//! sum_{k in J}(s_k/n - 1/p_k) = -1/2. Each row records the recomputed
//! regularity constant, the max trial ratio, and the exact inside/outside
//! flag. Sweeps emit trend data only; no pass/fail claim is attached to
//! the ratio column.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use exponent_geometry::{check_admissible, format_rational, SmoothnessProfile};
use fourier_core::{apply_multiplier, regularity_constant_a};

use crate::config::ProbeConfig;
use crate::error::CliError;
use crate::inputs::draw_input;
use crate::probe::measure_output_norm;
use crate::report::{config_hash, timestamp, SweepReport, SweepRow};

fn facet_margin(
    facet: &[usize],
    s: &[BigRational],
    n: usize,
    r: &[BigRational],
) -> BigRational {
    let n_rat = BigRational::from_integer((n as i64).into());
    let half = BigRational::new(1.into(), 2.into());
    let mut acc = half;
    for &k in facet {
        acc += &s[k] / &n_rat - &r[k];
    }
    acc
}

pub fn sharpness_sweep(config: &ProbeConfig) -> Result<SweepReport, CliError> {
    let m = config.m;
    if config.facet.is_empty() || config.facet.iter().any(|&k| k == 0 || k > m) {
        return Err(CliError::Config(
            "facet must list 1-based indices within 1..=m".into(),
        ));
    }
    if config.sweep_from.len() != m || config.sweep_to.len() != m {
        return Err(CliError::Config(
            "sweep_from and sweep_to must have one entry per slot".into(),
        ));
    }
    if config.sweep_steps == 0 {
        return Err(CliError::Config("sweep_steps must be at least 1".into()));
    }
    let facet: Vec<usize> = config.facet.iter().map(|&k| k - 1).collect();

    // The facet margin is affine in t; a sweep must change its sign.
    let h0 = facet_margin(&facet, &config.sweep_from, config.n, &config.exponents);
    let h1 = facet_margin(&facet, &config.sweep_to, config.n, &config.exponents);
    if h0.is_positive() == h1.is_positive() && !h0.is_zero() && !h1.is_zero() {
        return Err(CliError::Config(format!(
            "sweep line never crosses the facet: margins {} and {}",
            format_rational(&h0),
            format_rational(&h1)
        )));
    }

    let spec = config.grid_spec()?;
    let sigma = config.symbol_grid()?;
    let r = config.reciprocals()?;

    // Trial outputs do not depend on s; measure them once. Each entry is
    // output norm / product of input norms, to be divided by A(s) per row.
    let p_recip = r.reciprocal_sum();
    let mut trial_data = Vec::with_capacity(config.trials);
    for trial in 0..config.trials {
        let mut functions = Vec::with_capacity(m);
        let mut norm_product = 1.0f64;
        for slot in 0..m {
            let drawn = draw_input(config, &spec, trial, slot, r.coord(slot))?;
            norm_product *= drawn.norm;
            functions.push(drawn.function);
        }
        let out = apply_multiplier(&sigma, &functions)?;
        let out_norm = measure_output_norm(config, &out, &p_recip)?;
        trial_data.push(if norm_product > 0.0 {
            out_norm / norm_product
        } else {
            0.0
        });
    }

    let steps = config.sweep_steps;
    let mut rows = Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        let t = BigRational::new((k as i64).into(), (steps as i64).into());
        let s_t: Vec<BigRational> = config
            .sweep_from
            .iter()
            .zip(&config.sweep_to)
            .map(|(a, b)| a + &t * (b - a))
            .collect();
        let profile = SmoothnessProfile::new(config.n as u32, s_t.clone()).map_err(|e| {
            CliError::Config(format!(
                "sweep sample at t = {} leaves the admissible smoothness regime: {e}",
                format_rational(&t)
            ))
        })?;
        let a = regularity_constant_a(&sigma, &profile, &config.partition())?;
        if a.is_nan() || a <= 0.0 {
            return Err(CliError::Guard(format!(
                "regularity constant vanished at t = {}",
                format_rational(&t)
            )));
        }
        let max_ratio = trial_data
            .iter()
            .map(|per_norm| per_norm / a)
            .fold(0.0f64, f64::max);
        let inside = check_admissible(&profile, &r, false)?;
        rows.push(SweepRow {
            t: format_rational(&t),
            s: s_t.iter().map(format_rational).collect(),
            a_constant: a,
            max_ratio,
            inside,
        });
    }

    let canonical = config.canonical_string();
    Ok(SweepReport {
        hash: config_hash(&canonical),
        config: canonical,
        seed: config.seed,
        generated_at: timestamp(),
        facet: config.facet.clone(),
        rows,
    })
}
