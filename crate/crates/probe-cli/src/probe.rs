//! Ratio probes against the regularity constant, and the pointwise
//! domination check.
//!
//! Probes report empirical constants and trends only; nothing here asserts
//! the analytic necessity claims, whose constants are not observable at
//! grid scale.

use num_traits::{ToPrimitive, Zero};

use fourier_core::{
    apply_multiplier, regularity_constant_a, sobolev_norm_samples, GridFunction, SymbolGrid,
};
use hardy_tools::{hp_quasinorm, weak_norm, zeta_convolve};

use crate::config::{OutputNorm, ProbeConfig};
use crate::error::CliError;
use crate::inputs::draw_input;
use crate::report::{config_hash, timestamp, ProbeReport, ProbeSummary, TrialRow};

fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("ratios are finite"));
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    }
}

/// Measures the configured output norm of the operator value.
pub(crate) fn measure_output_norm(
    config: &ProbeConfig,
    out: &GridFunction,
    p_recip: &num_rational::BigRational,
) -> Result<f64, CliError> {
    let t_levels = out.spec().points().trailing_zeros() + 1;
    let p = if p_recip.is_zero() {
        f64::INFINITY
    } else {
        (num_rational::BigRational::from_integer(1.into()) / p_recip)
            .to_f64()
            .expect("exponent fits in f64")
    };
    match config.output_norm {
        OutputNorm::Lp => Ok(if p.is_infinite() {
            out.sup_norm()
        } else {
            out.lp_scaled(p)
        }),
        OutputNorm::Hp => {
            if p > 1.0 {
                return Err(CliError::Config(format!(
                    "output_norm = hp needs the target p <= 1, got p = {p}"
                )));
            }
            Ok(hp_quasinorm(out, p, t_levels)?)
        }
        OutputNorm::Weak => {
            if p.is_infinite() {
                return Err(CliError::Config(
                    "output_norm = weak needs a finite target p".into(),
                ));
            }
            Ok(weak_norm(out, p)?)
        }
    }
}

/// Runs the trial loop: draws inputs per the exponent casework, applies the
/// multiplier, and records output norm / (A * product of input norms).
pub fn ratio_probe(config: &ProbeConfig) -> Result<ProbeReport, CliError> {
    let spec = config.grid_spec()?;
    let sigma = config.symbol_grid()?;
    let profile = config.profile()?;
    let r = config.reciprocals()?;
    let partition = config.partition();

    let a = regularity_constant_a(&sigma, &profile, &partition)?;
    if a.is_nan() || a <= 0.0 {
        return Err(CliError::Guard(format!(
            "regularity constant A = {a}; the ratio is undefined"
        )));
    }

    let p_recip = r.reciprocal_sum();
    let mut rows = Vec::with_capacity(config.trials);
    let mut ratios = Vec::with_capacity(config.trials);
    for trial in 0..config.trials {
        let mut functions = Vec::with_capacity(config.m);
        let mut norm_product = 1.0f64;
        let mut families = Vec::with_capacity(config.m);
        for slot in 0..config.m {
            let drawn = draw_input(config, &spec, trial, slot, r.coord(slot))?;
            norm_product *= drawn.norm;
            families.push(drawn.family.to_string());
            functions.push(drawn.function);
        }
        let out = apply_multiplier(&sigma, &functions)?;
        let out_norm = measure_output_norm(config, &out, &p_recip)?;
        let ratio = if norm_product > 0.0 {
            out_norm / (a * norm_product)
        } else {
            0.0
        };
        ratios.push(ratio);
        rows.push(TrialRow {
            trial,
            output_norm: out_norm,
            input_norm_product: norm_product,
            ratio,
            families,
        });
    }

    let canonical = config.canonical_string();
    Ok(ProbeReport {
        hash: config_hash(&canonical),
        config: canonical,
        seed: config.seed,
        generated_at: timestamp(),
        a_constant: a,
        output_norm_kind: config.output_norm.name().to_string(),
        rows,
        summary: ProbeSummary {
            max_ratio: ratios.iter().copied().fold(0.0, f64::max),
            median_ratio: median(&ratios),
        },
    })
}

/// Pointwise domination check: the largest over x of
/// |T_sigma(f)(x)| / (||sigma(2^j .)||_W * prod (zeta_j * |f_i|^q)^{1/q}(x)).
///
/// `sigma` is expected to be localized to |xi| <= 2^{j+1} (a dyadic piece);
/// a zero majorant at some x contributes ratio 0 by convention.
pub fn tomita_check(
    sigma: &SymbolGrid,
    j: i32,
    inputs: &[GridFunction],
    q: f64,
    s: f64,
) -> Result<f64, CliError> {
    let n = sigma.spec().n() as f64;
    let q_low = (n / s).max(1.0);
    if !(q > q_low && q < 2.0) {
        return Err(CliError::Config(format!(
            "need max(1, n/s) = {q_low} < q < 2, got q = {q}"
        )));
    }

    let out = apply_multiplier(sigma, inputs)?;

    // W norm of the rescaled symbol sigma(2^j .) sampled on the lattice.
    let spec = sigma.spec();
    let total = fourier_core::dense_count(spec, sigma.m())?;
    let axes = sigma.axes();
    let scale = (2.0f64).powi(j);
    let mut data = Vec::with_capacity(total);
    let mut idx = vec![0usize; axes];
    for flat in 0..total {
        let mut rest = flat;
        for a in (0..axes).rev() {
            idx[a] = rest % spec.points();
            rest /= spec.points();
        }
        let xi: Vec<f64> = idx
            .iter()
            .map(|&i| {
                let signed = if i < spec.points() / 2 {
                    i as i64
                } else {
                    i as i64 - spec.points() as i64
                };
                signed as f64 / spec.period() * scale
            })
            .collect();
        data.push(sigma.eval_physical(&xi));
    }
    let w_norm = sobolev_norm_samples(
        data,
        spec.points(),
        spec.period(),
        spec.n(),
        &vec![s; sigma.m()],
    );

    let convolutions: Vec<GridFunction> = inputs
        .iter()
        .map(|f| zeta_convolve(f, j, s, q))
        .collect::<Result<_, _>>()?;

    let mut max_ratio = 0.0f64;
    for (x, value) in out.samples().iter().enumerate() {
        let mut majorant = w_norm;
        for conv in &convolutions {
            majorant *= conv.samples()[x].re.powf(1.0 / q);
        }
        if majorant > 0.0 {
            max_ratio = max_ratio.max(value.norm() / majorant);
        }
    }
    Ok(max_ratio)
}
