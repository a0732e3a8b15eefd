//! Weak Lorentz quasi-norms on the grid.

use fourier_core::GridFunction;

use crate::error::HardyError;

/// Weak L^{q,infinity} norm: the supremum of lambda * |{|f| > lambda}|^{1/q}
/// over levels, attained at the sample magnitudes. With v running over the
/// sorted magnitudes this is max_v v * measure{|f| >= v}^{1/q} (the left
/// limit of the strict-inequality distribution function).
pub fn weak_norm(f: &GridFunction, q: f64) -> Result<f64, HardyError> {
    if q.is_nan() || q <= 0.0 {
        return Err(HardyError::InvalidExponent {
            reason: format!("Lorentz exponent q must be positive, got {q}"),
        });
    }
    let cell = f.spec().cell_volume();
    let mut mags: Vec<f64> = f
        .samples()
        .iter()
        .map(|z| z.norm())
        .filter(|v| *v > 0.0)
        .collect();
    mags.sort_by(|a, b| b.partial_cmp(a).expect("magnitudes are finite"));
    let mut best = 0.0f64;
    for (i, &v) in mags.iter().enumerate() {
        best = best.max(v * (((i + 1) as f64) * cell).powf(1.0 / q));
    }
    Ok(best)
}
