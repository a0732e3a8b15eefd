//! H^p quasi-norm through the Gaussian maximal function.
//!
//! The defining supremum over continuous dilations t is approximated over
//! the dyadic set {L * 2^-k : 0 <= k < t_levels}. The convolutions run in
//! frequency space against the exactly periodized Gaussian; no claim is
//! made about equivalence across different approximating kernels beyond
//! what the tests record empirically.

use fourier_core::{GridFunction, Complex64};

use crate::error::HardyError;

/// Maximal function sup_t |Phi_t * f| over the dyadic dilation set.
pub fn gaussian_maximal(f: &GridFunction, t_levels: u32) -> GridFunction {
    let spec = f.spec().clone();
    let n = spec.n();
    let points = spec.points();
    let base_spectrum = f.spectrum();

    let mut best = vec![0.0f64; spec.total_points()];
    for k in 0..t_levels.max(1) {
        let t = spec.period() * (2.0f64).powi(-(k as i32));
        let mut spectrum = base_spectrum.clone();
        let mut idx = vec![0usize; n];
        for (flat, z) in spectrum.iter_mut().enumerate() {
            let mut rest = flat;
            for a in (0..n).rev() {
                idx[a] = rest % points;
                rest /= points;
            }
            let norm_sq: f64 = idx
                .iter()
                .map(|&i| {
                    let xi = spec.frequency(i);
                    xi * xi
                })
                .sum();
            // Gaussian Phi(x) = e^{-pi |x|^2} has Phi_t^(xi) = e^{-pi t^2 |xi|^2}.
            *z *= (-std::f64::consts::PI * t * t * norm_sq).exp();
        }
        let smoothed = GridFunction::from_spectrum(spec.clone(), spectrum)
            .expect("spectrum length matches");
        for (slot, z) in best.iter_mut().zip(smoothed.samples()) {
            *slot = slot.max(z.norm());
        }
    }
    GridFunction::new(
        spec,
        best.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
    )
    .expect("sample count matches")
}

/// H^p quasi-norm: the L^p norm of the dyadic Gaussian maximal function.
pub fn hp_quasinorm(f: &GridFunction, p: f64, t_levels: u32) -> Result<f64, HardyError> {
    if p.is_nan() || p <= 0.0 {
        return Err(HardyError::InvalidExponent {
            reason: format!("Hardy exponent p must be positive, got {p}"),
        });
    }
    Ok(gaussian_maximal(f, t_levels).lp_scaled(p))
}
