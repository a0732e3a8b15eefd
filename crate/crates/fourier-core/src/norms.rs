//! Product-type Sobolev norms of symbols and the dyadic regularity constant.
//!
//! The norm of a symbol sigma is the weighted L2 norm of its transform over
//! the m*n-dimensional lattice: each dual block y_i carries the weight
//! <y_i>^{s_i} with <y> = sqrt(1 + |y|^2). Dual variables run over the same
//! integers/L frequency convention as the grid itself, and the quadrature
//! scales the square sum by the dual cell volume (1/L)^{mn}.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use exponent_geometry::SmoothnessProfile;

use crate::error::FourierError;
use crate::fft::{fft_nd, FftDirection};
use crate::grid::{decode_index, signed_index};
use crate::partition::Partition;
use crate::symbol::{dense_count, SymbolGrid};

fn profile_orders(profile: &SmoothnessProfile) -> Vec<f64> {
    profile
        .s()
        .iter()
        .map(|s| s.to_f64().expect("smoothness order fits in f64"))
        .collect()
}

fn check_profile(sigma: &SymbolGrid, profile: &SmoothnessProfile) -> Result<(), FourierError> {
    if profile.m() != sigma.m() {
        return Err(FourierError::LinearityMismatch {
            profile_m: profile.m(),
            symbol_m: sigma.m(),
        });
    }
    if profile.n() as usize != sigma.spec().n() {
        return Err(FourierError::AmbientMismatch {
            profile_n: profile.n() as usize,
            grid_n: sigma.spec().n(),
        });
    }
    Ok(())
}

/// Weighted-L2 norm of dense symbol samples over the m*n-dimensional
/// lattice; `orders` has one weight exponent per block of n axes.
pub fn sobolev_norm_samples(
    mut data: Vec<Complex64>,
    points: usize,
    period: f64,
    n: usize,
    orders: &[f64],
) -> f64 {
    let m = orders.len();
    let axes = m * n;
    fft_nd(&mut data, axes, points, FftDirection::Forward);

    let mut idx = vec![0usize; axes];
    let mut sum = 0.0;
    for (flat, z) in data.iter().enumerate() {
        decode_index(flat, points, &mut idx);
        let mut weight = 1.0;
        for (i, &s) in orders.iter().enumerate() {
            let mut block_norm_sq = 0.0;
            for a in 0..n {
                let y = signed_index(idx[i * n + a], points) as f64 / period;
                block_norm_sq += y * y;
            }
            weight *= (1.0 + block_norm_sq).powf(s / 2.0);
        }
        let v = z.norm() * weight;
        sum += v * v;
    }
    let dual_cell = period.powi(-(axes as i32));
    (sum * dual_cell).sqrt()
}

/// W^{(s_1,...,s_m)} norm of a symbol by discrete quadrature.
pub fn product_sobolev_norm(
    sigma: &SymbolGrid,
    profile: &SmoothnessProfile,
) -> Result<f64, FourierError> {
    check_profile(sigma, profile)?;
    let data = sigma.densify()?;
    Ok(sobolev_norm_samples(
        data,
        sigma.spec().points(),
        sigma.spec().period(),
        sigma.spec().n(),
        &profile_orders(profile),
    ))
}

/// W norm of the annulus-localized rescaling sigma(2^j .) * psi_hat at one
/// scale; the rescaled factor is sampled at the grid frequencies times 2^j.
pub fn scale_norm(
    sigma: &SymbolGrid,
    profile: &SmoothnessProfile,
    j: i32,
) -> Result<f64, FourierError> {
    check_profile(sigma, profile)?;
    let spec = sigma.spec();
    let total = dense_count(spec, sigma.m())?;
    let axes = sigma.axes();

    let scale = (2.0f64).powi(j);
    let mut idx = vec![0usize; axes];
    let mut xi = vec![0.0f64; axes];
    let mut data = Vec::with_capacity(total);
    for flat in 0..total {
        decode_index(flat, spec.points(), &mut idx);
        for (slot, &i) in xi.iter_mut().zip(idx.iter()) {
            *slot = signed_index(i, spec.points()) as f64 / spec.period();
        }
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        let bump = crate::partition::psi_hat_radial(r);
        if bump == 0.0 {
            data.push(Complex64::new(0.0, 0.0));
            continue;
        }
        let scaled: Vec<f64> = xi.iter().map(|v| v * scale).collect();
        data.push(sigma.eval_physical(&scaled) * bump);
    }
    Ok(sobolev_norm_samples(
        data,
        spec.points(),
        spec.period(),
        spec.n(),
        &profile_orders(profile),
    ))
}

/// The regularity constant A: the maximum of [`scale_norm`] over the
/// partition's scale range.
pub fn regularity_constant_a(
    sigma: &SymbolGrid,
    profile: &SmoothnessProfile,
    partition: &Partition,
) -> Result<f64, FourierError> {
    let mut best = 0.0f64;
    for j in partition.scales() {
        best = best.max(scale_norm(sigma, profile, j)?);
    }
    Ok(best)
}
