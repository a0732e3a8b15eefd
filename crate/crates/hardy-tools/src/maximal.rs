//! Discrete maximal operator and the zeta-kernel convolutions.
//!
//! Radii are restricted to the dyadic set {L * 2^-k}; the true supremum
//! over all radii is sandwiched within a factor 2 by this set. Distances
//! are periodic (minimum image per axis).

use fourier_core::{GridFunction, GridSpec};

use crate::error::HardyError;

fn decode(flat: usize, points: usize, n: usize, out: &mut [usize]) {
    let mut rest = flat;
    for a in (0..n).rev() {
        out[a] = rest % points;
        rest /= points;
    }
}

/// Squared periodic distance between two lattice points.
fn periodic_dist_sq(spec: &GridSpec, a: &[usize], b: &[usize]) -> f64 {
    let l = spec.period();
    let step = l / spec.points() as f64;
    a.iter()
        .zip(b)
        .map(|(&i, &j)| {
            let d = (i as f64 - j as f64).abs() * step;
            let d = d.min(l - d);
            d * d
        })
        .sum()
}

/// q-th power maximal function over the dyadic radius set
/// {L * 2^-k : 0 <= k <= log2 N}.
pub fn maximal_mq(f: &GridFunction, q: f64) -> Result<GridFunction, HardyError> {
    if !(q > 0.0 && q < 2.0) {
        return Err(HardyError::InvalidExponent {
            reason: format!("maximal exponent q must lie in (0, 2), got {q}"),
        });
    }
    let spec = f.spec().clone();
    let n = spec.n();
    let points = spec.points();
    let total = spec.total_points();
    let cell = spec.cell_volume();
    let levels = points.trailing_zeros();

    let powers: Vec<f64> = f.samples().iter().map(|z| z.norm().powf(q)).collect();

    let mut idx_x = vec![0usize; n];
    let mut idx_y = vec![0usize; n];
    let mut out = Vec::with_capacity(total);
    for x in 0..total {
        decode(x, points, n, &mut idx_x);
        let mut best = 0.0f64;
        for k in 0..=levels {
            let r = spec.period() * (2.0f64).powi(-(k as i32));
            let r_sq = r * r;
            let mut sum = 0.0;
            for (y, &p) in powers.iter().enumerate() {
                decode(y, points, n, &mut idx_y);
                if periodic_dist_sq(&spec, &idx_x, &idx_y) < r_sq {
                    sum += p;
                }
            }
            let avg = sum * cell / r.powi(n as i32);
            best = best.max(avg.powf(1.0 / q));
        }
        out.push(fourier_core::Complex64::new(best, 0.0));
    }
    Ok(GridFunction::new(spec, out)?)
}

/// Samples zeta_j(x) = 2^{jn} (1 + |2^j x|)^{-sq} at the minimum-image
/// representative of every lattice offset.
fn zeta_samples(spec: &GridSpec, j: i32, sq: f64) -> Vec<f64> {
    let n = spec.n();
    let points = spec.points();
    let total = spec.total_points();
    let l = spec.period();
    let step = l / points as f64;
    let scale = (2.0f64).powi(j);
    let front = scale.powi(n as i32);
    let mut idx = vec![0usize; n];
    (0..total)
        .map(|flat| {
            decode(flat, points, n, &mut idx);
            let dist_sq: f64 = idx
                .iter()
                .map(|&i| {
                    let d = (i as f64 * step).min(l - i as f64 * step);
                    d * d
                })
                .sum();
            front * (1.0 + scale * dist_sq.sqrt()).powf(-sq)
        })
        .collect()
}

/// Periodic discrete convolution of |f|^q against zeta_j, scaled by the
/// cell volume; the caller applies the final 1/q power.
pub fn zeta_convolve(f: &GridFunction, j: i32, s: f64, q: f64) -> Result<GridFunction, HardyError> {
    let spec = f.spec().clone();
    let n = spec.n();
    let sq = s * q;
    if sq.is_nan() || sq <= n as f64 {
        return Err(HardyError::NonIntegrable { sq, n });
    }
    let points = spec.points();
    let total = spec.total_points();
    let cell = spec.cell_volume();

    let zeta = zeta_samples(&spec, j, sq);
    let powers: Vec<f64> = f.samples().iter().map(|z| z.norm().powf(q)).collect();

    let mut idx_x = vec![0usize; n];
    let mut idx_y = vec![0usize; n];
    let mut out = Vec::with_capacity(total);
    for x in 0..total {
        decode(x, points, n, &mut idx_x);
        let mut acc = 0.0;
        for (y, &p) in powers.iter().enumerate() {
            decode(y, points, n, &mut idx_y);
            // Offset (x - y) mod N per axis indexes the kernel table.
            let mut off_flat = 0usize;
            for a in 0..n {
                let off = (idx_x[a] + points - idx_y[a]) % points;
                off_flat = off_flat * points + off;
            }
            acc += zeta[off_flat] * p;
        }
        out.push(fourier_core::Complex64::new(acc * cell, 0.0));
    }
    Ok(GridFunction::new(spec, out)?)
}

/// Scaled l1 mass of the zeta_j kernel on the grid.
pub fn zeta_l1(spec: &GridSpec, j: i32, s: f64, q: f64) -> Result<f64, HardyError> {
    let sq = s * q;
    if sq.is_nan() || sq <= spec.n() as f64 {
        return Err(HardyError::NonIntegrable { sq, n: spec.n() });
    }
    Ok(zeta_samples(spec, j, sq).iter().sum::<f64>() * spec.cell_volume())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fourier_core::Complex64;

    #[test]
    fn constant_function_maximal_value() {
        let spec = GridSpec::unit(1, 32).unwrap();
        let c = 3.0;
        let f = GridFunction::new(spec.clone(), vec![Complex64::new(c, 0.0); 32]).unwrap();
        let m = maximal_mq(&f, 1.5).unwrap();
        // Within the ball/cube discretization constant 2^n of |c|,
        // and at least |c| thanks to the full-period radius.
        for z in m.samples() {
            assert!(z.re >= c * (1.0 - 1e-12));
            assert!(z.re <= c * 2.0 + 1e-12);
        }
    }

    #[test]
    fn maximal_dominates_the_smallest_ball_average() {
        let spec = GridSpec::unit(1, 16).unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 7, 5);
        let q = 1.2;
        let m = maximal_mq(&f, q).unwrap();
        // The smallest dyadic radius is one cell: the ball {|x-y| < L/N}
        // contains only y = x, so the average is |f(x)|^q * cell / r^n.
        let cell = spec.cell_volume();
        let r = spec.period() / 16.0;
        for (mz, fz) in m.samples().iter().zip(f.samples()) {
            let single = (fz.norm().powf(q) * cell / r).powf(1.0 / q);
            assert!(mz.re >= single - 1e-12);
        }
    }

    #[test]
    fn maximal_is_monotone_in_the_input() {
        let spec = GridSpec::unit(1, 16).unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 3, 4);
        let g = GridFunction::new(
            spec,
            f.samples().iter().map(|z| z * 2.0).collect(),
        )
        .unwrap();
        let mf = maximal_mq(&f, 1.5).unwrap();
        let mg = maximal_mq(&g, 1.5).unwrap();
        for (a, b) in mf.samples().iter().zip(mg.samples()) {
            assert!(a.re <= b.re + 1e-12);
        }
    }

    #[test]
    fn invalid_q_is_rejected() {
        let spec = GridSpec::unit(1, 8).unwrap();
        let f = GridFunction::zeros(spec);
        assert!(maximal_mq(&f, 0.0).is_err());
        assert!(maximal_mq(&f, 2.0).is_err());
    }

    #[test]
    fn zeta_convolution_of_a_constant() {
        let spec = GridSpec::unit(1, 32).unwrap();
        let f = GridFunction::new(spec.clone(), vec![Complex64::new(1.0, 0.0); 32]).unwrap();
        let out = zeta_convolve(&f, 0, 1.5, 1.0).unwrap();
        let mass = zeta_l1(&spec, 0, 1.5, 1.0).unwrap();
        for z in out.samples() {
            assert!((z.re - mass).abs() <= 1e-12 * mass);
        }
    }

    #[test]
    fn zeta_convolution_matches_direct_loop() {
        let spec = GridSpec::unit(1, 16).unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 9, 5);
        let (j, s, q) = (1, 1.25, 1.5);
        let fast = zeta_convolve(&f, j, s, q).unwrap();

        // Independent direct loop over positions and sources.
        let l = 1.0f64;
        let step = l / 16.0;
        let scale = (2.0f64).powi(j);
        for x in 0..16usize {
            let mut acc = 0.0;
            for y in 0..16usize {
                let d = ((x as f64 - y as f64).abs() * step).min(l - (x as f64 - y as f64).abs() * step);
                let zeta = scale * (1.0 + scale * d).powf(-s * q);
                acc += zeta * f.samples()[y].norm().powf(q);
            }
            acc *= step;
            assert!((fast.samples()[x].re - acc).abs() <= 1e-12 * acc.max(1.0));
        }
    }

    #[test]
    fn pointwise_lower_bound_by_the_center_term() {
        let spec = GridSpec::unit(1, 16).unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 2, 4);
        let (j, s, q) = (0, 2.0, 1.0);
        let out = zeta_convolve(&f, j, s, q).unwrap();
        let cell = spec.cell_volume();
        // zeta_j(0) = 2^{jn}.
        let zeta0 = (2.0f64).powi(j);
        for (o, v) in out.samples().iter().zip(f.samples()) {
            assert!(o.re >= zeta0 * v.norm().powf(q) * cell - 1e-12);
        }
    }

    #[test]
    fn non_integrable_kernel_is_rejected() {
        let spec = GridSpec::unit(1, 8).unwrap();
        let f = GridFunction::zeros(spec);
        assert!(matches!(
            zeta_convolve(&f, 0, 0.5, 1.0),
            Err(HardyError::NonIntegrable { .. })
        ));
    }
}
