//! Evaluation of the m-linear multiplier operator on the periodic grid.
//!
//! The operator acts in frequency space: the output coefficient at eta is
//! the sum of sigma(xi_1, ..., xi_m) times the product of the input
//! coefficients over all tuples with xi_1 + ... + xi_m congruent to eta
//! modulo the grid. Frequency addition wraps; this is the periodization of
//! the convolution structure on the torus.

use num_complex::Complex64;

use crate::error::FourierError;
use crate::fft::{fft_nd, FftDirection};
use crate::grid::{decode_index, increment_index, GridFunction, GridSpec};
use crate::partition::Partition;
use crate::symbol::{dense_count, SymbolGrid};

/// Applies the multiplier to `inputs` (all sharing the symbol's grid spec).
///
/// The summation order over frequency tuples is a fixed lexicographic
/// odometer, so results are bit-reproducible for a given build.
pub fn apply_multiplier(
    sigma: &SymbolGrid,
    inputs: &[GridFunction],
) -> Result<GridFunction, FourierError> {
    let m = sigma.m();
    if inputs.len() != m {
        return Err(FourierError::InputCount {
            expected: m,
            got: inputs.len(),
        });
    }
    for f in inputs {
        if f.spec() != sigma.spec() {
            return Err(FourierError::SpecMismatch);
        }
    }
    let spec = sigma.spec().clone();
    // The tuple loop costs one symbol evaluation per dense lattice point,
    // so the dense memory guard doubles as the work guard.
    dense_count(&spec, m)?;

    let spectra: Vec<Vec<Complex64>> = inputs.iter().map(|f| f.spectrum()).collect();
    let n = spec.n();
    let points = spec.points();
    let block_total = spec.total_points();

    let mut out_spectrum = vec![Complex64::new(0.0, 0.0); block_total];
    let axes = m * n;
    let mut tuple = vec![0usize; axes];
    let mut eta = vec![0usize; n];
    loop {
        let mut coeff = sigma.eval_indices(&tuple);
        if coeff != Complex64::new(0.0, 0.0) {
            for (i, spectrum) in spectra.iter().enumerate() {
                let block = &tuple[i * n..(i + 1) * n];
                let flat = block.iter().fold(0, |acc, &v| acc * points + v);
                coeff *= spectrum[flat];
            }
            for (a, slot) in eta.iter_mut().enumerate() {
                let mut sum = 0usize;
                for i in 0..m {
                    sum += tuple[i * n + a];
                }
                *slot = sum % points;
            }
            let eta_flat = eta.iter().fold(0, |acc, &v| acc * points + v);
            out_spectrum[eta_flat] += coeff;
        }
        if !increment_index(&mut tuple, points) {
            break;
        }
    }

    // Unitary spectra carry N^{n/2} per coefficient relative to the Fourier
    // coefficients, so the m-fold product needs this compensation.
    let scale = (block_total as f64).powf((1.0 - m as f64) / 2.0);
    for z in out_spectrum.iter_mut() {
        *z *= scale;
    }
    GridFunction::from_spectrum(spec, out_spectrum)
}

/// The dyadic piece sigma_j = sigma * psi_hat(2^{-j} .), materialized dense.
pub fn dyadic_piece(
    sigma: &SymbolGrid,
    j: i32,
    partition: &Partition,
) -> Result<SymbolGrid, FourierError> {
    if !partition.contains(j) {
        return Err(FourierError::PartitionRange {
            j,
            j_min: partition.j_min(),
            j_max: partition.j_max(),
        });
    }
    let spec = sigma.spec().clone();
    let total = dense_count(&spec, sigma.m())?;
    let axes = sigma.axes();
    let mut idx = vec![0usize; axes];
    let mut xi = vec![0.0f64; axes];
    let mut data = Vec::with_capacity(total);
    for flat in 0..total {
        decode_index(flat, spec.points(), &mut idx);
        for (slot, &i) in xi.iter_mut().zip(idx.iter()) {
            *slot = crate::grid::signed_index(i, spec.points()) as f64 / spec.period();
        }
        let bump = partition.scaled_at(j, &xi);
        if bump == 0.0 {
            data.push(Complex64::new(0.0, 0.0));
        } else {
            data.push(sigma.eval_flat(flat) * bump);
        }
    }
    SymbolGrid::from_dense(spec, sigma.m(), data)
}

/// Frequency-side multiplication by phi(2^{-j} xi) followed by inversion.
/// `phi` must vanish at the origin; the zero mode of the output is exactly 0.
pub fn delta_j<F>(f: &GridFunction, j: i32, phi: F) -> GridFunction
where
    F: Fn(&[f64]) -> f64,
{
    let spec = f.spec().clone();
    let zero = vec![0.0f64; spec.n()];
    assert_eq!(phi(&zero), 0.0, "profile must vanish at the origin");

    let scale = (2.0f64).powi(-j);
    let mut spectrum = f.spectrum();
    let mut idx = vec![0usize; spec.n()];
    let mut xi = vec![0.0f64; spec.n()];
    for (flat, z) in spectrum.iter_mut().enumerate() {
        decode_index(flat, spec.points(), &mut idx);
        for (slot, &i) in xi.iter_mut().zip(idx.iter()) {
            *slot = spec.frequency(i) * scale;
        }
        *z *= phi(&xi);
    }
    GridFunction::from_spectrum(spec, spectrum).expect("spectrum length matches")
}

/// Inverse transform of a symbol over the m*n-dimensional lattice; the
/// kernel samples are returned as a grid function on that lattice.
pub fn kernel_of(sigma: &SymbolGrid) -> Result<GridFunction, FourierError> {
    let mut data = sigma.densify()?;
    let axes = sigma.axes();
    fft_nd(&mut data, axes, sigma.spec().points(), FftDirection::Inverse);
    let kernel_spec = GridSpec::new(axes, sigma.spec().points(), sigma.spec().period())?;
    GridFunction::new(kernel_spec, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::partition::make_partition;

    fn spec(points: usize) -> GridSpec {
        GridSpec::unit(1, points).unwrap()
    }

    fn rel_err(a: &GridFunction, b: &GridFunction) -> f64 {
        let denom = b.sup_norm().max(1e-300);
        a.samples()
            .iter()
            .zip(b.samples())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
            / denom
    }

    #[test]
    fn constant_symbol_gives_the_pointwise_product() {
        let s = spec(32);
        let f = GridFunction::random_bandlimited(s.clone(), 1, 6);
        let g = GridFunction::random_bandlimited(s.clone(), 2, 6);
        let sigma = SymbolGrid::make_symbol(s.clone(), 2, "constant", &[]).unwrap();
        let out = apply_multiplier(&sigma, &[f.clone(), g.clone()]).unwrap();
        let product = GridFunction::new(
            s,
            f.samples()
                .iter()
                .zip(g.samples())
                .map(|(a, b)| a * b)
                .collect(),
        )
        .unwrap();
        assert!(rel_err(&out, &product) <= 1e-10);
    }

    #[test]
    fn modulation_translates_the_first_input() {
        let s = spec(16);
        let f = GridFunction::random_bandlimited(s.clone(), 5, 5);
        let g = GridFunction::random_bandlimited(s.clone(), 6, 5);
        // Shift by two grid cells: a = 2/N * L.
        let shift = 2.0 / 16.0;
        let sigma = SymbolGrid::from_preset(
            s.clone(),
            2,
            crate::symbol::SymbolPreset::Modulation {
                shifts: vec![vec![shift], vec![0.0]],
            },
        );
        let out = apply_multiplier(&sigma, &[f.clone(), g.clone()]).unwrap();

        // Expected: f(x + a) * g(x), a circular shift by two samples.
        let n = 16usize;
        let expected = GridFunction::new(
            s,
            (0..n)
                .map(|i| f.samples()[(i + 2) % n] * g.samples()[i])
                .collect(),
        )
        .unwrap();
        assert!(rel_err(&out, &expected) <= 1e-10);
    }

    #[test]
    fn zero_indicator_projects_onto_the_mean() {
        let s = spec(16);
        let f = GridFunction::random_bandlimited(s.clone(), 9, 5);
        let sigma = SymbolGrid::make_symbol(s, 1, "indicator_zero", &[]).unwrap();
        let out = apply_multiplier(&sigma, std::slice::from_ref(&f)).unwrap();
        let mean = f.samples().iter().sum::<Complex64>() / 16.0;
        for z in out.samples() {
            assert!((z - mean).norm() <= 1e-12 * mean.norm().max(1.0));
        }
    }

    #[test]
    fn multilinearity_in_the_first_slot() {
        let s = spec(16);
        let f1 = GridFunction::random_bandlimited(s.clone(), 11, 5);
        let f2 = GridFunction::random_bandlimited(s.clone(), 12, 5);
        let g = GridFunction::random_bandlimited(s.clone(), 13, 5);
        let sigma =
            SymbolGrid::make_symbol(s, 2, "random_bandlimited", &[3.0, 7.0]).unwrap();

        let alpha = Complex64::new(0.7, -0.2);
        let beta = Complex64::new(-1.3, 0.4);
        let combo = f1.scale(alpha).add(&f2.scale(beta)).unwrap();
        let lhs = apply_multiplier(&sigma, &[combo, g.clone()]).unwrap();
        let rhs = apply_multiplier(&sigma, &[f1, g.clone()])
            .unwrap()
            .scale(alpha)
            .add(&apply_multiplier(&sigma, &[f2, g]).unwrap().scale(beta))
            .unwrap();
        let denom = rhs.sup_norm().max(1e-300);
        let err = lhs
            .samples()
            .iter()
            .zip(rhs.samples())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err / denom <= 1e-12);
    }

    #[test]
    fn dyadic_pieces_reassemble_the_symbol() {
        let s = spec(16);
        let sigma = SymbolGrid::make_symbol(s, 2, "random_bandlimited", &[21.0, 8.0]).unwrap();
        let partition = make_partition(-2, 3);
        let dense = sigma.densify().unwrap();
        let mut sum = vec![Complex64::new(0.0, 0.0); dense.len()];
        for j in partition.scales() {
            let piece = dyadic_piece(&sigma, j, &partition).unwrap();
            for (acc, v) in sum.iter_mut().zip(piece.densify().unwrap()) {
                *acc += v;
            }
        }
        // On the covered annulus 2^{-2} <= |xi| <= 2^3 the sum equals sigma.
        let mut idx = [0usize; 2];
        for (flat, (got, want)) in sum.iter().zip(&dense).enumerate() {
            decode_index(flat, 16, &mut idx);
            let x0 = crate::grid::signed_index(idx[0], 16) as f64;
            let x1 = crate::grid::signed_index(idx[1], 16) as f64;
            let r = (x0 * x0 + x1 * x1).sqrt();
            if (0.25..=8.0).contains(&r) {
                assert!((got - want).norm() <= 1e-12 * want.norm().max(1.0));
            }
        }
    }

    #[test]
    fn dyadic_piece_support_is_the_annulus() {
        let s = spec(16);
        let sigma = SymbolGrid::make_symbol(s, 2, "constant", &[]).unwrap();
        let partition = make_partition(-1, 2);
        let piece = dyadic_piece(&sigma, 1, &partition).unwrap();
        let dense = piece.densify().unwrap();
        let mut idx = [0usize; 2];
        for (flat, v) in dense.iter().enumerate() {
            decode_index(flat, 16, &mut idx);
            let x0 = crate::grid::signed_index(idx[0], 16) as f64;
            let x1 = crate::grid::signed_index(idx[1], 16) as f64;
            let r = (x0 * x0 + x1 * x1).sqrt();
            if !(1.0..=4.0).contains(&r) {
                assert_eq!(*v, Complex64::new(0.0, 0.0), "r = {r}");
            }
        }
    }

    #[test]
    fn out_of_range_scale_is_rejected() {
        let s = spec(16);
        let sigma = SymbolGrid::make_symbol(s, 1, "constant", &[]).unwrap();
        let partition = make_partition(-1, 2);
        assert!(matches!(
            dyadic_piece(&sigma, 5, &partition),
            Err(FourierError::PartitionRange { .. })
        ));
    }

    #[test]
    fn delta_j_kills_constants() {
        let s = spec(16);
        let constant = GridFunction::new(s, vec![Complex64::new(2.5, -1.0); 16]).unwrap();
        let out = delta_j(&constant, 0, |xi| {
            crate::partition::psi_hat_radial(xi.iter().map(|v| v * v).sum::<f64>().sqrt())
        });
        assert!(out.sup_norm() <= 1e-14);
    }

    #[test]
    fn delta_j_telescopes_to_the_meanless_part() {
        let s = spec(32);
        let f = GridFunction::random_bandlimited(s.clone(), 4, 8);
        let mut acc = GridFunction::zeros(s.clone());
        // Bands for |k| in [1/2 * 2^j, 2 * 2^j] with j in [-1, 6] cover
        // 1 <= |k| <= 16, i.e. every nonzero mode of the grid.
        for j in -1..=6 {
            let part = delta_j(&f, j, |xi| {
                crate::partition::psi_hat_radial(xi.iter().map(|v| v * v).sum::<f64>().sqrt())
            });
            acc = acc.add(&part).unwrap();
        }
        let mean = f.samples().iter().sum::<Complex64>() / 32.0;
        let expected = GridFunction::new(
            s,
            f.samples().iter().map(|z| z - mean).collect(),
        )
        .unwrap();
        assert!(rel_err(&acc, &expected) <= 1e-10);
    }

    #[test]
    fn delta_j_scales_single_modes() {
        let s = spec(16);
        // f(x) = e^{2 pi i * 2x}: single mode at k = 2 = 2^1.
        let f = GridFunction::from_fn(s, |x| {
            let arg = 2.0 * std::f64::consts::PI * 2.0 * x[0];
            Complex64::new(arg.cos(), arg.sin())
        });
        let j = 1;
        let phi = |xi: &[f64]| {
            crate::partition::psi_hat_radial(xi.iter().map(|v| v * v).sum::<f64>().sqrt())
        };
        let out = delta_j(&f, j, phi);
        let factor = phi(&[2.0 / (2.0f64).powi(j)]);
        for (a, b) in out.samples().iter().zip(f.samples()) {
            assert!((a - b * factor).norm() <= 1e-12);
        }
    }

    #[test]
    fn kernel_preserves_energy() {
        let s = spec(16);
        let sigma = SymbolGrid::make_symbol(s, 2, "random_bandlimited", &[2.0, 6.0]).unwrap();
        let kernel = kernel_of(&sigma).unwrap();
        let sym_l2: f64 = sigma
            .densify()
            .unwrap()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!((kernel.l2_raw() - sym_l2).abs() <= 1e-12 * sym_l2.max(1.0));
    }

    #[test]
    fn zero_symbol_gives_zero_kernel() {
        let s = spec(8);
        let zero = SymbolGrid::from_dense(s, 1, vec![Complex64::new(0.0, 0.0); 8]).unwrap();
        let kernel = kernel_of(&zero).unwrap();
        assert_eq!(kernel.sup_norm(), 0.0);
    }
}
