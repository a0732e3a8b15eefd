//! Brute-force oracles for the operator and the Sobolev norm.
//!
//! The oracles below evaluate the defining sums directly (nested loops over
//! frequency tuples, twiddle factors from a table) and never touch the FFT
//! path they are checking.

use fourier_core::{
    apply_multiplier, product_sobolev_norm, Complex64, GridFunction, GridSpec, SymbolGrid,
};

use exponent_geometry::{ratio, SmoothnessProfile};

/// e^{2 pi i t / n} for t in [0, n).
fn twiddle_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|t| {
            let arg = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
            Complex64::new(arg.cos(), arg.sin())
        })
        .collect()
}

/// Fourier coefficients c_k = (1/N) sum_j f(x_j) e^{-2 pi i jk/N}, indexed
/// by signed k in [-N/2, N/2), for a 1-d grid function.
fn direct_coefficients(f: &GridFunction) -> Vec<Complex64> {
    let n = f.spec().points();
    let tw = twiddle_table(n);
    // Phases are N-periodic in k, so the array index stands in for the
    // signed frequency directly.
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, v) in f.samples().iter().enumerate() {
                acc += v * tw[(n - (j * k) % n) % n];
            }
            acc / n as f64
        })
        .collect()
}

/// Direct nested-loop evaluation of the bilinear multiplier on a 1-d grid:
/// T(x_j) = sum_{k1, k2} sigma(k1, k2) c1_{k1} c2_{k2} e^{2 pi i j(k1+k2)/N}.
fn brute_force_bilinear(
    sigma: &SymbolGrid,
    f: &GridFunction,
    g: &GridFunction,
) -> Vec<Complex64> {
    let n = f.spec().points();
    let period = f.spec().period();
    let tw = twiddle_table(n);
    let cf = direct_coefficients(f);
    let cg = direct_coefficients(g);
    let signed = |idx: usize| -> i64 {
        if idx < n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        }
    };
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (i1, cf1) in cf.iter().enumerate() {
        let k1 = signed(i1);
        for (i2, cg2) in cg.iter().enumerate() {
            let k2 = signed(i2);
            let s = sigma.eval_physical(&[k1 as f64 / period, k2 as f64 / period]);
            if s == Complex64::new(0.0, 0.0) {
                continue;
            }
            let coeff = s * cf1 * cg2;
            let ksum = (k1 + k2).rem_euclid(n as i64) as usize;
            for (j, slot) in out.iter_mut().enumerate() {
                *slot += coeff * tw[(j * ksum) % n];
            }
        }
    }
    out
}

#[test]
fn operator_matches_brute_force_on_seeded_triples() {
    let spec = GridSpec::unit(1, 64).unwrap();
    for trial in 0..10u64 {
        let sigma = SymbolGrid::make_symbol(
            spec.clone(),
            2,
            "random_bandlimited",
            &[(100 + trial) as f64, 16.0],
        )
        .unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 200 + trial, 20);
        let g = GridFunction::random_bandlimited(spec.clone(), 300 + trial, 20);

        let fast = apply_multiplier(&sigma, &[f.clone(), g.clone()]).unwrap();
        let slow = brute_force_bilinear(&sigma, &f, &g);

        let denom = slow
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let err = fast
            .samples()
            .iter()
            .zip(&slow)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(err / denom <= 1e-10, "trial {trial}: rel err {}", err / denom);
    }
}

/// Direct quadrature of the product-Sobolev definition: an O(M^2) double
/// sum over the 2-d lattice with table-based twiddles.
fn direct_sobolev_norm(sigma: &SymbolGrid, s1: f64, s2: f64) -> f64 {
    let n = sigma.spec().points();
    let period = sigma.spec().period();
    let total = n * n;
    let dense = sigma.densify().unwrap();
    let tw = twiddle_table(n);
    let signed = |idx: usize| -> i64 {
        if idx < n / 2 {
            idx as i64
        } else {
            idx as i64 - n as i64
        }
    };
    let mut sum = 0.0;
    for j1 in 0..n {
        for j2 in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (flat, v) in dense.iter().enumerate() {
                let k1 = flat / n;
                let k2 = flat % n;
                // conj of e^{2 pi i (j1 k1 + j2 k2)/N}
                let t = ((j1 * k1) % n + (j2 * k2) % n) % n;
                acc += v * tw[(n - t) % n];
            }
            acc /= (total as f64).sqrt();
            let y1 = signed(j1) as f64 / period;
            let y2 = signed(j2) as f64 / period;
            let w = (1.0 + y1 * y1).powf(s1 / 2.0) * (1.0 + y2 * y2).powf(s2 / 2.0);
            let v = acc.norm() * w;
            sum += v * v;
        }
    }
    (sum * period.powi(-2)).sqrt()
}

#[test]
fn sobolev_norm_matches_direct_quadrature() {
    let spec = GridSpec::unit(1, 32).unwrap();
    let profile =
        SmoothnessProfile::new(1, vec![ratio(3, 2), ratio(1, 1)]).unwrap();
    for trial in 0..10u64 {
        let sigma = SymbolGrid::make_symbol(
            spec.clone(),
            2,
            "random_bandlimited",
            &[(500 + trial) as f64, 8.0],
        )
        .unwrap();
        let fast = product_sobolev_norm(&sigma, &profile).unwrap();
        let slow = direct_sobolev_norm(&sigma, 1.5, 1.0);
        assert!(
            (fast - slow).abs() <= 1e-8 * slow.max(1.0),
            "trial {trial}: {fast} vs {slow}"
        );
    }
}

#[test]
fn product_identity_for_low_linearities() {
    for m in 1..=3usize {
        let spec = GridSpec::unit(1, 16).unwrap();
        let sigma = SymbolGrid::make_symbol(spec.clone(), m, "constant", &[]).unwrap();
        let inputs: Vec<GridFunction> = (0..m)
            .map(|i| GridFunction::random_bandlimited(spec.clone(), 40 + i as u64, 5))
            .collect();
        let out = apply_multiplier(&sigma, &inputs).unwrap();
        let mut expected = vec![Complex64::new(1.0, 0.0); spec.total_points()];
        for f in &inputs {
            for (e, v) in expected.iter_mut().zip(f.samples()) {
                *e *= v;
            }
        }
        let denom = expected
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let err = out
            .samples()
            .iter()
            .zip(&expected)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(err / denom <= 1e-10, "m = {m}: rel err {}", err / denom);
    }
}
