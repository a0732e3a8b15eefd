//! Recorded empirical runs: stability figures observed once on the default
//! corpus and frozen here as regression values. These are measurements,
//! not theorems; the tolerances state how far a rerun may drift before the
//! recording is stale.

use fourier_core::{dyadic_piece, GridFunction, GridSpec, Partition, SymbolGrid};
use probe_cli::{ratio_probe, tomita_check, ProbeConfig};

fn mikhlin_probe_config(points: usize) -> ProbeConfig {
    ProbeConfig::parse(&format!(
        "m = 2\nn = 1\ngrid_points = {points}\nseed = 55\ntrials = 32\n\
         symbol = mikhlin_component\nsymbol_params = 1,1\n\
         s = 3/2,3/2\nexponents = 1/2,0\nband = 6\njmin = -2\njmax = 2\n"
    ))
    .unwrap()
}

#[test]
fn ratio_probe_is_resolution_stable_after_removing_the_a_normalization() {
    // p-vector (2, inf) with the Mikhlin preset. A itself scales with the
    // dual-lattice extent (about 2^(s1+s2) per doubling), so the stability
    // content lives in the A-independent ratio out / prod(inputs).
    let r32 = ratio_probe(&mikhlin_probe_config(32)).unwrap();
    let r64 = ratio_probe(&mikhlin_probe_config(64)).unwrap();

    let raw32 = r32.summary.max_ratio * r32.a_constant;
    let raw64 = r64.summary.max_ratio * r64.a_constant;
    assert!(raw32 > 0.0);
    let change = (raw64 - raw32).abs() / raw32;
    assert!(
        change < 0.5,
        "N-doubling changed the operator ratio by {change:.3}"
    );

    // Recorded A growth under the integers/L dual-lattice convention:
    // 4513.55 / 575.84 = 7.84 at s = (3/2, 3/2). Regression band 20%.
    let growth = r64.a_constant / r32.a_constant;
    assert!(
        (growth - 7.84).abs() <= 0.2 * 7.84,
        "A growth drifted to {growth:.3}"
    );
}

#[test]
fn probe_with_unit_symbol_stays_within_the_hoelder_constant() {
    // sigma = 1 turns the operator into the pointwise product; the output
    // norm never exceeds the product of the input norms on Lebesgue slots.
    for (exponents, trials) in [("1/2,1/2", 16), ("1/3,0", 16), ("1/2,1/4", 16)] {
        let config = ProbeConfig::parse(&format!(
            "m = 2\nn = 1\ngrid_points = 32\nseed = 77\ntrials = {trials}\n\
             symbol = constant\ns = 1/1,1/1\nexponents = {exponents}\nband = 6\n"
        ))
        .unwrap();
        let report = ratio_probe(&config).unwrap();
        for row in &report.rows {
            assert!(
                row.output_norm <= row.input_norm_product * (1.0 + 1e-9),
                "exponents {exponents}, trial {}",
                row.trial
            );
        }
    }
}

#[test]
fn tomita_ratio_is_stable_across_adjacent_scales() {
    // A 0-homogeneous symbol sees self-similar dyadic pieces, so the
    // empirical domination constant varies by less than 2x over
    // j in {-1, 0, 1}. Period 8 puts eighth-integer frequencies on the
    // grid, so every annulus in the window is well resolved.
    let spec = GridSpec::new(1, 64, 8.0).unwrap();
    let sigma = SymbolGrid::make_symbol(spec.clone(), 2, "mikhlin_component", &[1.0, 1.0]).unwrap();
    let partition = Partition::new(-2, 2);
    let inputs = vec![
        GridFunction::random_bandlimited(spec.clone(), 4001, 10),
        GridFunction::random_bandlimited(spec.clone(), 4002, 10),
    ];
    let (q, s) = (1.5, 1.25);
    let mut ratios = Vec::new();
    for j in [-1, 0, 1] {
        let piece = dyadic_piece(&sigma, j, &partition).unwrap();
        let ratio = tomita_check(&piece, j, &inputs, q, s).unwrap();
        assert!(ratio.is_finite() && ratio > 0.0, "j = {j}");
        ratios.push(ratio);
    }
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0f64, f64::max);
    assert!(
        hi / lo < 2.0,
        "scale variation {:.3} exceeds 2x: {ratios:?}",
        hi / lo
    );
}

#[test]
fn sweep_ratio_column_grows_toward_the_facet() {
    // On the recorded corpus the max-ratio column is monotone
    // nondecreasing as s decreases toward the facet (read rows from the
    // far end of the sweep back to the crossing).
    let config = ProbeConfig::parse(
        "m = 2\nn = 1\ngrid_points = 32\nseed = 909\ntrials = 8\n\
         symbol = mikhlin_component\nsymbol_params = 1,1\n\
         s = 1/1,1/1\nexponents = 1/1,1/1\nband = 6\njmin = -2\njmax = 2\n\
         facet = 1,2\nsweep_from = 1/2,1/2\nsweep_to = 3/2,3/2\nsweep_steps = 6\n",
    )
    .unwrap();
    let report = probe_cli::sharpness_sweep(&config).unwrap();
    for pair in report.rows.windows(2) {
        assert!(
            pair[0].max_ratio >= pair[1].max_ratio * (1.0 - 1e-12),
            "ratio column not monotone toward the facet: {} then {}",
            pair[0].max_ratio,
            pair[1].max_ratio
        );
    }
}
