//! Input families for the probes.
//!
//! The per-slot casework follows the boundedness proofs: atoms for
//! exponents with p_i <= 1, L2-normalized random band-limited functions
//! for finite p_i > 1, and sup-normalized band-limited functions for
//! p_i = infinity. Per-trial seeds derive deterministically from the
//! master seed, the trial index, and the slot, so parallel and serial
//! runs would produce identical draws.

use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use fourier_core::{Complex64, GridFunction, GridSpec};
use hardy_tools::{hp_quasinorm, make_atom, moment_multi_indices, DyadicCube};

use crate::config::{InputFamily, ProbeConfig};
use crate::error::CliError;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic sub-seed for (master, trial, slot).
pub fn slot_seed(master: u64, trial: u64, slot: u64) -> u64 {
    splitmix(splitmix(master ^ trial.wrapping_mul(0x5851_f42d_4c95_7f2d)) ^ slot)
}

/// One drawn input together with the norm of the space it probes.
pub struct DrawnInput {
    pub function: GridFunction,
    pub norm: f64,
    pub family: &'static str,
}

/// Casework family for a reciprocal exponent.
fn auto_family(r: &BigRational) -> InputFamily {
    if r.is_zero() {
        InputFamily::RandomBandlimited // sup-normalized branch below
    } else if *r >= BigRational::one() {
        InputFamily::Atoms
    } else {
        InputFamily::RandomBandlimited
    }
}

/// Converts a small BigRational into a Ratio<i64>.
fn to_small_ratio(q: &BigRational) -> Result<Ratio<i64>, CliError> {
    let numer = q.numer().to_i64();
    let denom = q.denom().to_i64();
    match (numer, denom) {
        (Some(a), Some(b)) if b != 0 => Ok(Ratio::new(a, b)),
        _ => Err(CliError::Config(format!(
            "rational {q} too large for the atom exponent"
        ))),
    }
}

/// Default vanishing-moment order ceil(n * (1/p - 1)) + 2 for p <= 1.
pub fn default_moments(n: usize, r: &BigRational) -> usize {
    let excess = r - BigRational::one();
    if excess.is_negative() {
        return 2;
    }
    let scaled = excess * BigRational::from_integer((n as i64).into());
    let ceil: num_bigint::BigInt =
        (scaled.numer() + scaled.denom() - num_bigint::BigInt::from(1)) / scaled.denom();
    ceil.to_usize().unwrap_or(0) + 2
}

/// Picks an atom cube level that resolves the moment order on this grid.
fn atom_cube(spec: &GridSpec, moments: usize, seed: u64) -> Result<DyadicCube, CliError> {
    let monomials = moment_multi_indices(spec.n(), moments).len();
    let max_level = spec.points().trailing_zeros();
    // Coarsest level first; a cube needs >= 4 cells per axis and strictly
    // more samples than monomials.
    for level in (1..=max_level.saturating_sub(2)).rev() {
        let cells = spec.points() >> level;
        if cells >= 4 && cells.pow(spec.n() as u32) > monomials {
            let side_count = 1u32 << level;
            let coords = (0..spec.n())
                .map(|a| (splitmix(seed ^ (a as u64)) % side_count as u64) as u32)
                .collect();
            return Ok(DyadicCube::new(level, coords)
                .expect("coords bounded by construction"));
        }
    }
    Err(CliError::Config(format!(
        "grid too coarse for an atom with {moments} vanishing moments"
    )))
}

/// Draws the input for one slot of one trial.
pub fn draw_input(
    config: &ProbeConfig,
    spec: &GridSpec,
    trial: usize,
    slot: usize,
    r: &BigRational,
) -> Result<DrawnInput, CliError> {
    let seed = slot_seed(config.seed, trial as u64, slot as u64);
    let family = match config.family {
        InputFamily::Auto => auto_family(r),
        other => other,
    };
    let t_levels = spec.points().trailing_zeros() + 1;

    match family {
        InputFamily::Constants => {
            let f = GridFunction::new(
                spec.clone(),
                vec![Complex64::new(1.0, 0.0); spec.total_points()],
            )?;
            let norm = slot_norm(&f, r, t_levels)?;
            Ok(DrawnInput {
                function: f,
                norm,
                family: "constants",
            })
        }
        InputFamily::Atoms => {
            if r < &BigRational::one() {
                return Err(CliError::Config(format!(
                    "atom family needs p <= 1, got 1/p = {r} at slot {slot}"
                )));
            }
            let p = to_small_ratio(&(BigRational::one() / r))?;
            let moments = config
                .atom_moments
                .unwrap_or_else(|| default_moments(spec.n(), r));
            let cube = atom_cube(spec, moments, seed)?;
            let atom = make_atom(spec, &cube, p, moments, seed)?;
            let f = atom.into_samples();
            let p_f64 = p.to_f64().expect("p fits in f64");
            let norm = hp_quasinorm(&f, p_f64, t_levels)?;
            Ok(DrawnInput {
                function: f,
                norm,
                family: "atoms",
            })
        }
        InputFamily::RandomBandlimited | InputFamily::Auto => {
            let raw = GridFunction::random_bandlimited(spec.clone(), seed, config.band);
            if r.is_zero() {
                let sup = raw.sup_norm();
                let f = raw.scale(Complex64::new(1.0 / sup.max(1e-300), 0.0));
                Ok(DrawnInput {
                    norm: f.sup_norm(),
                    function: f,
                    family: "sup_normalized",
                })
            } else {
                let l2 = raw.l2_scaled();
                let f = raw.scale(Complex64::new(1.0 / l2.max(1e-300), 0.0));
                let norm = slot_norm(&f, r, t_levels)?;
                Ok(DrawnInput {
                    function: f,
                    norm,
                    family: "random_bandlimited",
                })
            }
        }
    }
}

/// The norm of the space probed at a slot: H^p for p <= 1, L^p for finite
/// p > 1, and the sup norm for p = infinity.
pub fn slot_norm(f: &GridFunction, r: &BigRational, t_levels: u32) -> Result<f64, CliError> {
    if r.is_zero() {
        return Ok(f.sup_norm());
    }
    let p = (BigRational::one() / r)
        .to_f64()
        .expect("exponent fits in f64");
    if p <= 1.0 {
        Ok(hp_quasinorm(f, p, t_levels)?)
    } else {
        Ok(f.lp_scaled(p))
    }
}
