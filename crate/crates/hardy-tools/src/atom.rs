//! Hardy-space atoms by moment projection.
//!
//! An atom is supported on a dyadic cube, bounded by |Q|^{-1/p}, and has
//! vanishing discrete moments below the requested order. Construction draws
//! seeded random samples on the cube, orthogonalizes against the span of
//! the monomials (in cube-centered, side-scaled coordinates), and rescales
//! the sup norm to the size bound.

use fourier_core::{Complex64, GridFunction, GridSpec};
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cube::DyadicCube;
use crate::error::HardyError;

/// Multi-indices over `n` axes with total degree strictly below `order`.
pub fn moment_multi_indices(n: usize, order: usize) -> Vec<Vec<usize>> {
    if order == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fill(&mut out, &mut current, 0, order - 1, n);
    out
}

fn fill(
    out: &mut Vec<Vec<usize>>,
    current: &mut Vec<usize>,
    axis: usize,
    budget: usize,
    n: usize,
) {
    if axis == n {
        out.push(current.clone());
        return;
    }
    for d in 0..=budget {
        current[axis] = d;
        fill(out, current, axis + 1, budget - d, n);
    }
    current[axis] = 0;
}

/// An L-infinity atom with vanishing moments.
#[derive(Debug, Clone)]
pub struct Atom {
    cube: DyadicCube,
    p: Ratio<i64>,
    moments: usize,
    samples: GridFunction,
}

impl Atom {
    pub fn cube(&self) -> &DyadicCube {
        &self.cube
    }

    pub fn p(&self) -> Ratio<i64> {
        self.p
    }

    pub fn moments(&self) -> usize {
        self.moments
    }

    pub fn samples(&self) -> &GridFunction {
        &self.samples
    }

    pub fn into_samples(self) -> GridFunction {
        self.samples
    }

    /// The size bound |Q|^{-1/p}.
    pub fn size_bound(&self) -> f64 {
        let p = self.p.to_f64().expect("p fits in f64");
        self.cube
            .volume(self.samples.spec().period())
            .powf(-1.0 / p)
    }

    /// Largest absolute discrete moment of degree below the moment order,
    /// relative to the atom's scaled l1 mass.
    pub fn max_moment_residual(&self) -> f64 {
        let spec = self.samples.spec();
        let indices = self
            .cube
            .flat_indices(spec)
            .expect("atom cube fits its grid");
        let cell = spec.cell_volume();
        let mass: f64 = indices
            .iter()
            .map(|&i| self.samples.samples()[i].norm())
            .sum::<f64>()
            * cell;
        if mass == 0.0 {
            return 0.0;
        }
        let coords = cube_local_coordinates(spec, &self.cube, &indices);
        let mut worst = 0.0f64;
        for gamma in moment_multi_indices(self.cube.n(), self.moments) {
            let mut acc = Complex64::new(0.0, 0.0);
            for (row, &flat) in indices.iter().enumerate() {
                let mut weight = 1.0;
                for (a, &g) in gamma.iter().enumerate() {
                    weight *= coords[row][a].powi(g as i32);
                }
                acc += self.samples.samples()[flat] * weight;
            }
            worst = worst.max((acc * cell).norm() / mass);
        }
        worst
    }

    /// True when the samples vanish off the cube exactly.
    pub fn support_is_exact(&self) -> bool {
        let spec = self.samples.spec();
        let inside: std::collections::HashSet<usize> = self
            .cube
            .flat_indices(spec)
            .expect("atom cube fits its grid")
            .into_iter()
            .collect();
        self.samples
            .samples()
            .iter()
            .enumerate()
            .all(|(i, z)| inside.contains(&i) || *z == Complex64::new(0.0, 0.0))
    }
}

/// Cube-centered coordinates scaled by the half-side, one row per sample.
fn cube_local_coordinates(
    spec: &GridSpec,
    cube: &DyadicCube,
    indices: &[usize],
) -> Vec<Vec<f64>> {
    let n = cube.n();
    let center = cube.center(spec.period());
    let half_side = cube.side(spec.period()) / 2.0;
    let points = spec.points();
    indices
        .iter()
        .map(|&flat| {
            let mut rest = flat;
            let mut axis_idx = vec![0usize; n];
            for a in (0..n).rev() {
                axis_idx[a] = rest % points;
                rest /= points;
            }
            (0..n)
                .map(|a| (spec.coordinate(axis_idx[a]) - center[a]) / half_side)
                .collect()
        })
        .collect()
}

/// Builds an atom on `cube` with `moments` vanishing moment orders.
pub fn make_atom(
    spec: &GridSpec,
    cube: &DyadicCube,
    p: Ratio<i64>,
    moments: usize,
    seed: u64,
) -> Result<Atom, HardyError> {
    if p <= Ratio::new(0, 1) || p > Ratio::new(1, 1) {
        return Err(HardyError::InvalidExponent {
            reason: format!("atom exponent p must lie in (0, 1], got {p}"),
        });
    }
    let cells = cube.cells_per_axis(spec)?;
    let indices = cube.flat_indices(spec)?;
    let monomials = moment_multi_indices(cube.n(), moments).len();
    let enough = if moments > 0 { cells >= 4 } else { cells >= 1 };
    if !enough || indices.len() <= monomials {
        return Err(HardyError::CubeTooSmall {
            moments,
            cells,
            samples: indices.len(),
            monomials,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<f64> = (0..indices.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();

    if moments > 0 {
        // Orthonormalize the monomial sample vectors (two modified
        // Gram-Schmidt passes), then project them out of the draw.
        let coords = cube_local_coordinates(spec, cube, &indices);
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(monomials);
        for gamma in moment_multi_indices(cube.n(), moments) {
            let mut v: Vec<f64> = coords
                .iter()
                .map(|row| {
                    gamma
                        .iter()
                        .enumerate()
                        .map(|(a, &g)| row[a].powi(g as i32))
                        .product()
                })
                .collect();
            for _ in 0..2 {
                for q in &basis {
                    let dot: f64 = q.iter().zip(&v).map(|(a, b)| a * b).sum();
                    for (slot, qv) in v.iter_mut().zip(q) {
                        *slot -= dot * qv;
                    }
                }
            }
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-12 {
                for slot in v.iter_mut() {
                    *slot /= norm;
                }
                basis.push(v);
            }
        }
        for _ in 0..2 {
            for q in &basis {
                let dot: f64 = q.iter().zip(&values).map(|(a, b)| a * b).sum();
                for (slot, qv) in values.iter_mut().zip(q) {
                    *slot -= dot * qv;
                }
            }
        }
    }

    let sup = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if sup <= 1e-14 {
        return Err(HardyError::DegenerateAtom);
    }
    let p_f64 = p.to_f64().expect("p fits in f64");
    let target = cube.volume(spec.period()).powf(-1.0 / p_f64);
    let factor = target / sup;

    let mut samples = vec![Complex64::new(0.0, 0.0); spec.total_points()];
    for (&flat, v) in indices.iter().zip(&values) {
        samples[flat] = Complex64::new(v * factor, 0.0);
    }
    Ok(Atom {
        cube: cube.clone(),
        p,
        moments,
        samples: GridFunction::new(spec.clone(), samples)?,
    })
}
