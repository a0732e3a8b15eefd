use num_complex::Complex64;

use crate::error::FourierError;
use crate::fft::{fft_nd, FftDirection};

/// Discretization of the period cell: n axes, N points per axis, period L.
///
/// Spatial samples sit at x_a = i_a * L/N; frequencies are the integers in
/// [-N/2, N/2) per axis scaled by 1/L.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    n: usize,
    points: usize,
    period: f64,
}

impl GridSpec {
    pub fn new(n: usize, points: usize, period: f64) -> Result<Self, FourierError> {
        if n == 0 {
            return Err(FourierError::InvalidSpec {
                reason: "dimension must be at least 1".into(),
            });
        }
        if points < 4 || !points.is_power_of_two() {
            return Err(FourierError::InvalidSpec {
                reason: format!("points per axis must be a power of two >= 4, got {points}"),
            });
        }
        if !period.is_finite() || period <= 0.0 {
            return Err(FourierError::InvalidSpec {
                reason: format!("period must be positive and finite, got {period}"),
            });
        }
        Ok(Self { n, points, period })
    }

    /// Unit period, the default for all probes.
    pub fn unit(n: usize, points: usize) -> Result<Self, FourierError> {
        Self::new(n, points, 1.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn total_points(&self) -> usize {
        self.points.pow(self.n as u32)
    }

    /// Volume of one spatial cell, (L/N)^n.
    pub fn cell_volume(&self) -> f64 {
        (self.period / self.points as f64).powi(self.n as i32)
    }

    /// Volume of one frequency cell, (1/L)^n.
    pub fn freq_cell_volume(&self) -> f64 {
        self.period.powi(-(self.n as i32))
    }

    /// Signed integer frequency for an axis index in [0, N).
    pub fn signed_index(&self, i: usize) -> i64 {
        signed_index(i, self.points)
    }

    /// Physical frequency (integer / L) for an axis index.
    pub fn frequency(&self, i: usize) -> f64 {
        self.signed_index(i) as f64 / self.period
    }

    /// Axis index for a signed integer frequency, reduced modulo N.
    pub fn index_of_signed(&self, k: i64) -> usize {
        let n = self.points as i64;
        (k.rem_euclid(n)) as usize
    }

    /// Spatial coordinate of an axis index.
    pub fn coordinate(&self, i: usize) -> f64 {
        i as f64 * self.period / self.points as f64
    }
}

pub(crate) fn signed_index(i: usize, per_axis: usize) -> i64 {
    if i < per_axis / 2 {
        i as i64
    } else {
        i as i64 - per_axis as i64
    }
}

/// Row-major multi-index iteration over `axes` axes of length `per_axis`.
/// Returns false when the odometer wraps back to all zeros.
pub(crate) fn increment_index(idx: &mut [usize], per_axis: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < per_axis {
            return true;
        }
        *slot = 0;
    }
    false
}

pub(crate) fn flatten_index(idx: &[usize], per_axis: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * per_axis + i)
}

/// Complex samples over the spatial lattice of a [`GridSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    spec: GridSpec,
    samples: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(spec: GridSpec, samples: Vec<Complex64>) -> Result<Self, FourierError> {
        if samples.len() != spec.total_points() {
            return Err(FourierError::SampleCount {
                expected: spec.total_points(),
                got: samples.len(),
            });
        }
        Ok(Self { spec, samples })
    }

    pub fn zeros(spec: GridSpec) -> Self {
        let total = spec.total_points();
        Self {
            spec,
            samples: vec![Complex64::new(0.0, 0.0); total],
        }
    }

    /// Samples a function of the spatial coordinates.
    pub fn from_fn<F>(spec: GridSpec, mut f: F) -> Self
    where
        F: FnMut(&[f64]) -> Complex64,
    {
        let total = spec.total_points();
        let mut samples = Vec::with_capacity(total);
        let mut idx = vec![0usize; spec.n()];
        let mut x = vec![0.0f64; spec.n()];
        loop {
            for (a, &i) in idx.iter().enumerate() {
                x[a] = spec.coordinate(i);
            }
            samples.push(f(&x));
            if !increment_index(&mut idx, spec.points()) {
                break;
            }
        }
        debug_assert_eq!(samples.len(), total);
        Self { spec, samples }
    }

    /// Builds a function from its unitary spectrum (frequency-index order).
    pub fn from_spectrum(spec: GridSpec, mut spectrum: Vec<Complex64>) -> Result<Self, FourierError> {
        if spectrum.len() != spec.total_points() {
            return Err(FourierError::SampleCount {
                expected: spec.total_points(),
                got: spectrum.len(),
            });
        }
        fft_nd(&mut spectrum, spec.n(), spec.points(), FftDirection::Inverse);
        Ok(Self {
            spec,
            samples: spectrum,
        })
    }

    /// Deterministic band-limited random function: unit-magnitude-scale
    /// hashed coefficients on frequencies with every |k_a| <= band.
    pub fn random_bandlimited(spec: GridSpec, seed: u64, band: i64) -> Self {
        let total = spec.total_points();
        let mut spectrum = vec![Complex64::new(0.0, 0.0); total];
        let mut idx = vec![0usize; spec.n()];
        for (flat, slot) in spectrum.iter_mut().enumerate() {
            decode_index(flat, spec.points(), &mut idx);
            let in_band = idx
                .iter()
                .all(|&i| signed_index(i, spec.points()).abs() <= band);
            if in_band {
                let mut h = crate::symbol::mix64(seed ^ 0x9e37_79b9_7f4a_7c15);
                for &i in &idx {
                    h = crate::symbol::mix64(h ^ signed_index(i, spec.points()) as u64);
                }
                *slot = crate::symbol::hash_to_complex(h);
            }
        }
        Self::from_spectrum(spec, spectrum).expect("spectrum length matches")
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    /// Unitary forward transform; output in frequency-index order.
    pub fn spectrum(&self) -> Vec<Complex64> {
        let mut data = self.samples.clone();
        fft_nd(&mut data, self.spec.n(), self.spec.points(), FftDirection::Forward);
        data
    }

    /// Raw little-l2 norm of the samples (no cell scaling).
    pub fn l2_raw(&self) -> f64 {
        self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// L2 norm with the spatial cell volume.
    pub fn l2_scaled(&self) -> f64 {
        (self
            .samples
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            * self.spec.cell_volume())
        .sqrt()
    }

    /// L^p quasi-norm with the spatial cell volume; p = infinity is the sup.
    pub fn lp_scaled(&self, p: f64) -> f64 {
        assert!(p > 0.0, "exponent must be positive");
        if p.is_infinite() {
            return self.sup_norm();
        }
        let sum: f64 = self.samples.iter().map(|z| z.norm().powf(p)).sum();
        (sum * self.spec.cell_volume()).powf(1.0 / p)
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// L1 norm with the spatial cell volume.
    pub fn l1_scaled(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).sum::<f64>() * self.spec.cell_volume()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            spec: self.spec.clone(),
            samples: self.samples.iter().map(|z| z * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FourierError> {
        if self.spec != other.spec {
            return Err(FourierError::SpecMismatch);
        }
        Ok(Self {
            spec: self.spec.clone(),
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

pub(crate) fn decode_index(flat: usize, per_axis: usize, out: &mut [usize]) {
    let mut rest = flat;
    for slot in out.iter_mut().rev() {
        *slot = rest % per_axis;
        rest /= per_axis;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(GridSpec::new(1, 64, 1.0).is_ok());
        assert!(GridSpec::new(1, 3, 1.0).is_err());
        assert!(GridSpec::new(1, 24, 1.0).is_err());
        assert!(GridSpec::new(1, 64, 0.0).is_err());
        assert!(GridSpec::new(0, 64, 1.0).is_err());
    }

    #[test]
    fn signed_frequency_range() {
        let spec = GridSpec::unit(1, 8).unwrap();
        let signed: Vec<i64> = (0..8).map(|i| spec.signed_index(i)).collect();
        assert_eq!(signed, vec![0, 1, 2, 3, -4, -3, -2, -1]);
        for k in -4..4 {
            assert_eq!(spec.signed_index(spec.index_of_signed(k)), k);
        }
    }

    #[test]
    fn plancherel_roundtrip() {
        let spec = GridSpec::unit(2, 8).unwrap();
        let f = GridFunction::random_bandlimited(spec.clone(), 3, 3);
        let spectrum = f.spectrum();
        let spectral_l2: f64 = spectrum.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((f.l2_raw() - spectral_l2).abs() <= 1e-12 * f.l2_raw());

        let back = GridFunction::from_spectrum(spec, spectrum).unwrap();
        let err: f64 = back
            .samples()
            .iter()
            .zip(f.samples())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err <= 1e-12 * f.sup_norm().max(1.0));
    }

    #[test]
    fn odometer_covers_the_lattice() {
        let mut idx = vec![0usize; 2];
        let mut seen = 0;
        loop {
            seen += 1;
            if !increment_index(&mut idx, 3) {
                break;
            }
        }
        assert_eq!(seen, 9);
    }
}
