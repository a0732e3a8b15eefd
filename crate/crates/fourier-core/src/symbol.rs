use num_complex::Complex64;

use crate::error::FourierError;
use crate::grid::{decode_index, signed_index, GridSpec};

/// Hard cap on dense lattices: m * n * log2(N) <= 24, about 16.7M samples.
pub const DENSE_GUARD_LIMIT: usize = 24;

/// Checks the dense-lattice guard and returns the total sample count.
pub fn dense_count(spec: &GridSpec, m: usize) -> Result<usize, FourierError> {
    let log2_points = spec.points().trailing_zeros();
    let product = m * spec.n() * log2_points as usize;
    if product > DENSE_GUARD_LIMIT {
        return Err(FourierError::MemoryGuard {
            m,
            n: spec.n(),
            log2_points,
            product,
            limit: DENSE_GUARD_LIMIT,
        });
    }
    Ok(spec.total_points().pow(m as u32))
}

/// Built-in symbol families, evaluated lazily at frequency tuples.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolPreset {
    /// sigma = 1.
    Constant,
    /// sigma(xi) = exp(2 pi i sum_i a_i . xi_i); one shift vector per block.
    Modulation { shifts: Vec<Vec<f64>> },
    /// Zero-homogeneous monomial ratio: prod xi_{i,a}^{e_{i,a}} / |xi|^{sum e};
    /// exponents indexed per block then per axis. Value 0 at xi = 0.
    CoifmanMeyerHomogeneous { exponents: Vec<Vec<u32>> },
    /// Single Riesz-type component xi_{block,axis} / |xi|; 0 at the origin.
    MikhlinComponent { block: usize, axis: usize },
    /// Hashed coefficients on integer frequency cells with every
    /// |k| <= band; zero outside. Piecewise constant on unit cells.
    RandomBandlimited { seed: u64, band: i64 },
    /// Indicator of the zero frequency tuple.
    IndicatorZero,
}

impl SymbolPreset {
    /// Parses `name` with flat numeric `params`; vector-valued parameters
    /// (modulation shifts, monomial exponents) are given flattened, block
    /// by block, `m * n` values in total.
    pub fn from_name(name: &str, params: &[f64], m: usize, n: usize) -> Result<Self, FourierError> {
        let unflatten = |values: &[f64]| -> Result<Vec<Vec<f64>>, FourierError> {
            if values.len() != m * n {
                return Err(FourierError::UnknownPreset {
                    name: format!("{name} expects {} parameters, got {}", m * n, values.len()),
                });
            }
            Ok(values.chunks(n).map(|c| c.to_vec()).collect())
        };
        match name {
            "constant" => Ok(SymbolPreset::Constant),
            "indicator_zero" => Ok(SymbolPreset::IndicatorZero),
            "modulation" => Ok(SymbolPreset::Modulation {
                shifts: unflatten(params)?,
            }),
            "coifman_meyer_homogeneous" => {
                let blocks = unflatten(params)?;
                Ok(SymbolPreset::CoifmanMeyerHomogeneous {
                    exponents: blocks
                        .into_iter()
                        .map(|b| b.into_iter().map(|e| e as u32).collect())
                        .collect(),
                })
            }
            "mikhlin_component" => {
                let block = params.first().copied().unwrap_or(1.0) as usize;
                let axis = params.get(1).copied().unwrap_or(1.0) as usize;
                if block == 0 || axis == 0 || block > m || axis > n {
                    return Err(FourierError::UnknownPreset {
                        name: format!("{name} indices are 1-based and bounded by (m, n)"),
                    });
                }
                Ok(SymbolPreset::MikhlinComponent {
                    block: block - 1,
                    axis: axis - 1,
                })
            }
            "random_bandlimited" => {
                let seed = params.first().copied().unwrap_or(0.0) as u64;
                let band = params.get(1).copied().unwrap_or(4.0) as i64;
                Ok(SymbolPreset::RandomBandlimited { seed, band })
            }
            _ => Err(FourierError::UnknownPreset { name: name.into() }),
        }
    }

    /// Evaluates the preset at a physical frequency tuple of length m*n.
    pub fn eval(&self, xi: &[f64], period: f64, n: usize) -> Complex64 {
        match self {
            SymbolPreset::Constant => Complex64::new(1.0, 0.0),
            SymbolPreset::Modulation { shifts } => {
                let mut phase = 0.0;
                for (i, shift) in shifts.iter().enumerate() {
                    for (a, s) in shift.iter().enumerate() {
                        phase += s * xi[i * n + a];
                    }
                }
                let arg = 2.0 * std::f64::consts::PI * phase;
                Complex64::new(arg.cos(), arg.sin())
            }
            SymbolPreset::CoifmanMeyerHomogeneous { exponents } => {
                let norm_sq: f64 = xi.iter().map(|v| v * v).sum();
                if norm_sq == 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                let mut numer = 1.0;
                let mut degree = 0u32;
                for (i, block) in exponents.iter().enumerate() {
                    for (a, &e) in block.iter().enumerate() {
                        numer *= xi[i * n + a].powi(e as i32);
                        degree += e;
                    }
                }
                Complex64::new(numer / norm_sq.sqrt().powi(degree as i32), 0.0)
            }
            SymbolPreset::MikhlinComponent { block, axis } => {
                let norm_sq: f64 = xi.iter().map(|v| v * v).sum();
                if norm_sq == 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                Complex64::new(xi[block * n + axis] / norm_sq.sqrt(), 0.0)
            }
            SymbolPreset::RandomBandlimited { seed, band } => {
                // Snap to the nearest integer frequency cell so the preset
                // is a total, pure function of the physical tuple.
                let mut h = mix64(seed ^ 0x9e37_79b9_7f4a_7c15);
                for &v in xi {
                    let k = (v * period).round() as i64;
                    if k.abs() > *band {
                        return Complex64::new(0.0, 0.0);
                    }
                    h = mix64(h ^ k as u64);
                }
                hash_to_complex(h)
            }
            SymbolPreset::IndicatorZero => {
                let on_zero = xi.iter().all(|&v| (v * period).round() as i64 == 0);
                if on_zero {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
        }
    }
}

/// SplitMix64 finalizer; the hash engine behind the seeded presets.
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Maps a hash to a complex number with re, im uniform in [-1, 1).
pub(crate) fn hash_to_complex(h: u64) -> Complex64 {
    let re = ((h >> 11) as f64) / ((1u64 << 53) as f64) * 2.0 - 1.0;
    let h2 = mix64(h);
    let im = ((h2 >> 11) as f64) / ((1u64 << 53) as f64) * 2.0 - 1.0;
    Complex64::new(re, im)
}

#[derive(Debug, Clone)]
enum SymbolRepr {
    Dense(Vec<Complex64>),
    Preset(SymbolPreset),
}

/// A multilinear symbol on the m-fold product of the frequency lattice.
#[derive(Debug, Clone)]
pub struct SymbolGrid {
    spec: GridSpec,
    m: usize,
    repr: SymbolRepr,
}

impl SymbolGrid {
    /// Wraps a preset; no memory is committed until densification.
    pub fn from_preset(spec: GridSpec, m: usize, preset: SymbolPreset) -> Self {
        assert!(m >= 1, "linearity must be at least 1");
        Self {
            spec,
            m,
            repr: SymbolRepr::Preset(preset),
        }
    }

    /// Wraps dense samples over the (N^n)^m frequency lattice, subject to
    /// the memory guard.
    pub fn from_dense(spec: GridSpec, m: usize, samples: Vec<Complex64>) -> Result<Self, FourierError> {
        let expected = dense_count(&spec, m)?;
        if samples.len() != expected {
            return Err(FourierError::SampleCount {
                expected,
                got: samples.len(),
            });
        }
        Ok(Self {
            spec,
            m,
            repr: SymbolRepr::Dense(samples),
        })
    }

    /// Convenience constructor matching the preset name table.
    pub fn make_symbol(
        spec: GridSpec,
        m: usize,
        name: &str,
        params: &[f64],
    ) -> Result<Self, FourierError> {
        let preset = SymbolPreset::from_name(name, params, m, spec.n())?;
        Ok(Self::from_preset(spec, m, preset))
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.repr, SymbolRepr::Dense(_))
    }

    pub fn preset(&self) -> Option<&SymbolPreset> {
        match &self.repr {
            SymbolRepr::Preset(p) => Some(p),
            SymbolRepr::Dense(_) => None,
        }
    }

    /// Number of axes of the full frequency lattice, m*n.
    pub fn axes(&self) -> usize {
        self.m * self.spec.n()
    }

    /// Value at a flat index of the (N^n)^m lattice.
    pub fn eval_flat(&self, flat: usize) -> Complex64 {
        match &self.repr {
            SymbolRepr::Dense(samples) => samples[flat],
            SymbolRepr::Preset(preset) => {
                let axes = self.axes();
                let mut idx = vec![0usize; axes];
                decode_index(flat, self.spec.points(), &mut idx);
                let xi: Vec<f64> = idx
                    .iter()
                    .map(|&i| signed_index(i, self.spec.points()) as f64 / self.spec.period())
                    .collect();
                preset.eval(&xi, self.spec.period(), self.spec.n())
            }
        }
    }

    /// Value at per-axis lattice indices (length m*n).
    pub fn eval_indices(&self, idx: &[usize]) -> Complex64 {
        debug_assert_eq!(idx.len(), self.axes());
        match &self.repr {
            SymbolRepr::Dense(samples) => {
                let flat = crate::grid::flatten_index(idx, self.spec.points());
                samples[flat]
            }
            SymbolRepr::Preset(preset) => {
                let xi: Vec<f64> = idx
                    .iter()
                    .map(|&i| signed_index(i, self.spec.points()) as f64 / self.spec.period())
                    .collect();
                preset.eval(&xi, self.spec.period(), self.spec.n())
            }
        }
    }

    /// Value at an arbitrary physical frequency tuple.
    ///
    /// Presets are genuine functions of the tuple; dense symbols extend off
    /// their lattice as piecewise constants on unit frequency cells and
    /// vanish outside the stored range.
    pub fn eval_physical(&self, xi: &[f64]) -> Complex64 {
        debug_assert_eq!(xi.len(), self.axes());
        match &self.repr {
            SymbolRepr::Preset(preset) => preset.eval(xi, self.spec.period(), self.spec.n()),
            SymbolRepr::Dense(samples) => {
                let half = (self.spec.points() / 2) as i64;
                let mut flat = 0usize;
                for &v in xi {
                    let k = (v * self.spec.period()).round() as i64;
                    if k < -half || k >= half {
                        return Complex64::new(0.0, 0.0);
                    }
                    flat = flat * self.spec.points() + self.spec.index_of_signed(k);
                }
                samples[flat]
            }
        }
    }

    /// Materializes the dense sample vector, subject to the memory guard.
    pub fn densify(&self) -> Result<Vec<Complex64>, FourierError> {
        let total = dense_count(&self.spec, self.m)?;
        match &self.repr {
            SymbolRepr::Dense(samples) => Ok(samples.clone()),
            SymbolRepr::Preset(_) => {
                let mut out = Vec::with_capacity(total);
                for flat in 0..total {
                    out.push(self.eval_flat(flat));
                }
                Ok(out)
            }
        }
    }
}
