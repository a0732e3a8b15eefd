use fourier_core::GridSpec;

use crate::error::HardyError;

/// A dyadic cube inside the fundamental period: at level k the period cell
/// splits into 2^k pieces per axis, and `coords` picks one of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicCube {
    level: u32,
    coords: Vec<u32>,
}

impl DyadicCube {
    pub fn new(level: u32, coords: Vec<u32>) -> Result<Self, HardyError> {
        let side_count = 1u32 << level;
        for &c in &coords {
            if c >= side_count {
                return Err(HardyError::CubeOutOfRange { level, coord: c });
            }
        }
        Ok(Self { level, coords })
    }

    /// The whole period cell.
    pub fn root(n: usize) -> Self {
        Self {
            level: 0,
            coords: vec![0; n],
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn side(&self, period: f64) -> f64 {
        period / (1u64 << self.level) as f64
    }

    /// |Q| = side^n.
    pub fn volume(&self, period: f64) -> f64 {
        self.side(period).powi(self.n() as i32)
    }

    /// Center of the cube in spatial coordinates.
    pub fn center(&self, period: f64) -> Vec<f64> {
        let side = self.side(period);
        self.coords
            .iter()
            .map(|&c| (c as f64 + 0.5) * side)
            .collect()
    }

    pub fn parent(&self) -> Option<DyadicCube> {
        if self.level == 0 {
            return None;
        }
        Some(DyadicCube {
            level: self.level - 1,
            coords: self.coords.iter().map(|&c| c / 2).collect(),
        })
    }

    /// The 2^n children one level finer.
    pub fn children(&self) -> Vec<DyadicCube> {
        let n = self.n();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let coords = self
                .coords
                .iter()
                .enumerate()
                .map(|(a, &c)| 2 * c + ((mask >> a) & 1))
                .collect();
            out.push(DyadicCube {
                level: self.level + 1,
                coords,
            });
        }
        out
    }

    /// Number of grid cells per axis covered by the cube.
    pub fn cells_per_axis(&self, spec: &GridSpec) -> Result<usize, HardyError> {
        let max_level = spec.points().trailing_zeros();
        if self.level > max_level {
            return Err(HardyError::LevelTooFine {
                level: self.level,
                max_level,
            });
        }
        Ok(spec.points() >> self.level)
    }

    /// Flat sample indices covered by the cube, in lexicographic order.
    pub fn flat_indices(&self, spec: &GridSpec) -> Result<Vec<usize>, HardyError> {
        let cells = self.cells_per_axis(spec)?;
        let n = self.n();
        let points = spec.points();
        let starts: Vec<usize> = self.coords.iter().map(|&c| c as usize * cells).collect();
        let total = cells.pow(n as u32);
        let mut out = Vec::with_capacity(total);
        let mut local = vec![0usize; n];
        loop {
            let mut flat = 0usize;
            for a in 0..n {
                flat = flat * points + starts[a] + local[a];
            }
            out.push(flat);
            // Odometer over the local offsets.
            let mut carry = true;
            for slot in local.iter_mut().rev() {
                *slot += 1;
                if *slot < cells {
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                break;
            }
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        format!("level {} @ ({})", self.level, coords.join(", "))
    }
}
