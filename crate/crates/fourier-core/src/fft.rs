//! Unitary n-dimensional FFT on top of rustfft.
//!
//! Both directions carry the symmetric 1/sqrt(N) scaling per axis, so the
//! transform is unitary and Plancherel holds to machine precision.

use num_complex::Complex64;
use rustfft::FftPlanner;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FftDirection {
    Forward,
    Inverse,
}

/// In-place unitary FFT over `axes` axes of length `per_axis` each, data in
/// row-major order (last axis contiguous).
pub fn fft_nd(data: &mut [Complex64], axes: usize, per_axis: usize, direction: FftDirection) {
    let total = per_axis.pow(axes as u32);
    assert_eq!(data.len(), total, "data length must match the lattice");

    let mut planner = FftPlanner::new();
    let fft = match direction {
        FftDirection::Forward => planner.plan_fft_forward(per_axis),
        FftDirection::Inverse => planner.plan_fft_inverse(per_axis),
    };

    let mut line = vec![Complex64::new(0.0, 0.0); per_axis];
    // Transform along each axis in turn; gather lines through strides.
    for axis in 0..axes {
        let stride = per_axis.pow((axes - 1 - axis) as u32);
        let lines = total / per_axis;
        for l in 0..lines {
            // Base offset of the l-th line along `axis`.
            let block = l / stride;
            let offset = l % stride;
            let base = block * stride * per_axis + offset;
            for (t, slot) in line.iter_mut().enumerate() {
                *slot = data[base + t * stride];
            }
            fft.process(&mut line);
            for (t, value) in line.iter().enumerate() {
                data[base + t * stride] = *value;
            }
        }
    }

    let scale = (total as f64).sqrt().recip();
    for z in data.iter_mut() {
        *z *= scale;
    }
}
