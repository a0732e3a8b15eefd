//! Periodic-grid discretization of multilinear Fourier multiplier theory.
//!
//! The domain is the torus of period L sampled at N points per axis, so the
//! defining frequency integrals become finite sums over integer frequencies
//! scaled by 1/L. All transforms are unitary, making Plancherel an exact
//! invariant, and frequency addition in the multiplier wraps modulo the
//! grid (the periodization of the convolution structure).
//!
//! The supremum over scales in the regularity constant is truncated to the
//! partition's [j_min, j_max] window; out-of-range scales are an error, not
//! a silent extension.

mod container;
mod error;
mod fft;
mod grid;
mod multiplier;
mod norms;
mod partition;
mod symbol;

pub use container::{
    read_grid_function, read_grid_function_text, read_symbol, read_symbol_text,
    write_grid_function, write_grid_function_text, write_symbol, write_symbol_text,
};
pub use error::FourierError;
pub use fft::{fft_nd, FftDirection};
pub use grid::{GridFunction, GridSpec};
pub use multiplier::{apply_multiplier, delta_j, dyadic_piece, kernel_of};
pub use norms::{product_sobolev_norm, regularity_constant_a, scale_norm, sobolev_norm_samples};
pub use partition::{make_partition, psi_hat_radial, radial_cutoff, Partition};
pub use symbol::{dense_count, SymbolGrid, SymbolPreset, DENSE_GUARD_LIMIT};

pub use num_complex::Complex64;
