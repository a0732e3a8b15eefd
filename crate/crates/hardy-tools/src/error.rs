use thiserror::Error;

/// Errors produced by the Hardy-space operations.
#[derive(Debug, Error)]
pub enum HardyError {
    #[error("cube coordinate {coord} is out of range at level {level}")]
    CubeOutOfRange { level: u32, coord: u32 },

    #[error("cube at level {level} is finer than the grid (max level {max_level})")]
    LevelTooFine { level: u32, max_level: u32 },

    #[error(
        "cube too small for moment order {moments}: {cells} cells per axis \
         (need at least 4) giving {samples} samples for {monomials} monomials"
    )]
    CubeTooSmall {
        moments: usize,
        cells: usize,
        samples: usize,
        monomials: usize,
    },

    #[error("atom degenerated to zero after moment projection")]
    DegenerateAtom,

    #[error("height must be positive, got {height}")]
    InvalidHeight { height: f64 },

    #[error("exponent out of range: {reason}")]
    InvalidExponent { reason: String },

    #[error("kernel not integrable: s*q = {sq} must exceed n = {n}")]
    NonIntegrable { sq: f64, n: usize },

    #[error("invalid interpolation parameters: {reason}")]
    SteinInvalid { reason: String },

    #[error(transparent)]
    Fourier(#[from] fourier_core::FourierError),
}
