use thiserror::Error;

/// Errors produced by the grid, symbol, and multiplier operations.
#[derive(Debug, Error)]
pub enum FourierError {
    #[error("grid spec invalid: {reason}")]
    InvalidSpec { reason: String },

    #[error("sample count {got} does not match the lattice size {expected}")]
    SampleCount { expected: usize, got: usize },

    #[error("grid specs differ between operands")]
    SpecMismatch,

    #[error("expected {expected} input functions, got {got}")]
    InputCount { expected: usize, got: usize },

    #[error(
        "dense lattice too large: m={m}, n={n}, log2(N)={log2_points} \
         gives m*n*log2(N) = {product} > {limit}"
    )]
    MemoryGuard {
        m: usize,
        n: usize,
        log2_points: u32,
        product: usize,
        limit: usize,
    },

    #[error("scale j={j} is outside the partition range [{j_min}, {j_max}]")]
    PartitionRange { j: i32, j_min: i32, j_max: i32 },

    #[error("profile has m={profile_m} but the symbol has m={symbol_m}")]
    LinearityMismatch { profile_m: usize, symbol_m: usize },

    #[error("profile dimension n={profile_n} does not match the grid dimension n={grid_n}")]
    AmbientMismatch { profile_n: usize, grid_n: usize },

    #[error("unknown symbol preset `{name}`")]
    UnknownPreset { name: String },

    #[error("malformed container: {reason}")]
    Malformed { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
