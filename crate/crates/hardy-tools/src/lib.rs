//! Hardy-space and real-variable machinery on periodic grids.
//!
//! Atoms are built by projecting seeded random samples against the monomial
//! span on their cube, so any moment order is supported uniformly. The
//! maximal operator and the Hardy quasi-norm take their suprema over dyadic
//! radius and dilation sets; invariants are stated only in forms valid
//! under those restrictions.

mod atom;
mod cube;
mod cz;
mod error;
mod hardy_norm;
mod lorentz;
mod maximal;
mod stein;

pub use atom::{make_atom, moment_multi_indices, Atom};
pub use cube::DyadicCube;
pub use cz::{cz_decompose, CzDecomposition, CzInvariantReport};
pub use error::HardyError;
pub use hardy_norm::{gaussian_maximal, hp_quasinorm};
pub use lorentz::weak_norm;
pub use maximal::{maximal_mq, zeta_convolve, zeta_l1};
pub use stein::{stein_combine, stein_theta, Rational, SteinParams};
