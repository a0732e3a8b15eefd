//! Exact-rational geometry of the Sobolev admissibility region.
//!
//! The region for a smoothness profile (s_1, ..., s_m) in dimension n is the
//! polytope of reciprocal exponent vectors (1/p_1, ..., 1/p_m) satisfying
//! `sum_{k in J}(s_k/n - 1/p_k) >= -1/2` for every nonempty subset J, plus
//! nonnegativity. This crate enumerates its m*2^(m-1)+1 vertices, certifies
//! hull membership by exact linear feasibility, and builds the interpolation
//! trees that reduce exponents with 1 < p_i < 2 to the endpoint cases.
//!
//! Every value in this crate is an exact rational; no floating point enters
//! any predicate, so boundary cases (a subset sum equal to -1/2 exactly) are
//! decided without tolerances.

mod error;
mod exponents;
mod feasibility;
mod interpolation;
mod membership;
mod region;
mod report;
mod vertices;

pub use error::GeometryError;
pub use exponents::{
    ell_count, format_rational, ratio, reciprocal_sum, ReciprocalExponents, SmoothnessProfile,
};
pub use interpolation::{
    check_extreme_conditions, interpolation_split, InterpolationPath, PathNode,
};
pub use membership::{convex_weights, hull_membership, weights_reproduce, MembershipCertificate};
pub use region::{check_admissible, AdmissibleRegion, Halfspace};
pub use report::{certificate_report, vertex_report};
pub use vertices::{enumerate_vertices, VertexSet};

/// Re-export of the rational type used throughout the public API.
pub use num_rational::BigRational;
