use num_rational::BigRational;
use num_traits::One;

use crate::error::GeometryError;
use crate::exponents::{format_rational, ReciprocalExponents};
use crate::feasibility::solve_nonnegative;
use crate::region::{AdmissibleRegion, Halfspace};
use crate::vertices::VertexSet;

/// Outcome of a hull-membership query, with an exact witness either way.
#[derive(Debug, Clone)]
pub enum MembershipCertificate {
    /// Convex weights over the vertex set, in vertex order, nonnegative and
    /// summing to exactly 1, reproducing the query point exactly.
    Inside { weights: Vec<BigRational> },
    /// A region constraint the point violates, with its positive margin.
    Outside {
        violated: Halfspace,
        margin: BigRational,
    },
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipCertificate::Inside { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            MembershipCertificate::Inside { weights } => {
                let ws: Vec<String> = weights.iter().map(format_rational).collect();
                format!("Inside, weights = [{}]", ws.join(", "))
            }
            MembershipCertificate::Outside { violated, margin } => format!(
                "Outside, violates {} by {}",
                violated.describe(),
                format_rational(margin)
            ),
        }
    }
}

/// Raw convex-hull membership: exact convex weights over `vertices`
/// reproducing `r`, or None when `r` is outside the hull.
pub fn convex_weights(
    vertices: &[ReciprocalExponents],
    r: &ReciprocalExponents,
) -> Option<Vec<BigRational>> {
    let m = r.m();
    let columns: Vec<Vec<BigRational>> = vertices
        .iter()
        .map(|v| {
            let mut col: Vec<BigRational> = v.coords().to_vec();
            col.push(BigRational::one());
            col
        })
        .collect();
    let mut rhs: Vec<BigRational> = r.coords().to_vec();
    rhs.push(BigRational::one());
    debug_assert!(columns.iter().all(|c| c.len() == m + 1));
    solve_nonnegative(&columns, &rhs)
}

/// Decides membership of `r` in the convex hull of the enumerated vertex
/// set, producing exact convex weights when inside and a violated region
/// halfspace when outside.
pub fn hull_membership(
    vertices: &VertexSet,
    r: &ReciprocalExponents,
) -> Result<MembershipCertificate, GeometryError> {
    if vertices.profile().m() != r.m() {
        return Err(GeometryError::DimensionMismatch {
            expected: vertices.profile().m(),
            got: r.m(),
        });
    }
    let vs = vertices.vertices();
    if vs.is_empty() || vs.iter().all(|v| v == &vs[0]) {
        return Err(GeometryError::DegenerateVertexSet);
    }

    if let Some(weights) = convex_weights(vs, r) {
        return Ok(MembershipCertificate::Inside { weights });
    }

    let region = AdmissibleRegion::from_profile(vertices.profile().clone());
    match region.most_violated(r) {
        Some((violated, margin)) => Ok(MembershipCertificate::Outside { violated, margin }),
        // The hull equals the region, so an infeasible point must violate
        // some halfspace; reaching here would mean a solver defect.
        None => Err(GeometryError::InconsistentCertificate),
    }
}

/// Reconstructs `sum_j w_j v_j` and compares it to `r` exactly.
pub fn weights_reproduce(
    vertices: &[ReciprocalExponents],
    weights: &[BigRational],
    r: &ReciprocalExponents,
) -> bool {
    if vertices.len() != weights.len() {
        return false;
    }
    let m = r.m();
    let mut acc = vec![BigRational::from_integer(0.into()); m];
    for (v, w) in vertices.iter().zip(weights) {
        for (a, c) in acc.iter_mut().zip(v.coords()) {
            *a += w * c;
        }
    }
    let total: BigRational = weights.iter().sum();
    total.is_one() && acc.as_slice() == r.coords()
}
