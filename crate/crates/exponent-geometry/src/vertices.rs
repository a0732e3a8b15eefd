use num_rational::BigRational;
use num_traits::Zero;

use crate::exponents::{ratio, ReciprocalExponents, SmoothnessProfile};

/// The extreme points of the admissibility region: the origin plus every
/// point whose coordinates are 0, s_i/n, or s_i/n + 1/2, with the last value
/// taken at exactly one coordinate. Cardinality is m * 2^(m-1) + 1.
#[derive(Debug, Clone)]
pub struct VertexSet {
    profile: SmoothnessProfile,
    vertices: Vec<ReciprocalExponents>,
}

impl VertexSet {
    #[cfg(test)]
    pub(crate) fn from_parts(
        profile: SmoothnessProfile,
        vertices: Vec<ReciprocalExponents>,
    ) -> Self {
        Self { profile, vertices }
    }

    pub fn profile(&self) -> &SmoothnessProfile {
        &self.profile
    }

    pub fn vertices(&self) -> &[ReciprocalExponents] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Expected cardinality m * 2^(m-1) + 1 for linearity m.
    pub fn expected_count(m: usize) -> usize {
        m * (1 << (m - 1)) + 1
    }
}

/// Enumerates the vertices of the region for `profile`, in lexicographic
/// order over coordinate tuples. The origin is always present and sorts
/// first.
pub fn enumerate_vertices(profile: &SmoothnessProfile) -> VertexSet {
    let m = profile.m();
    let half = ratio(1, 2);
    let mut vertices = Vec::with_capacity(VertexSet::expected_count(m));
    vertices.push(ReciprocalExponents::origin(m));

    // One distinguished coordinate carries s_i/n + 1/2; every other
    // coordinate independently takes 0 or s_k/n.
    for special in 0..m {
        for mask in 0u32..(1u32 << (m - 1)) {
            let mut coords = Vec::with_capacity(m);
            let mut bit = 0;
            for i in 0..m {
                if i == special {
                    coords.push(profile.s_over_n(i) + &half);
                } else {
                    if mask & (1 << bit) != 0 {
                        coords.push(profile.s_over_n(i));
                    } else {
                        coords.push(BigRational::zero());
                    }
                    bit += 1;
                }
            }
            vertices.push(ReciprocalExponents::new(coords).expect("vertex coords nonnegative"));
        }
    }

    vertices.sort();
    debug_assert_eq!(vertices.len(), VertexSet::expected_count(m));
    VertexSet {
        profile: profile.clone(),
        vertices,
    }
}
