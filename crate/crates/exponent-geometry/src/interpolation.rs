use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::GeometryError;
use crate::exponents::{ratio, ReciprocalExponents, SmoothnessProfile};

/// A node of the interpolation tree: either a leaf with no index in (1,2),
/// or a split along one coordinate into the p=1 and p=2 endpoints.
#[derive(Debug, Clone)]
pub enum PathNode {
    Leaf {
        exponents: ReciprocalExponents,
        profile: SmoothnessProfile,
    },
    Split {
        exponents: ReciprocalExponents,
        profile: SmoothnessProfile,
        /// Coordinate acted on (0-based).
        index: usize,
        /// Weight theta in (0,1) with r_i = (1-theta)*1 + theta*(1/2).
        theta: BigRational,
        /// Child with r_i = 1, s_i = n.
        lower: Box<PathNode>,
        /// Child with r_i = 1/2, s_i = n/2.
        upper: Box<PathNode>,
    },
}

impl PathNode {
    pub fn exponents(&self) -> &ReciprocalExponents {
        match self {
            PathNode::Leaf { exponents, .. } | PathNode::Split { exponents, .. } => exponents,
        }
    }

    pub fn profile(&self) -> &SmoothnessProfile {
        match self {
            PathNode::Leaf { profile, .. } | PathNode::Split { profile, .. } => profile,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PathNode::Leaf { .. } => 0,
            PathNode::Split { lower, upper, .. } => 1 + lower.depth().max(upper.depth()),
        }
    }

    pub fn leaves(&self) -> Vec<&PathNode> {
        match self {
            PathNode::Leaf { .. } => vec![self],
            PathNode::Split { lower, upper, .. } => {
                let mut out = lower.leaves();
                out.extend(upper.leaves());
                out
            }
        }
    }

    /// Checks the convex-combination identity at every split: the parent
    /// exponents and smoothness orders equal (1-theta)*lower + theta*upper,
    /// componentwise and exactly.
    pub fn reconstructs_exactly(&self) -> bool {
        match self {
            PathNode::Leaf { .. } => true,
            PathNode::Split {
                exponents,
                profile,
                theta,
                lower,
                upper,
                ..
            } => {
                let om = BigRational::one() - theta;
                let lo_r = lower.exponents().coords();
                let up_r = upper.exponents().coords();
                let r_ok = exponents
                    .coords()
                    .iter()
                    .zip(lo_r.iter().zip(up_r))
                    .all(|(parent, (lo, up))| *parent == &om * lo + theta * up);
                let lo_s = lower.profile().s();
                let up_s = upper.profile().s();
                let s_ok = profile
                    .s()
                    .iter()
                    .zip(lo_s.iter().zip(up_s))
                    .all(|(parent, (lo, up))| *parent == &om * lo + theta * up);
                r_ok && s_ok && lower.reconstructs_exactly() && upper.reconstructs_exactly()
            }
        }
    }
}

/// Binary interpolation tree rooted at an extreme-condition point.
#[derive(Debug, Clone)]
pub struct InterpolationPath {
    root: PathNode,
}

impl InterpolationPath {
    pub fn root(&self) -> &PathNode {
        &self.root
    }

    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn leaves(&self) -> Vec<&PathNode> {
        self.root.leaves()
    }

    pub fn reconstructs_exactly(&self) -> bool {
        self.root.reconstructs_exactly()
    }
}

/// Checks that every coordinate is 0, s_i/n, or s_i/n + 1/2 with the top
/// value at no more than one coordinate. Returns the first offending index.
fn validate_split_input(
    r: &ReciprocalExponents,
    profile: &SmoothnessProfile,
) -> Result<Option<usize>, GeometryError> {
    if profile.m() != r.m() {
        return Err(GeometryError::DimensionMismatch {
            expected: profile.m(),
            got: r.m(),
        });
    }
    let half = ratio(1, 2);
    let mut special: Option<usize> = None;
    for i in 0..r.m() {
        let v = r.coord(i);
        let s_over_n = profile.s_over_n(i);
        let top = &s_over_n + &half;
        if *v == top {
            if special.is_some() {
                return Err(GeometryError::ExtremeConditionViolated { index: i });
            }
            special = Some(i);
        } else if !(v.is_zero() || *v == s_over_n) {
            return Err(GeometryError::ExtremeConditionViolated { index: i });
        }
    }
    Ok(special)
}

/// Verifies the full extreme-point conditions: every coordinate is 0,
/// s_i/n, or s_i/n + 1/2, and the top value occurs at exactly one
/// coordinate.
pub fn check_extreme_conditions(
    r: &ReciprocalExponents,
    profile: &SmoothnessProfile,
) -> Result<(), GeometryError> {
    match validate_split_input(r, profile)? {
        Some(_) => Ok(()),
        None => Err(GeometryError::ExtremeConditionViolated {
            index: r.m().saturating_sub(1),
        }),
    }
}

/// Builds the interpolation tree for an extreme-condition point.
///
/// While some coordinate has 1/2 < r_i < 1 (necessarily r_i = s_i/n under
/// the extreme conditions), the lowest such coordinate is split into the
/// endpoint pairs (r_i, s_i) = (1, n) and (1/2, n/2), with theta solving
/// r_i = (1-theta) + theta/2. Leaves have no coordinate in (1/2, 1).
///
/// The input must satisfy the extreme-value conditions on each coordinate;
/// a top coordinate at s_i/n + 1/2 is required at no more than one index.
pub fn interpolation_split(
    r: &ReciprocalExponents,
    profile: &SmoothnessProfile,
) -> Result<InterpolationPath, GeometryError> {
    validate_split_input(r, profile)?;
    Ok(InterpolationPath {
        root: build_node(r.clone(), profile.clone()),
    })
}

fn build_node(r: ReciprocalExponents, profile: SmoothnessProfile) -> PathNode {
    let half = ratio(1, 2);
    let one = BigRational::one();
    let split_index = (0..r.m()).find(|&i| *r.coord(i) > half && *r.coord(i) < one);

    let Some(i) = split_index else {
        return PathNode::Leaf {
            exponents: r,
            profile,
        };
    };

    let n = profile.n() as i64;
    // r_i = (1-theta)*1 + theta*(1/2)  =>  theta = 2*(1 - r_i).
    let theta = ratio(2, 1) * (&one - r.coord(i));

    let replace = |coords: &[BigRational], value: BigRational| {
        let mut out = coords.to_vec();
        out[i] = value;
        out
    };
    let lower_r = ReciprocalExponents::new(replace(r.coords(), one.clone()))
        .expect("split keeps coordinates nonnegative");
    let lower_s = SmoothnessProfile::new(profile.n(), replace(profile.s(), ratio(n, 1)))
        .expect("split keeps smoothness at least n/2");
    let upper_r = ReciprocalExponents::new(replace(r.coords(), half.clone()))
        .expect("split keeps coordinates nonnegative");
    let upper_s = SmoothnessProfile::new(profile.n(), replace(profile.s(), ratio(n, 2)))
        .expect("split keeps smoothness at least n/2");

    PathNode::Split {
        exponents: r,
        profile,
        index: i,
        theta,
        lower: Box::new(build_node(lower_r, lower_s)),
        upper: Box::new(build_node(upper_r, upper_s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(r: &[(i64, i64)]) -> ReciprocalExponents {
        ReciprocalExponents::new(r.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
    }

    fn profile(n: u32, s: &[(i64, i64)]) -> SmoothnessProfile {
        SmoothnessProfile::new(n, s.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
    }

    #[test]
    fn univariate_split_matches_hand_solution() {
        // n=2, m=1, r=(2/3) = s/n with s=(4/3); no top coordinate, which
        // the split accepts.
        let r = point(&[(2, 3)]);
        let p = profile(2, &[(4, 3)]);
        let path = interpolation_split(&r, &p).unwrap();
        match path.root().clone() {
            PathNode::Split {
                theta,
                lower,
                upper,
                index,
                ..
            } => {
                assert_eq!(index, 0);
                assert_eq!(theta, ratio(2, 3));
                assert_eq!(lower.exponents(), &point(&[(1, 1)]));
                assert_eq!(lower.profile().s(), &[ratio(2, 1)]);
                assert_eq!(upper.exponents(), &point(&[(1, 2)]));
                assert_eq!(upper.profile().s(), &[ratio(1, 1)]);
                // (1/3)*2 + (2/3)*1 = 4/3.
                assert_eq!(
                    ratio(1, 3) * ratio(2, 1) + ratio(2, 3) * ratio(1, 1),
                    ratio(4, 3)
                );
            }
            _ => panic!("expected a split"),
        }
    }

    #[test]
    fn ell_zero_points_are_single_leaves() {
        // r=(0, 3/2) with s=(1,1), n=1: coordinate 2 sits at s/n + 1/2.
        let r = point(&[(0, 1), (3, 2)]);
        let p = profile(1, &[(1, 1), (1, 1)]);
        let path = interpolation_split(&r, &p).unwrap();
        assert_eq!(path.depth(), 0);
        assert_eq!(path.leaves().len(), 1);
    }

    #[test]
    fn bilinear_example_splits_at_the_first_coordinate() {
        let r = point(&[(3, 4), (3, 2)]);
        let p = profile(1, &[(3, 4), (1, 1)]);
        let path = interpolation_split(&r, &p).unwrap();
        match path.root() {
            PathNode::Split {
                index,
                theta,
                lower,
                upper,
                ..
            } => {
                assert_eq!(*index, 0);
                assert_eq!(*theta, ratio(1, 2));
                assert_eq!(lower.exponents(), &point(&[(1, 1), (3, 2)]));
                assert_eq!(upper.exponents(), &point(&[(1, 2), (3, 2)]));
            }
            _ => panic!("expected a split"),
        }
        assert!(path.reconstructs_exactly());
        for leaf in path.leaves() {
            assert_eq!(leaf.exponents().ell_count(), 0);
            assert!(check_extreme_conditions(leaf.exponents(), leaf.profile()).is_ok());
        }
    }

    #[test]
    fn non_extreme_input_is_rejected_with_the_failing_coordinate() {
        let r = point(&[(1, 3), (3, 2)]);
        let p = profile(1, &[(1, 1), (1, 1)]);
        // r_1 = 1/3 is neither 0 nor s_1/n = 1 nor 3/2.
        assert_eq!(
            interpolation_split(&r, &p).unwrap_err(),
            GeometryError::ExtremeConditionViolated { index: 0 }
        );
    }

    #[test]
    fn depth_is_bounded_by_ell() {
        let r = point(&[(3, 4), (2, 3), (3, 2)]);
        let p = profile(1, &[(3, 4), (2, 3), (1, 1)]);
        assert_eq!(r.ell_count(), 2);
        let path = interpolation_split(&r, &p).unwrap();
        assert!(path.depth() <= 2);
        assert!(path.reconstructs_exactly());
    }
}
