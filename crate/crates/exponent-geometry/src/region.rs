use num_rational::BigRational;
use num_traits::Signed;

use crate::error::GeometryError;
use crate::exponents::{format_rational, ratio, ReciprocalExponents, SmoothnessProfile};

/// One constraint of the halfspace description of the admissibility region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Halfspace {
    /// sum_{k in subset} r_k <= bound, with bound = sum_{k in subset} s_k/n + 1/2.
    SubsetSum {
        /// Sorted member indices, 0-based, nonempty.
        subset: Vec<usize>,
        bound: BigRational,
    },
    /// r_index >= 0.
    NonNegative { index: usize },
}

impl Halfspace {
    /// Slack of the constraint at `r`: nonnegative iff the constraint holds.
    pub fn slack(&self, r: &ReciprocalExponents) -> BigRational {
        match self {
            Halfspace::SubsetSum { subset, bound } => {
                let sum: BigRational = subset.iter().map(|&k| r.coord(k).clone()).sum();
                bound - sum
            }
            Halfspace::NonNegative { index } => r.coord(*index).clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Halfspace::SubsetSum { subset, bound } => {
                let vars: Vec<String> = subset.iter().map(|k| format!("r_{}", k + 1)).collect();
                format!("{} <= {}", vars.join(" + "), format_rational(bound))
            }
            Halfspace::NonNegative { index } => format!("r_{} >= 0", index + 1),
        }
    }
}

/// Halfspace description of the region Delta(s): one subset-sum constraint per
/// nonempty subset of {1..m} plus the m nonnegativity constraints.
#[derive(Debug, Clone)]
pub struct AdmissibleRegion {
    profile: SmoothnessProfile,
    halfspaces: Vec<Halfspace>,
}

impl AdmissibleRegion {
    pub fn from_profile(profile: SmoothnessProfile) -> Self {
        let m = profile.m();
        let half = ratio(1, 2);
        let mut halfspaces = Vec::with_capacity((1 << m) - 1 + m);
        // Subsets encoded as bitmasks 1..2^m; members in increasing index order.
        for mask in 1u32..(1u32 << m) {
            let mut subset = Vec::new();
            let mut bound = half.clone();
            for k in 0..m {
                if mask & (1 << k) != 0 {
                    subset.push(k);
                    bound += profile.s_over_n(k);
                }
            }
            halfspaces.push(Halfspace::SubsetSum { subset, bound });
        }
        for index in 0..m {
            halfspaces.push(Halfspace::NonNegative { index });
        }
        Self {
            profile,
            halfspaces,
        }
    }

    pub fn profile(&self) -> &SmoothnessProfile {
        &self.profile
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// The most violated constraint at `r`, together with the (positive)
    /// margin of violation, or None when every constraint holds.
    pub fn most_violated(&self, r: &ReciprocalExponents) -> Option<(Halfspace, BigRational)> {
        let mut worst: Option<(Halfspace, BigRational)> = None;
        for h in &self.halfspaces {
            let slack = h.slack(r);
            if slack.is_negative() {
                let margin = -slack;
                match &worst {
                    Some((_, best)) if *best >= margin => {}
                    _ => worst = Some((h.clone(), margin)),
                }
            }
        }
        worst
    }
}

/// Decides whether `r` lies in the admissibility region of `profile`.
///
/// Closed mode tests sum_{k in J}(s_k/n - r_k) >= -1/2 for every nonempty
/// subset J; strict mode replaces >= by >. All arithmetic is exact; a point
/// on a facet is admissible in closed mode and inadmissible in strict mode.
/// Callers that need the strict smoothness hypothesis s_i > n/2 construct
/// the profile with [`SmoothnessProfile::new_strict`].
pub fn check_admissible(
    profile: &SmoothnessProfile,
    r: &ReciprocalExponents,
    strict: bool,
) -> Result<bool, GeometryError> {
    if profile.m() != r.m() {
        return Err(GeometryError::DimensionMismatch {
            expected: profile.m(),
            got: r.m(),
        });
    }
    let m = profile.m();
    let neg_half = ratio(-1, 2);
    for mask in 1u32..(1u32 << m) {
        let mut lhs = BigRational::from_integer(0.into());
        for k in 0..m {
            if mask & (1 << k) != 0 {
                lhs += profile.s_over_n(k) - r.coord(k);
            }
        }
        let ok = if strict { lhs > neg_half } else { lhs >= neg_half };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::ratio;

    fn profile(n: u32, s: &[(i64, i64)]) -> SmoothnessProfile {
        SmoothnessProfile::new(n, s.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
    }

    fn point(r: &[(i64, i64)]) -> ReciprocalExponents {
        ReciprocalExponents::new(r.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
    }

    #[test]
    fn interior_point_is_admissible() {
        let p = profile(1, &[(1, 2), (1, 2)]);
        let r = point(&[(1, 2), (1, 2)]);
        assert!(check_admissible(&p, &r, true).unwrap());
        assert!(check_admissible(&p, &r, false).unwrap());
    }

    #[test]
    fn far_point_is_inadmissible_even_closed() {
        let p = profile(1, &[(1, 2), (1, 2)]);
        let r = point(&[(1, 1), (1, 1)]);
        // J = {1,2} gives (1/2 - 1) + (1/2 - 1) = -1 < -1/2.
        assert!(!check_admissible(&p, &r, false).unwrap());
    }

    #[test]
    fn facet_point_closed_vs_strict() {
        let p = profile(1, &[(1, 2), (1, 2)]);
        let r = point(&[(1, 1), (0, 1)]);
        // J = {1} gives exactly -1/2.
        assert!(!check_admissible(&p, &r, true).unwrap());
        assert!(check_admissible(&p, &r, false).unwrap());
    }

    #[test]
    fn strictness_applies_to_subset_sums_only() {
        // s_i = n/2 exactly: the strict mode still only sharpens the subset
        // inequalities, so the origin stays admissible.
        let p = profile(1, &[(1, 2), (1, 2)]);
        let r = ReciprocalExponents::origin(2);
        assert!(check_admissible(&p, &r, true).unwrap());
        assert!(check_admissible(&p, &r, false).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let p = profile(1, &[(1, 2)]);
        let r = ReciprocalExponents::origin(2);
        assert_eq!(
            check_admissible(&p, &r, false).unwrap_err(),
            GeometryError::DimensionMismatch {
                expected: 1,
                got: 2
            }
        );
    }

    #[test]
    fn region_constraint_count() {
        let p = profile(1, &[(1, 1), (1, 1), (1, 1)]);
        let region = AdmissibleRegion::from_profile(p);
        assert_eq!(region.halfspaces().len(), (1 << 3) - 1 + 3);
    }
}
