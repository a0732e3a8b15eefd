use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GeometryError;

/// Builds an exact rational from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `num/den`, or just `num` when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// The point (1/p_1, ..., 1/p_m) as exact rationals.
///
/// A zero coordinate encodes p_i = infinity; there is no separate infinity
/// representation anywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReciprocalExponents {
    coords: Vec<BigRational>,
}

impl ReciprocalExponents {
    /// Constructs from reciprocal coordinates; each must be nonnegative.
    pub fn new(coords: Vec<BigRational>) -> Result<Self, GeometryError> {
        if coords.is_empty() {
            return Err(GeometryError::EmptyVector);
        }
        for (index, c) in coords.iter().enumerate() {
            if c.is_negative() {
                return Err(GeometryError::NegativeReciprocal { index });
            }
        }
        Ok(Self { coords })
    }

    /// The all-zero point, i.e. every p_i = infinity.
    pub fn origin(m: usize) -> Self {
        Self {
            coords: vec![BigRational::zero(); m],
        }
    }

    pub fn m(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    /// Sum of the reciprocals, i.e. 1/p for the Hoelder target exponent p.
    pub fn reciprocal_sum(&self) -> BigRational {
        self.coords.iter().sum()
    }

    /// Number of indices with 1/2 < r_i < 1, i.e. with 1 < p_i < 2.
    pub fn ell_count(&self) -> usize {
        let half = ratio(1, 2);
        let one = BigRational::one();
        self.coords
            .iter()
            .filter(|r| **r > half && **r < one)
            .count()
    }

    /// Renders the coordinates as exact fractions, e.g. `(3/2, 0, 1)`.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        format!("({})", parts.join(", "))
    }
}

/// Sum of reciprocal coordinates; the reciprocal of the Hoelder exponent p.
pub fn reciprocal_sum(r: &ReciprocalExponents) -> BigRational {
    r.reciprocal_sum()
}

/// Number of coordinates with 1 < p_i < 2, the induction variable of the
/// interpolation argument.
pub fn ell_count(r: &ReciprocalExponents) -> usize {
    r.ell_count()
}

/// Ambient dimension n together with the smoothness orders (s_1, ..., s_m).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmoothnessProfile {
    n: u32,
    s: Vec<BigRational>,
}

impl SmoothnessProfile {
    /// Constructs a profile in the closed regime s_i >= n/2.
    pub fn new(n: u32, s: Vec<BigRational>) -> Result<Self, GeometryError> {
        assert!(n >= 1, "ambient dimension must be positive");
        if s.is_empty() {
            return Err(GeometryError::EmptyVector);
        }
        let half_n = ratio(n as i64, 2);
        for (index, si) in s.iter().enumerate() {
            if *si < half_n {
                return Err(GeometryError::SmoothnessBelowHalfDimension { index });
            }
        }
        Ok(Self { n, s })
    }

    /// Constructs a profile in the strict regime s_i > n/2.
    pub fn new_strict(n: u32, s: Vec<BigRational>) -> Result<Self, GeometryError> {
        let half_n = ratio(n as i64, 2);
        for (index, si) in s.iter().enumerate() {
            if *si <= half_n {
                return Err(GeometryError::SmoothnessNotStrict { index });
            }
        }
        Self::new(n, s)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &[BigRational] {
        &self.s
    }

    /// s_i / n as an exact rational.
    pub fn s_over_n(&self, i: usize) -> BigRational {
        &self.s[i] / ratio(self.n as i64, 1)
    }

    /// True when every s_i > n/2 strictly.
    pub fn is_strict(&self) -> bool {
        let half_n = ratio(self.n as i64, 2);
        self.s.iter().all(|si| *si > half_n)
    }
}
