//! Exponent algebra of the weak-type interpolation lemma.
//!
//! The parameter set couples two weak-type endpoint estimates through the
//! exact rational identity 1/p0 - 1/q0 = 1/p1 - 1/q1 = 1 - 1/r; the
//! combined bound is the geometric mix M0^{1-theta} M1^theta with theta
//! solving 1 = (1-theta)/p0 + theta/p1.

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::HardyError;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq)]
pub struct SteinParams {
    n: u32,
    p0: Rational,
    q0: Rational,
    p1: Rational,
    q1: Rational,
    r: Rational,
    m0: f64,
    m1: f64,
}

impl SteinParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: u32,
        p0: Rational,
        q0: Rational,
        p1: Rational,
        q1: Rational,
        r: Rational,
        m0: f64,
        m1: f64,
    ) -> Result<Self, HardyError> {
        let one = Rational::new(1, 1);
        let lower = Rational::new(n as i64, n as i64 + 1);
        if !(p0 > lower && p0 < one) {
            return Err(HardyError::SteinInvalid {
                reason: format!("p0 must lie in (n/(n+1), 1), got {p0}"),
            });
        }
        if p1 <= one {
            return Err(HardyError::SteinInvalid {
                reason: format!("p1 must exceed 1, got {p1}"),
            });
        }
        let zero = Rational::new(0, 1);
        if !(q0 > zero && q0 < r && r < q1) {
            return Err(HardyError::SteinInvalid {
                reason: format!("need 0 < q0 < r < q1, got q0={q0}, r={r}, q1={q1}"),
            });
        }
        let gap = one - r.recip();
        if p0.recip() - q0.recip() != gap || p1.recip() - q1.recip() != gap {
            return Err(HardyError::SteinInvalid {
                reason: "1/p_i - 1/q_i must equal 1 - 1/r exactly".into(),
            });
        }
        if !(m0 > 0.0 && m1 > 0.0) {
            return Err(HardyError::SteinInvalid {
                reason: "endpoint constants must be positive".into(),
            });
        }
        Ok(Self {
            n,
            p0,
            q0,
            p1,
            q1,
            r,
            m0,
            m1,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn p0(&self) -> Rational {
        self.p0
    }
    pub fn q0(&self) -> Rational {
        self.q0
    }
    pub fn p1(&self) -> Rational {
        self.p1
    }
    pub fn q1(&self) -> Rational {
        self.q1
    }
    pub fn r(&self) -> Rational {
        self.r
    }
    pub fn m0(&self) -> f64 {
        self.m0
    }
    pub fn m1(&self) -> f64 {
        self.m1
    }

    /// 1/q0 recomputed from the defining identity; equals the stored value.
    pub fn q0_from_identity(&self) -> Rational {
        (self.p0.recip() - (Rational::new(1, 1) - self.r.recip())).recip()
    }
}

/// Solves 1 = (1-theta)/p0 + theta/p1 exactly.
pub fn stein_theta(p0: Rational, p1: Rational) -> Result<Rational, HardyError> {
    if p0 == p1 {
        return Err(HardyError::SteinInvalid {
            reason: "p0 and p1 must differ".into(),
        });
    }
    let x0 = p0.recip();
    let x1 = p1.recip();
    Ok((x0 - Rational::new(1, 1)) / (x0 - x1))
}

/// The interpolation weight and the combined constant M0^{1-theta} M1^theta.
pub fn stein_combine(params: &SteinParams) -> Result<(Rational, f64), HardyError> {
    let theta = stein_theta(params.p0(), params.p1())?;
    let t = theta.to_f64().expect("theta fits in f64");
    let bound = params.m0().powf(1.0 - t) * params.m1().powf(t);
    Ok((theta, bound))
}
