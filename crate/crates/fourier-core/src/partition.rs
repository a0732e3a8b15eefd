//! Dyadic Littlewood-Paley partition of unity.
//!
//! The generating bump is psi_hat(xi) = theta(|xi|) - theta(2|xi|) with a
//! C-infinity radial cutoff theta equal to 1 on |xi| <= 1 and 0 on
//! |xi| >= 2. The scaled family psi_hat(2^{-j} xi) then telescopes exactly:
//! the partial sum over j in [a, b] equals theta(2^{-b}|xi|) -
//! theta(2^{1-a}|xi|), which is 1 on the annulus 2^a <= |xi| <= 2^b.

/// h(t) = exp(-1/t) for t > 0, extended by 0.
fn bump_h(t: f64) -> f64 {
    if t > 0.0 {
        (-t.recip()).exp()
    } else {
        0.0
    }
}

/// Smooth transition s(t) = h(t) / (h(t) + h(1-t)); 0 at t <= 0, 1 at t >= 1.
fn transition(t: f64) -> f64 {
    let a = bump_h(t);
    let b = bump_h(1.0 - t);
    if a == 0.0 {
        0.0
    } else if b == 0.0 {
        1.0
    } else {
        a / (a + b)
    }
}

/// Radial cutoff: 1 for t <= 1, 0 for t >= 2, smooth in between.
pub fn radial_cutoff(t: f64) -> f64 {
    if t <= 1.0 {
        1.0
    } else if t >= 2.0 {
        0.0
    } else {
        transition(2.0 - t).clamp(0.0, 1.0)
    }
}

/// The radial profile of psi_hat at |xi| = r; supported in [1/2, 2].
pub fn psi_hat_radial(r: f64) -> f64 {
    radial_cutoff(r) - radial_cutoff(2.0 * r)
}

/// Truncated dyadic partition over scales j in [j_min, j_max].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    j_min: i32,
    j_max: i32,
}

/// Builds the partition; requires j_min < j_max.
pub fn make_partition(j_min: i32, j_max: i32) -> Partition {
    Partition::new(j_min, j_max)
}

impl Partition {
    pub fn new(j_min: i32, j_max: i32) -> Self {
        assert!(j_min < j_max, "partition needs j_min < j_max");
        Self { j_min, j_max }
    }

    pub fn j_min(&self) -> i32 {
        self.j_min
    }

    pub fn j_max(&self) -> i32 {
        self.j_max
    }

    pub fn scales(&self) -> impl Iterator<Item = i32> {
        self.j_min..=self.j_max
    }

    pub fn contains(&self, j: i32) -> bool {
        (self.j_min..=self.j_max).contains(&j)
    }

    /// psi_hat(2^{-j} xi) for a frequency vector of any dimension.
    pub fn scaled_at(&self, j: i32, xi: &[f64]) -> f64 {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        self.scaled_radial(j, r)
    }

    /// psi_hat(2^{-j} r) for a radius r >= 0.
    pub fn scaled_radial(&self, j: i32, r: f64) -> f64 {
        // 2^{-j} scaling is exact, so telescoping terms cancel bitwise.
        psi_hat_radial((2.0f64).powi(-j) * r)
    }

    /// Sum of the scaled pieces at radius r; equals 1 on the covered annulus.
    pub fn partition_sum(&self, r: f64) -> f64 {
        self.scales().map(|j| self.scaled_radial(j, r)).sum()
    }
}
