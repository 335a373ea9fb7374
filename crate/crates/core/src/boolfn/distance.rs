use serde::Serialize;

use super::TruthTable;

/// Exact fraction of inputs on which two functions disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Distance {
    disagreements: u64,
    total: u64,
}

impl Distance {
    pub fn new(disagreements: u64, total: u64) -> Self {
        assert!(
            total > 0 && disagreements <= total,
            "invalid distance {disagreements}/{total}"
        );
        Self {
            disagreements,
            total,
        }
    }

    pub fn disagreements(&self) -> u64 {
        self.disagreements
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn epsilon(&self) -> f64 {
        self.disagreements as f64 / self.total as f64
    }

    /// `<v_f|v_g> = 1 - 2 eps`, as the exact numerator over `total`.
    pub fn overlap_numerator(&self) -> i64 {
        self.total as i64 - 2 * self.disagreements as i64
    }

    pub fn overlap(&self) -> f64 {
        self.overlap_numerator() as f64 / self.total as f64
    }

    /// True when the distance is at least `eps` (the function is eps-far
    /// from the witness).
    pub fn is_at_least(&self, eps: f64) -> bool {
        self.disagreements as f64 >= eps * self.total as f64
    }
}

/// Distance from a function to the nearest member of some property class,
/// together with the member that achieves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: Distance,
    pub witness: TruthTable,
}

impl DistanceReport {
    pub fn epsilon(&self) -> f64 {
        self.distance.epsilon()
    }

    pub fn overlap(&self) -> f64 {
        self.distance.overlap()
    }
}
