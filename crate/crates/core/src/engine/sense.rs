use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Direction of optimization. Every "better"/"worse" decision in the engine
/// goes through this type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

impl Sense {
    /// `true` iff `candidate` is strictly better than `reference`.
    pub fn improves<O: PartialOrd>(self, candidate: O, reference: O) -> bool {
        match self {
            Sense::Minimize => candidate < reference,
            Sense::Maximize => candidate > reference,
        }
    }

    /// `true` iff no completion with this bound can strictly beat `incumbent`.
    pub fn bound_cannot_improve<O: PartialOrd>(self, bound: O, incumbent: O) -> bool {
        !self.improves(bound, incumbent)
    }

    /// Orders two averages best-first.
    pub fn best_first(self, a: f64, b: f64) -> Ordering {
        match self {
            Sense::Minimize => a.total_cmp(&b),
            Sense::Maximize => b.total_cmp(&a),
        }
    }

    /// Orders two averages worst-first (the "bad to good" ranking order).
    pub fn worst_first(self, a: f64, b: f64) -> Ordering {
        self.best_first(b, a)
    }

    pub fn flipped(self) -> Sense {
        match self {
            Sense::Minimize => Sense::Maximize,
            Sense::Maximize => Sense::Minimize,
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sense::Minimize => f.write_str("min"),
            Sense::Maximize => f.write_str("max"),
        }
    }
}

/// Objective values the engine can compare, average and report.
pub trait Objective: Copy + PartialOrd + fmt::Debug + fmt::Display + Serialize + Send + Sync + 'static {
    fn to_f64(self) -> f64;
}

impl Objective for i64 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Objective for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}
