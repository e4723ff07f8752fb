//! Move-as-soon-as-possible schedules for a fixed crane assignment, and the
//! check of that schedule against the spacing constraints the relaxation
//! drops.

use std::fmt;

use super::{QcspError, QcspInstance};

/// `earliest[k][b]`: the first instant crane `k` can move past bay `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarliestTimes {
    earliest: Vec<Vec<i64>>,
}

impl EarliestTimes {
    pub fn get(&self, crane: usize, bay: usize) -> i64 {
        self.earliest[crane][bay]
    }

    pub fn column(&self, bay: usize) -> Vec<i64> {
        self.earliest.iter().map(|row| row[bay]).collect()
    }

    pub fn makespan(&self) -> i64 {
        *self.earliest[0].last().expect("at least one bay")
    }
}

pub fn check_sigma(instance: &QcspInstance, sigma: &[usize]) -> Result<(), QcspError> {
    if sigma.len() != instance.bays() {
        return Err(QcspError::SigmaLength {
            expected: instance.bays(),
            found: sigma.len(),
        });
    }
    if let Some(bay) = sigma.iter().position(|&k| k >= instance.cranes()) {
        return Err(QcspError::CraneOutOfRange {
            bay,
            crane: sigma[bay],
            cranes: instance.cranes(),
        });
    }
    Ok(())
}

/// Fills the whole `m x n` table in `O(n m)`, bay by bay, right crane to left.
pub fn earliest_time_full(instance: &QcspInstance, sigma: &[usize]) -> Result<EarliestTimes, QcspError> {
    check_sigma(instance, sigma)?;
    let (n, m) = (instance.bays(), instance.cranes());
    let p = instance.processing();
    let mut earliest = vec![vec![0i64; n]; m];
    for b in 0..n {
        for k in (0..m).rev() {
            let mut t = if b >= 1 { earliest[k][b - 1] } else { 0 };
            if sigma[b] == k {
                t += p[b];
            }
            if k + 1 < m && earliest[k + 1][b] > t {
                t = earliest[k + 1][b];
            }
            earliest[k][b] = t;
        }
    }
    Ok(EarliestTimes { earliest })
}

pub fn makespan(instance: &QcspInstance, sigma: &[usize]) -> Result<i64, QcspError> {
    Ok(earliest_time_full(instance, sigma)?.makespan())
}

/// Start and completion time of every bay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub start: Vec<i64>,
    pub completion: Vec<i64>,
    pub makespan: i64,
}

impl Schedule {
    pub fn from_assignment(instance: &QcspInstance, sigma: &[usize]) -> Result<Self, QcspError> {
        let table = earliest_time_full(instance, sigma)?;
        let p = instance.processing();
        let start: Vec<i64> = (0..instance.bays())
            .map(|b| if b == 0 { 0 } else { table.get(sigma[b], b - 1) })
            .collect();
        let completion = start.iter().zip(p).map(|(s, p)| s + p).collect();
        Ok(Schedule {
            start,
            completion,
            makespan: table.makespan(),
        })
    }

    /// Open-interval overlap: a bay finishing exactly when another starts
    /// does not overlap it.
    pub fn overlaps(&self, a: usize, b: usize) -> bool {
        self.start[a] < self.completion[b] && self.start[b] < self.completion[a]
    }
}

/// Why an assignment is not a valid crane schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Crane `crane` cannot reach bay `bay` without pushing cranes off the
    /// left end of the ship.
    PushLeft { bay: usize, crane: usize },
    /// Same, at the right end.
    PushRight { bay: usize, crane: usize },
    /// Bays `left < right` are worked at the same time, with the crane on
    /// `left` not strictly left of the crane on `right`.
    Crossing { left: usize, right: usize },
    /// Bays `left < right` are worked at the same time without room for the
    /// cranes between the two.
    Spacing { left: usize, right: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::PushLeft { bay, crane } => write!(f, "crane {crane} pushed off the left side at bay {bay}"),
            Violation::PushRight { bay, crane } => write!(f, "crane {crane} pushed off the right side at bay {bay}"),
            Violation::Crossing { left, right } => write!(f, "crossing at pair ({left},{right})"),
            Violation::Spacing { left, right } => write!(f, "no room between cranes at pair ({left},{right})"),
        }
    }
}

/// Checks the move-ASAP schedule of `sigma` against the full crane model.
/// Returns the schedule, or the first violation found.
pub fn check_original(instance: &QcspInstance, sigma: &[usize]) -> Result<Result<Schedule, Violation>, QcspError> {
    let schedule = Schedule::from_assignment(instance, sigma)?;
    let (n, m) = (instance.bays(), instance.cranes());
    for left in 0..n {
        for right in left + 1..n {
            if !schedule.overlaps(left, right) {
                continue;
            }
            if sigma[left] >= sigma[right] {
                return Ok(Err(Violation::Crossing { left, right }));
            }
            if sigma[right] - sigma[left] > right - left {
                return Ok(Err(Violation::Spacing { left, right }));
            }
        }
    }
    for (bay, &crane) in sigma.iter().enumerate() {
        if crane > bay {
            return Ok(Err(Violation::PushLeft { bay, crane }));
        }
        if n - bay < m - crane {
            return Ok(Err(Violation::PushRight { bay, crane }));
        }
    }
    Ok(Ok(schedule))
}

pub fn is_original_feasible(instance: &QcspInstance, sigma: &[usize]) -> bool {
    matches!(check_original(instance, sigma), Ok(Ok(_)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_assignment_has_makespan_eleven() {
        let toy = QcspInstance::toy();
        let table = earliest_time_full(&toy, &[0, 1, 0, 1]).unwrap();
        assert_eq!(table.get(1, 1), 9);
        assert_eq!(table.get(0, 1), 9);
        assert_eq!(table.column(0), vec![5, 0]);
        assert_eq!(table.makespan(), 11);
    }

    #[test]
    fn single_crane_does_everything() {
        let inst = QcspInstance::new(vec![4, 7, 1, 3], 1).unwrap();
        assert_eq!(makespan(&inst, &[0, 0, 0, 0]).unwrap(), 15);
    }

    #[test]
    fn three_unit_bays_two_cranes() {
        // crane 0 works bays 0 and 1 back to back (t=0..2); crane 1 works bay 2
        // at t=0..1 and is out of the way, so crane 0 passes bay 2 at t=2
        let inst = QcspInstance::new(vec![1, 1, 1], 2).unwrap();
        let schedule = Schedule::from_assignment(&inst, &[0, 0, 1]).unwrap();
        assert_eq!(schedule.start, vec![0, 1, 0]);
        assert_eq!(schedule.completion, vec![1, 2, 1]);
        assert_eq!(schedule.makespan, 2);
    }

    #[test]
    fn toy_assignment_is_feasible() {
        assert!(is_original_feasible(&QcspInstance::toy(), &[0, 1, 0, 1]));
    }

    #[test]
    fn crane_left_of_its_bay_count_is_rejected() {
        // the move-ASAP schedule runs these bays back to back, but crane 1 on
        // bay 0 leaves no room for crane 0
        let inst = QcspInstance::new(vec![5, 5], 2).unwrap();
        let schedule = Schedule::from_assignment(&inst, &[1, 0]).unwrap();
        assert_eq!(schedule.start, vec![0, 5]);
        assert_eq!(
            check_original(&inst, &[1, 0]).unwrap(),
            Err(Violation::PushLeft { bay: 0, crane: 1 })
        );
    }

    #[test]
    fn spacing_violation_is_reported() {
        // crane 0 on bay 1 and crane 2 on bay 2 at the same time: crane 1 has
        // nowhere to stand
        let inst = QcspInstance::new(vec![1, 10, 10, 1], 3).unwrap();
        let sigma = [0, 0, 2, 2];
        let schedule = Schedule::from_assignment(&inst, &sigma).unwrap();
        assert!(schedule.overlaps(1, 2));
        assert_eq!(
            check_original(&inst, &sigma).unwrap(),
            Err(Violation::Spacing { left: 1, right: 2 })
        );
    }

    #[test]
    fn touching_intervals_do_not_overlap() {
        let schedule = Schedule {
            start: vec![0, 5],
            completion: vec![5, 7],
            makespan: 7,
        };
        assert!(!schedule.overlaps(0, 1));
    }

    #[test]
    fn malformed_assignments_are_input_errors() {
        let toy = QcspInstance::toy();
        assert!(matches!(
            earliest_time_full(&toy, &[0, 1]),
            Err(QcspError::SigmaLength { .. })
        ));
        assert!(matches!(
            earliest_time_full(&toy, &[0, 1, 2, 0]),
            Err(QcspError::CraneOutOfRange { bay: 2, .. })
        ));
    }
}
