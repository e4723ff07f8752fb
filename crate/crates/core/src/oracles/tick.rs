use crate::qcsp::{check_sigma, QcspInstance};

use super::OracleError;

/// Largest total processing time (in ticks) the simulator accepts.
pub const TICK_GUARD: i64 = 1_000_000;

/// What the simulator observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TickTrace {
    pub start: Vec<i64>,
    pub completion: Vec<i64>,
    pub makespan: i64,
    /// First tick at which the working cranes could not be placed, if any.
    pub conflict_tick: Option<i64>,
}

impl TickTrace {
    pub fn feasible(&self) -> bool {
        self.conflict_tick.is_none()
    }
}

/// Runs the cranes one time unit at a time.
///
/// Each crane sweeps left to right. It stops to work every bay assigned to
/// it, and it may only move past a bay once its right neighbour has. Moving
/// takes no time. During every tick the working cranes must be placeable on
/// the ship: ordered left to right with at least one bay for every crane
/// between or beside them.
pub fn tick_simulate(instance: &QcspInstance, sigma: &[usize]) -> Result<TickTrace, OracleError> {
    check_sigma(instance, sigma)?;
    let total = instance.total_processing();
    if total > TICK_GUARD {
        return Err(OracleError::GuardExceeded {
            oracle: "tick simulator",
            size: total as u128,
            limit: TICK_GUARD as u128,
        });
    }
    let (n, m) = (instance.bays(), instance.cranes());
    let p = instance.processing();
    let mut passed = vec![0usize; m];
    let mut remaining: Vec<i64> = p.to_vec();
    let mut start = vec![-1i64; n];
    let mut completion = vec![-1i64; n];
    let mut conflict_tick = None;
    let mut t = 0i64;

    loop {
        for k in (0..m).rev() {
            while passed[k] < n {
                let b = passed[k];
                if sigma[b] == k && remaining[b] > 0 {
                    break;
                }
                if k + 1 < m && passed[k + 1] <= b {
                    break;
                }
                passed[k] += 1;
            }
        }
        if passed[0] == n {
            break;
        }
        assert!(t <= total, "simulation failed to make progress");

        let working: Vec<(usize, usize)> = (0..m)
            .filter_map(|k| {
                let b = passed[k];
                (b < n && sigma[b] == k && remaining[b] > 0).then_some((k, b))
            })
            .collect();
        if conflict_tick.is_none() && !placeable(&working, n, m) {
            conflict_tick = Some(t);
        }
        for &(_, b) in &working {
            if remaining[b] == p[b] {
                start[b] = t;
            }
            remaining[b] -= 1;
            if remaining[b] == 0 {
                completion[b] = t + 1;
            }
        }
        t += 1;
    }

    Ok(TickTrace {
        start,
        completion,
        makespan: t,
        conflict_tick,
    })
}

/// Whether the simulated schedule respects every crane constraint.
pub fn tick_simulator(instance: &QcspInstance, sigma: &[usize]) -> Result<bool, OracleError> {
    Ok(tick_simulate(instance, sigma)?.feasible())
}

/// `working` is sorted by crane. Every crane needs its own bay, so crane `k`
/// at bay `b` needs `b >= k` and `n - 1 - b >= m - 1 - k`, and two working
/// cranes need at least as many bays between them as cranes.
fn placeable(working: &[(usize, usize)], n: usize, m: usize) -> bool {
    let ends_ok = working.iter().all(|&(k, b)| b >= k && n - 1 - b >= m - 1 - k);
    let gaps_ok = working
        .windows(2)
        .all(|pair| pair[1].1 > pair[0].1 && pair[1].1 - pair[0].1 >= pair[1].0 - pair[0].0);
    ends_ok && gaps_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_schedule_is_feasible_with_makespan_eleven() {
        let trace = tick_simulate(&QcspInstance::toy(), &[0, 1, 0, 1]).unwrap();
        assert!(trace.feasible());
        assert_eq!(trace.makespan, 11);
        assert_eq!(trace.start, vec![0, 0, 9, 9]);
        assert_eq!(trace.completion, vec![5, 9, 11, 10]);
    }

    #[test]
    fn crane_on_the_wrong_side_is_infeasible() {
        let inst = QcspInstance::new(vec![5, 5], 2).unwrap();
        assert!(!tick_simulator(&inst, &[1, 0]).unwrap());
    }

    #[test]
    fn three_bays_two_cranes() {
        let inst = QcspInstance::new(vec![5, 5, 5], 2).unwrap();
        let trace = tick_simulate(&inst, &[0, 0, 1]).unwrap();
        assert_eq!(trace.start, vec![0, 5, 0]);
        assert_eq!(trace.makespan, 10);
        assert!(trace.feasible());
        // crane 1 on bay 1 while crane 0 is still on bay 0: adjacent is fine
        let trace = tick_simulate(&inst, &[0, 1, 1]).unwrap();
        assert!(trace.feasible());
        assert_eq!(trace.makespan, 10);
    }

    #[test]
    fn guard_refuses_long_horizons() {
        let inst = QcspInstance::new(vec![2_000_000], 1).unwrap();
        assert!(matches!(
            tick_simulate(&inst, &[0]),
            Err(OracleError::GuardExceeded { .. })
        ));
    }
}
