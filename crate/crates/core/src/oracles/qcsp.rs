use crate::qcsp::{makespan, QcspInstance};

use super::{tick_simulator, OracleError};

/// Largest `m^n` the enumerator accepts.
pub const QCSP_BRUTE_FORCE_GUARD: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcspOptima {
    /// Best makespan over all `m^n` assignments.
    pub relax_optimum: i64,
    pub relax_argmin: Vec<usize>,
    /// Best makespan over assignments that are valid crane schedules;
    /// `None` if there is none.
    pub original_optimum: Option<i64>,
    pub original_argmin: Option<Vec<usize>>,
}

/// Enumerates every assignment in lexicographic order. Feasibility is
/// decided by the tick simulator, not by the adapter's interval check.
pub fn qcsp_brute_force(instance: &QcspInstance) -> Result<QcspOptima, OracleError> {
    let (n, m) = (instance.bays(), instance.cranes());
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > QCSP_BRUTE_FORCE_GUARD {
        return Err(OracleError::GuardExceeded {
            oracle: "qcsp brute force",
            size,
            limit: QCSP_BRUTE_FORCE_GUARD,
        });
    }
    let mut sigma = vec![0usize; n];
    let mut relax: Option<(i64, Vec<usize>)> = None;
    let mut original: Option<(i64, Vec<usize>)> = None;
    loop {
        let span = makespan(instance, &sigma)?;
        if relax.as_ref().is_none_or(|(best, _)| span < *best) {
            relax = Some((span, sigma.clone()));
        }
        if original.as_ref().is_none_or(|(best, _)| span < *best) && tick_simulator(instance, &sigma)? {
            original = Some((span, sigma.clone()));
        }
        if !next_assignment(&mut sigma, m) {
            break;
        }
    }
    let (relax_optimum, relax_argmin) = relax.expect("at least one assignment");
    Ok(QcspOptima {
        relax_optimum,
        relax_argmin,
        original_optimum: original.as_ref().map(|(v, _)| *v),
        original_argmin: original.map(|(_, s)| s),
    })
}

/// Odometer increment, last bay fastest. Returns `false` after the last one.
pub(crate) fn next_assignment(sigma: &mut [usize], m: usize) -> bool {
    for digit in sigma.iter_mut().rev() {
        *digit += 1;
        if *digit < m {
            return true;
        }
        *digit = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_optimum_is_eleven() {
        let optima = qcsp_brute_force(&QcspInstance::toy()).unwrap();
        assert_eq!(optima.original_optimum, Some(11));
        assert!(optima.relax_optimum <= 11);
    }

    #[test]
    fn single_crane_optima_are_total_work() {
        let inst = QcspInstance::new(vec![3, 1, 4, 1, 5], 1).unwrap();
        let optima = qcsp_brute_force(&inst).unwrap();
        assert_eq!(optima.relax_optimum, 14);
        assert_eq!(optima.original_optimum, Some(14));
    }

    #[test]
    fn relaxation_never_worse() {
        for seed in 0..10 {
            let inst = QcspInstance::generate(6, 2 + (seed as usize % 2), seed).unwrap();
            let optima = qcsp_brute_force(&inst).unwrap();
            assert!(optima.relax_optimum <= optima.original_optimum.unwrap());
        }
    }

    #[test]
    fn guard_refuses_large_spaces() {
        let inst = QcspInstance::generate(30, 3, 0).unwrap();
        assert!(matches!(
            qcsp_brute_force(&inst),
            Err(OracleError::GuardExceeded { .. })
        ));
    }
}
