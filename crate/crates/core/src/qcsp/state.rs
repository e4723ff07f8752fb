use super::QcspInstance;

/// Partial assignment of the first `level` bays, summarized by the current
/// `earliest_time` column. The prefix itself is kept by the search, so a clone
/// costs `O(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcspState {
    level: usize,
    column: Vec<i64>,
    /// `sum(column[1..])`, kept to update the slack in the same pass.
    tail_sum: i64,
    /// `sum_{i>=1} (column[0] - column[i])`.
    slack: i64,
}

impl QcspState {
    pub fn root(instance: &QcspInstance) -> Self {
        QcspState {
            level: 0,
            column: vec![0; instance.cranes()],
            tail_sum: 0,
            slack: 0,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `earliest_time[.][level - 1]`, all zeros at the root.
    pub fn column(&self) -> &[i64] {
        &self.column
    }

    pub fn slack(&self) -> i64 {
        self.slack
    }

    /// Assigns bay `level` to `crane` with one inner-loop pass.
    pub fn push(&mut self, instance: &QcspInstance, crane: usize) {
        let p = instance.processing()[self.level];
        let m = self.column.len();
        for k in (0..m).rev() {
            let old = self.column[k];
            let mut t = old;
            if k == crane {
                t += p;
            }
            if k + 1 < m && self.column[k + 1] > t {
                t = self.column[k + 1];
            }
            self.column[k] = t;
            if k >= 1 {
                self.tail_sum += t - old;
            }
        }
        self.slack = (m as i64 - 1) * self.column[0] - self.tail_sum;
        self.level += 1;
    }

    pub fn pushed(&self, instance: &QcspInstance, crane: usize) -> Self {
        let mut next = self.clone();
        next.push(instance, crane);
        next
    }

    /// `max(LB1, LB2)`; the makespan itself once every bay is assigned.
    ///
    /// LB1 hands the largest remaining bay to the crane that frees up first.
    /// LB2 first spends the remaining work on levelling every crane up to
    /// crane 0, then spreads what is left over `min(m, n - b)` cranes.
    pub fn lower_bound(&self, instance: &QcspInstance) -> i64 {
        let b = self.level;
        let n = instance.bays();
        let m = self.column.len();
        if b == n {
            return self.column[0];
        }
        let lb1 = self.column[m - 1] + instance.suffix_max(b);
        let spread = instance.suffix_sum(b) - self.slack;
        let share = if spread > 0 {
            let cranes = m.min(n - b) as i64;
            (spread + cranes - 1) / cranes
        } else {
            0
        };
        let lb2 = self.column[0] + share;
        lb1.max(lb2)
    }

    /// Cranes allowed for bay `level`, ascending.
    ///
    /// Keeps cranes that can reach the bay without pushing others off either
    /// end of the ship, then drops crane `k + 1` whenever cranes `k` and
    /// `k + 1` are free at the same instant (crane `k` can do the same work).
    /// The second rule only applies when crane `k` is itself allowed here.
    pub fn reduced_domain(&self, instance: &QcspInstance) -> Vec<usize> {
        let (n, m, b) = (instance.bays(), self.column.len(), self.level);
        debug_assert!(b < n);
        let lowest = m.saturating_sub(n - b);
        let highest = (m - 1).min(b);
        (lowest..=highest)
            .filter(|&k| k == lowest || self.column[k - 1] != self.column[k])
            .collect()
    }

    /// Bound-greedy completion: at each remaining bay, try every allowed
    /// crane and keep the one with the smallest lower bound afterwards
    /// (smallest crane index on ties). Returns the suffix of assignments.
    pub fn greedy_completion(&self, instance: &QcspInstance) -> Vec<usize> {
        let n = instance.bays();
        let mut state = self.clone();
        let mut suffix = Vec::with_capacity(n - self.level);
        while state.level < n {
            let mut best: Option<(i64, usize, QcspState)> = None;
            for crane in state.reduced_domain(instance) {
                let next = state.pushed(instance, crane);
                let bound = next.lower_bound(instance);
                if best.as_ref().is_none_or(|(b, _, _)| bound < *b) {
                    best = Some((bound, crane, next));
                }
            }
            let (_, crane, next) = best.expect("reduced domain is never empty");
            suffix.push(crane);
            state = next;
        }
        suffix
    }
}
