use std::cmp::Ordering;
use std::fmt;

use super::KnapsackInstance;

/// Decisions fixed for items `0..level` (ratio order), summarized by
/// scalars. Cloning is `O(1)`.
///
/// The state also carries the greedy break item of the remaining subproblem:
/// items `level..cursor` fit together into the residual capacity, item
/// `cursor` does not. The cursor only ever moves right along a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnapsackState {
    level: usize,
    residual: i64,
    profit: i64,
    cursor: usize,
    cursor_weight: i64,
    cursor_profit: i64,
}

/// Dantzig's LP bound `whole + numerator / denominator`, kept exact.
/// Equality and ordering compare the rational value.
#[derive(Clone, Copy, Debug)]
pub struct DantzigBound {
    pub whole: i64,
    pub numerator: i128,
    pub denominator: i64,
}

impl DantzigBound {
    fn exact(whole: i64) -> Self {
        DantzigBound {
            whole,
            numerator: 0,
            denominator: 1,
        }
    }

    /// Largest integer not above the bound; still a valid bound for integer
    /// profits.
    pub fn floor(&self) -> i64 {
        self.whole + (self.numerator / self.denominator as i128) as i64
    }

    pub fn is_integral(&self) -> bool {
        self.numerator % self.denominator as i128 == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.whole as f64 + self.numerator as f64 / self.denominator as f64
    }

    /// Exact comparison with an integer profit.
    pub fn cmp_profit(&self, profit: i64) -> Ordering {
        let lhs = self.whole as i128 * self.denominator as i128 + self.numerator;
        let rhs = profit as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialEq for DantzigBound {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DantzigBound {}

impl PartialOrd for DantzigBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DantzigBound {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.whole as i128 * self.denominator as i128 + self.numerator) * other.denominator as i128;
        let rhs = (other.whole as i128 * other.denominator as i128 + other.numerator) * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for DantzigBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == 0 {
            write!(f, "{}", self.whole)
        } else {
            write!(f, "{} + {}/{}", self.whole, self.numerator, self.denominator)
        }
    }
}

impl KnapsackState {
    pub fn root(instance: &KnapsackInstance) -> Self {
        let mut state = KnapsackState {
            level: 0,
            residual: instance.capacity(),
            profit: 0,
            cursor: 0,
            cursor_weight: 0,
            cursor_profit: 0,
        };
        state.advance_cursor(instance);
        state
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn residual(&self) -> i64 {
        self.residual
    }

    pub fn profit(&self) -> i64 {
        self.profit
    }

    /// Index of the break item of the remaining subproblem (`n` if none).
    pub fn break_item(&self) -> usize {
        self.cursor
    }

    fn advance_cursor(&mut self, instance: &KnapsackInstance) {
        let items = instance.items();
        if self.cursor < self.level {
            self.cursor = self.level;
            self.cursor_weight = 0;
            self.cursor_profit = 0;
        }
        while self.cursor < items.len() && items[self.cursor].weight <= self.residual - self.cursor_weight {
            self.cursor_weight += items[self.cursor].weight;
            self.cursor_profit += items[self.cursor].profit;
            self.cursor += 1;
        }
    }

    /// `[false, true]` if item `level` fits, else `[false]`.
    pub fn reduced_domain(&self, instance: &KnapsackInstance) -> Vec<bool> {
        if instance.items()[self.level].weight <= self.residual {
            vec![false, true]
        } else {
            vec![false]
        }
    }

    pub fn push(&mut self, instance: &KnapsackInstance, take: bool) {
        let item = instance.items()[self.level];
        if self.level < self.cursor {
            self.cursor_weight -= item.weight;
            self.cursor_profit -= item.profit;
        }
        if take {
            debug_assert!(
                item.weight <= self.residual,
                "reduced domain keeps the knapsack feasible"
            );
            self.residual -= item.weight;
            self.profit += item.profit;
        }
        self.level += 1;
        self.advance_cursor(instance);
    }

    pub fn pushed(&self, instance: &KnapsackInstance, take: bool) -> Self {
        let mut next = *self;
        next.push(instance, take);
        next
    }

    /// LP relaxation optimum of the remaining subproblem plus the profit
    /// already committed.
    pub fn dantzig_bound(&self, instance: &KnapsackInstance) -> DantzigBound {
        let whole = self.profit + self.cursor_profit;
        let items = instance.items();
        if self.cursor >= items.len() {
            return DantzigBound::exact(whole);
        }
        let brk = items[self.cursor];
        let room = self.residual - self.cursor_weight;
        DantzigBound {
            whole,
            numerator: brk.profit as i128 * room as i128,
            denominator: brk.weight,
        }
    }

    /// Takes every remaining item that still fits, in ratio order. Returns the
    /// decisions for items `level..n`.
    pub fn greedy_completion(&self, instance: &KnapsackInstance) -> Vec<bool> {
        let mut residual = self.residual;
        instance.items()[self.level..]
            .iter()
            .map(|it| {
                let take = it.weight <= residual;
                if take {
                    residual -= it.weight;
                }
                take
            })
            .collect()
    }
}
