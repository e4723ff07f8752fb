use crate::knapsack::KnapsackInstance;

use super::OracleError;

/// Largest `n * c` the capacity-indexed table accepts.
pub const KNAPSACK_DP_GUARD: u128 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackOptimum {
    pub profit: i64,
    /// One optimal selection, in the instance's (ratio) order.
    pub take: Vec<bool>,
}

/// Textbook `O(n c)` dynamic program over capacities with a bit table for
/// reconstruction.
pub fn knapsack_dp(instance: &KnapsackInstance) -> Result<KnapsackOptimum, OracleError> {
    let n = instance.len();
    let c = instance.capacity() as usize;
    let size = n as u128 * c as u128;
    if size > KNAPSACK_DP_GUARD {
        return Err(OracleError::GuardExceeded {
            oracle: "knapsack dp",
            size,
            limit: KNAPSACK_DP_GUARD,
        });
    }
    let row_words = (c + 1).div_ceil(64);
    let mut chosen = vec![0u64; n * row_words];
    let mut best = vec![0i64; c + 1];
    for (i, item) in instance.items().iter().enumerate() {
        let w = item.weight as usize;
        for cap in (w..=c).rev() {
            let with = best[cap - w] + item.profit;
            if with > best[cap] {
                best[cap] = with;
                chosen[i * row_words + cap / 64] |= 1 << (cap % 64);
            }
        }
    }
    let mut take = vec![false; n];
    let mut cap = c;
    for i in (0..n).rev() {
        if chosen[i * row_words + cap / 64] >> (cap % 64) & 1 == 1 {
            take[i] = true;
            cap -= instance.items()[i].weight as usize;
        }
    }
    Ok(KnapsackOptimum { profit: best[c], take })
}

/// Largest Pareto list [`knapsack_pareto`] will carry.
pub const KNAPSACK_PARETO_GUARD: usize = 20_000_000;

/// Exact optimum by the sparse DP over non-dominated `(weight, profit)`
/// pairs. Cost depends on the number of distinct useful weights rather than
/// on `c`, so it handles huge capacities when the items are structured
/// (spanner instances are). Returns the optimal profit only.
pub fn knapsack_pareto(instance: &KnapsackInstance) -> Result<i64, OracleError> {
    let c = instance.capacity();
    // sorted by weight, profits strictly increasing
    let mut front: Vec<(i64, i64)> = vec![(0, 0)];
    let mut merged = Vec::new();
    for item in instance.items() {
        merged.clear();
        let shifted = front
            .iter()
            .map(|&(w, p)| (w + item.weight, p + item.profit))
            .take_while(|&(w, _)| w <= c);
        let mut old = front.iter().copied().peekable();
        let mut new = shifted.peekable();
        loop {
            let next = match (old.peek(), new.peek()) {
                (Some(&a), Some(&b)) => {
                    if (a.0, -a.1) <= (b.0, -b.1) {
                        old.next();
                        a
                    } else {
                        new.next();
                        b
                    }
                }
                (Some(&a), None) => {
                    old.next();
                    a
                }
                (None, Some(&b)) => {
                    new.next();
                    b
                }
                (None, None) => break,
            };
            if merged.last().is_none_or(|&(_, p)| next.1 > p) {
                merged.push(next);
            }
        }
        if merged.len() > KNAPSACK_PARETO_GUARD {
            return Err(OracleError::GuardExceeded {
                oracle: "knapsack pareto dp",
                size: merged.len() as u128,
                limit: KNAPSACK_PARETO_GUARD as u128,
            });
        }
        std::mem::swap(&mut front, &mut merged);
    }
    Ok(front.last().map_or(0, |&(_, p)| p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knapsack::Item;

    fn subsets(instance: &KnapsackInstance) -> i64 {
        let n = instance.len();
        (0u32..1 << n)
            .filter_map(|mask| {
                let x: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                let (p, w) = instance.evaluate(&x);
                (w <= instance.capacity()).then_some(p)
            })
            .max()
            .unwrap()
    }

    #[test]
    fn fixture_optimum_is_six() {
        let opt = knapsack_dp(&KnapsackInstance::two_item_fixture()).unwrap();
        assert_eq!(opt.profit, 6);
        assert_eq!(opt.take, vec![true, false]);
    }

    #[test]
    fn matches_subset_enumeration() {
        let inst = KnapsackInstance::new(
            vec![
                Item::new(10, 5),
                Item::new(40, 4),
                Item::new(30, 6),
                Item::new(50, 3),
                Item::new(7, 2),
            ],
            10,
        )
        .unwrap();
        let opt = knapsack_dp(&inst).unwrap();
        assert_eq!(opt.profit, subsets(&inst));
        let (p, w) = inst.evaluate(&opt.take);
        assert_eq!(p, opt.profit);
        assert!(w <= inst.capacity());
    }

    #[test]
    fn pareto_agrees_with_table() {
        for seed in 0..20 {
            let inst = KnapsackInstance::spanner(12, 0.3 + 0.02 * seed as f64, seed).unwrap();
            let scaled = KnapsackInstance::new(
                inst.items_in_input_order()
                    .iter()
                    .map(|it| Item::new(it.profit % 997 + 1, it.weight % 89 + 1))
                    .collect(),
                300,
            );
            let Ok(small) = scaled else { continue };
            assert_eq!(knapsack_pareto(&small).unwrap(), knapsack_dp(&small).unwrap().profit);
        }
        assert_eq!(knapsack_pareto(&KnapsackInstance::two_item_fixture()).unwrap(), 6);
    }

    #[test]
    fn guard_refuses_huge_tables() {
        let inst = KnapsackInstance::exp(30, 0).unwrap();
        assert!(matches!(knapsack_dp(&inst), Err(OracleError::GuardExceeded { .. })));
    }
}
