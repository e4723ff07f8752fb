use std::cmp::Ordering;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::KnapsackError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    pub profit: i64,
    pub weight: i64,
}

impl Item {
    pub const fn new(profit: i64, weight: i64) -> Self {
        Item { profit, weight }
    }

    /// Compares profit/weight ratios exactly.
    pub fn cmp_ratio(&self, other: &Item) -> Ordering {
        let lhs = self.profit as i128 * other.weight as i128;
        let rhs = other.profit as i128 * self.weight as i128;
        lhs.cmp(&rhs)
    }
}

/// Items sorted by non-increasing profit/weight ratio, plus the permutation
/// back to input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackInstance {
    items: Vec<Item>,
    capacity: i64,
    original_index: Vec<usize>,
}

impl KnapsackInstance {
    /// Validates the standing assumptions (positive values, every item fits
    /// alone, not everything fits together) and sorts by ratio. Equal ratios
    /// keep their input order.
    pub fn new(raw: Vec<Item>, capacity: i64) -> Result<Self, KnapsackError> {
        if raw.is_empty() {
            return Err(KnapsackError::NoItems);
        }
        if capacity < 1 {
            return Err(KnapsackError::NonPositiveCapacity(capacity));
        }
        if let Some(index) = raw.iter().position(|it| it.profit < 1 || it.weight < 1) {
            return Err(KnapsackError::NonPositiveItem { index });
        }
        if let Some(index) = raw.iter().position(|it| it.weight > capacity) {
            return Err(KnapsackError::ItemTooHeavy {
                index,
                weight: raw[index].weight,
                capacity,
            });
        }
        let total: i128 = raw.iter().map(|it| it.weight as i128).sum();
        if total <= capacity as i128 {
            return Err(KnapsackError::EverythingFits { total, capacity });
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| raw[b].cmp_ratio(&raw[a]));
        let items = order.iter().map(|&i| raw[i]).collect();
        Ok(KnapsackInstance {
            items,
            capacity,
            original_index: order,
        })
    }

    /// Two items, capacity 8: the LP optimum takes item 0 and 3/5 of item 1.
    pub fn two_item_fixture() -> Self {
        Self::new(vec![Item::new(6, 5), Item::new(5, 5)], 8).expect("fixture is valid")
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn capacity(&self) -> i64 {
        self.capacity
    }

    /// Items in ratio order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// `original_index()[sorted] = input position`.
    pub fn original_index(&self) -> &[usize] {
        &self.original_index
    }

    pub fn items_in_input_order(&self) -> Vec<Item> {
        let mut raw = vec![Item::new(0, 0); self.items.len()];
        for (sorted, &input) in self.original_index.iter().enumerate() {
            raw[input] = self.items[sorted];
        }
        raw
    }

    /// Maps a selection over sorted items to input order.
    pub fn to_input_order(&self, x: &[bool]) -> Vec<bool> {
        let mut out = vec![false; x.len()];
        for (sorted, &input) in self.original_index.iter().enumerate() {
            out[input] = x[sorted];
        }
        out
    }

    pub fn from_input_order(&self, x: &[bool]) -> Vec<bool> {
        self.original_index.iter().map(|&input| x[input]).collect()
    }

    /// `(profit, weight)` of a selection over sorted items.
    pub fn evaluate(&self, x: &[bool]) -> (i64, i64) {
        self.items
            .iter()
            .zip(x)
            .filter(|(_, &take)| take)
            .fold((0, 0), |(p, w), (it, _)| (p + it.profit, w + it.weight))
    }

    /// Reads `"n c"` followed by `n` lines `"p w"` in input order.
    pub fn parse(text: &str) -> Result<Self, KnapsackError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (no, header) = lines
            .next()
            .ok_or_else(|| KnapsackError::parse(1, "missing header line"))?;
        let [n, capacity] = parse_pair(header, no + 1)?;
        let n = usize::try_from(n).map_err(|_| KnapsackError::parse(no + 1, "negative item count"))?;
        let mut raw = Vec::with_capacity(n);
        for i in 0..n {
            let (no, line) = lines
                .next()
                .ok_or_else(|| KnapsackError::parse(i + 2, format!("expected {n} items, found {i}")))?;
            let [profit, weight] = parse_pair(line, no + 1)?;
            raw.push(Item::new(profit, weight));
        }
        if let Some((no, _)) = lines.next() {
            return Err(KnapsackError::parse(no + 1, "unexpected trailing data"));
        }
        Self::new(raw, capacity)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.capacity);
        for it in self.items_in_input_order() {
            let _ = writeln!(out, "{} {}", it.profit, it.weight);
        }
        out
    }

    /// Strongly correlated spanner instance with a spanner set of two items.
    ///
    /// Spanner weights are uniform in `1..=10^8` with profit `w + 10^7`; every
    /// other item is `k` times a random spanner item, `k` uniform in `1..=10`.
    /// The capacity is `floor(f * total weight)`.
    pub fn spanner(n: usize, fraction: f64, seed: u64) -> Result<Self, KnapsackError> {
        if n < 3 {
            return Err(KnapsackError::Generator(format!(
                "spanner instances need n >= 3, got {n}"
            )));
        }
        if !(fraction > 0.0 && fraction < 1.0) {
            return Err(KnapsackError::Generator(format!(
                "capacity fraction must be in (0,1), got {fraction}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spanners: Vec<Item> = (0..2)
            .map(|_| {
                let w = rng.gen_range(1..=100_000_000i64);
                Item::new(w + 10_000_000, w)
            })
            .collect();
        let mut raw = spanners.clone();
        for _ in 2..n {
            let base = spanners[rng.gen_range(0..2)];
            let k = rng.gen_range(1..=10i64);
            raw.push(Item::new(k * base.profit, k * base.weight));
        }
        let total: i64 = raw.iter().map(|it| it.weight).sum();
        let capacity = (fraction * total as f64).floor() as i64;
        Self::new(raw, capacity).map_err(|e| KnapsackError::Generator(format!("spanner instance invalid: {e}")))
    }

    /// Nine groups of near-unit-ratio items with exponentially shrinking
    /// sizes, plus a tail of small items with diverse ratios. Capacity 10^10.
    pub fn exp(n: usize, seed: u64) -> Result<Self, KnapsackError> {
        const CAPACITY: i64 = 10_000_000_000;
        const GROUPS: usize = 9;
        if n < 30 {
            return Err(KnapsackError::Generator(format!("exp instances need n >= 30, got {n}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grouped = 2 * n / 3;
        let mut raw = Vec::with_capacity(n);
        for group in 1..=GROUPS {
            let size = grouped / GROUPS + usize::from(group <= grouped % GROUPS);
            let base = exp_group_base(group);
            for _ in 0..size {
                let r1 = rng.gen_range(1..=300);
                let r2 = rng.gen_range(1..=300);
                raw.push(Item::new(base + r1, base + r2));
            }
        }
        for _ in grouped..n {
            raw.push(Item::new(rng.gen_range(1..=300), rng.gen_range(1..=300)));
        }
        Self::new(raw, CAPACITY).map_err(|e| KnapsackError::Generator(format!("exp instance invalid: {e}")))
    }
}

/// `(2^-i + 10^-4) * 10^10`, exact in integers for `i <= 10`.
pub fn exp_group_base(group: usize) -> i64 {
    const CAPACITY: i64 = 10_000_000_000;
    CAPACITY / (1i64 << group) + CAPACITY / 10_000
}

fn parse_pair(line: &str, no: usize) -> Result<[i64; 2], KnapsackError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(KnapsackError::parse(
            no,
            format!("expected two integers, found {}", fields.len()),
        ));
    }
    let mut out = [0i64; 2];
    for (slot, token) in out.iter_mut().zip(&fields) {
        *slot = token
            .parse()
            .map_err(|_| KnapsackError::parse(no, format!("not an integer: {token:?}")))?;
    }
    Ok(out)
}
