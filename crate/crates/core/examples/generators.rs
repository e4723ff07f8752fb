//! The three instance families and their file format.
//!
//!     cargo run --example generators

use mcts_combopt::knapsack::{exp_group_base, KnapsackInstance};
use mcts_combopt::qcsp::QcspInstance;

fn main() {
    let ship = QcspInstance::generate(16, 4, 1).unwrap();
    println!("qcsp, 16 bays, 4 cranes:\n{}", ship.serialize());

    let spanner = KnapsackInstance::spanner(12, 0.5, 7).unwrap();
    println!("spanner, n=12, f=0.5:\n{}", spanner.serialize());

    let exp = KnapsackInstance::exp(100, 3).unwrap();
    let items = exp.items_in_input_order();
    println!("exp, n=100, capacity {}", exp.capacity());
    let grouped = 2 * items.len() / 3;
    let mut start = 0;
    for group in 1..=9 {
        let size = grouped / 9 + usize::from(group <= grouped % 9);
        let weights: Vec<i64> = items[start..start + size].iter().map(|it| it.weight).collect();
        println!(
            "  group {group}: {size} items, base {}, weights {}..={}",
            exp_group_base(group),
            weights.iter().min().unwrap(),
            weights.iter().max().unwrap()
        );
        start += size;
    }
    println!("  plus {} small items", items.len() - grouped);
}
