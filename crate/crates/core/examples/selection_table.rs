//! The selection rule on a fixed parent: three visited children, two unvisited.
//!
//!     cargo run --example selection_table

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mcts_combopt::engine::{rank_scores, select_child, uct_value, ChildStats};
use mcts_combopt::Sense;

fn main() {
    let parent_visits = 7;
    let visits = [3u64, 3, 1];
    let averages = [751.3, 759.3, 753.0];

    let scores = rank_scores(&averages, Sense::Minimize);
    println!("child  visits  average  score  uct");
    for i in 0..3 {
        let uct = uct_value(parent_visits, visits[i], scores[i]);
        println!(
            "{i:>5}  {:>6}  {:>7.1}  {:.3}  {uct:.3}",
            visits[i], averages[i], scores[i]
        );
    }

    let mut children: Vec<ChildStats> = (0..3).map(|i| ChildStats::visited(visits[i], averages[i])).collect();
    children.extend([ChildStats::unvisited(), ChildStats::unvisited()]);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let draws = 100_000;
    let mut counts = [0u32; 5];
    for _ in 0..draws {
        counts[select_child(parent_visits, &children, Sense::Minimize, &mut rng).unwrap()] += 1;
    }
    println!("selection frequencies over {draws} draws:");
    for (i, c) in counts.iter().enumerate() {
        println!("  child {i}: {:.1}%", 100.0 * *c as f64 / draws as f64);
    }
}
