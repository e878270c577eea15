//! Log tail ratios of the normal-family tails against the Student tail with
//! n−1 degrees of freedom: 1−Φ(z), 1−Φ(z√(n/(n−1))) and 1−Φₙ(z), each over
//! 1−F_{n−1}(z). On [1.5, ∞) the Φₙ tail tracks the Student tail closest.
//!
//! Emits CSV; pipe it into any plotting tool.
//!
//! Run: `cargo run --release --example tail_ratio_table > tails.csv`

use senbe::verify::{tail_ratio_csv, tail_ratio_data};

fn main() {
    let n = 10;
    let grid: Vec<f64> = (1..=60).map(|i| i as f64 * 0.05).collect();
    let rows = tail_ratio_data(n, &grid).expect("valid grid");
    print!("{}", tail_ratio_csv(&rows));
}
