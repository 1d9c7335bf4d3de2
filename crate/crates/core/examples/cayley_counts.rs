//! Count dissections of polygons by number of diagonals.
//!
//! cargo run --example cayley_counts -- 9

use mosaic::polygon::{cayley_count, enumerate_diagonal_sets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);
    println!("{:>3} {:>3} {:>10} {:>10}", "n", "k", "formula", "listed");
    for n in 3..=max {
        for k in 0..=n - 3 {
            let listed = enumerate_diagonal_sets(n, k)?.len();
            println!("{n:>3} {k:>3} {:>10} {listed:>10}", cayley_count(n, k)?);
        }
    }
    Ok(())
}
