//! Flats of the braid arrangement and the irreducible ones that get blown up.

use mosaic::arrangement::{blowup_order, chamber_counts, flats, hyperplanes, irreducible_cells};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5;
    println!("hyperplanes {:?}", hyperplanes(n)?);
    println!("{} flats, chambers {:?}", flats(n)?.len(), chamber_counts(n)?);
    for k in 1..=n - 3 {
        let cells: Vec<String> = irreducible_cells(n, k)?.iter().map(|f| format!("{:?}", f.merged_blocks())).collect();
        println!("codim {k}: {}", cells.join(" "));
    }
    for m in 4..=8 {
        let order: Vec<String> = blowup_order(m)?.iter().map(|(dim, cells)| format!("dim {dim}: {}", cells.len())).collect();
        println!("n={m} blow-up order {}", order.join(", "));
    }
    Ok(())
}
