//! The quasibraid presentation and its map onto the symmetric group.
//!
//! cargo run --example quasibraid -- 6

use mosaic::quasibraid::{check_phi, export_presentation, generators, pair_of_pants, phi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    for g in generators(n)? {
        println!("{g:<16} -> {}", phi(&g));
    }
    print!("{}", export_presentation(n)?);
    let r = check_phi(n)?;
    println!(
        "{} relations, {} failing; image has order {} of {}",
        r.relations_checked,
        r.failed_relations.len(),
        r.image_order,
        r.symmetric_order
    );
    let p = pair_of_pants(3, 3)?;
    println!("pair of pants J3 x J3 -> J6: {} relations carried, {} cross pairs, ok {}", p.relations_checked, p.cross_pairs, p.passed());
    Ok(())
}
