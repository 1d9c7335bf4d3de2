//! Glue polygons along sides and check the operad axioms exhaustively.

use mosaic::operad::{check_operad_axioms, compose_full, compose_single, seam, CompositionPlan};
use mosaic::polygon::Dissection;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Dissection::new(vec![1, 2, 3, 4, 5], [(0, 2)])?;
    let h = Dissection::new(vec![6, 7, 8, 9], [])?;
    let gh = compose_single(&g, 3, &h, 9)?;
    println!("{g} with side 3 glued to side 9 of {h}:");
    println!("  {gh}, seam {:?}", seam(&gh, &g, 3).map(|d| d.to_string()));

    let base = Dissection::new(vec![1, 2, 3], [])?;
    let plan = CompositionPlan {
        base,
        attachments: vec![
            (1, Dissection::new(vec![10, 11, 12], [])?, 12),
            (2, Dissection::new(vec![20, 21, 22, 23], [(0, 2)])?, 20),
            (3, Dissection::new(vec![30, 31, 32], [])?, 31),
        ],
    };
    let full = compose_full(&plan)?;
    println!("full composition onto a triangle: {full} ({} sides, {} diagonals)", full.n(), full.codim());

    let report = check_operad_axioms(6)?;
    for c in &report.checks {
        println!("  {:<28} {:>6} instances, {} failures", c.name, c.instances, c.failures.len());
    }
    Ok(())
}
