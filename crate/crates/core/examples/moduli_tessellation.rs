//! Build the tessellated moduli complex and print its cell counts.
//!
//! cargo run --release --example moduli_tessellation -- 7

use std::time::Instant;

use mosaic::moduli::{build_complex, euler_closed_form, f_vector_formula, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    for mode in [Mode::Projective, Mode::DoubleCover] {
        let start = Instant::now();
        let c = build_complex(n, mode)?;
        let elapsed = start.elapsed();
        println!("{mode} n={n}: built {} cells in {elapsed:.2?}", c.len());
        println!("  f-vector (by codim) {:?}", c.f_vector());
        println!("  formula             {:?}", f_vector_formula(n, mode)?);
        println!("  euler characteristic {}", c.euler_characteristic());
        let tiles = c.tile_adjacency()?;
        println!("  tile graph: {} tiles, {} walls, connected: {}", tiles.tiles.len(), tiles.edges.len(), tiles.is_connected());
    }
    if n >= 4 {
        println!("closed form for the projective complex: {}", euler_closed_form(n)?);
    }
    Ok(())
}
