//! The five-point moduli space is a surface tiled by twelve pentagons.

use mosaic::moduli::{build_complex, classify_surface, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = build_complex(5, Mode::Projective)?;
    println!("f-vector by codimension {:?}", c.f_vector());
    for t in c.tiles() {
        let edges: Vec<usize> = c.boundary(t).iter().map(|&(e, _)| e).collect();
        println!("  tile {t:>2} {}  edges {edges:?}", c.cell(t).representative);
    }
    let r = classify_surface(&c)?;
    println!(
        "V={} E={} F={} chi={} orientable={} -> {}",
        r.vertices, r.edges, r.faces, r.euler_characteristic, r.orientable, r.kind
    );
    Ok(())
}
