//! The double cover, where twists always fix the side labeled n.

use mosaic::moduli::{build_complex, classify_surface, covering_map, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=6 {
        let d = build_complex(n, Mode::DoubleCover)?;
        let p = build_complex(n, Mode::Projective)?;
        let cover = covering_map(&d, &p)?;
        println!(
            "n={n}: double cover f={:?} chi={}, projective f={:?}; two-to-one {} commutes with boundary {}",
            d.f_vector(),
            d.euler_characteristic(),
            p.f_vector(),
            cover.two_to_one,
            cover.commutes_with_boundary
        );
    }
    let circle = build_complex(4, Mode::DoubleCover)?;
    print!("{}", circle.to_dot()?);
    let r = classify_surface(&build_complex(5, Mode::DoubleCover)?)?;
    println!("n=5 double cover: chi={} -> {}", r.euler_characteristic, r.kind);
    Ok(())
}
