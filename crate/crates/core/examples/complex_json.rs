//! Export a complex as JSON, read it back, and compare.

use mosaic::moduli::{build_complex, Mode, ModuliComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = build_complex(4, Mode::Projective)?;
    let text = c.to_json();
    println!("{text}");
    let back = ModuliComplex::from_json(&text)?;
    println!("round trip identical: {}", back.to_json() == text);
    Ok(())
}
