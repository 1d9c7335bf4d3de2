//! Divisors of the moduli complex and their product decomposition.
//!
//! cargo run --example divisors -- 6

use mosaic::moduli::{build_complex, divisor_subcomplex, Mode};
use mosaic::polygon::Label;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let c = build_complex(n, Mode::Projective)?;
    for mask in 1u32..(1 << (n - 1)) {
        let s: Vec<Label> = (1..n as Label).filter(|l| mask & (1 << (l - 1)) != 0).collect();
        if s.len() < 2 || s.len() > n - 2 {
            continue;
        }
        let d = divisor_subcomplex(&c, &s)?;
        let r = d.verify_product(&c)?;
        println!(
            "S={s:?}: cells {:?} = M{} {:?} x M{} {:?}  {}",
            d.f_vector(&c),
            r.factor_sides.0,
            r.factor_f_vectors.0,
            r.factor_sides.1,
            r.factor_f_vectors.1,
            if r.passed() { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
