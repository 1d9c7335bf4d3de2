//! Faces of the associahedron and how each splits into smaller ones.

use std::collections::BTreeMap;

use mosaic::associahedron::{face_factorization, face_lattice, facet_si_graph, g_hat_strata};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 4..=8 {
        let l = face_lattice(n)?;
        let mut facets: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for f in l.grade(1) {
            *facets.entry(face_factorization(f)).or_default() += 1;
        }
        let si = facet_si_graph(n)?;
        println!(
            "K{}: faces by codim {:?}, {} covering pairs, facet types {facets:?}, {} adjacent facet pairs",
            n - 1,
            l.f_vector(),
            l.covers().len(),
            si.edges.len()
        );
        println!("    strata by free-part size {:?}", g_hat_strata(n)?);
    }
    Ok(())
}
