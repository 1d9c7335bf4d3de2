//! Randomized cross-module invariants.

use std::sync::OnceLock;

use proptest::prelude::*;

use mosaic::moduli::{build_complex, cell_class, class_members, Mode, ModuliComplex};
use mosaic::polygon::{all_diagonals, diagonals_cross, Dissection, Label};

fn complex(n: usize, mode: Mode) -> &'static ModuliComplex {
    static CELLS: OnceLock<Vec<ModuliComplex>> = OnceLock::new();
    let all = CELLS.get_or_init(|| {
        (4..=6)
            .flat_map(|n| [Mode::Projective, Mode::DoubleCover].map(|m| build_complex(n, m).unwrap()))
            .collect()
    });
    &all[(n - 4) * 2 + (mode == Mode::DoubleCover) as usize]
}

/// A random dissection with labels `1..=n`.
fn dissection(max_n: usize) -> impl Strategy<Value = Dissection> {
    (4..=max_n).prop_flat_map(|n| {
        let labels = Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle();
        let order = Just(all_diagonals(n)).prop_shuffle();
        (labels, order, 0..=n - 3).prop_map(move |(labels, order, k)| {
            let mut chosen = Vec::new();
            for d in order {
                if chosen.len() == k {
                    break;
                }
                if chosen.iter().all(|&c| !diagonals_cross(c, d, n)) {
                    chosen.push(d);
                }
            }
            Dissection::new(labels, chosen.iter().map(|d| d.endpoints())).unwrap()
        })
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Projective), Just(Mode::DoubleCover)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn twists_stay_in_the_cell(g in dissection(8), m in mode()) {
        let cell = cell_class(&g, m).unwrap();
        for &d in g.diagonals() {
            let moved = match m {
                Mode::Projective => g.twist(d).unwrap(),
                Mode::DoubleCover => g.marked_twist(d, g.n() as Label).unwrap(),
            };
            prop_assert_eq!(&cell_class(&moved, m).unwrap(), &cell);
        }
        prop_assert_eq!(&cell_class(&g.dihedral_image(1, false), m).unwrap(), &cell);
    }

    #[test]
    fn class_sizes(g in dissection(8), m in mode()) {
        let members = class_members(&g, m).unwrap();
        prop_assert_eq!(members.len(), 1 << g.codim());
        // splits are constant on a class
        let mut s = g.splits(g.n() as Label);
        s.sort();
        for x in &members {
            let mut t = x.splits(x.n() as Label);
            t.sort();
            prop_assert_eq!(&t, &s);
        }
    }

    #[test]
    fn projective_class_is_union_of_double_cover_classes(g in dissection(7)) {
        let p = class_members(&g, Mode::Projective).unwrap();
        let d = class_members(&g, Mode::DoubleCover).unwrap();
        for x in &d {
            prop_assert!(p.contains(&x.dihedral_canonical()));
        }
    }

    #[test]
    fn every_face_is_located(g in dissection(6), m in mode()) {
        let c = complex(g.n(), m);
        let id = c.locate(&g).unwrap();
        prop_assert_eq!(c.cell(id).codim, g.codim());
        // faces of the cell are exactly the classes of one more diagonal
        let rep = &c.cell(id).representative;
        let mut faces: Vec<usize> = rep
            .addable_diagonals()
            .into_iter()
            .map(|d| c.locate(&rep.with_diagonal(d).unwrap()).unwrap())
            .collect();
        faces.sort();
        let mut listed: Vec<usize> = c.boundary(id).iter().flat_map(|&(b, k)| std::iter::repeat_n(b, k as usize)).collect();
        listed.sort();
        prop_assert_eq!(faces, listed);
    }
}
