use std::collections::{BTreeMap, BTreeSet};

use super::{build_complex, CellId, Mode, ModuliComplex};
use crate::error::{Error, Result};
use crate::polygon::{Diagonal, Dissection, Label};

/// The closed subcomplex of cells whose dissections split off a fixed label
/// set `S` (normalized so that it avoids the label `n`).
#[derive(Clone, Debug)]
pub struct Divisor {
    n: usize,
    subset: Vec<Label>,
    cells: Vec<CellId>,
}

fn normalize_subset(n: usize, subset: &[Label]) -> Result<Vec<Label>> {
    let mut set = BTreeSet::new();
    for &l in subset {
        if l == 0 || l as usize > n {
            return Err(Error::BadSubsetLabel(l));
        }
        if !set.insert(l) {
            return Err(Error::DuplicateLabel(l));
        }
    }
    if !(2..=n - 2).contains(&set.len()) {
        return Err(Error::BadSubsetSize {
            size: set.len(),
            n,
            max: n - 2,
        });
    }
    if set.contains(&(n as Label)) {
        Ok((1..=n as Label).filter(|l| !set.contains(l)).collect())
    } else {
        Ok(set.into_iter().collect())
    }
}

/// Cells of `c` lying on the divisor of the split `subset | complement`.
pub fn divisor_subcomplex(c: &ModuliComplex, subset: &[Label]) -> Result<Divisor> {
    let subset = normalize_subset(c.n(), subset)?;
    let cells = (0..c.len())
        .filter(|&id| c.cell_splits(id).contains(&subset))
        .collect();
    Ok(Divisor {
        n: c.n(),
        subset,
        cells,
    })
}

impl Divisor {
    /// The split set, as the side avoiding label `n`.
    pub fn subset(&self) -> &[Label] {
        &self.subset
    }

    pub fn cells(&self) -> &[CellId] {
        &self.cells
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.cells.binary_search(&id).is_ok()
    }

    /// Cells by their own dimension, top first. Index `j` holds cells of
    /// codimension `j + 1` in the ambient complex.
    pub fn f_vector(&self, c: &ModuliComplex) -> Vec<usize> {
        let mut out = vec![0; c.dimension()];
        for &id in &self.cells {
            out[c.cell(id).codim - 1] += 1;
        }
        out
    }

    pub fn euler_characteristic(&self, c: &ModuliComplex) -> i64 {
        let top = c.dimension() as i64 - 1;
        self.f_vector(c)
            .iter()
            .enumerate()
            .map(|(j, &f)| if (top - j as i64) % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Side counts of the two factors `M̄^{|S|+1} × M̄^{n-|S|+1}`.
    pub fn factor_sizes(&self) -> (usize, usize) {
        (self.subset.len() + 1, self.n - self.subset.len() + 1)
    }

    /// Match the divisor cell by cell with the product of the two
    /// complexes obtained by cutting along the split diagonal.
    pub fn verify_product(&self, c: &ModuliComplex) -> Result<ProductReport> {
        let (n1, n2) = self.factor_sizes();
        if c.mode() != Mode::Projective {
            return Err(Error::Unsupported("product check runs on the projective complex"));
        }
        let left = build_complex(n1, c.mode())?;
        let right = build_complex(n2, c.mode())?;
        self.verify_product_with(c, &left, &right)
    }

    /// As [`Divisor::verify_product`], with the factor complexes supplied.
    pub fn verify_product_with(
        &self,
        c: &ModuliComplex,
        left: &ModuliComplex,
        right: &ModuliComplex,
    ) -> Result<ProductReport> {
        let (n1, n2) = self.factor_sizes();
        if left.n() != n1 || right.n() != n2 || left.mode() != c.mode() || right.mode() != c.mode() {
            return Err(Error::MismatchedPolygons);
        }
        let mut map = BTreeMap::new();
        for &id in &self.cells {
            let (g1, g2) = self.factors(&c.cell(id).representative)?;
            let a = left.locate(&g1).ok_or(Error::UnknownCell)?;
            let b = right.locate(&g2).ok_or(Error::UnknownCell)?;
            map.insert(id, (a, b));
        }

        let image: BTreeSet<(CellId, CellId)> = map.values().copied().collect();
        let bijective = image.len() == self.cells.len() && image.len() == left.len() * right.len();
        let graded = map
            .iter()
            .all(|(&id, &(a, b))| c.cell(id).codim == 1 + left.cell(a).codim + right.cell(b).codim);

        let product_face = |(a, b): (CellId, CellId), (a2, b2): (CellId, CellId)| -> u32 {
            let mult = |cx: &ModuliComplex, x: CellId, y: CellId| {
                cx.boundary(x).iter().find(|&&(f, _)| f == y).map_or(0, |&(_, m)| m)
            };
            if a == a2 {
                mult(right, b, b2)
            } else if b == b2 {
                mult(left, a, a2)
            } else {
                0
            }
        };
        let mut divisor_incidences = 0u64;
        let mut incidences_match = true;
        for &id in &self.cells {
            for &(face, m) in c.boundary(id) {
                divisor_incidences += m as u64;
                if product_face(map[&id], map[&face]) != m {
                    incidences_match = false;
                }
            }
        }
        let count = |cx: &ModuliComplex| cx.incidences().map(|(_, _, m)| m as u64).sum::<u64>();
        let product_incidences = count(left) * right.len() as u64 + count(right) * left.len() as u64;
        incidences_match &= divisor_incidences == product_incidences;

        Ok(ProductReport {
            factor_sides: (n1, n2),
            factor_f_vectors: (left.f_vector(), right.f_vector()),
            cells: self.cells.len(),
            incidences: divisor_incidences,
            bijective,
            graded,
            incidences_match,
        })
    }

    /// Cut `g` along its split diagonal. Each piece takes the labels
    /// `1..` in the order of its old labels, with the new side last.
    fn factors(&self, g: &Dissection) -> Result<(Dissection, Dissection)> {
        let n = g.n() as Label;
        let d: Diagonal = g
            .diagonals()
            .iter()
            .copied()
            .zip(g.splits(n))
            .find(|(_, s)| *s == self.subset)
            .map(|(d, _)| d)
            .ok_or(Error::UnknownCell)?;
        let cap = n + 1;
        let (inner, outer) = g.split_along(d, cap, cap)?;
        let (g1, g2) = if inner.labels().contains(&n) {
            (outer, inner)
        } else {
            (inner, outer)
        };
        Ok((standardize(&g1), standardize(&g2)))
    }
}

fn standardize(g: &Dissection) -> Dissection {
    let mut sorted = g.labels().to_vec();
    sorted.sort_unstable();
    g.map_labels(|l| sorted.binary_search(&l).unwrap() as Label + 1)
}

/// Outcome of [`Divisor::verify_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub factor_sides: (usize, usize),
    pub factor_f_vectors: (Vec<usize>, Vec<usize>),
    pub cells: usize,
    pub incidences: u64,
    pub bijective: bool,
    pub graded: bool,
    pub incidences_match: bool,
}

impl ProductReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.graded && self.incidences_match
    }
}
