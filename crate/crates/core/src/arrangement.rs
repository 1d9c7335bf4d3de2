//! The braid arrangement `x_i = x_j` on `n - 1` coordinates, with its
//! intersection lattice modeled as set partitions.

use std::collections::BTreeMap;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::polygon::Label;

pub const MAX_FLATS_N: usize = 10;

/// All pairs `i < j` in `1..n-1`.
pub fn hyperplanes(n: usize) -> Result<Vec<(Label, Label)>> {
    if n < 4 {
        return Err(Error::range("n", n, "4.."));
    }
    let m = n as Label - 1;
    Ok((1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect())
}

/// An intersection of hyperplanes: the coordinates in each block agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    /// Blocks sorted internally and by least element.
    blocks: Vec<Vec<Label>>,
}

impl Flat {
    pub fn from_blocks(mut blocks: Vec<Vec<Label>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<Label> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let covering = all.iter().enumerate().all(|(i, &x)| x == i as Label + 1);
        if blocks.iter().any(Vec::is_empty) || !covering {
            return Err(Error::NonBijective);
        }
        Ok(Flat { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    /// Number of coordinates.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn codim(&self) -> usize {
        self.ground_size() - self.blocks.len()
    }

    pub fn contains_hyperplane(&self, i: Label, j: Label) -> bool {
        self.blocks.iter().any(|b| b.contains(&i) && b.contains(&j))
    }

    /// Number of hyperplanes through the flat.
    pub fn hyperplane_count(&self) -> usize {
        self.blocks.iter().map(|b| b.len() * (b.len() - 1) / 2).sum()
    }

    /// Blocks with more than one element.
    pub fn merged_blocks(&self) -> Vec<&[Label]> {
        self.blocks.iter().filter(|b| b.len() > 1).map(Vec::as_slice).collect()
    }
}

/// Every flat of the arrangement, as set partitions of `1..n-1` generated
/// from restricted growth strings.
pub fn flats(n: usize) -> Result<Vec<Flat>> {
    if !(3..=MAX_FLATS_N).contains(&n) {
        return Err(Error::range("n", n, format!("3..={MAX_FLATS_N}")));
    }
    let m = n - 1;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    loop {
        let parts = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); parts];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i as Label + 1);
        }
        out.push(Flat { blocks });

        // next restricted growth string: a[i] <= 1 + max(a[..i])
        let mut i = m - 1;
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            let prefix_max = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Codimension-`k` flats through exactly `C(k+1, 2)` hyperplanes.
pub fn irreducible_cells(n: usize, k: usize) -> Result<Vec<Flat>> {
    if n < 4 || !(1..=n - 3).contains(&k) {
        return Err(Error::range("k", k, format!("1..={}", n.saturating_sub(3))));
    }
    let need = (k + 1) * k / 2;
    Ok(flats(n)?
        .into_iter()
        .filter(|f| f.codim() == k && f.hyperplane_count() == need)
        .collect())
}

/// Irreducible cells in the order they are blown up: increasing dimension
/// in the projectivized `(n-3)`-dimensional space, so points first.
pub fn blowup_order(n: usize) -> Result<Vec<(usize, Vec<Flat>)>> {
    if n < 4 {
        return Err(Error::range("n", n, "4.."));
    }
    (1..=n - 3)
        .rev()
        .map(|k| Ok((n - 3 - k, irreducible_cells(n, k)?)))
        .collect()
}

/// `(cones, projective chambers)`: linear orders of the `n - 1`
/// coordinates, and those orders up to reversal.
pub fn chamber_counts(n: usize) -> Result<(u64, u64)> {
    if !(4..=MAX_FLATS_N + 1).contains(&n) {
        return Err(Error::range("n", n, format!("4..={}", MAX_FLATS_N + 1)));
    }
    let mut order: Vec<Label> = (1..n as Label).collect();
    let (mut cones, mut classes) = (0u64, 0u64);
    loop {
        cones += 1;
        // one representative per reversal class
        if order.first() < order.last() {
            classes += 1;
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok((cones, classes))
}

fn next_permutation(v: &mut [Label]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Irreducible flat with block `B` ↦ the divisor label set `B`.
pub fn divisor_correspondence(n: usize) -> Result<BTreeMap<Flat, Vec<Label>>> {
    let mut out = BTreeMap::new();
    for k in 1..=n.saturating_sub(3) {
        for f in irreducible_cells(n, k)? {
            let block = f.merged_blocks()[0].to_vec();
            out.insert(f, block);
        }
    }
    if out.is_empty() {
        return Err(Error::range("n", n, format!("4..={MAX_FLATS_N}")));
    }
    Ok(out)
}

/// Expected count `C(n-1, k+1)` of irreducible codimension-`k` cells.
pub fn irreducible_count_formula(n: usize, k: usize) -> u128 {
    binomial(n as u64 - 1, k as u64 + 1).expect("small binomial")
}
