//! The associahedron `K_{n-1}` as the poset of dissections of one fixed
//! reference `n`-gon, whose sides read `1, 2, ..., n-1, ∞` with `∞ = n`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::polygon::{all_diagonals, enumerate_diagonal_sets, superimpose, Diagonal, Dissection, Label, Superposition, MAX_SIDES};

pub const MAX_LATTICE_N: usize = 10;

/// Labels of the reference polygon; the last side is ∞.
pub fn reference_labels(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

/// A face of the associahedron: a dissection of the reference polygon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    dissection: Dissection,
}

impl Face {
    pub fn new(n: usize, diagonals: &[Diagonal]) -> Result<Self> {
        let d = Dissection::new(reference_labels(n), diagonals.iter().map(|d| d.endpoints()))?;
        Ok(Face { dissection: d })
    }

    pub fn dissection(&self) -> &Dissection {
        &self.dissection
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        self.dissection.diagonals()
    }

    pub fn codim(&self) -> usize {
        self.dissection.codim()
    }

    pub fn dimension(&self) -> usize {
        self.dissection.n() - 3 - self.codim()
    }

    /// `self ≤ other` when `self` refines `other`.
    pub fn le(&self, other: &Face) -> bool {
        other.diagonals().iter().all(|&d| self.dissection.has_diagonal(d))
    }
}

/// Position of a face within a [`FaceLattice`]: `(codim, index)`.
pub type FaceRef = (usize, usize);

#[derive(Clone, Debug)]
pub struct FaceLattice {
    n: usize,
    grades: Vec<Vec<Face>>,
    covers: Vec<(FaceRef, FaceRef)>,
}

/// Every face of `K_{n-1}` for `4 <= n <= 10`, graded by codimension, with
/// the covering relation.
pub fn face_lattice(n: usize) -> Result<FaceLattice> {
    if !(4..=MAX_LATTICE_N).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_LATTICE_N}")));
    }
    let mut grades = Vec::with_capacity(n - 2);
    for k in 0..=n - 3 {
        let faces = enumerate_diagonal_sets(n, k)?
            .into_iter()
            .map(|ds| Face::new(n, &ds))
            .collect::<Result<Vec<_>>>()?;
        grades.push(faces);
    }
    let mut covers = Vec::new();
    for k in 1..=n - 3 {
        let index: HashMap<&[Diagonal], usize> = grades[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.diagonals(), i))
            .collect();
        for (i, f) in grades[k].iter().enumerate() {
            for j in 0..f.codim() {
                let mut rest = f.diagonals().to_vec();
                rest.remove(j);
                covers.push(((k, i), (k - 1, index[rest.as_slice()])));
            }
        }
    }
    Ok(FaceLattice { n, grades, covers })
}

impl FaceLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self, codim: usize) -> &[Face] {
        self.grades.get(codim).map_or(&[], Vec::as_slice)
    }

    pub fn face(&self, r: FaceRef) -> &Face {
        &self.grades[r.0][r.1]
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.grades.iter().flatten()
    }

    /// Face counts by codimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    /// Pairs `(lower, upper)` where `upper` has exactly one diagonal fewer.
    pub fn covers(&self) -> &[(FaceRef, FaceRef)] {
        &self.covers
    }

    /// The whole polytope: the face with no diagonals.
    pub fn maximum(&self) -> &Face {
        &self.grades[0][0]
    }

    /// The vertices: triangulations of the reference polygon.
    pub fn minima(&self) -> &[Face] {
        &self.grades[self.n - 3]
    }
}

/// Side counts of the subpolygons of a face, so that the face is
/// `K_{n_1 - 1} × ... × K_{n_k - 1}`. Sorted ascending.
pub fn face_factorization(f: &Face) -> Vec<usize> {
    f.dissection.region_sizes()
}

/// Whether `factors` satisfies both the side-count identity
/// `Σ n_i = m + 2(k-1)` and the dimension identity
/// `Σ (n_i - 3) = (m - 3) - (k - 1)` for a face of an `m`-gon.
pub fn factorization_identities_hold(m: usize, factors: &[usize]) -> bool {
    let k = factors.len() as i64;
    let m = m as i64;
    let sum: i64 = factors.iter().map(|&x| x as i64).sum();
    let dims: i64 = factors.iter().map(|&x| x as i64 - 3).sum();
    k >= 1 && sum == m + 2 * (k - 1) && dims == (m - 3) - (k - 1)
}

#[derive(Clone, Debug)]
pub struct SiEdge {
    pub a: usize,
    pub b: usize,
    /// The codimension-two face where the two facets meet.
    pub meet: Face,
}

/// Facets of the associahedron, joined when their diagonals superimpose.
#[derive(Clone, Debug)]
pub struct SiGraph {
    pub facets: Vec<Diagonal>,
    pub edges: Vec<SiEdge>,
}

impl SiGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }
}

pub fn facet_si_graph(n: usize) -> Result<SiGraph> {
    if !(4..=MAX_LATTICE_N).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_LATTICE_N}")));
    }
    let facets = all_diagonals(n);
    let single = facets
        .iter()
        .map(|&d| Face::new(n, &[d]))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            if let Superposition::Compatible(g) = superimpose(&single[a].dissection, &single[b].dissection)? {
                edges.push(SiEdge {
                    a,
                    b,
                    meet: Face { dissection: g },
                });
            }
        }
    }
    Ok(SiGraph { facets, edges })
}

/// Number of sides on the side of `d` away from ∞ in the reference polygon.
pub fn free_part_size(d: Diagonal) -> usize {
    // ∞ sits at the last position, which no arc lo..hi reaches
    d.span()
}

/// Single-diagonal faces grouped by the size of their free part.
pub fn g_hat_stratum(n: usize, i: usize) -> Result<Vec<Diagonal>> {
    if !(4..=MAX_SIDES).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_SIDES}")));
    }
    Ok(all_diagonals(n).into_iter().filter(|&d| free_part_size(d) == i).collect())
}

/// Sizes of the strata `Ĝ^i`, for `1 < i < n - 1`.
pub fn g_hat_strata(n: usize) -> Result<BTreeMap<usize, usize>> {
    if !(4..=MAX_SIDES).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_SIDES}")));
    }
    let mut out: BTreeMap<usize, usize> = (2..n - 1).map(|i| (i, 0)).collect();
    for d in all_diagonals(n) {
        *out.get_mut(&free_part_size(d)).expect("span lies in 2..n-1") += 1;
    }
    Ok(out)
}
