//! Cell complexes of the real moduli space and of its double cover.
//!
//! A cell is a class of labeled dissections of an `n`-gon with labels
//! `1..=n`. In [`Mode::Projective`] the class is closed under all twists and
//! the dihedral group; in [`Mode::DoubleCover`] under marked twists (the side
//! labeled `n` plays the role of ∞) and rotations only. The codimension of a
//! cell is its number of diagonals, and a cell's boundary consists of the
//! classes obtained by adding one diagonal to its representative.

mod divisor;
mod export;
mod surface;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Range;

use crate::combinatorics::{double_factorial, factorial};
use crate::error::{Error, Result};
use crate::polygon::{cayley_count, Diagonal, Dissection, Label};

pub use divisor::{divisor_subcomplex, Divisor, ProductReport};
pub use export::{CellRecord, ComplexExport, RepresentativeRecord};
pub use surface::{classify_surface, SurfaceKind, SurfaceReport};

/// Free function forms of the polygon moves; see [`Dissection::twist`] and
/// [`Dissection::marked_twist`].
pub fn twist(g: &Dissection, d: Diagonal) -> Result<Dissection> {
    g.twist(d)
}

pub fn marked_twist(g: &Dissection, d: Diagonal) -> Result<Dissection> {
    g.marked_twist(d, g.n() as Label)
}

/// Largest `n` for which whole complexes are enumerated.
pub const MAX_COMPLEX_N: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Projective,
    DoubleCover,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Projective => "projective",
            Mode::DoubleCover => "double-cover",
        }
    }

    fn normalize(self, d: &Dissection) -> Dissection {
        match self {
            Mode::Projective => d.dihedral_canonical(),
            Mode::DoubleCover => d.rotation_canonical(),
        }
    }

    fn step(self, d: &Dissection, diag: Diagonal) -> Dissection {
        let moved = match self {
            Mode::Projective => d.twist(diag),
            Mode::DoubleCover => d.marked_twist(diag, d.n() as Label),
        };
        moved.expect("diagonal taken from the dissection itself")
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "projective" => Ok(Mode::Projective),
            "double-cover" | "double_cover" => Ok(Mode::DoubleCover),
            other => Err(format!("unknown mode `{other}` (expected projective or double-cover)")),
        }
    }
}

pub type CellId = usize;

/// One cell, named by the least dissection in its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub representative: Dissection,
    pub codim: usize,
    pub mode: Mode,
}

fn check_standard_labels(g: &Dissection) -> Result<()> {
    let mut sorted = g.labels().to_vec();
    sorted.sort_unstable();
    for (i, &l) in sorted.iter().enumerate() {
        if l != i as Label + 1 {
            return Err(Error::UnknownLabel(l));
        }
    }
    Ok(())
}

/// The normalized members of `g`'s class, by breadth-first closure over
/// moves along every diagonal.
pub fn class_members(g: &Dissection, mode: Mode) -> Result<Vec<Dissection>> {
    check_standard_labels(g)?;
    let start = mode.normalize(g);
    let mut seen: HashSet<Dissection> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut members = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for &d in cur.diagonals() {
            let next = mode.normalize(&mode.step(&cur, d));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        members.push(cur);
    }
    members.sort();
    Ok(members)
}

/// The cell containing `g`.
pub fn cell_class(g: &Dissection, mode: Mode) -> Result<Cell> {
    let members = class_members(g, mode)?;
    Ok(Cell {
        representative: members[0].clone(),
        codim: g.codim(),
        mode,
    })
}

/// Compact hash key of a normalized dissection with `n <= 8`: four bits per
/// label, one bit per vertex pair.
fn pack(d: &Dissection) -> u128 {
    let n = d.n();
    let mut key: u128 = 0;
    for &l in d.labels() {
        key = (key << 4) | l as u128;
    }
    let mut mask: u64 = 0;
    for diag in d.diagonals() {
        mask |= 1 << (diag.lo() * n + diag.hi());
    }
    (key << 64) | mask as u128
}

/// Graded cell complex of the moduli space (or its double cover).
#[derive(Clone, Debug)]
pub struct ModuliComplex {
    n: usize,
    mode: Mode,
    cells: Vec<Cell>,
    codim_start: Vec<usize>,
    boundary: Vec<Vec<(CellId, u32)>>,
    coboundary: Vec<Vec<(CellId, u32)>>,
}

struct Classifier {
    mode: Mode,
    memo: HashMap<u128, usize>,
    reps: Vec<Dissection>,
}

impl Classifier {
    fn classify(&mut self, g: &Dissection) -> Result<usize> {
        let start = self.mode.normalize(g);
        let key = pack(&start);
        if let Some(&id) = self.memo.get(&key) {
            return Ok(id);
        }
        let id = self.reps.len();
        let mut queue = VecDeque::new();
        self.memo.insert(key, id);
        let mut rep = start.clone();
        let mut size = 1usize;
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for &d in cur.diagonals() {
                let next = self.mode.normalize(&self.mode.step(&cur, d));
                let k = pack(&next);
                if let std::collections::hash_map::Entry::Vacant(slot) = self.memo.entry(k) {
                    slot.insert(id);
                    size += 1;
                    if next < rep {
                        rep = next.clone();
                    }
                    queue.push_back(next);
                }
            }
        }
        let expected = 1usize << g.codim();
        if size != expected {
            return Err(Error::InvariantViolation(format!(
                "class of {g} has {size} members, expected 2^{} = {expected}",
                g.codim()
            )));
        }
        self.reps.push(rep);
        Ok(id)
    }
}

/// Enumerate every cell of the complex for `3 <= n <= 8`.
pub fn build_complex(n: usize, mode: Mode) -> Result<ModuliComplex> {
    if !(3..=MAX_COMPLEX_N).contains(&n) {
        return Err(Error::range("n", n, format!("3..={MAX_COMPLEX_N}")));
    }
    let mut classifier = Classifier {
        mode,
        memo: HashMap::new(),
        reps: Vec::new(),
    };

    let labels: Vec<Label> = (1..=n as Label).collect();
    let mut level: BTreeSet<usize> = BTreeSet::new();
    for perm in crate::operad::permutations(&labels) {
        level.insert(classifier.classify(&Dissection::from_parts(perm, vec![]))?);
    }

    let mut incidences: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for _ in 0..n - 3 {
        let mut next = BTreeSet::new();
        for &id in &level {
            let rep = classifier.reps[id].clone();
            for d in rep.addable_diagonals() {
                let child = classifier.classify(&rep.with_diagonal(d)?)?;
                *incidences.entry((id, child)).or_default() += 1;
                next.insert(child);
            }
        }
        level = next;
    }

    // number cells by (codim, representative)
    let reps = classifier.reps;
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| (reps[a].codim(), &reps[a]).cmp(&(reps[b].codim(), &reps[b])));
    let mut new_id = vec![0; reps.len()];
    for (i, &old) in order.iter().enumerate() {
        new_id[old] = i;
    }
    let cells: Vec<Cell> = order
        .iter()
        .map(|&old| Cell {
            codim: reps[old].codim(),
            representative: reps[old].clone(),
            mode,
        })
        .collect();
    let incidences = incidences
        .into_iter()
        .map(|((a, b), m)| ((new_id[a], new_id[b]), m));
    Ok(ModuliComplex::assemble(n, mode, cells, incidences))
}

impl ModuliComplex {
    fn assemble(
        n: usize,
        mode: Mode,
        cells: Vec<Cell>,
        incidences: impl IntoIterator<Item = ((CellId, CellId), u32)>,
    ) -> Self {
        let mut codim_start = vec![0; n - 1];
        for (k, start) in codim_start.iter_mut().enumerate() {
            *start = cells.partition_point(|c| c.codim < k);
        }
        let mut boundary = vec![Vec::new(); cells.len()];
        let mut coboundary = vec![Vec::new(); cells.len()];
        for ((a, b), m) in incidences {
            boundary[a].push((b, m));
            coboundary[b].push((a, m));
        }
        for list in boundary.iter_mut().chain(coboundary.iter_mut()) {
            list.sort_unstable();
        }
        ModuliComplex {
            n,
            mode,
            cells,
            codim_start,
            boundary,
            coboundary,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Dimension of the top cells, `n - 3`.
    pub fn dimension(&self) -> usize {
        self.n - 3
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Ids of the cells of codimension `k`.
    pub fn ids_of_codim(&self, k: usize) -> Range<CellId> {
        if k > self.dimension() {
            return self.cells.len()..self.cells.len();
        }
        let end = self.codim_start.get(k + 1).copied().unwrap_or(self.cells.len());
        self.codim_start[k]..end
    }

    /// The codimension-zero cells.
    pub fn tiles(&self) -> Range<CellId> {
        self.ids_of_codim(0)
    }

    /// Faces one codimension down, with incidence multiplicity.
    pub fn boundary(&self, id: CellId) -> &[(CellId, u32)] {
        &self.boundary[id]
    }

    /// Cells having `id` as a face one codimension up, with multiplicity.
    pub fn coboundary(&self, id: CellId) -> &[(CellId, u32)] {
        &self.coboundary[id]
    }

    /// All `(cell, face, multiplicity)` triples.
    pub fn incidences(&self) -> impl Iterator<Item = (CellId, CellId, u32)> + '_ {
        self.boundary
            .iter()
            .enumerate()
            .flat_map(|(a, faces)| faces.iter().map(move |&(b, m)| (a, b, m)))
    }

    /// Cell counts by codimension.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dimension()).map(|k| self.ids_of_codim(k).len()).collect()
    }

    /// `Σ (-1)^dim · count` over all cells.
    pub fn euler_characteristic(&self) -> i64 {
        let dim = self.dimension();
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if (dim - k).is_multiple_of(2) { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Id of the cell containing `g`, if `g` is a dissection of this `n`.
    pub fn locate(&self, g: &Dissection) -> Option<CellId> {
        if g.n() != self.n {
            return None;
        }
        let cell = cell_class(g, self.mode).ok()?;
        let range = self.ids_of_codim(cell.codim);
        let slice = &self.cells[range.clone()];
        slice
            .binary_search_by(|c| c.representative.cmp(&cell.representative))
            .ok()
            .map(|i| range.start + i)
    }

    /// For each `t` in `0..=k`, the number of codimension `k - t` cells whose
    /// closure contains `id`.
    pub fn coboundary_counts(&self, id: CellId) -> Result<BTreeMap<usize, usize>> {
        if id >= self.cells.len() {
            return Err(Error::UnknownCell);
        }
        let k = self.cells[id].codim;
        let mut out = BTreeMap::new();
        let mut layer: BTreeSet<CellId> = BTreeSet::from([id]);
        for t in 0..=k {
            out.insert(t, layer.len());
            layer = layer
                .iter()
                .flat_map(|&c| self.coboundary[c].iter().map(|&(up, _)| up))
                .collect();
        }
        Ok(out)
    }

    /// Dual graph of the tessellation: tiles, joined across each
    /// codimension-one cell. Every codimension-one cell must lie on exactly
    /// two tile sides (counted with multiplicity).
    pub fn tile_adjacency(&self) -> Result<TileGraph> {
        let mut edges = Vec::new();
        if self.dimension() > 0 {
            for facet in self.ids_of_codim(1) {
                let sides: Vec<CellId> = self.coboundary[facet]
                    .iter()
                    .flat_map(|&(t, m)| std::iter::repeat_n(t, m as usize))
                    .collect();
                if sides.len() != 2 {
                    return Err(Error::InvariantViolation(format!(
                        "codim-1 cell {facet} lies on {} tile sides",
                        sides.len()
                    )));
                }
                edges.push(TileEdge {
                    a: sides[0],
                    b: sides[1],
                    facet,
                });
            }
        }
        Ok(TileGraph {
            tiles: self.tiles().collect(),
            edges,
        })
    }

    /// Labels of each diagonal's split, as the part avoiding label `n`.
    pub fn cell_splits(&self, id: CellId) -> Vec<Vec<Label>> {
        self.cells[id].representative.splits(self.n as Label)
    }
}

/// Free function form of [`ModuliComplex::f_vector`].
pub fn f_vector(c: &ModuliComplex) -> Vec<usize> {
    c.f_vector()
}

pub fn euler_characteristic(c: &ModuliComplex) -> i64 {
    c.euler_characteristic()
}

pub fn coboundary_counts(c: &ModuliComplex, cell: CellId) -> Result<BTreeMap<usize, usize>> {
    c.coboundary_counts(cell)
}

pub fn tile_adjacency(c: &ModuliComplex) -> Result<TileGraph> {
    c.tile_adjacency()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TileEdge {
    pub a: CellId,
    pub b: CellId,
    /// The shared codimension-one cell.
    pub facet: CellId,
}

#[derive(Clone, Debug)]
pub struct TileGraph {
    pub tiles: Vec<CellId>,
    pub edges: Vec<TileEdge>,
}

impl TileGraph {
    pub fn degree(&self, tile: CellId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.a == tile) as usize + (e.b == tile) as usize)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let Some(&first) = self.tiles.first() else {
            return true;
        };
        let mut adj: HashMap<CellId, Vec<CellId>> = HashMap::new();
        for e in &self.edges {
            adj.entry(e.a).or_default().push(e.b);
            adj.entry(e.b).or_default().push(e.a);
        }
        let mut seen = HashSet::from([first]);
        let mut stack = vec![first];
        while let Some(t) = stack.pop() {
            for &u in adj.get(&t).into_iter().flatten() {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.tiles.len()
    }
}

fn overflow(n: usize) -> Error {
    Error::range("n", n, "values whose counts fit in 128 bits")
}

/// Cell counts by codimension from the counting identity
/// `f_k · 2^k = f_0 · cayley(n, k)`, with `f_0 = (n-1)!/2` (projective) or
/// `(n-1)!` (double cover).
pub fn f_vector_formula(n: usize, mode: Mode) -> Result<Vec<u128>> {
    if n < 3 {
        return Err(Error::range("n", n, "3.."));
    }
    let mut tiles = factorial(n as u64 - 1).ok_or_else(|| overflow(n))?;
    if mode == Mode::Projective {
        tiles /= 2;
    }
    (0..=n - 3)
        .map(|k| {
            let num = tiles.checked_mul(cayley_count(n, k)?).ok_or_else(|| overflow(n))?;
            if num % (1u128 << k) != 0 {
                return Err(Error::InvariantViolation(format!("f_{k} is not an integer for n = {n}")));
            }
            Ok(num >> k)
        })
        .collect()
}

/// `0` for even `n`, `(-1)^((n-3)/2) (n-2) ((n-4)!!)^2` for odd `n`.
pub fn euler_closed_form(n: usize) -> Result<i128> {
    if !(4..=60).contains(&n) {
        return Err(Error::range("n", n, "4..=60"));
    }
    if n.is_multiple_of(2) {
        return Ok(0);
    }
    let df = double_factorial(n as i64 - 4).ok_or_else(|| overflow(n))? as i128;
    let mag = (n as i128 - 2).checked_mul(df.checked_mul(df).ok_or_else(|| overflow(n))?);
    let mag = mag.ok_or_else(|| overflow(n))?;
    Ok(if ((n - 3) / 2).is_multiple_of(2) { mag } else { -mag })
}

/// The unsimplified alternating sum
/// `Σ_k (-1)^(n-3-k) (n-1)!/2^(k+1) · cayley(n, k)`, in exact arithmetic.
pub fn euler_proof_sum(n: usize) -> Result<i128> {
    if !(4..=20).contains(&n) {
        return Err(Error::range("n", n, "4..=20"));
    }
    // every term over the common denominator 2^(n-2)
    let fact = factorial(n as u64 - 1).ok_or_else(|| overflow(n))? as i128;
    let mut numerator: i128 = 0;
    for k in 0..=n - 3 {
        let term = fact
            .checked_mul(cayley_count(n, k)? as i128)
            .and_then(|t| t.checked_mul(1i128 << (n - 3 - k)))
            .ok_or_else(|| overflow(n))?;
        numerator += if (n - 3 - k).is_multiple_of(2) { term } else { -term };
    }
    let denom = 1i128 << (n - 2);
    if numerator % denom != 0 {
        return Err(Error::InvariantViolation(format!("alternating sum is not an integer for n = {n}")));
    }
    Ok(numerator / denom)
}

/// Outcome of comparing the double cover with the projective complex.
#[derive(Clone, Debug)]
pub struct CoveringReport {
    /// `image[id]` = projective cell under the double-cover cell `id`.
    pub image: Vec<CellId>,
    pub two_to_one: bool,
    pub commutes_with_boundary: bool,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.two_to_one && self.commutes_with_boundary
    }
}

/// Send each double-cover cell to the projective cell of its representative
/// and check the map is 2-to-1 on cells and commutes with boundaries.
pub fn covering_map(double: &ModuliComplex, projective: &ModuliComplex) -> Result<CoveringReport> {
    if double.mode != Mode::DoubleCover || projective.mode != Mode::Projective || double.n != projective.n {
        return Err(Error::MismatchedPolygons);
    }
    let image: Vec<CellId> = double
        .cells
        .iter()
        .map(|c| projective.locate(&c.representative).ok_or(Error::UnknownCell))
        .collect::<Result<_>>()?;
    let mut fibre = vec![0usize; projective.len()];
    for &p in &image {
        fibre[p] += 1;
    }
    let two_to_one = fibre.iter().all(|&f| f == 2);
    let commutes_with_boundary = (0..double.len()).all(|a| {
        let pushed: BTreeSet<CellId> = double.boundary(a).iter().map(|&(b, _)| image[b]).collect();
        let below: BTreeSet<CellId> = projective.boundary(image[a]).iter().map(|&(b, _)| b).collect();
        pushed == below
    });
    Ok(CoveringReport {
        image,
        two_to_one,
        commutes_with_boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(labels: &[Label], diags: &[(usize, usize)]) -> Dissection {
        Dissection::new(labels.to_vec(), diags.iter().copied()).unwrap()
    }

    #[test]
    fn projective_classes_identify_twists() {
        let a = poly(&[1, 2, 3, 4], &[(0, 2)]);
        let b = poly(&[2, 1, 3, 4], &[(0, 2)]);
        assert_eq!(cell_class(&a, Mode::Projective).unwrap(), cell_class(&b, Mode::Projective).unwrap());
        let t = a.twist(Diagonal::new(0, 2)).unwrap();
        assert_eq!(cell_class(&t, Mode::Projective).unwrap(), cell_class(&a, Mode::Projective).unwrap());
    }

    #[test]
    fn double_cover_classes() {
        let a = poly(&[1, 2, 3, 4], &[(0, 2)]);
        let b = poly(&[2, 1, 3, 4], &[(0, 2)]);
        let c = poly(&[1, 3, 2, 4], &[(0, 2)]);
        let dc = |g: &Dissection| cell_class(g, Mode::DoubleCover).unwrap();
        assert_eq!(dc(&a), dc(&b));
        assert_ne!(dc(&a), dc(&c));
    }

    #[test]
    fn class_sizes_are_powers_of_two() {
        for mode in [Mode::Projective, Mode::DoubleCover] {
            let g = poly(&[3, 1, 4, 6, 5, 2], &[(0, 2), (2, 5), (3, 5)]);
            assert_eq!(class_members(&g, mode).unwrap().len(), 8);
        }
        assert!(class_members(&poly(&[1, 2, 7], &[]), Mode::Projective).is_err());
    }

    #[test]
    fn small_complexes() {
        let c = build_complex(4, Mode::Projective).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3]);
        let d = build_complex(4, Mode::DoubleCover).unwrap();
        assert_eq!(d.f_vector(), vec![6, 6]);
        let c5 = build_complex(5, Mode::Projective).unwrap();
        assert_eq!(c5.f_vector(), vec![12, 30, 15]);
        assert_eq!(c5.euler_characteristic(), -3);
        let p = build_complex(3, Mode::Projective).unwrap();
        assert_eq!(p.f_vector(), vec![1]);
        assert!(build_complex(9, Mode::Projective).is_err());
        assert!(build_complex(2, Mode::Projective).is_err());
    }

    #[test]
    fn f_vector_identity() {
        assert_eq!(f_vector_formula(5, Mode::Projective).unwrap(), vec![12, 30, 15]);
        assert_eq!(f_vector_formula(6, Mode::Projective).unwrap(), vec![60, 270, 315, 105]);
        assert_eq!(f_vector_formula(4, Mode::Projective).unwrap(), vec![3, 3]);
        let c6 = build_complex(6, Mode::Projective).unwrap();
        assert_eq!(c6.f_vector(), vec![60, 270, 315, 105]);
        assert_eq!(c6.euler_characteristic(), 0);
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_closed_form(5).unwrap(), -3);
        assert_eq!(euler_closed_form(6).unwrap(), 0);
        assert_eq!(euler_closed_form(7).unwrap(), 45);
        assert_eq!(euler_closed_form(9).unwrap(), -1575);
        for n in 4..=20 {
            assert_eq!(euler_proof_sum(n).unwrap(), euler_closed_form(n).unwrap(), "n={n}");
        }
        assert!(euler_closed_form(3).is_err());
    }

    #[test]
    fn coboundary_examples() {
        let c = build_complex(5, Mode::Projective).unwrap();
        for v in c.ids_of_codim(2) {
            let counts = c.coboundary_counts(v).unwrap();
            assert_eq!(counts, BTreeMap::from([(0, 1), (1, 4), (2, 4)]));
        }
        for e in c.ids_of_codim(1) {
            assert_eq!(c.coboundary_counts(e).unwrap(), BTreeMap::from([(0, 1), (1, 2)]));
        }
        assert_eq!(c.coboundary_counts(10_000), Err(Error::UnknownCell));
    }

    #[test]
    fn tile_graphs() {
        let c = build_complex(5, Mode::Projective).unwrap();
        let g = c.tile_adjacency().unwrap();
        assert_eq!((g.tiles.len(), g.edges.len()), (12, 30));
        assert!(g.tiles.iter().all(|&t| g.degree(t) == 5));
        assert!(g.is_connected());

        let g4 = build_complex(4, Mode::Projective).unwrap().tile_adjacency().unwrap();
        assert_eq!((g4.tiles.len(), g4.edges.len()), (3, 3));
        let d4 = build_complex(4, Mode::DoubleCover).unwrap().tile_adjacency().unwrap();
        assert_eq!((d4.tiles.len(), d4.edges.len()), (6, 6));
        assert!(d4.tiles.iter().all(|&t| d4.degree(t) == 2));
        assert!(d4.is_connected());
    }

    #[test]
    fn locate_finds_every_labeled_face() {
        let c = build_complex(5, Mode::Projective).unwrap();
        let g = poly(&[4, 2, 5, 1, 3], &[(0, 2), (2, 4)]);
        let id = c.locate(&g).unwrap();
        assert_eq!(c.cell(id).codim, 2);
        assert_eq!(c.locate(&poly(&[1, 2, 3, 4], &[])), None);
    }

    #[test]
    fn covering_is_two_to_one() {
        for n in 4..=5 {
            let p = build_complex(n, Mode::Projective).unwrap();
            let d = build_complex(n, Mode::DoubleCover).unwrap();
            let r = covering_map(&d, &p).unwrap();
            assert!(r.passed(), "n={n}");
        }
    }

    #[test]
    fn incidences_are_graded() {
        let c = build_complex(6, Mode::DoubleCover).unwrap();
        for (a, b, _) in c.incidences() {
            assert_eq!(c.cell(a).codim + 1, c.cell(b).codim);
        }
        for k in 1..=c.dimension() {
            assert!(c.ids_of_codim(k).all(|b| !c.coboundary(b).is_empty()));
        }
    }
}
