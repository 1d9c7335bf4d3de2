//! Labeled polygons with non-crossing diagonals.
//!
//! A [`Dissection`] is an `n`-gon whose sides carry distinct labels and whose
//! interior is cut by pairwise non-crossing diagonals. Vertices are indexed
//! `0..n` around the boundary and side `p` spans vertices `p` and `p + 1`
//! (mod `n`), so `labels[p]` is the label of that side.
//!
//! The total order on dissections is the lexicographic order on
//! `(label sequence, sorted diagonal list)`; canonical forms under the
//! dihedral group are minima in that order.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Side labels are opaque, totally ordered tokens.
pub type Label = u32;

/// Largest polygon the crate will represent.
pub const MAX_SIDES: usize = 255;

/// A diagonal joining two vertices, stored with `lo < hi`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    lo: u8,
    hi: u8,
}

impl Diagonal {
    /// An unordered vertex pair. No validation against a polygon size; see
    /// [`Diagonal::checked`].
    pub fn new(a: usize, b: usize) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Diagonal {
            lo: lo as u8,
            hi: hi as u8,
        }
    }

    /// A diagonal that is valid for an `n`-gon: distinct, in range and not
    /// joining cyclically adjacent vertices.
    pub fn checked(a: usize, b: usize, n: usize) -> Result<Self> {
        if a >= n || b >= n || a == b || n > MAX_SIDES {
            return Err(Error::InvalidDiagonal(a, b, n));
        }
        let d = Diagonal::new(a, b);
        if !d.fits(n) {
            return Err(Error::AdjacentDiagonal(d.lo(), d.hi(), n));
        }
        Ok(d)
    }

    pub fn lo(self) -> usize {
        self.lo as usize
    }

    pub fn hi(self) -> usize {
        self.hi as usize
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo(), self.hi())
    }

    /// Number of polygon sides between `lo` and `hi` going forward.
    pub fn span(self) -> usize {
        self.hi() - self.lo()
    }

    fn fits(self, n: usize) -> bool {
        self.hi() < n && self.span() >= 2 && self.span() <= n - 2
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// True iff the endpoints of `d1` and `d2` strictly interleave around the
/// cycle. Both diagonals are assumed valid for the `n`-gon; sharing an
/// endpoint is not a crossing.
pub fn diagonals_cross(d1: Diagonal, d2: Diagonal, n: usize) -> bool {
    debug_assert!(d1.hi() < n && d2.hi() < n);
    let (a, b) = d1.endpoints();
    let (c, d) = d2.endpoints();
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// All diagonals of an `n`-gon in lexicographic order of endpoints.
pub fn all_diagonals(n: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for lo in 0..n {
        for hi in lo + 2..n {
            let d = Diagonal::new(lo, hi);
            if d.fits(n) {
                out.push(d);
            }
        }
    }
    out
}

/// An `n`-gon with labeled sides and pairwise non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dissection {
    labels: Vec<Label>,
    diagonals: Vec<Diagonal>,
}

impl Dissection {
    /// Validating constructor.
    pub fn new<I>(labels: Vec<Label>, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        if !(3..=MAX_SIDES).contains(&n) {
            return Err(Error::range("polygon side count", n, format!("3..={MAX_SIDES}")));
        }
        let mut seen = BTreeSet::new();
        for &l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            set.insert(Diagonal::checked(a, b, n)?);
        }
        let diagonals: Vec<Diagonal> = set.into_iter().collect();
        if diagonals.len() > n - 3 {
            return Err(Error::TooManyDiagonals {
                count: diagonals.len(),
                max: n - 3,
                n,
            });
        }
        for (i, &d1) in diagonals.iter().enumerate() {
            for &d2 in &diagonals[i + 1..] {
                if diagonals_cross(d1, d2, n) {
                    return Err(Error::CrossingDiagonals(d1.lo(), d1.hi(), d2.lo(), d2.hi()));
                }
            }
        }
        Ok(Dissection { labels, diagonals })
    }

    /// The `n`-gon with labels `1..=n` and no diagonals.
    pub fn polygon(n: usize) -> Result<Self> {
        Self::new((1..=n as Label).collect(), [])
    }

    /// Trusted constructor; `diagonals` must be valid and will be sorted.
    pub(crate) fn from_parts(labels: Vec<Label>, mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort_unstable();
        let d = Dissection { labels, diagonals };
        debug_assert!(d.validate().is_ok(), "invalid dissection {d}");
        d
    }

    fn validate(&self) -> Result<()> {
        Dissection::new(self.labels.clone(), self.diagonals.iter().map(|d| d.endpoints())).map(|_| ())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Sorted diagonal list.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Number of diagonals, i.e. the codimension of the face it names.
    pub fn codim(&self) -> usize {
        self.diagonals.len()
    }

    pub fn has_diagonal(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    pub fn position_of(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Whether `d` is a valid diagonal absent from `self` and crossing none
    /// of its diagonals.
    pub fn can_add(&self, d: Diagonal) -> bool {
        d.fits(self.n())
            && !self.has_diagonal(d)
            && self.diagonals.iter().all(|&e| !diagonals_cross(d, e, self.n()))
    }

    /// Diagonals that can be added to `self`, in lexicographic order.
    pub fn addable_diagonals(&self) -> Vec<Diagonal> {
        all_diagonals(self.n())
            .into_iter()
            .filter(|&d| self.can_add(d))
            .collect()
    }

    pub fn with_diagonal(&self, d: Diagonal) -> Result<Self> {
        let n = self.n();
        let d = Diagonal::checked(d.lo(), d.hi(), n)?;
        if let Some(&e) = self.diagonals.iter().find(|&&e| e != d && diagonals_cross(d, e, n)) {
            return Err(Error::CrossingDiagonals(d.lo(), d.hi(), e.lo(), e.hi()));
        }
        let mut out = self.clone();
        if let Err(at) = out.diagonals.binary_search(&d) {
            out.diagonals.insert(at, d);
        }
        Ok(out)
    }

    pub fn without_diagonal(&self, d: Diagonal) -> Result<Self> {
        let at = self
            .diagonals
            .binary_search(&d)
            .map_err(|_| Error::NoSuchDiagonal(d.lo(), d.hi()))?;
        let mut out = self.clone();
        out.diagonals.remove(at);
        Ok(out)
    }

    /// Image under a dihedral symmetry. Without reflection the new side `q`
    /// is the old side `shift + q`; with reflection it is the old side
    /// `shift - q` (indices mod `n`).
    pub fn dihedral_image(&self, shift: usize, reflect: bool) -> Self {
        let n = self.n();
        let shift = shift % n;
        let labels = (0..n)
            .map(|q| {
                let old = if reflect { (shift + n - q) % n } else { (shift + q) % n };
                self.labels[old]
            })
            .collect();
        let map_vertex = |v: usize| {
            if reflect {
                (shift + 1 + n - v) % n
            } else {
                (v + n - shift) % n
            }
        };
        let diagonals = self
            .diagonals
            .iter()
            .map(|d| Diagonal::new(map_vertex(d.lo()), map_vertex(d.hi())))
            .collect();
        Dissection::from_parts(labels, diagonals)
    }

    /// Least encoding among the `2n` dihedral images.
    ///
    /// Labels are distinct, so the least label sequence already pins the
    /// symmetry: the smallest label goes first, followed by its smaller
    /// neighbour.
    pub fn dihedral_canonical(&self) -> Self {
        let n = self.n();
        let p = self.min_label_position();
        let next = self.labels[(p + 1) % n];
        let prev = self.labels[(p + n - 1) % n];
        self.dihedral_image(p, prev < next)
    }

    /// Least encoding among the `n` rotations.
    pub fn rotation_canonical(&self) -> Self {
        self.dihedral_image(self.min_label_position(), false)
    }

    fn min_label_position(&self) -> usize {
        let (p, _) = self
            .labels
            .iter()
            .enumerate()
            .min_by_key(|&(_, l)| *l)
            .expect("polygon has sides");
        p
    }

    /// Reflect the cyclic arc of `len` sides starting at side `start`. Every
    /// diagonal with both endpoints on the arc's vertices moves with it.
    fn reflect_arc(&self, start: usize, len: usize) -> Self {
        let n = self.n();
        let mut labels = self.labels.clone();
        for i in 0..len {
            labels[(start + i) % n] = self.labels[(start + len - 1 - i) % n];
        }
        // offset of a vertex along the arc, if it lies on it
        let offset = |v: usize| {
            let o = (v + n - start) % n;
            (o <= len).then_some(o)
        };
        let diagonals = self
            .diagonals
            .iter()
            .map(|&d| match (offset(d.lo()), offset(d.hi())) {
                (Some(a), Some(b)) => Diagonal::new((start + len - a) % n, (start + len - b) % n),
                _ => d,
            })
            .collect();
        Dissection::from_parts(labels, diagonals)
    }

    /// Break along `d`, reflect the piece made of sides `lo..hi`, reglue.
    /// Reflecting the other piece instead gives a dihedrally equivalent
    /// result.
    pub fn twist(&self, d: Diagonal) -> Result<Self> {
        if !self.has_diagonal(d) {
            return Err(Error::NoSuchDiagonal(d.lo(), d.hi()));
        }
        Ok(self.reflect_arc(d.lo(), d.span()))
    }

    /// Break along `d` and reflect the piece that does not carry `infinity`.
    pub fn marked_twist(&self, d: Diagonal, infinity: Label) -> Result<Self> {
        if !self.has_diagonal(d) {
            return Err(Error::NoSuchDiagonal(d.lo(), d.hi()));
        }
        let inf = self.position_of(infinity).ok_or(Error::NoInfinitySide(infinity))?;
        if (d.lo()..d.hi()).contains(&inf) {
            Ok(self.reflect_arc(d.hi(), self.n() - d.span()))
        } else {
            Ok(self.reflect_arc(d.lo(), d.span()))
        }
    }

    /// Labels on the sides `lo..hi` of `d`.
    pub fn inner_labels(&self, d: Diagonal) -> Vec<Label> {
        self.labels[d.lo()..d.hi()].to_vec()
    }

    /// Label bipartitions induced by the diagonals, each reported as the part
    /// not containing `anchor` (sorted).
    pub fn splits(&self, anchor: Label) -> Vec<Vec<Label>> {
        self.diagonals
            .iter()
            .map(|&d| {
                let inner = self.inner_labels(d);
                let mut part: Vec<Label> = if inner.contains(&anchor) {
                    self.labels.iter().copied().filter(|l| !inner.contains(l)).collect()
                } else {
                    inner
                };
                part.sort_unstable();
                part
            })
            .collect()
    }

    /// Cut along `d` into the piece with sides `lo..hi` and the rest. The
    /// diagonal becomes the last side of each piece, labeled `inner_label`
    /// and `outer_label` respectively.
    pub fn split_along(&self, d: Diagonal, inner_label: Label, outer_label: Label) -> Result<(Self, Self)> {
        if !self.has_diagonal(d) {
            return Err(Error::NoSuchDiagonal(d.lo(), d.hi()));
        }
        let n = self.n();
        let piece = |start: usize, len: usize, cap: Label| -> Result<Dissection> {
            let mut labels: Vec<Label> = (0..len).map(|i| self.labels[(start + i) % n]).collect();
            labels.push(cap);
            let offset = |v: usize| {
                let o = (v + n - start) % n;
                (o <= len).then_some(o)
            };
            let diagonals = self.diagonals.iter().filter(|&&e| e != d).filter_map(|e| {
                match (offset(e.lo()), offset(e.hi())) {
                    (Some(a), Some(b)) => Some((a, b)),
                    _ => None,
                }
            });
            Dissection::new(labels, diagonals.collect::<Vec<_>>())
        };
        Ok((piece(d.lo(), d.span(), inner_label)?, piece(d.hi(), n - d.span(), outer_label)?))
    }

    /// Subpolygons of the dissection as vertex cycles in boundary order.
    pub fn regions(&self) -> Vec<Vec<usize>> {
        let mut regions = vec![(0..self.n()).collect::<Vec<_>>()];
        for &d in &self.diagonals {
            let (a, b) = d.endpoints();
            let idx = regions
                .iter()
                .position(|r| r.contains(&a) && r.contains(&b))
                .expect("a diagonal lies in exactly one region");
            let region = regions.swap_remove(idx);
            let ia = region.iter().position(|&v| v == a).unwrap();
            let ib = region.iter().position(|&v| v == b).unwrap();
            let m = region.len();
            let walk = |from: usize, to: usize| {
                let mut out = vec![region[from]];
                let mut i = from;
                while i != to {
                    i = (i + 1) % m;
                    out.push(region[i]);
                }
                out
            };
            regions.push(walk(ia, ib));
            regions.push(walk(ib, ia));
        }
        for r in &mut regions {
            let p = r.iter().enumerate().min_by_key(|&(_, v)| *v).map(|(i, _)| i).unwrap();
            r.rotate_left(p);
        }
        regions.sort();
        regions
    }

    /// Side counts of the subpolygons, sorted ascending.
    pub fn region_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.regions().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// The dual tree: one node per subpolygon, one internal edge per
    /// diagonal, one leaf per side.
    pub fn dual_tree(&self) -> DualTree {
        DualTree::of(self)
    }

    /// Relabel through `f`, keeping diagonals. The caller guarantees `f` is
    /// injective on the labels.
    pub(crate) fn map_labels(&self, f: impl Fn(Label) -> Label) -> Self {
        Dissection {
            labels: self.labels.iter().map(|&l| f(l)).collect(),
            diagonals: self.diagonals.clone(),
        }
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")?;
        for d in &self.diagonals {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Free function form of [`Dissection::new`].
pub fn make_dissection<I>(labels: Vec<Label>, diagonals: I) -> Result<Dissection>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Dissection::new(labels, diagonals)
}

/// All `k`-element sets of pairwise non-crossing diagonals of an `n`-gon,
/// each sorted, listed in lexicographic order.
pub fn enumerate_diagonal_sets(n: usize, k: usize) -> Result<Vec<Vec<Diagonal>>> {
    if !(3..=MAX_SIDES).contains(&n) {
        return Err(Error::range("n", n, format!("3..={MAX_SIDES}")));
    }
    if k > n - 3 {
        return Err(Error::range("k", k, format!("0..={}", n - 3)));
    }
    let diagonals = all_diagonals(n);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    extend_sets(&diagonals, n, k, 0, &mut chosen, &mut out);
    Ok(out)
}

fn extend_sets(
    pool: &[Diagonal],
    n: usize,
    k: usize,
    from: usize,
    chosen: &mut Vec<Diagonal>,
    out: &mut Vec<Vec<Diagonal>>,
) {
    if chosen.len() == k {
        out.push(chosen.clone());
        return;
    }
    let needed = k - chosen.len();
    for i in from..pool.len() {
        if pool.len() - i < needed {
            break;
        }
        let d = pool[i];
        if chosen.iter().all(|&e| !diagonals_cross(d, e, n)) {
            chosen.push(d);
            extend_sets(pool, n, k, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// All dissections of the `n`-gon labeled `1..=n` with exactly `k` diagonals.
pub fn dissections_of(n: usize, k: usize) -> Result<Vec<Dissection>> {
    let labels: Vec<Label> = (1..=n as Label).collect();
    Ok(enumerate_diagonal_sets(n, k)?
        .into_iter()
        .map(|ds| Dissection::from_parts(labels.clone(), ds))
        .collect())
}

/// Number of `n`-gon dissections with `k` diagonals:
/// `1/(k+1) * C(n-3, k) * C(n-1+k, k)`.
pub fn cayley_count(n: usize, k: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::range("n", n, "3.."));
    }
    if k > n - 3 {
        return Err(Error::range("k", k, format!("0..={}", n - 3)));
    }
    let overflow = || Error::range("n", n, "values whose counts fit in 128 bits");
    let a = binomial((n - 3) as u64, k as u64).ok_or_else(overflow)?;
    let b = binomial((n - 1 + k) as u64, k as u64).ok_or_else(overflow)?;
    let prod = a.checked_mul(b).ok_or_else(overflow)?;
    debug_assert_eq!(prod % (k as u128 + 1), 0);
    Ok(prod / (k as u128 + 1))
}

/// Result of superimposing two single-diagonal polygons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Superposition {
    /// The diagonals do not cross; the two-diagonal polygon.
    Compatible(Dissection),
    /// The diagonals cross.
    Crossing,
    /// Both polygons carry the same diagonal.
    Identical,
}

impl Superposition {
    /// The SI condition.
    pub fn is_si(&self) -> bool {
        matches!(self, Superposition::Compatible(_))
    }
}

/// Overlay two single-diagonal polygons on the same labeled frame.
pub fn superimpose(g1: &Dissection, g2: &Dissection) -> Result<Superposition> {
    if g1.labels != g2.labels {
        return Err(Error::MismatchedPolygons);
    }
    for g in [g1, g2] {
        if g.codim() != 1 {
            return Err(Error::ExpectedSingleDiagonal(g.codim()));
        }
    }
    let (a, b) = (g1.diagonals[0], g2.diagonals[0]);
    if a == b {
        Ok(Superposition::Identical)
    } else if diagonals_cross(a, b, g1.n()) {
        Ok(Superposition::Crossing)
    } else {
        Ok(Superposition::Compatible(Dissection::from_parts(g1.labels.clone(), vec![a, b])))
    }
}

/// A neighbour of a dual-tree node: another node or a leaf (side).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TreeEnd {
    Node(usize),
    Leaf(usize),
}

/// Planar dual tree of a dissection.
///
/// Node `i` is the `i`-th region of [`Dissection::regions`]; its neighbours
/// are listed in boundary order. Leaf `p` is side `p` and carries its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    neighbors: Vec<Vec<TreeEnd>>,
    leaf_labels: Vec<Label>,
    leaf_node: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl DualTree {
    fn of(d: &Dissection) -> Self {
        let n = d.n();
        let regions = d.regions();
        let mut leaf_node = vec![usize::MAX; n];
        let mut owners: std::collections::BTreeMap<Diagonal, Vec<usize>> = Default::default();
        for (i, r) in regions.iter().enumerate() {
            let m = r.len();
            for j in 0..m {
                let (u, v) = (r[j], r[(j + 1) % m]);
                if v == (u + 1) % n {
                    leaf_node[u] = i;
                } else {
                    owners.entry(Diagonal::new(u, v)).or_default().push(i);
                }
            }
        }
        let neighbors = regions
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let m = r.len();
                (0..m)
                    .map(|j| {
                        let (u, v) = (r[j], r[(j + 1) % m]);
                        if v == (u + 1) % n {
                            TreeEnd::Leaf(u)
                        } else {
                            let pair = &owners[&Diagonal::new(u, v)];
                            TreeEnd::Node(if pair[0] == i { pair[1] } else { pair[0] })
                        }
                    })
                    .collect()
            })
            .collect();
        let edges = owners.values().map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        DualTree {
            neighbors,
            leaf_labels: d.labels.clone(),
            leaf_node,
            edges,
        }
    }

    pub fn node_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_labels.len()
    }

    /// Internal edges, one per diagonal.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, node: usize) -> usize {
        self.neighbors[node].len()
    }

    pub fn neighbors(&self, node: usize) -> &[TreeEnd] {
        &self.neighbors[node]
    }

    pub fn leaf_label(&self, leaf: usize) -> Label {
        self.leaf_labels[leaf]
    }

    /// Connected, acyclic, every node of degree at least 3.
    pub fn is_valid(&self) -> bool {
        let nodes = self.node_count();
        if self.edges.len() + 1 != nodes || self.neighbors.iter().any(|nb| nb.len() < 3) {
            return false;
        }
        let mut seen = vec![false; nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for e in &self.neighbors[u] {
                if let TreeEnd::Node(v) = *e {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Leaf labels in the cyclic order met by walking around the planar
    /// tree, starting from leaf 0.
    pub fn boundary_labels(&self) -> Vec<Label> {
        let n = self.leaf_count();
        let mut out = Vec::with_capacity(n);
        let mut node = self.leaf_node[0];
        let mut from = TreeEnd::Leaf(0);
        out.push(self.leaf_labels[0]);
        while out.len() < n {
            let nb = &self.neighbors[node];
            let i = nb.iter().position(|&e| e == from).expect("walk arrives along an edge");
            match nb[(i + 1) % nb.len()] {
                TreeEnd::Leaf(p) => {
                    out.push(self.leaf_labels[p]);
                    from = TreeEnd::Leaf(p);
                }
                TreeEnd::Node(next) => {
                    from = TreeEnd::Node(node);
                    node = next;
                }
            }
        }
        out
    }
}

/// Free function form of [`Dissection::dual_tree`].
pub fn dual_tree(d: &Dissection) -> DualTree {
    d.dual_tree()
}

/// Free function form of [`Dissection::dihedral_canonical`].
pub fn dihedral_canonical(d: &Dissection) -> Dissection {
    d.dihedral_canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sq(labels: &[Label], diags: &[(usize, usize)]) -> Dissection {
        Dissection::new(labels.to_vec(), diags.iter().copied()).unwrap()
    }

    /// Segment intersection on the regular n-gon, vertex v at angle 2πv/n.
    fn geometric_cross(d1: Diagonal, d2: Diagonal, n: usize) -> bool {
        let pt = |v: usize| {
            let t = std::f64::consts::TAU * v as f64 / n as f64;
            (t.cos(), t.sin())
        };
        let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
            (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
        };
        let (p1, p2) = (pt(d1.lo()), pt(d1.hi()));
        let (q1, q2) = (pt(d2.lo()), pt(d2.hi()));
        let (a, b) = d1.endpoints();
        if [a, b].contains(&d2.lo()) || [a, b].contains(&d2.hi()) {
            return false;
        }
        let o1 = orient(p1, p2, q1);
        let o2 = orient(p1, p2, q2);
        let o3 = orient(q1, q2, p1);
        let o4 = orient(q1, q2, p2);
        o1 * o2 < 0.0 && o3 * o4 < 0.0
    }

    /// Subsets of all diagonals, filtered by pairwise non-crossing.
    fn brute_force_counts(n: usize) -> Vec<u128> {
        let all = all_diagonals(n);
        let mut counts = vec![0u128; n - 2];
        for mask in 0u32..(1 << all.len()) {
            let chosen: Vec<Diagonal> =
                (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| !geometric_cross(a, b, n)));
            if ok {
                counts[chosen.len()] += 1;
            }
        }
        counts
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(sq(&[1, 2, 3], &[]).n(), 3);
        assert_eq!(sq(&[1, 2, 3, 4], &[(0, 2)]).codim(), 1);
        assert!(matches!(
            Dissection::new(vec![1, 2, 3, 4, 5], [(0, 2), (1, 3)]),
            Err(Error::CrossingDiagonals(..))
        ));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Dissection::new(vec![1, 2, 2], []), Err(Error::DuplicateLabel(2)));
        assert_eq!(
            Dissection::new(vec![1, 2, 3, 4, 5, 6], [(1, 2)]),
            Err(Error::AdjacentDiagonal(1, 2, 6))
        );
        assert_eq!(
            Dissection::new(vec![1, 2, 3, 4, 5, 6], [(0, 5)]),
            Err(Error::AdjacentDiagonal(0, 5, 6))
        );
        assert!(matches!(
            Dissection::new(vec![1, 2, 3, 4], [(0, 9)]),
            Err(Error::InvalidDiagonal(..))
        ));
        assert!(matches!(Dissection::new(vec![1, 2], []), Err(Error::Range { .. })));
    }

    #[test]
    fn too_many_diagonals_is_unreachable_without_crossing() {
        // n - 2 valid diagonals of a square is both of them, which also cross
        let err = Dissection::new(vec![1, 2, 3, 4], [(0, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, Error::TooManyDiagonals { count: 2, max: 1, n: 4 }));
    }

    #[test]
    fn crossing_examples() {
        assert!(!diagonals_cross(Diagonal::new(0, 2), Diagonal::new(2, 4), 5));
        assert!(diagonals_cross(Diagonal::new(0, 2), Diagonal::new(1, 3), 5));
        assert!(Diagonal::checked(1, 2, 6).is_err());
    }

    #[test]
    fn crossing_agrees_with_geometry() {
        for n in 4..=9 {
            let all = all_diagonals(n);
            for &a in &all {
                assert!(!diagonals_cross(a, a, n));
                for &b in &all {
                    assert_eq!(diagonals_cross(a, b, n), geometric_cross(a, b, n), "{a} {b} n={n}");
                    assert_eq!(diagonals_cross(a, b, n), diagonals_cross(b, a, n));
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_diagonal_sets(4, 1).unwrap().len(), 2);
        assert_eq!(enumerate_diagonal_sets(5, 1).unwrap().len(), 5);
        for n in 3..8 {
            assert_eq!(enumerate_diagonal_sets(n, 0).unwrap(), vec![Vec::<Diagonal>::new()]);
        }
        assert!(enumerate_diagonal_sets(5, 3).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let sets = enumerate_diagonal_sets(7, 2).unwrap();
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cayley_examples() {
        // frozen from brute_force_counts
        assert_eq!(cayley_count(5, 2).unwrap(), 5);
        assert_eq!(cayley_count(6, 1).unwrap(), 9);
        assert_eq!(cayley_count(6, 2).unwrap(), 21);
        assert_eq!(cayley_count(6, 3).unwrap(), 14);
        for n in 3..12 {
            assert_eq!(cayley_count(n, 0).unwrap(), 1);
        }
        assert!(cayley_count(6, 4).is_err());
    }

    #[test]
    fn cayley_matches_brute_force_subsets() {
        for n in 3..=8 {
            let brute = brute_force_counts(n);
            for k in 0..=n - 3 {
                assert_eq!(cayley_count(n, k).unwrap(), brute[k], "n={n} k={k}");
                assert_eq!(enumerate_diagonal_sets(n, k).unwrap().len() as u128, brute[k]);
            }
        }
    }

    #[test]
    fn total_dissections_match_direct_enumeration() {
        // the total over k is the little Schroeder number; compare with the
        // brute-force subset count, not with a table
        for n in 3..=8 {
            let total: u128 = (0..=n - 3).map(|k| cayley_count(n, k).unwrap()).sum();
            assert_eq!(total, brute_force_counts(n).iter().sum::<u128>());
        }
    }

    fn brute_canonical(d: &Dissection) -> Dissection {
        (0..d.n())
            .flat_map(|s| [d.dihedral_image(s, false), d.dihedral_image(s, true)])
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(sq(&[2, 3, 1], &[]).dihedral_canonical(), sq(&[1, 2, 3], &[]));
        let a = sq(&[1, 2, 3, 4], &[(1, 3)]);
        let b = sq(&[2, 1, 4, 3], &[(1, 3)]);
        assert_eq!(a.dihedral_canonical(), b.dihedral_canonical());
        assert_eq!(a.dihedral_canonical(), brute_canonical(&b));
    }

    #[test]
    fn images_preserve_validity_and_side_adjacency() {
        let d = sq(&[1, 2, 3, 4, 5, 6], &[(0, 2), (2, 5)]);
        for s in 0..6 {
            for r in [false, true] {
                let img = d.dihedral_image(s, r);
                assert!(img.validate().is_ok());
                // the region structure (multiset of region label sets) is preserved
                let labels_of = |x: &Dissection| {
                    let mut v: Vec<Vec<Label>> = x
                        .regions()
                        .iter()
                        .map(|reg| {
                            let m = reg.len();
                            let mut ls: Vec<Label> = (0..m)
                                .filter(|&j| reg[(j + 1) % m] == (reg[j] + 1) % x.n())
                                .map(|j| x.labels[reg[j]])
                                .collect();
                            ls.sort();
                            ls
                        })
                        .collect();
                    v.sort();
                    v
                };
                assert_eq!(labels_of(&img), labels_of(&d));
            }
        }
    }

    #[test]
    fn dual_tree_examples() {
        let t = sq(&[1, 2, 3, 4, 5], &[]).dual_tree();
        assert_eq!((t.node_count(), t.leaf_count(), t.degree(0)), (1, 5, 5));

        let t = sq(&[1, 2, 3, 4, 5, 6], &[(0, 2), (0, 4)]).dual_tree();
        assert!(t.is_valid());
        let mut degrees: Vec<usize> = (0..t.node_count()).map(|i| t.degree(i)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![3, 3, 4]);
        // path: the degree-4 node touches both others
        let mid = (0..3).find(|&i| t.degree(i) == 4).unwrap();
        let node_nbrs = t.neighbors(mid).iter().filter(|e| matches!(e, TreeEnd::Node(_))).count();
        assert_eq!(node_nbrs, 2);
    }

    #[test]
    fn triangulations_give_binary_trees() {
        for n in 3..=9 {
            for d in dissections_of(n, n - 3).unwrap() {
                let t = d.dual_tree();
                assert!(t.is_valid());
                assert_eq!(t.node_count(), n - 2);
                assert!((0..t.node_count()).all(|i| t.degree(i) == 3));
            }
        }
    }

    #[test]
    fn superimpose_examples() {
        let labels: Vec<Label> = (1..=6).collect();
        let g = |a, b| Dissection::new(labels.clone(), [(a, b)]).unwrap();
        let s = superimpose(&g(0, 2), &g(3, 5)).unwrap();
        assert!(s.is_si());
        assert_eq!(s, Superposition::Compatible(Dissection::new(labels.clone(), [(0, 2), (3, 5)]).unwrap()));
        assert_eq!(superimpose(&g(0, 3), &g(1, 4)).unwrap(), Superposition::Crossing);
        assert_eq!(superimpose(&g(0, 3), &g(0, 3)).unwrap(), Superposition::Identical);
        assert!(!Superposition::Identical.is_si());
        let other = Dissection::new(vec![2, 1, 3, 4, 5, 6], [(0, 2)]).unwrap();
        assert_eq!(superimpose(&g(0, 2), &other), Err(Error::MismatchedPolygons));
    }

    #[test]
    fn twist_examples() {
        let d = Diagonal::new(0, 2);
        assert_eq!(sq(&[1, 2, 3, 4], &[(0, 2)]).twist(d).unwrap(), sq(&[2, 1, 3, 4], &[(0, 2)]));
        let d = Diagonal::new(0, 3);
        assert_eq!(
            sq(&[1, 2, 3, 4, 5, 6], &[(0, 3)]).twist(d).unwrap(),
            sq(&[3, 2, 1, 4, 5, 6], &[(0, 3)])
        );
        assert!(sq(&[1, 2, 3, 4], &[]).twist(d).is_err());
    }

    #[test]
    fn marked_twist_examples() {
        let inf = 5;
        let g = sq(&[1, 2, 3, 4, 5], &[(0, 2)]);
        assert_eq!(g.marked_twist(Diagonal::new(0, 2), inf).unwrap(), sq(&[2, 1, 3, 4, 5], &[(0, 2)]));
        let g = sq(&[1, 2, 3, 4, 5], &[(0, 3)]);
        assert_eq!(g.marked_twist(Diagonal::new(0, 3), inf).unwrap(), sq(&[3, 2, 1, 4, 5], &[(0, 3)]));
        // infinity inside lo..hi, so the outside piece flips
        let g = sq(&[1, 5, 2, 3, 4], &[(0, 2)]);
        assert_eq!(g.marked_twist(Diagonal::new(0, 2), inf).unwrap(), sq(&[1, 5, 4, 3, 2], &[(0, 2)]));
        assert_eq!(g.marked_twist(Diagonal::new(0, 2), 9), Err(Error::NoInfinitySide(9)));
    }

    #[test]
    fn twist_moves_inner_diagonals() {
        let g = sq(&[1, 2, 3, 4, 5, 6, 7], &[(0, 4), (0, 2), (5, 0)]);
        let t = g.twist(Diagonal::new(0, 4)).unwrap();
        assert_eq!(t, sq(&[4, 3, 2, 1, 5, 6, 7], &[(0, 4), (2, 4), (0, 5)]));
    }

    #[test]
    fn split_along_pieces() {
        let g = sq(&[1, 2, 3, 4, 5, 6], &[(0, 3), (0, 2), (3, 5)]);
        let (p, q) = g.split_along(Diagonal::new(0, 3), 10, 20).unwrap();
        assert_eq!(p, sq(&[1, 2, 3, 10], &[(0, 2)]));
        assert_eq!(q, sq(&[4, 5, 6, 20], &[(0, 2)]));
    }

    #[test]
    fn regions_of_a_fan() {
        let g = sq(&[1, 2, 3, 4, 5, 6], &[(0, 2), (0, 4)]);
        assert_eq!(g.regions(), vec![vec![0, 1, 2], vec![0, 2, 3, 4], vec![0, 4, 5]]);
        assert_eq!(g.region_sizes(), vec![3, 3, 4]);
    }

    fn arb_dissection() -> impl Strategy<Value = Dissection> {
        (4usize..=9).prop_flat_map(|n| {
            let perm = Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle();
            let k = 0..=n - 3;
            (perm, k, any::<prop::sample::Index>()).prop_map(move |(labels, k, idx)| {
                let sets = enumerate_diagonal_sets(n, k).unwrap();
                let ds = sets[idx.index(sets.len())].clone();
                Dissection::from_parts(labels, ds)
            })
        })
    }

    proptest! {
        #[test]
        fn canonical_is_orbit_minimum(d in arb_dissection(), s in 0usize..9, r in any::<bool>()) {
            let c = d.dihedral_canonical();
            prop_assert_eq!(&c, &brute_canonical(&d));
            prop_assert_eq!(&c.dihedral_canonical(), &c);
            prop_assert_eq!(&d.dihedral_image(s, r).dihedral_canonical(), &c);
        }

        #[test]
        fn orbit_size_divides_2n(d in arb_dissection()) {
            let orbit: BTreeSet<Dissection> = (0..d.n())
                .flat_map(|s| [d.dihedral_image(s, false), d.dihedral_image(s, true)])
                .collect();
            prop_assert_eq!((2 * d.n()) % orbit.len(), 0);
        }

        #[test]
        fn dual_tree_round_trip(d in arb_dissection()) {
            let t = d.dual_tree();
            prop_assert!(t.is_valid());
            prop_assert_eq!(t.leaf_count(), d.n());
            prop_assert_eq!(t.edges().len(), d.codim());
            let from_tree = Dissection::from_parts(t.boundary_labels(), vec![]);
            let bare = Dissection::from_parts(d.labels().to_vec(), vec![]);
            prop_assert_eq!(from_tree.dihedral_canonical(), bare.dihedral_canonical());
            let mut sizes: Vec<usize> = (0..t.node_count()).map(|i| t.degree(i)).collect();
            sizes.sort();
            prop_assert_eq!(sizes, d.region_sizes());
        }

        #[test]
        fn twist_is_an_involution(d in arb_dissection(), pick in any::<prop::sample::Index>()) {
            prop_assume!(d.codim() > 0);
            let diag = d.diagonals()[pick.index(d.codim())];
            let once = d.twist(diag).unwrap();
            prop_assert!(once.has_diagonal(diag));
            prop_assert_eq!(once.twist(diag).unwrap().dihedral_canonical(), d.dihedral_canonical());
            let inf = d.n() as Label;
            let m = d.marked_twist(diag, inf).unwrap();
            prop_assert_eq!(m.marked_twist(diag, inf).unwrap(), d.clone());
            // the two choices of piece agree up to symmetry
            prop_assert_eq!(m.dihedral_canonical(), once.dihedral_canonical());
        }
    }
}
