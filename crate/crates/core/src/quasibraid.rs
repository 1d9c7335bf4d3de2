//! The quasibraid group `J_{n-1}`: one involutive generator per diagonal of
//! the reference `n`-gon (sides `1..n-1` then ∞), conjugation and commuting
//! relations read off from marked twists, and the map `φ` onto `S_{n-1}`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::associahedron::{free_part_size, reference_labels};
use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::polygon::{all_diagonals, diagonals_cross, Diagonal, Dissection, Label, MAX_SIDES};

pub const MAX_CHECK_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    /// Position in the canonical diagonal order, from 0.
    pub index: usize,
    pub n: usize,
    pub diagonal: Diagonal,
    /// Side labels away from ∞, in cyclic order.
    pub free_part: Vec<Label>,
}

impl Generator {
    fn of(n: usize, index: usize, diagonal: Diagonal) -> Self {
        Generator {
            index,
            n,
            diagonal,
            free_part: (diagonal.lo() as Label + 1..=diagonal.hi() as Label).collect(),
        }
    }

    /// Name used in exported presentations: `g1`, `g2`, ...
    pub fn name(&self) -> String {
        format!("g{}", self.index + 1)
    }

    /// `G_d` as a dissection of the reference polygon.
    pub fn polygon(&self) -> Dissection {
        Dissection::new(reference_labels(self.n), [self.diagonal.endpoints()]).expect("diagonal of the reference polygon")
    }

    fn inside(&self, other: &Generator) -> bool {
        other.diagonal.lo() <= self.diagonal.lo() && self.diagonal.hi() <= other.diagonal.hi()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.free_part.iter().map(|l| l.to_string()).collect();
        write!(f, "{}{{{}}}", self.name(), labels.join(","))
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(4..=MAX_SIDES).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_SIDES}")));
    }
    Ok(())
}

pub fn generators(n: usize) -> Result<Vec<Generator>> {
    check_n(n)?;
    Ok(all_diagonals(n)
        .into_iter()
        .enumerate()
        .map(|(i, d)| Generator::of(n, i, d))
        .collect())
}

fn generator_index(n: usize, d: Diagonal) -> usize {
    all_diagonals(n).iter().position(|&x| x == d).expect("diagonal of the reference polygon")
}

fn si(a: &Generator, b: &Generator) -> bool {
    a.n == b.n && a.diagonal != b.diagonal && !diagonals_cross(a.diagonal, b.diagonal, a.n)
}

fn superimposed(a: &Generator, b: &Generator) -> Dissection {
    a.polygon().with_diagonal(b.diagonal).expect("SI pair")
}

/// The generator `b` with `G_a`, `G_b` conjugate in `G_d`: superimpose,
/// apply the marked twist along `d`, and forget `d`.
pub fn conjugate_in(d: &Generator, a: &Generator) -> Result<Generator> {
    if !si(a, d) {
        return Err(Error::NotSi(d.index, a.index));
    }
    let n = d.n;
    let twisted = superimposed(a, d)
        .marked_twist(d.diagonal, n as Label)
        .expect("d is present");
    let moved = twisted
        .diagonals()
        .iter()
        .copied()
        .find(|&x| x != d.diagonal)
        .expect("two diagonals");
    Ok(Generator::of(n, generator_index(n, moved), moved))
}

/// A word in the generators; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    /// Cancel adjacent equal letters until none remain.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<usize> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<String> = self.0.iter().map(|g| format!("g{}", g + 1)).collect();
        f.write_str(&names.join(" "))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Involution,
    Conjugation,
    Commuting,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub kind: RelationKind,
    pub left: Word,
    pub right: Word,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.left, self.right)
    }
}

/// Whether `a`, `b` satisfy SI and the two marked twists of the
/// superimposed polygon agree on the framed polygon.
pub fn commute_by_twist(a: &Generator, b: &Generator) -> bool {
    if !si(a, b) {
        return false;
    }
    let g = superimposed(a, b);
    let n = a.n as Label;
    let ta = g.marked_twist(a.diagonal, n).expect("present");
    let tb = g.marked_twist(b.diagonal, n).expect("present");
    ta.diagonals() == tb.diagonals()
}

/// Defining relations of `J_{n-1}` in a fixed order: involutions, then
/// conjugations by `(d, a)`, then commuting pairs.
///
/// A conjugation is recorded only when `d` does not sit strictly inside
/// `a`; in that case the relation for the pair is the one with the roles
/// exchanged.
pub fn relations(n: usize) -> Result<Vec<Relation>> {
    let gens = generators(n)?;
    let mut out = Vec::new();
    for g in &gens {
        out.push(Relation {
            kind: RelationKind::Involution,
            left: Word::new([g.index, g.index]),
            right: Word::default(),
        });
    }
    for d in &gens {
        for a in &gens {
            if !si(a, d) || (d.inside(a) && d != a) {
                continue;
            }
            let b = conjugate_in(d, a)?;
            out.push(Relation {
                kind: RelationKind::Conjugation,
                left: Word::new([d.index, a.index]),
                right: Word::new([b.index, d.index]),
            });
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if commute_by_twist(a, b) {
                out.push(Relation {
                    kind: RelationKind::Commuting,
                    left: Word::new([a.index, b.index]),
                    right: Word::new([b.index, a.index]),
                });
            }
        }
    }
    Ok(out)
}

/// A permutation of `{1..m}`, stored as the images of `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<Label>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as Label).collect())
    }

    pub fn from_images(images: Vec<Label>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let i = (x as usize).wrapping_sub(1);
            if i >= images.len() || seen[i] {
                return Err(Error::NonBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: Label) -> Label {
        self.0[x as usize - 1]
    }

    pub fn images(&self) -> &[Label] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as Label + 1;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i as Label + 1)
    }

    /// Non-trivial cycles, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<Label>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 1..=self.0.len() as Label {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Reverse the generator's free-part labels, fixing the rest of `1..n-1`.
pub fn phi(g: &Generator) -> Permutation {
    let mut images: Vec<Label> = (1..g.n as Label).collect();
    let part = &g.free_part;
    for (j, &p) in part.iter().enumerate() {
        images[p as usize - 1] = part[part.len() - 1 - j];
    }
    Permutation(images)
}

/// `φ(w_1) ∘ φ(w_2) ∘ ...` for a word over `generators(n)`.
pub fn phi_word(n: usize, w: &Word) -> Result<Permutation> {
    let gens = generators(n)?;
    phi_word_with(&gens, w)
}

fn phi_word_with(gens: &[Generator], w: &Word) -> Result<Permutation> {
    let m = gens.first().map_or(0, |g| g.n - 1);
    w.0.iter().try_fold(Permutation::identity(m), |acc, &i| {
        let g = gens.get(i).ok_or(Error::UnknownGenerator(i))?;
        Ok(acc.compose(&phi(g)))
    })
}

#[derive(Clone, Debug)]
pub struct PhiReport {
    pub n: usize,
    pub relations_checked: usize,
    pub failed_relations: Vec<Relation>,
    /// Size of the subgroup of `S_{n-1}` generated by the images.
    pub image_order: u128,
    pub symmetric_order: u128,
    /// The `Ĝ^2` generators map to the adjacent transpositions.
    pub adjacent_witness: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.failed_relations.is_empty() && self.image_order == self.symmetric_order && self.adjacent_witness
    }
}

/// Check every relation under `φ` and that the images generate `S_{n-1}`.
pub fn check_phi(n: usize) -> Result<PhiReport> {
    if !(4..=MAX_CHECK_N).contains(&n) {
        return Err(Error::range("n", n, format!("4..={MAX_CHECK_N}")));
    }
    let gens = generators(n)?;
    let rels = relations(n)?;
    let mut failed = Vec::new();
    for r in &rels {
        if phi_word_with(&gens, &r.left)? != phi_word_with(&gens, &r.right)? {
            failed.push(r.clone());
        }
    }

    let images: Vec<Permutation> = gens.iter().map(phi).collect();
    let id = Permutation::identity(n - 1);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for s in &images {
            let q = p.compose(s);
            if !seen.contains(&q) {
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }

    let adjacent: BTreeSet<Vec<Vec<Label>>> = gens
        .iter()
        .filter(|g| free_part_size(g.diagonal) == 2)
        .map(|g| phi(g).cycles())
        .collect();
    let wanted: BTreeSet<Vec<Vec<Label>>> = (1..n as Label - 1).map(|i| vec![vec![i, i + 1]]).collect();

    Ok(PhiReport {
        n,
        relations_checked: rels.len(),
        failed_relations: failed,
        image_order: seen.len() as u128,
        symmetric_order: factorial(n as u64 - 1).expect("small"),
        adjacent_witness: adjacent == wanted,
    })
}

#[derive(Clone, Debug)]
pub struct PantsReport {
    pub m: usize,
    pub n: usize,
    /// `iota1[i]` is the image of generator `i` of the first factor.
    pub iota1: Vec<usize>,
    pub iota2: Vec<usize>,
    pub relations_checked: usize,
    pub missing_relations: Vec<String>,
    pub cross_pairs: usize,
    pub cross_failures: Vec<(usize, usize)>,
}

impl PantsReport {
    pub fn passed(&self) -> bool {
        self.missing_relations.is_empty() && self.cross_failures.is_empty()
    }
}

/// Inclusions `J_m × J_n → J_{m+n}` from the pair-of-pants product: the
/// first factor keeps its labels, the second is shifted by `m`.
pub fn pair_of_pants(m: usize, n: usize) -> Result<PantsReport> {
    if m < 3 {
        return Err(Error::range("m", m, "3.."));
    }
    if n < 3 {
        return Err(Error::range("n", n, "3.."));
    }
    let total = m + n + 1;
    check_n(total)?;
    let big = generators(total)?;
    let index: HashMap<Diagonal, usize> = big.iter().map(|g| (g.diagonal, g.index)).collect();
    let embed = |sides: usize, shift: usize| -> Result<Vec<usize>> {
        let gens = generators(sides)?;
        Ok(gens
            .iter()
            .map(|g| index[&Diagonal::new(g.diagonal.lo() + shift, g.diagonal.hi() + shift)])
            .collect())
    };
    let iota1 = embed(m + 1, 0)?;
    let iota2 = embed(n + 1, m)?;

    let big_rels: HashSet<(Word, Word)> = relations(total)?
        .into_iter()
        .flat_map(|r| [(r.left.clone(), r.right.clone()), (r.right, r.left)])
        .collect();
    let mut checked = 0;
    let mut missing = Vec::new();
    for (sides, map) in [(m + 1, &iota1), (n + 1, &iota2)] {
        for r in relations(sides)? {
            checked += 1;
            let push = |w: &Word| Word(w.0.iter().map(|&i| map[i]).collect());
            let (l, rt) = (push(&r.left), push(&r.right));
            if !big_rels.contains(&(l.clone(), rt.clone())) {
                missing.push(format!("{} = {}", l, rt));
            }
        }
    }

    let mut cross_failures = Vec::new();
    for &a in &iota1 {
        for &b in &iota2 {
            let (x, y) = (Word::new([a, b]), Word::new([b, a]));
            let present = big_rels.contains(&(x.clone(), y.clone()));
            let commutes = phi_word_with(&big, &x)? == phi_word_with(&big, &y)?;
            if !(present && commutes) {
                cross_failures.push((a, b));
            }
        }
    }
    Ok(PantsReport {
        m,
        n,
        cross_pairs: iota1.len() * iota2.len(),
        iota1,
        iota2,
        relations_checked: checked,
        missing_relations: missing,
        cross_failures,
    })
}

/// Plain-text presentation: a generator line, then one relation per line.
pub fn export_presentation(n: usize) -> Result<String> {
    let gens = generators(n)?;
    let names: Vec<String> = gens.iter().map(Generator::name).collect();
    let mut out = format!("generators: {}\n", names.join(" "));
    for r in relations(n)? {
        out.push_str(&format!("rel: {r}\n"));
    }
    Ok(out)
}
