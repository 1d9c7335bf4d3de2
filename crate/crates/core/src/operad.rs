//! The mosaic operad: gluing labeled polygons side to side.
//!
//! Gluing side `a` of `G` to side `b` of `H` yields a polygon whose boundary
//! reads the sides of `G` after `a`, then the sides of `H` after `b`; the
//! seam becomes a new diagonal. The reflected gluing is dihedrally
//! equivalent, so comparisons go through [`Dissection::dihedral_canonical`].

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::polygon::{enumerate_diagonal_sets, Diagonal, Dissection, Label};

/// A base polygon with one polygon glued to every side.
#[derive(Clone, Debug)]
pub struct CompositionPlan {
    pub base: Dissection,
    /// `(base side label, attached polygon, attached side label)`.
    pub attachments: Vec<(Label, Dissection, Label)>,
}

/// `G a∘b H`.
pub fn compose_single(g: &Dissection, a: Label, h: &Dissection, b: Label) -> Result<Dissection> {
    let pa = g.position_of(a).ok_or(Error::UnknownLabel(a))?;
    // put `a` last so the result starts with the side after it
    let g = g.dihedral_image(pa + 1, false);
    glue(&g, &[(g.n() - 1, h, b)])
}

/// Glue a polygon to every side of the base at once.
pub fn compose_full(plan: &CompositionPlan) -> Result<Dissection> {
    let base = &plan.base;
    let mut positions = BTreeSet::new();
    let mut parts = Vec::with_capacity(plan.attachments.len());
    for (a, h, b) in &plan.attachments {
        let p = base.position_of(*a).ok_or(Error::UnknownLabel(*a))?;
        if !positions.insert(p) {
            return Err(Error::DuplicateLabel(*a));
        }
        parts.push((p, h, *b));
    }
    if positions.len() != base.n() {
        return Err(Error::ArityMismatch {
            attached: positions.len(),
            sides: base.n(),
        });
    }
    glue(base, &parts)
}

/// Glue `H_j` along its side `b_j` onto base side `p_j` for each attachment.
fn glue(base: &Dissection, attachments: &[(usize, &Dissection, Label)]) -> Result<Dissection> {
    let m = base.n();
    let mut at: Vec<Option<Dissection>> = vec![None; m];
    for &(p, h, b) in attachments {
        let q = h.position_of(b).ok_or(Error::UnknownLabel(b))?;
        // rotate so `b` is the last side
        at[p] = Some(h.dihedral_image(q + 1, false));
    }

    let mut offset = Vec::with_capacity(m + 1);
    let mut total = 0;
    for slot in &at {
        offset.push(total);
        total += slot.as_ref().map_or(1, |h| h.n() - 1);
    }
    offset.push(total);
    let wrap = |v: usize| v % total;

    let mut labels = Vec::with_capacity(total);
    let mut diagonals: Vec<(usize, usize)> = base
        .diagonals()
        .iter()
        .map(|d| (offset[d.lo()], offset[d.hi()]))
        .collect();
    for (j, slot) in at.iter().enumerate() {
        match slot {
            None => labels.push(base.labels()[j]),
            Some(h) => {
                labels.extend_from_slice(&h.labels()[..h.n() - 1]);
                diagonals.push((offset[j], wrap(offset[j + 1])));
                diagonals.extend(
                    h.diagonals()
                        .iter()
                        .map(|d| (wrap(offset[j] + d.lo()), wrap(offset[j] + d.hi()))),
                );
            }
        }
    }

    let mut seen = BTreeSet::new();
    for &l in &labels {
        if !seen.insert(l) {
            return Err(Error::LabelCollision(l));
        }
    }
    let out = Dissection::new(labels, diagonals)?;

    // sides: m + Σ(n_j - 2); diagonals: l + Σ(k_j + 1)
    let expect_sides = m + attachments.iter().map(|(_, h, _)| h.n() - 2).sum::<usize>();
    let expect_diags = base.codim() + attachments.iter().map(|(_, h, _)| h.codim() + 1).sum::<usize>();
    if out.n() != expect_sides || out.codim() != expect_diags {
        return Err(Error::InvariantViolation(format!(
            "composition produced {} sides / {} diagonals, expected {expect_sides} / {expect_diags}",
            out.n(),
            out.codim()
        )));
    }
    Ok(out)
}

/// Permute side labels; `sigma` must be defined and injective on the labels
/// of `g`.
pub fn relabel(g: &Dissection, sigma: &BTreeMap<Label, Label>) -> Result<Dissection> {
    let mut images = BTreeSet::new();
    for l in g.labels() {
        let img = sigma.get(l).ok_or(Error::NonBijective)?;
        if !images.insert(*img) {
            return Err(Error::NonBijective);
        }
    }
    Ok(g.map_labels(|l| sigma[&l]))
}

/// The diagonal of `compose_single(g, a, h, b)` created by the seam: the one
/// separating the surviving labels of `g` from those of `h`.
pub fn seam(composed: &Dissection, g: &Dissection, a: Label) -> Option<Diagonal> {
    let from_g: BTreeSet<Label> = g.labels().iter().copied().filter(|&l| l != a).collect();
    composed.diagonals().iter().copied().find(|&d| {
        let inner: BTreeSet<Label> = composed.inner_labels(d).into_iter().collect();
        let outer: BTreeSet<Label> = composed.labels().iter().copied().filter(|l| !inner.contains(l)).collect();
        inner == from_g || outer == from_g
    })
}

/// Outcome of one family of axiom checks.
#[derive(Clone, Debug, Default)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        AxiomCheck {
            name,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct OperadReport {
    pub max_sides: usize,
    pub checks: Vec<AxiomCheck>,
}

impl OperadReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn instances(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }
}

/// All dissections of an `n`-gon with labels `first..first+n`.
fn shapes(n: usize, first: Label) -> Vec<Dissection> {
    let labels: Vec<Label> = (first..first + n as Label).collect();
    (0..=n - 3)
        .flat_map(|k| enumerate_diagonal_sets(n, k).expect("k in range"))
        .map(|ds| Dissection::from_parts(labels.clone(), ds))
        .collect()
}

fn same(x: &Result<Dissection>, y: &Result<Dissection>) -> bool {
    match (x, y) {
        (Ok(x), Ok(y)) => x.dihedral_canonical() == y.dihedral_canonical(),
        _ => false,
    }
}

/// Exhaustive associativity, equivariance and cyclic-symmetry checks over
/// every composition whose result has at most `max_sides` sides.
/// Equivariance runs over all permutations only up to five sides.
pub fn check_operad_axioms(max_sides: usize) -> Result<OperadReport> {
    if max_sides > 7 {
        return Err(Error::range("max_sides", max_sides, "..=7"));
    }
    let mut sequential = AxiomCheck::new("sequential associativity");
    let mut parallel = AxiomCheck::new("parallel associativity");
    let mut equivariance = AxiomCheck::new("symmetric equivariance");
    let mut cyclic = AxiomCheck::new("cyclic symmetry");
    let mut seams = AxiomCheck::new("seam separates the operands");

    let sizes = |first: Label| -> Vec<Dissection> {
        (3..=max_sides.saturating_sub(1).max(3)).flat_map(|n| shapes(n, first)).collect()
    };
    let gs = sizes(1);
    let hs = sizes(101);
    let ks = sizes(201);

    for g in &gs {
        for h in &hs {
            if g.n() + h.n() - 2 > max_sides {
                continue;
            }
            for &a in g.labels() {
                for &b in h.labels() {
                    let gh = compose_single(g, a, h, b);
                    seams.record(
                        gh.as_ref().ok().and_then(|c| seam(c, g, a)).is_some(),
                        || format!("{g} {a}∘{b} {h}"),
                    );
                    for s in 1..h.n() {
                        let rot = h.dihedral_image(s, false);
                        cyclic.record(same(&gh, &compose_single(g, a, &rot, b)), || {
                            format!("{g} {a}∘{b} {h} rotated by {s}")
                        });
                    }
                    if g.n() + h.n() - 2 <= 5 {
                        check_equivariance(g, a, h, b, &gh, &mut equivariance);
                    }
                    for k in &ks {
                        if g.n() + h.n() + k.n() - 4 > max_sides {
                            continue;
                        }
                        for &c in k.labels() {
                            for &b2 in h.labels().iter().filter(|&&x| x != b) {
                                let lhs = gh.as_ref().map_err(Clone::clone).and_then(|x| compose_single(x, b2, k, c));
                                let inner = compose_single(h, b2, k, c);
                                let rhs = inner.and_then(|hk| compose_single(g, a, &hk, b));
                                sequential.record(same(&lhs, &rhs), || {
                                    format!("({g} {a}∘{b} {h}) {b2}∘{c} {k}")
                                });
                            }
                            for &a2 in g.labels().iter().filter(|&&x| x != a) {
                                let lhs = gh.as_ref().map_err(Clone::clone).and_then(|x| compose_single(x, a2, k, c));
                                let rhs = compose_single(g, a2, k, c).and_then(|gk| compose_single(&gk, a, h, b));
                                parallel.record(same(&lhs, &rhs), || {
                                    format!("({g} {a}∘{b} {h}) {a2}∘{c} {k}")
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(OperadReport {
        max_sides,
        checks: vec![sequential, parallel, equivariance, cyclic, seams],
    })
}

fn check_equivariance(
    g: &Dissection,
    a: Label,
    h: &Dissection,
    b: Label,
    gh: &Result<Dissection>,
    check: &mut AxiomCheck,
) {
    let surviving: Vec<Label> = g
        .labels()
        .iter()
        .filter(|&&l| l != a)
        .chain(h.labels().iter().filter(|&&l| l != b))
        .copied()
        .collect();
    for perm in permutations(&surviving) {
        let mut sigma: BTreeMap<Label, Label> = surviving.iter().copied().zip(perm).collect();
        sigma.insert(a, a);
        sigma.insert(b, b);
        let lhs = gh.as_ref().map_err(Clone::clone).and_then(|x| relabel(x, &sigma));
        let rhs = relabel(g, &sigma)
            .and_then(|g2| relabel(h, &sigma).and_then(|h2| compose_single(&g2, a, &h2, b)));
        check.record(same(&lhs, &rhs), || format!("σ={sigma:?} on {g} {a}∘{b} {h}"));
    }
}

pub(crate) fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(labels: &[Label], diags: &[(usize, usize)]) -> Dissection {
        Dissection::new(labels.to_vec(), diags.iter().copied()).unwrap()
    }

    const A: Label = 100;
    const B: Label = 200;

    #[test]
    fn two_triangles_make_a_square() {
        let g = poly(&[A, 1, 2], &[]);
        let h = poly(&[B, 3, 4], &[]);
        let sq = compose_single(&g, A, &h, B).unwrap();
        assert_eq!(sq, poly(&[1, 2, 3, 4], &[(0, 2)]));
    }

    #[test]
    fn diagonal_bookkeeping() {
        let g = poly(&[1, 2, 3, 4, 5, 6], &[(0, 2), (3, 5)]);
        let h = poly(&[7, 8, 9, 10, 11], &[(1, 3)]);
        let c = compose_single(&g, 4, &h, 9).unwrap();
        assert_eq!(c.n(), 9);
        assert_eq!(c.codim(), 2 + 1 + 1);
    }

    #[test]
    fn pentagon_with_triangle() {
        let c = compose_single(&poly(&[1, 2, 3, 4, 5], &[]), 3, &poly(&[6, 7, 8], &[]), 6).unwrap();
        assert_eq!((c.n(), c.codim()), (6, 1));
        assert_eq!(c.labels(), &[4, 5, 1, 2, 7, 8]);
    }

    #[test]
    fn single_errors() {
        let g = poly(&[1, 2, 3], &[]);
        let h = poly(&[3, 4, 5], &[]);
        assert_eq!(compose_single(&g, 9, &h, 3), Err(Error::UnknownLabel(9)));
        assert_eq!(compose_single(&g, 1, &h, 9), Err(Error::UnknownLabel(9)));
        assert_eq!(compose_single(&g, 1, &h, 4), Err(Error::LabelCollision(3)));
        // the glued labels may coincide, they disappear
        assert!(compose_single(&g, 3, &h, 3).is_ok());
    }

    #[test]
    fn full_triangle_base() {
        let plan = CompositionPlan {
            base: poly(&[1, 2, 3], &[]),
            attachments: vec![
                (1, poly(&[10, 11, 12], &[]), 10),
                (2, poly(&[20, 21, 22], &[]), 20),
                (3, poly(&[30, 31, 32], &[]), 30),
            ],
        };
        let t = compose_full(&plan).unwrap();
        assert_eq!((t.n(), t.codim()), (6, 3));

        // any order of iterated single compositions agrees
        let orders = permutations(&[0usize, 1, 2]);
        for order in orders {
            let mut acc = plan.base.clone();
            for i in order {
                let (a, h, b) = &plan.attachments[i];
                acc = compose_single(&acc, *a, h, *b).unwrap();
            }
            assert_eq!(acc.dihedral_canonical(), t.dihedral_canonical());
        }
    }

    #[test]
    fn full_square_base() {
        let mut attachments = Vec::new();
        for (i, a) in [1, 2, 3, 4].into_iter().enumerate() {
            let first = 10 * (i as Label + 1);
            attachments.push((a, poly(&[first, first + 1, first + 2, first + 3], &[]), first));
        }
        let plan = CompositionPlan {
            base: poly(&[1, 2, 3, 4], &[]),
            attachments,
        };
        let t = compose_full(&plan).unwrap();
        assert_eq!((t.n(), t.codim()), (12, 4));
        let mut acc = plan.base.clone();
        for (a, h, b) in &plan.attachments {
            acc = compose_single(&acc, *a, h, *b).unwrap();
        }
        assert_eq!(acc.dihedral_canonical(), t.dihedral_canonical());
    }

    #[test]
    fn full_requires_every_side() {
        let plan = CompositionPlan {
            base: poly(&[1, 2, 3], &[]),
            attachments: vec![(1, poly(&[10, 11, 12], &[]), 10)],
        };
        assert_eq!(compose_full(&plan), Err(Error::ArityMismatch { attached: 1, sides: 3 }));
    }

    #[test]
    fn full_allows_attached_labels_reusing_base_labels() {
        // base labels are all consumed, so attached polygons may reuse them
        let plan = CompositionPlan {
            base: poly(&[1, 2, 3], &[]),
            attachments: vec![
                (1, poly(&[1, 2, 4], &[]), 1),
                (2, poly(&[5, 3, 6], &[]), 5),
                (3, poly(&[7, 8, 9], &[]), 7),
            ],
        };
        let t = compose_full(&plan).unwrap();
        assert_eq!(t.n(), 6);
    }

    #[test]
    fn relabel_examples() {
        let g = poly(&[1, 2, 3, 4], &[(0, 2)]);
        let id: BTreeMap<Label, Label> = (1..=4).map(|l| (l, l)).collect();
        assert_eq!(relabel(&g, &id).unwrap(), g);
        let mut swap = id.clone();
        swap.insert(1, 3);
        swap.insert(3, 1);
        let s = relabel(&g, &swap).unwrap();
        let differing = s.labels().iter().zip(g.labels()).filter(|(x, y)| x != y).count();
        assert_eq!(differing, 2);
        assert_eq!(s.diagonals(), g.diagonals());
        let mut bad = id.clone();
        bad.insert(1, 2);
        assert_eq!(relabel(&g, &bad), Err(Error::NonBijective));
        bad.remove(&1);
        assert_eq!(relabel(&g, &bad), Err(Error::NonBijective));
    }

    #[test]
    fn seam_separates_operands() {
        let g = poly(&[1, 2, 3, 4], &[]);
        let h = poly(&[5, 6, 7], &[]);
        let c = compose_single(&g, 2, &h, 6).unwrap();
        let d = seam(&c, &g, 2).unwrap();
        let mut inner = c.inner_labels(d);
        inner.sort();
        assert!(inner == vec![1, 3, 4] || inner == vec![5, 7]);
    }

    #[test]
    fn axioms_hold_exhaustively() {
        let report = check_operad_axioms(7).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
            assert!(c.instances > 0, "{} ran no instances", c.name);
        }
    }

    #[test]
    fn triangle_alone_is_vacuous() {
        let report = check_operad_axioms(3).unwrap();
        assert!(report.passed());
        assert_eq!(report.instances(), 0);
        assert!(check_operad_axioms(8).is_err());
    }
}
