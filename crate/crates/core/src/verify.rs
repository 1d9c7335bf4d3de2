//! One-shot verification of every counting statement the crate encodes,
//! reported as one PASS/FAIL line per check.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::{chamber_counts, irreducible_cells, irreducible_count_formula};
use crate::associahedron::{face_factorization, face_lattice, factorization_identities_hold, g_hat_strata};
use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::moduli::{
    build_complex, classify_surface, divisor_subcomplex, euler_closed_form, euler_proof_sum, Mode, ModuliComplex,
    SurfaceKind,
};
use crate::operad::check_operad_axioms;
use crate::polygon::{cayley_count, enumerate_diagonal_sets, Label};
use crate::quasibraid::{check_phi, generators, pair_of_pants};

pub const MAX_VERIFY_N: usize = 8;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

/// Complexes built once and shared between checks.
pub struct Complexes {
    built: BTreeMap<(usize, Mode), ModuliComplex>,
}

impl Complexes {
    pub fn build(n_max: usize) -> Result<Self> {
        let mut built = BTreeMap::new();
        for n in 3..=n_max {
            for mode in [Mode::Projective, Mode::DoubleCover] {
                built.insert((n, mode), build_complex(n, mode)?);
            }
        }
        Ok(Complexes { built })
    }

    pub fn get(&self, n: usize, mode: Mode) -> Option<&ModuliComplex> {
        self.built.get(&(n, mode))
    }

    fn range(&self, lo: usize, hi: usize, mode: Mode) -> impl Iterator<Item = &ModuliComplex> {
        (lo..=hi).filter_map(move |n| self.get(n, mode))
    }
}

fn result(id: usize, name: &'static str, failures: Vec<String>, ok: String) -> CheckResult {
    CheckResult {
        id,
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() { ok } else { failures.join("; ") },
    }
}

pub fn check_cayley() -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for n in 3..=10 {
        for k in 0..=n - 3 {
            let sets = enumerate_diagonal_sets(n, k)?.len();
            total += sets;
            if sets as u128 != cayley_count(n, k)? {
                failures.push(format!("n={n} k={k}: enumerated {sets}"));
            }
        }
    }
    Ok(result(1, "cayley counts", failures, format!("n=3..10, {total} dissections enumerated")))
}

pub fn check_tessellation(c: &Complexes, n_max: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    for mode in [Mode::Projective, Mode::DoubleCover] {
        for cx in c.range(4, n_max, mode) {
            let mut want = factorial(cx.n() as u64 - 1).expect("small");
            if mode == Mode::Projective {
                want /= 2;
            }
            let tiles = cx.tiles().len() as u128;
            let graph = cx.tile_adjacency()?;
            if tiles != want || !graph.is_connected() {
                failures.push(format!("{mode} n={}: {tiles} tiles, expected {want}", cx.n()));
            }
        }
    }
    let detail = if n_max < 4 { "skipped, n_max < 4".to_string() } else { format!("n=4..{n_max}") };
    Ok(result(2, "tessellation", failures, detail))
}

pub fn check_euler(c: &Complexes, n_max: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut values = Vec::new();
    for cx in c.range(4, n_max, Mode::Projective) {
        let n = cx.n();
        let (a, b, d) = (cx.euler_characteristic() as i128, euler_proof_sum(n)?, euler_closed_form(n)?);
        values.push(a.to_string());
        if a != b || b != d {
            failures.push(format!("n={n}: enumerated {a}, sum {b}, closed {d}"));
        }
    }
    Ok(result(3, "euler characteristic", failures, format!("values [{}]", values.join(", "))))
}

pub fn check_surface(c: &Complexes) -> Result<CheckResult> {
    let Some(cx) = c.get(5, Mode::Projective) else {
        return Ok(result(4, "pentagon surface", vec![], "skipped, n_max < 5".into()));
    };
    let r = classify_surface(cx)?;
    let ok = cx.f_vector() == [12, 30, 15]
        && !r.orientable
        && r.euler_characteristic == -3
        && r.kind == SurfaceKind::NonOrientable(5);
    let detail = format!("f={:?} chi={} {}", cx.f_vector(), r.euler_characteristic, r.kind);
    Ok(result(4, "pentagon surface", if ok { vec![] } else { vec![detail.clone()] }, detail))
}

pub fn check_double_cover_surface(c: &Complexes) -> Result<CheckResult> {
    let Some(cx) = c.get(5, Mode::DoubleCover) else {
        return Ok(result(5, "double cover surface", vec![], "skipped, n_max < 5".into()));
    };
    let r = classify_surface(cx)?;
    let ok = cx.tiles().len() == 24 && r.euler_characteristic == -6 && !r.orientable;
    let detail = format!("{} tiles, chi={} {}", cx.tiles().len(), r.euler_characteristic, r.kind);
    Ok(result(5, "double cover surface", if ok { vec![] } else { vec![detail.clone()] }, detail))
}

pub fn check_coboundary(c: &Complexes, n_max: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut cells = 0usize;
    for mode in [Mode::Projective, Mode::DoubleCover] {
        for cx in c.range(3, n_max.min(7), mode) {
            for id in 0..cx.len() {
                cells += 1;
                let k = cx.cell(id).codim as u64;
                let counts = cx.coboundary_counts(id)?;
                let bad = counts
                    .iter()
                    .any(|(&t, &v)| v as u128 != (1u128 << t) * binomial(k, t as u64).expect("small"));
                if bad {
                    failures.push(format!("{mode} n={} cell {id}", cx.n()));
                }
            }
        }
    }
    failures.truncate(5);
    Ok(result(6, "coboundary law", failures, format!("{cells} cells")))
}

pub fn check_divisors(c: &Complexes, n_max: usize) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let mut classes = 0;
    for cx in c.range(5, n_max.min(6), Mode::Projective) {
        let n = cx.n();
        for mask in 1u32..(1 << (n - 1)) {
            let s: Vec<Label> = (1..n as Label).filter(|l| mask & (1 << (l - 1)) != 0).collect();
            if s.len() < 2 || s.len() > n - 2 {
                continue;
            }
            classes += 1;
            let d = divisor_subcomplex(cx, &s)?;
            let (n1, n2) = d.factor_sizes();
            let (Some(l), Some(r)) = (c.get(n1, Mode::Projective), c.get(n2, Mode::Projective)) else {
                return Err(Error::InvariantViolation("factor complex missing".into()));
            };
            if !d.verify_product_with(cx, l, r)?.passed() {
                failures.push(format!("n={n} S={s:?}"));
            }
        }
    }
    Ok(result(7, "divisor factorization", failures, format!("{classes} divisor classes")))
}

pub fn check_arrangement() -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 4..=10 {
        for k in 1..=n - 3 {
            let got = irreducible_cells(n, k)?.len() as u128;
            if got != irreducible_count_formula(n, k) {
                failures.push(format!("n={n} k={k}: {got} irreducible cells"));
            }
        }
        let (cones, chambers) = chamber_counts(n)?;
        let f = factorial(n as u64 - 1).expect("small") as u64;
        if (cones, chambers) != (f, f / 2) {
            failures.push(format!("n={n}: chambers ({cones}, {chambers})"));
        }
    }
    if irreducible_cells(5, 2)?.len() != 4 {
        failures.push("n=5 k=2 is not four points".into());
    }
    Ok(result(8, "arrangement counts", failures, "n=4..10".into()))
}

pub fn check_associahedron() -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 4..=10 {
        let l = face_lattice(n)?;
        for (k, &c) in l.f_vector().iter().enumerate() {
            if c as u128 != cayley_count(n, k)? {
                failures.push(format!("n={n} grade {k}: {c}"));
            }
        }
        if l.faces().any(|f| !factorization_identities_hold(n, &face_factorization(f))) {
            failures.push(format!("n={n}: factorization identity"));
        }
    }
    let facet_types = |n: usize| -> Result<BTreeMap<Vec<usize>, usize>> {
        let mut m = BTreeMap::new();
        for f in face_lattice(n)?.grade(1) {
            *m.entry(face_factorization(f)).or_insert(0) += 1;
        }
        Ok(m)
    };
    if facet_types(6)? != BTreeMap::from([(vec![3, 5], 6), (vec![4, 4], 3)]) {
        failures.push("K5 facets".into());
    }
    if facet_types(7)? != BTreeMap::from([(vec![3, 6], 7), (vec![4, 5], 7)]) {
        failures.push("K6 facets".into());
    }
    Ok(result(9, "associahedron structure", failures, "n=4..10; K5 3+6, K6 7+7".into()))
}

pub fn check_quasibraid() -> Result<CheckResult> {
    let mut failures = Vec::new();
    for n in 4..=9 {
        let g = generators(n)?;
        if g.len() != n * (n - 3) / 2 {
            failures.push(format!("n={n}: {} generators", g.len()));
        }
        if g_hat_strata(n)?.iter().any(|(&i, &c)| c != n - i) {
            failures.push(format!("n={n}: strata"));
        }
        let r = check_phi(n)?;
        if !r.passed() {
            failures.push(format!("n={n}: {} relations fail, image order {}", r.failed_relations.len(), r.image_order));
        }
    }
    for (m, n) in [(3, 3), (3, 4), (4, 3), (3, 5), (4, 4)] {
        if !pair_of_pants(m, n)?.passed() {
            failures.push(format!("pair of pants ({m}, {n})"));
        }
    }
    Ok(result(10, "quasibraid", failures, "n=4..9, phi onto S_{n-1}".into()))
}

pub fn check_operad() -> Result<CheckResult> {
    let r = check_operad_axioms(7)?;
    let failures = r
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: {}", c.name, c.failures.join(", ")))
        .collect();
    Ok(result(11, "operad axioms", failures, format!("{} instances", r.instances())))
}

/// Run every check, building complexes up to `n_max`.
pub fn verify(n_max: usize) -> Result<Vec<CheckResult>> {
    if n_max > MAX_VERIFY_N {
        return Err(Error::range("n-max", n_max, format!("0..={MAX_VERIFY_N}")));
    }
    let c = Complexes::build(n_max)?;
    Ok(vec![
        check_cayley()?,
        check_tessellation(&c, n_max)?,
        check_euler(&c, n_max)?,
        check_surface(&c)?,
        check_double_cover_surface(&c)?,
        check_coboundary(&c, n_max)?,
        check_divisors(&c, n_max)?,
        check_arrangement()?,
        check_associahedron()?,
        check_quasibraid()?,
        check_operad()?,
    ])
}
