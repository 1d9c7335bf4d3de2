use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use super::{CellId, ModuliComplex};
use crate::error::{Error, Result};
use crate::polygon::Diagonal;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Orientable, with the given genus.
    Orientable(u32),
    /// Connected sum of this many projective planes.
    NonOrientable(u32),
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::Orientable(0) => f.write_str("sphere"),
            SurfaceKind::Orientable(g) => write!(f, "orientable surface of genus {g}"),
            SurfaceKind::NonOrientable(k) => write!(f, "#{k} RP^2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub kind: SurfaceKind,
}

/// One side of a tile's boundary cycle: (edge, from-vertex, to-vertex).
type Side = (CellId, CellId, CellId);

/// Diagonals of a pentagon in cyclic order, each compatible with its two
/// neighbours. Walking this cycle walks the boundary of a tile.
const PENTAGON_CYCLE: [(usize, usize); 5] = [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];

/// Classify the two-dimensional complex for `n = 5` as a closed surface.
///
/// The check builds each tile's boundary cycle, confirms every edge meets
/// exactly two tile sides and every vertex link is a single cycle, then
/// looks for a coherent orientation.
pub fn classify_surface(c: &ModuliComplex) -> Result<SurfaceReport> {
    if c.n() != 5 {
        return Err(Error::range("n", c.n(), "5..=5"));
    }
    let locate = |g| c.locate(&g).ok_or(Error::UnknownCell);

    let mut sides: Vec<(CellId, Vec<Side>)> = Vec::new();
    for t in c.tiles() {
        let rep = &c.cell(t).representative;
        let diag = |i: usize| {
            let (a, b) = PENTAGON_CYCLE[i % 5];
            Diagonal::new(a, b)
        };
        let mut corners = Vec::with_capacity(5);
        for i in 0..5 {
            corners.push(locate(rep.with_diagonal(diag(i))?.with_diagonal(diag(i + 1))?)?);
        }
        let mut cycle = Vec::with_capacity(5);
        for i in 0..5 {
            let edge = locate(rep.with_diagonal(diag(i))?)?;
            cycle.push((edge, corners[(i + 4) % 5], corners[i]));
        }
        let mut listed: Vec<CellId> = cycle.iter().map(|s| s.0).collect();
        listed.sort_unstable();
        let mut expected: Vec<CellId> = c
            .boundary(t)
            .iter()
            .flat_map(|&(e, m)| std::iter::repeat_n(e, m as usize))
            .collect();
        expected.sort_unstable();
        if listed != expected {
            return Err(Error::InvariantViolation(format!("tile {t} boundary cycle disagrees with incidences")));
        }
        sides.push((t, cycle));
    }

    // each edge on exactly two tile sides, with consistent endpoints
    let mut edge_uses: BTreeMap<CellId, Vec<(usize, i8)>> = BTreeMap::new();
    for (ti, (_, cycle)) in sides.iter().enumerate() {
        for &(e, u, v) in cycle {
            if u == v {
                return Err(Error::NotASurface(format!("edge {e} is a loop")));
            }
            edge_uses.entry(e).or_default().push((ti, if u < v { 1 } else { -1 }));
        }
    }
    if edge_uses.len() != c.ids_of_codim(1).len() {
        return Err(Error::NotASurface("some edge lies on no tile".into()));
    }
    if let Some((e, uses)) = edge_uses.iter().find(|(_, u)| u.len() != 2) {
        return Err(Error::NotASurface(format!("edge {e} lies on {} tile sides", uses.len())));
    }

    // vertex links: around each vertex, corners chain edges into one cycle
    let mut links: HashMap<CellId, Vec<(CellId, CellId)>> = HashMap::new();
    for (_, cycle) in &sides {
        for i in 0..5 {
            let (e_in, _, v) = cycle[i];
            let (e_out, _, _) = cycle[(i + 1) % 5];
            links.entry(v).or_default().push((e_in, e_out));
        }
    }
    if links.len() != c.ids_of_codim(2).len() {
        return Err(Error::NotASurface("some vertex lies on no tile".into()));
    }
    for (v, corners) in &links {
        if !is_single_cycle(corners) {
            return Err(Error::NotASurface(format!("link of vertex {v} is not a circle")));
        }
    }

    // connectivity and orientation by propagation across shared edges
    let mut orient: Vec<Option<i8>> = vec![None; sides.len()];
    let mut orientable = true;
    let mut queue = VecDeque::from([0usize]);
    orient[0] = Some(1);
    let mut tile_edges: Vec<Vec<CellId>> = vec![Vec::new(); sides.len()];
    for (&e, uses) in &edge_uses {
        for &(ti, _) in uses {
            tile_edges[ti].push(e);
        }
    }
    while let Some(ti) = queue.pop_front() {
        let o = orient[ti].unwrap();
        for e in &tile_edges[ti] {
            let uses = &edge_uses[e];
            let (a, b) = (uses[0], uses[1]);
            let (mine, other) = if a.0 == ti { (a, b) } else { (b, a) };
            // adjacent tiles must traverse a shared edge in opposite directions
            let want = -(o * mine.1) * other.1;
            match orient[other.0] {
                None => {
                    orient[other.0] = Some(want);
                    queue.push_back(other.0);
                }
                Some(have) if have != want => orientable = false,
                Some(_) => {}
            }
        }
    }
    if orient.iter().any(Option::is_none) {
        return Err(Error::NotASurface("tiles do not form one connected piece".into()));
    }

    let (vertices, edges, faces) = (links.len(), edge_uses.len(), sides.len());
    let chi = vertices as i64 - edges as i64 + faces as i64;
    let kind = if orientable {
        SurfaceKind::Orientable(((2 - chi) / 2) as u32)
    } else {
        SurfaceKind::NonOrientable((2 - chi) as u32)
    };
    Ok(SurfaceReport {
        vertices,
        edges,
        faces,
        euler_characteristic: chi,
        orientable,
        kind,
    })
}

fn is_single_cycle(pairs: &[(CellId, CellId)]) -> bool {
    let mut adj: HashMap<CellId, Vec<CellId>> = HashMap::new();
    for &(a, b) in pairs {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|n| n.len() != 2) {
        return false;
    }
    let start = pairs[0].0;
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[&x] {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == adj.len()
}
