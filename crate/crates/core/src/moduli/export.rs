use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{class_members, CellId, Cell, Mode, ModuliComplex, MAX_COMPLEX_N};
use crate::error::{Error, Result};
use crate::polygon::{Dissection, Label};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeRecord {
    pub labels: Vec<Label>,
    pub diagonals: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub id: CellId,
    pub codim: usize,
    pub representative: RepresentativeRecord,
}

/// Serialized form of a [`ModuliComplex`]. A face of multiplicity `m`
/// appears `m` times in `boundary`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexExport {
    pub n: usize,
    pub mode: String,
    pub cells: Vec<CellRecord>,
    pub boundary: Vec<[CellId; 2]>,
    pub tiles: Vec<CellId>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedExport(msg.into())
}

impl ModuliComplex {
    pub fn to_export(&self) -> ComplexExport {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(id, c)| CellRecord {
                id,
                codim: c.codim,
                representative: RepresentativeRecord {
                    labels: c.representative.labels().to_vec(),
                    diagonals: c.representative.diagonals().iter().map(|d| [d.lo(), d.hi()]).collect(),
                },
            })
            .collect();
        let boundary = self
            .incidences()
            .flat_map(|(a, b, m)| std::iter::repeat_n([a, b], m as usize))
            .collect();
        ComplexExport {
            n: self.n,
            mode: self.mode.as_str().to_string(),
            cells,
            boundary,
            tiles: self.tiles().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("complex export is plain data")
    }

    /// Rebuild a complex from its export, checking that every cell is
    /// named by its class minimum and the listing order is canonical.
    pub fn from_export(data: &ComplexExport) -> Result<Self> {
        let mode: Mode = data.mode.parse().map_err(malformed)?;
        if !(3..=MAX_COMPLEX_N).contains(&data.n) {
            return Err(malformed(format!("n = {} out of range", data.n)));
        }
        let mut cells = Vec::with_capacity(data.cells.len());
        for (i, rec) in data.cells.iter().enumerate() {
            if rec.id != i {
                return Err(malformed(format!("cell {i} carries id {}", rec.id)));
            }
            let rep = Dissection::new(
                rec.representative.labels.clone(),
                rec.representative.diagonals.iter().map(|&[a, b]| (a, b)),
            )
            .map_err(|e| malformed(format!("cell {i}: {e}")))?;
            if rep.n() != data.n || rep.codim() != rec.codim {
                return Err(malformed(format!("cell {i} has the wrong size or codimension")));
            }
            let members = class_members(&rep, mode).map_err(|e| malformed(format!("cell {i}: {e}")))?;
            if members[0] != rep {
                return Err(malformed(format!("cell {i} is not named by its class minimum")));
            }
            cells.push(Cell {
                representative: rep,
                codim: rec.codim,
                mode,
            });
        }
        if cells
            .windows(2)
            .any(|w| (w[0].codim, &w[0].representative) >= (w[1].codim, &w[1].representative))
        {
            return Err(malformed("cells are not in canonical order"));
        }
        let mut counts = std::collections::BTreeMap::new();
        for &[a, b] in &data.boundary {
            if a >= cells.len() || b >= cells.len() || cells[a].codim + 1 != cells[b].codim {
                return Err(malformed(format!("bad incidence [{a}, {b}]")));
            }
            *counts.entry((a, b)).or_insert(0u32) += 1;
        }
        let complex = ModuliComplex::assemble(data.n, mode, cells, counts);
        if data.tiles != complex.tiles().collect::<Vec<_>>() {
            return Err(malformed("tile list does not match the codimension-zero cells"));
        }
        Ok(complex)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: ComplexExport = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
        Self::from_export(&data)
    }

    /// Tile adjacency graph in Graphviz format, one node per tile named by
    /// its label cycle.
    pub fn to_dot(&self) -> Result<String> {
        let graph = self.tile_adjacency()?;
        let name = |t: CellId| {
            let labels: Vec<String> = self.cells[t].representative.labels().iter().map(|l| l.to_string()).collect();
            format!("\"{}\"", labels.join(" "))
        };
        let mut out = String::new();
        writeln!(out, "graph tiles_n{} {{", self.n).unwrap();
        for &t in &graph.tiles {
            writeln!(out, "  {};", name(t)).unwrap();
        }
        for e in &graph.edges {
            writeln!(out, "  {} -- {} [label=\"{}\"];", name(e.a), name(e.b), e.facet).unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }
}
