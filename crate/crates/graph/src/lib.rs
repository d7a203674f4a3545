//! Macroscopic routing graphs.
//!
//! Patches of the substrate form a honeycomb of triangles. The graph is laid
//! out in brick-wall coordinates `(col, row)`: vertex `(c, r)` is an *up*
//! vertex when `c + r` is odd. Up vertices link down to `(c, r - 1)`, down
//! vertices link up to `(c, r + 1)`, and all vertices link horizontally.

mod build;
mod layout;
mod path;

pub use build::{build_routing_graph, FactoryConfig};
pub use layout::{packing_ratio, packing_ratio_on, Extent, LayoutKind, PackingRatio};
pub use path::is_valid_path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("layout {layout} is not compatible with the {substrate} substrate")]
    Incompatible { layout: LayoutKind, substrate: SubstrateKind },
    #[error("extent {0}x{1} is too small")]
    ExtentTooSmall(usize, usize),
    #[error("graph hosts {available} data vertices, {requested} requested")]
    TooManyQubits { requested: usize, available: usize },
    #[error("only {available} factory slots on the boundary, {requested} requested")]
    TooManyFactories { requested: usize, available: usize },
    #[error("vertex {0} cannot host a factory")]
    BadFactoryPosition(usize),
    #[error("reset period must be positive")]
    BadResetPeriod,
    #[error("not a path: {0}")]
    NotAPath(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubstrateKind {
    Color,
    Surface,
}

impl fmt::Display for SubstrateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubstrateKind::Color => "color",
            SubstrateKind::Surface => "surface",
        })
    }
}

impl FromStr for SubstrateKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "color" => Ok(SubstrateKind::Color),
            "surface" => Ok(SubstrateKind::Surface),
            _ => Err(format!("unknown substrate `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    #[serde(rename = "L")]
    Data,
    #[serde(rename = "A")]
    Ancilla,
    #[serde(rename = "F")]
    Factory,
}

/// Edge orientation. `A` and `B` are the two horizontal brick edges, `C` the
/// vertical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    A,
    B,
    C,
}

impl Direction {
    pub fn bit(self) -> u8 {
        match self {
            Direction::A => 1,
            Direction::B => 2,
            Direction::C => 4,
        }
    }

    pub const ALL_BITS: u8 = 7;
}

/// True for the vertices that link downwards.
pub fn is_up(col: usize, row: usize) -> bool {
    (col + row) % 2 == 1
}

/// Orientation of the brick edge between two grid neighbours.
pub fn brick_direction(a: (usize, usize), b: (usize, usize)) -> Direction {
    if a.1 != b.1 {
        return Direction::C;
    }
    let left = if a.0 < b.0 { a } else { b };
    if is_up(left.0, left.1) {
        Direction::A
    } else {
        Direction::B
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub kind: VertexKind,
    pub col: usize,
    pub row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoutingGraph {
    pub substrate: SubstrateKind,
    pub layout: LayoutKind,
    pub extent: Extent,
    pub vertices: Vec<Vertex>,
    /// Neighbour lists sorted by vertex id.
    pub adj: Vec<Vec<(usize, Direction)>>,
}

impl RoutingGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    pub fn data_vertices(&self) -> Vec<usize> {
        self.of_kind(VertexKind::Data)
    }

    pub fn ancilla_vertices(&self) -> Vec<usize> {
        self.of_kind(VertexKind::Ancilla)
    }

    pub fn factory_vertices(&self) -> Vec<usize> {
        self.of_kind(VertexKind::Factory)
    }

    fn of_kind(&self, k: VertexKind) -> Vec<usize> {
        self.vertices.iter().filter(|v| v.kind == k).map(|v| v.id).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Direction)] {
        &self.adj[v]
    }

    pub fn edge_direction(&self, u: usize, v: usize) -> Option<Direction> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, d)| d)
    }

    pub fn vertex_at(&self, col: usize, row: usize) -> Option<usize> {
        self.vertices.iter().find(|v| v.col == col && v.row == row).map(|v| v.id)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// JSON dump with typed vertices and directed edge tags.
    pub fn to_json(&self, labeling: Option<&Labeling>) -> serde_json::Value {
        let mut label_of = vec![None; self.len()];
        if let Some(l) = labeling {
            for (q, &v) in l.map.iter().enumerate() {
                label_of[v] = Some(q);
            }
        }
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| {
                serde_json::json!({
                    "id": v.id,
                    "type": v.kind,
                    "col": v.col,
                    "row": v.row,
                    "label": label_of[v.id],
                })
            })
            .collect();
        let mut edges = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            for &(v, d) in nb {
                if u < v {
                    edges.push(serde_json::json!({ "u": u, "v": v, "dir": d }));
                }
            }
        }
        serde_json::json!({
            "substrate": self.substrate,
            "layout": self.layout,
            "width": self.extent.width,
            "height": self.extent.height,
            "vertices": vertices,
            "edges": edges,
        })
    }
}

/// Injective map from qubit label to data vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Labeling {
    pub map: Vec<usize>,
}

impl Labeling {
    pub fn new(map: Vec<usize>) -> Self {
        Labeling { map }
    }

    pub fn vertex(&self, q: usize) -> usize {
        self.map[q]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn swapped(&self, a: usize, b: usize) -> Labeling {
        let mut m = self.map.clone();
        m.swap(a, b);
        Labeling { map: m }
    }

    pub fn is_valid_for(&self, g: &RoutingGraph) -> bool {
        let mut seen = vec![false; g.len()];
        self.map.iter().all(|&v| {
            let ok = v < g.len() && g.kind(v) == VertexKind::Data && !seen[v];
            if v < g.len() {
                seen[v] = true;
            }
            ok
        })
    }
}

/// Uniform injective placement of `q` labels, deterministic in `seed`.
pub fn random_labeling(g: &RoutingGraph, q: usize, seed: u64) -> Result<Labeling, GraphError> {
    let mut data = g.data_vertices();
    if q > data.len() {
        return Err(GraphError::TooManyQubits { requested: q, available: data.len() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (chosen, _) = data.partial_shuffle(&mut rng, q);
    Ok(Labeling { map: chosen.to_vec() })
}
