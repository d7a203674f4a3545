//! Microscopic substrates: the qubit tilings behind the routing graph.
//!
//! Every routing-graph vertex owns a region of the tiling. On the colour
//! substrate a region is a triangular colour-code patch; on the surface
//! substrate it is the footprint of one folded surface-code patch, with the
//! two patches of a pair forming a diamond.

mod color;
pub mod hex;
pub mod surface;

pub use color::{build_color_patch, ColorCodePatch};
pub use hex::{ColorTiling, HexFace, HexVertex, RegionKey};
pub use surface::{build_folded_surface_patch, CheckType, FoldedSurfacePatch, Site};

use lsc_graph::{
    build_routing_graph, Extent, FactoryConfig, GraphError, LayoutKind, RoutingGraph, SubstrateKind, VertexKind,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubstrateError {
    #[error("unsupported code distance {0}")]
    BadDistance(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileFace {
    pub sites: Vec<usize>,
    /// Colour index (colour substrate) or check type (surface substrate).
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub vertex: usize,
    pub col: usize,
    pub row: usize,
    pub kind: VertexKind,
    pub sites: Vec<usize>,
}

/// Tiling cut into per-vertex regions. Sites outside every region are the
/// corridor qubits between patches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substrate {
    pub kind: SubstrateKind,
    pub distance: usize,
    pub sites: Vec<Site>,
    pub faces: Vec<TileFace>,
    pub region_of: Vec<Option<usize>>,
    pub regions: Vec<Region>,
}

impl Substrate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "substrate": self.kind,
            "distance": self.distance,
            "sites": self.sites.iter().enumerate().map(|(i, s)| serde_json::json!({
                "id": i, "x": s.0, "y": s.1, "region": self.region_of[i],
            })).collect::<Vec<_>>(),
            "faces": self.faces,
            "regions": self.regions,
        })
    }
}

/// Build the routing graph for `layout` and cut the tiling along it.
pub fn build_substrate(kind: SubstrateKind, layout: LayoutKind, extent: Extent, d: usize) -> Result<Substrate, SubstrateError> {
    check_distance(d)?;
    let g = build_routing_graph(layout, extent, kind, &FactoryConfig::none())?;
    substrate_for_graph(&g, d)
}

fn check_distance(d: usize) -> Result<(), SubstrateError> {
    if d < 3 || d % 2 == 0 {
        return Err(SubstrateError::BadDistance(d));
    }
    Ok(())
}

/// Regions for every vertex of an existing graph, factories included.
pub fn substrate_for_graph(g: &RoutingGraph, d: usize) -> Result<Substrate, SubstrateError> {
    check_distance(d)?;
    match g.substrate {
        SubstrateKind::Color => Ok(color_substrate(g, d)),
        SubstrateKind::Surface => Ok(surface_substrate(g, d)),
    }
}

fn color_substrate(g: &RoutingGraph, d: usize) -> Substrate {
    let tiling = ColorTiling::new((d - 1) / 2);
    let mut owner: BTreeMap<HexVertex, Option<usize>> = BTreeMap::new();
    for (ri, v) in g.vertices.iter().enumerate() {
        for q in tiling.region_vertices(RegionKey::of_brick(v.col, v.row)) {
            owner.insert(q, Some(ri));
            for u in q.neighbors() {
                if tiling.region_of(u).is_none() {
                    owner.entry(u).or_insert(None);
                }
            }
        }
    }
    let verts: Vec<HexVertex> = owner.keys().copied().collect();
    let sites = verts.iter().map(|v| v.coord()).collect();
    let region_of: Vec<Option<usize>> = owner.values().copied().collect();
    let mut hf: Vec<HexFace> = verts.iter().flat_map(|v| v.faces()).collect();
    hf.sort();
    hf.dedup();
    let faces = hf
        .into_iter()
        .map(|f| TileFace {
            sites: f.vertices().iter().filter_map(|v| verts.binary_search(v).ok()).collect(),
            label: f.color().to_string(),
        })
        .collect();
    finish(g, SubstrateKind::Color, d, sites, faces, region_of)
}

fn surface_substrate(g: &RoutingGraph, d: usize) -> Substrate {
    let mut owner: BTreeMap<Site, Option<usize>> = BTreeMap::new();
    for (ri, v) in g.vertices.iter().enumerate() {
        for s in surface::pair_half(v.col, v.row, d) {
            owner.insert(s, Some(ri));
        }
    }
    let sites: Vec<Site> = owner.keys().copied().collect();
    let region_of = owner.values().copied().collect();
    let faces = surface::square_faces(&sites, 2)
        .into_iter()
        .map(|(c, s)| TileFace { sites: s, label: format!("{:?}", surface::square_type(c)) })
        .collect();
    finish(g, SubstrateKind::Surface, d, sites, faces, region_of)
}

fn finish(
    g: &RoutingGraph,
    kind: SubstrateKind,
    d: usize,
    sites: Vec<Site>,
    faces: Vec<TileFace>,
    region_of: Vec<Option<usize>>,
) -> Substrate {
    let mut regions: Vec<Region> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| Region { vertex: i, col: v.col, row: v.row, kind: v.kind, sites: Vec::new() })
        .collect();
    for (s, r) in region_of.iter().enumerate() {
        if let Some(r) = r {
            regions[*r].sites.push(s);
        }
    }
    Substrate { kind, distance: d, sites, faces, region_of, regions }
}
