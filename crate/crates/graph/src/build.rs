use crate::{brick_direction, Direction, Extent, GraphError, LayoutKind, RoutingGraph, SubstrateKind, Vertex, VertexKind};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoryConfig {
    pub count: usize,
    /// Layers between two magic states of one factory.
    pub reset_period: u32,
    /// Explicit `(col, row)` slots; evenly spaced boundary slots when absent.
    pub positions: Option<Vec<(usize, usize)>>,
}

impl FactoryConfig {
    pub fn new(count: usize, reset_period: u32) -> Self {
        FactoryConfig { count, reset_period, positions: None }
    }

    pub fn none() -> Self {
        FactoryConfig::new(0, 1)
    }
}

fn grid_neighbors(c: usize, r: usize, e: Extent) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(3);
    if c > 0 {
        out.push((c - 1, r));
    }
    if c + 1 < e.width {
        out.push((c + 1, r));
    }
    if crate::is_up(c, r) {
        if r > 0 {
            out.push((c, r - 1));
        }
    } else if r + 1 < e.height {
        out.push((c, r + 1));
    }
    out
}

fn in_margin(c: usize, r: usize, e: Extent) -> bool {
    c >= 1 && r >= 1 && c + 2 <= e.width && r + 2 <= e.height
}

/// Cell kinds after margin and pruning: `None` for dropped cells.
fn cells(layout: LayoutKind, e: Extent) -> Vec<Option<VertexKind>> {
    let idx = |c: usize, r: usize| r * e.width + c;
    let mut kind = vec![Some(VertexKind::Ancilla); e.width * e.height];
    for r in 0..e.height {
        for c in 0..e.width {
            if !layout.is_data(c, r) || !in_margin(c, r, e) {
                continue;
            }
            let partner_ok = layout != LayoutKind::Pair || {
                let p = if crate::is_up(c, r) { (c, r - 1) } else { (c, r + 1) };
                in_margin(p.0, p.1, e)
            };
            if partner_ok {
                kind[idx(c, r)] = Some(VertexKind::Data);
            }
        }
    }
    // keep the largest ancilla component
    let mut comp = vec![usize::MAX; kind.len()];
    let mut best: Option<(usize, usize)> = None;
    let mut ncomp = 0;
    for start in 0..kind.len() {
        if kind[start] != Some(VertexKind::Ancilla) || comp[start] != usize::MAX {
            continue;
        }
        let mut size = 0;
        let mut q = VecDeque::from([start]);
        comp[start] = ncomp;
        while let Some(v) = q.pop_front() {
            size += 1;
            for (c, r) in grid_neighbors(v % e.width, v / e.width, e) {
                let u = idx(c, r);
                if kind[u] == Some(VertexKind::Ancilla) && comp[u] == usize::MAX {
                    comp[u] = ncomp;
                    q.push_back(u);
                }
            }
        }
        if best.is_none_or(|(_, s)| size > s) {
            best = Some((ncomp, size));
        }
        ncomp += 1;
    }
    for v in 0..kind.len() {
        if kind[v] == Some(VertexKind::Ancilla) && Some(comp[v]) != best.map(|b| b.0) {
            kind[v] = None;
        }
    }
    for v in 0..kind.len() {
        if kind[v] == Some(VertexKind::Data) {
            let ok = grid_neighbors(v % e.width, v / e.width, e).iter().any(|&(c, r)| kind[idx(c, r)] == Some(VertexKind::Ancilla));
            if !ok {
                kind[v] = None;
            }
        }
    }
    kind
}

pub(crate) fn data_positions(layout: LayoutKind, e: Extent) -> Vec<(usize, usize)> {
    if e.width == 0 || e.height == 0 {
        return Vec::new();
    }
    let k = cells(layout, e);
    (0..k.len()).filter(|&v| k[v] == Some(VertexKind::Data)).map(|v| (v % e.width, v / e.width)).collect()
}

fn perimeter(e: Extent) -> Vec<(usize, usize)> {
    let (w, h) = (e.width, e.height);
    let mut out: Vec<(usize, usize)> = (0..w).map(|c| (c, 0)).collect();
    out.extend((1..h).map(|r| (w - 1, r)));
    out.extend((0..w.saturating_sub(1)).rev().map(|c| (c, h - 1)));
    out.extend((1..h.saturating_sub(1)).rev().map(|r| (0, r)));
    out
}

/// Build the routing graph of a layout. Factories replace ancilla cells on
/// the boundary that have exactly two ancilla neighbours.
pub fn build_routing_graph(
    layout: LayoutKind,
    extent: Extent,
    substrate: SubstrateKind,
    factories: &FactoryConfig,
) -> Result<RoutingGraph, GraphError> {
    if substrate == SubstrateKind::Surface && layout != LayoutKind::Pair {
        return Err(GraphError::Incompatible { layout, substrate });
    }
    if factories.reset_period == 0 {
        return Err(GraphError::BadResetPeriod);
    }
    let e = extent;
    if e.width < 3 || e.height < 3 {
        return Err(GraphError::ExtentTooSmall(e.width, e.height));
    }
    let mut kind = cells(layout, e);
    if !kind.iter().any(|k| *k == Some(VertexKind::Data)) {
        return Err(GraphError::ExtentTooSmall(e.width, e.height));
    }
    let idx = |c: usize, r: usize| r * e.width + c;
    let slot_ok = |kind: &Vec<Option<VertexKind>>, c: usize, r: usize| -> bool {
        if kind[idx(c, r)] != Some(VertexKind::Ancilla) {
            return false;
        }
        let nb: Vec<Option<VertexKind>> = grid_neighbors(c, r, e).iter().map(|&(a, b)| kind[idx(a, b)]).collect();
        let present: Vec<VertexKind> = nb.into_iter().flatten().collect();
        present.len() == 2 && present.iter().all(|&k| k == VertexKind::Ancilla) && {
            let mut trial = kind.clone();
            trial[idx(c, r)] = Some(VertexKind::Factory);
            ancilla_connected(&trial, e)
        }
    };
    match &factories.positions {
        Some(pos) => {
            if pos.len() != factories.count {
                return Err(GraphError::NotAPath(format!(
                    "factory count {} does not match {} positions",
                    factories.count,
                    pos.len()
                )));
            }
            for &(c, r) in pos {
                if c >= e.width || r >= e.height || !slot_ok(&kind, c, r) {
                    return Err(GraphError::BadFactoryPosition(if c < e.width && r < e.height { idx(c, r) } else { usize::MAX }));
                }
                kind[idx(c, r)] = Some(VertexKind::Factory);
            }
        }
        None if factories.count > 0 => {
            let ring: Vec<(usize, usize)> = perimeter(e).into_iter().filter(|&(c, r)| slot_ok(&kind, c, r)).collect();
            let n = ring.len();
            if factories.count > n {
                return Err(GraphError::TooManyFactories { requested: factories.count, available: n });
            }
            for i in 0..factories.count {
                let start = i * n / factories.count;
                let pick = (0..n).map(|o| ring[(start + o) % n]).find(|&(c, r)| slot_ok(&kind, c, r));
                match pick {
                    Some((c, r)) => kind[idx(c, r)] = Some(VertexKind::Factory),
                    None => return Err(GraphError::TooManyFactories { requested: factories.count, available: i }),
                }
            }
        }
        None => {}
    }
    let mut id_of = vec![usize::MAX; kind.len()];
    let mut vertices = Vec::new();
    for (cell, k) in kind.iter().enumerate() {
        if let Some(k) = k {
            id_of[cell] = vertices.len();
            vertices.push(Vertex { id: vertices.len(), kind: *k, col: cell % e.width, row: cell / e.width });
        }
    }
    let mut adj: Vec<Vec<(usize, Direction)>> = vec![Vec::new(); vertices.len()];
    for v in &vertices {
        for (c, r) in grid_neighbors(v.col, v.row, e) {
            let u = id_of[idx(c, r)];
            if u != usize::MAX {
                let d = brick_direction((v.col, v.row), (c, r));
                adj[v.id].push((u, d));
            }
        }
    }
    for nb in adj.iter_mut() {
        nb.sort_unstable();
    }
    Ok(RoutingGraph { substrate, layout, extent, vertices, adj })
}

fn ancilla_connected(kind: &[Option<VertexKind>], e: Extent) -> bool {
    let idx = |c: usize, r: usize| r * e.width + c;
    let anc: Vec<usize> = (0..kind.len()).filter(|&v| kind[v] == Some(VertexKind::Ancilla)).collect();
    let Some(&start) = anc.first() else { return true };
    let mut seen = vec![false; kind.len()];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    let mut count = 0;
    while let Some(v) = q.pop_front() {
        count += 1;
        for (c, r) in grid_neighbors(v % e.width, v / e.width, e) {
            let u = idx(c, r);
            if kind[u] == Some(VertexKind::Ancilla) && !seen[u] {
                seen[u] = true;
                q.push_back(u);
            }
        }
    }
    count == anc.len()
}
