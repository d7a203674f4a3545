use crate::{Direction, GraphError, RoutingGraph, SubstrateKind, VertexKind};

/// Whether `path` can carry a lattice-surgery merge: endpoints are data or
/// factory vertices, the interior is ancilla, there is room for a logical
/// ancilla (two or more edges), and on the surface substrate all three edge
/// directions occur.
pub fn is_valid_path(g: &RoutingGraph, path: &[usize]) -> Result<bool, GraphError> {
    if path.len() < 2 {
        return Err(GraphError::NotAPath("fewer than two vertices".into()));
    }
    let mut seen = vec![false; g.len()];
    for &v in path {
        if v >= g.len() {
            return Err(GraphError::NotAPath(format!("unknown vertex {v}")));
        }
        if seen[v] {
            return Err(GraphError::NotAPath(format!("vertex {v} repeats")));
        }
        seen[v] = true;
    }
    let mut mask = 0u8;
    for w in path.windows(2) {
        let d: Direction = g
            .edge_direction(w[0], w[1])
            .ok_or_else(|| GraphError::NotAPath(format!("{} and {} are not adjacent", w[0], w[1])))?;
        mask |= d.bit();
    }
    let end_ok = |v: usize| matches!(g.kind(v), VertexKind::Data | VertexKind::Factory);
    if !end_ok(path[0]) || !end_ok(path[path.len() - 1]) {
        return Ok(false);
    }
    if path[1..path.len() - 1].iter().any(|&v| g.kind(v) != VertexKind::Ancilla) {
        return Ok(false);
    }
    if path.len() < 3 {
        return Ok(false);
    }
    Ok(match g.substrate {
        SubstrateKind::Color => true,
        SubstrateKind::Surface => mask == Direction::ALL_BITS,
    })
}
