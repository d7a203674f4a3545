//! Unrotated surface-code geometry and its folded form.
//!
//! A distance-`d` patch occupies the lattice diamond `|x| + |y| ≤ d − 1`.
//! Checks sit on unit squares (named by their lower-left corner) restricted
//! to the diamond; a square is X-type when its corner has even parity.

use crate::SubstrateError;
use lsc_gf2::Pauli;
use serde::{Deserialize, Serialize};

pub type Site = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckType {
    X,
    Z,
}

pub fn square_type(corner: Site) -> CheckType {
    if (corner.0 + corner.1).rem_euclid(2) == 0 {
        CheckType::X
    } else {
        CheckType::Z
    }
}

/// Sites of the diamond of radius `d − 1` around `center`, sorted.
pub fn diamond(center: Site, d: usize) -> Vec<Site> {
    let r = d as i64 - 1;
    let mut out = Vec::new();
    for x in center.0 - r..=center.0 + r {
        for y in center.1 - r..=center.1 + r {
            if (x - center.0).abs() + (y - center.1).abs() <= r {
                out.push((x, y));
            }
        }
    }
    out
}

/// Unit squares meeting a sorted site list, as (corner, site indices),
/// keeping those with at least `min_weight` sites.
pub fn square_faces(sites: &[Site], min_weight: usize) -> Vec<(Site, Vec<usize>)> {
    let mut corners: Vec<Site> =
        sites.iter().flat_map(|&(x, y)| [(x, y), (x - 1, y), (x, y - 1), (x - 1, y - 1)]).collect();
    corners.sort();
    corners.dedup();
    corners
        .into_iter()
        .filter_map(|(i, j)| {
            let s: Vec<usize> =
                [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)].iter().filter_map(|p| sites.binary_search(p).ok()).collect();
            let mut s = s;
            s.sort();
            (s.len() >= min_weight).then_some(((i, j), s))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceFace {
    pub corner: Site,
    pub kind: CheckType,
    pub qubits: Vec<usize>,
}

/// Surface-code patch folded along the vertical axis `x = 0`. The fold maps
/// qubit `(x, y)` onto `(−x, y)`; qubits with `x > 0` form the top layer and
/// those with `x < 0` the bottom layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldedSurfacePatch {
    pub distance: usize,
    pub qubits: Vec<Site>,
    pub faces: Vec<SurfaceFace>,
    /// Qubit involution induced by the fold.
    pub fold: Vec<usize>,
    /// Face involution induced by the fold.
    pub face_fold: Vec<usize>,
}

impl FoldedSurfacePatch {
    pub fn n(&self) -> usize {
        self.qubits.len()
    }

    pub fn stabilizers(&self, kind: CheckType) -> Vec<Pauli> {
        self.faces
            .iter()
            .filter(|f| f.kind == kind)
            .map(|f| match kind {
                CheckType::X => Pauli::x_type(self.n(), f.qubits.iter().copied()),
                CheckType::Z => Pauli::z_type(self.n(), f.qubits.iter().copied()),
            })
            .collect()
    }

    fn edge(&self, dx: i64, dy: i64) -> Vec<usize> {
        let r = self.distance as i64 - 1;
        (0..=r).map(|s| self.qubits.binary_search(&(dx * s, dy * (r - s))).unwrap()).collect()
    }

    /// X string along the north-east edge.
    pub fn logical_x(&self) -> Pauli {
        Pauli::x_type(self.n(), self.edge(1, 1))
    }

    /// Z string along the south-east edge.
    pub fn logical_z(&self) -> Pauli {
        Pauli::z_type(self.n(), self.edge(1, -1))
    }

    /// Qubits on the fold line.
    pub fn fold_line(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.fold[i] == i).collect()
    }
}

pub fn build_folded_surface_patch(d: usize) -> Result<FoldedSurfacePatch, SubstrateError> {
    if d < 3 || d % 2 == 0 {
        return Err(SubstrateError::BadDistance(d));
    }
    let qubits = diamond((0, 0), d);
    let faces: Vec<SurfaceFace> = square_faces(&qubits, 2)
        .into_iter()
        .map(|(corner, qubits)| SurfaceFace { corner, kind: square_type(corner), qubits })
        .collect();
    let fold = qubits.iter().map(|&(x, y)| qubits.binary_search(&(-x, y)).unwrap()).collect();
    let face_fold = faces
        .iter()
        .map(|f| {
            let image = (-f.corner.0 - 1, f.corner.1);
            faces.iter().position(|g| g.corner == image).expect("fold maps faces to faces")
        })
        .collect();
    Ok(FoldedSurfacePatch { distance: d, qubits, faces, fold, face_fold })
}

/// Centre of the footprint diamond holding the pair whose top half sits at
/// brick position `(col, row)`.
pub fn pair_center(col: usize, row: usize, d: usize) -> Site {
    let (c, r) = (col as i64, row as i64);
    let rr = d as i64 - 1;
    let alpha = (c + r - 1).div_euclid(2);
    let beta = (r - c + 1).div_euclid(2);
    (alpha * rr + beta * (rr + 1), alpha * (rr + 1) - beta * rr)
}

/// Footprint of one folded patch: the half diamond on the side of the pair
/// that faces the brick position. The top half owns the fold line.
pub fn pair_half(col: usize, row: usize, d: usize) -> Vec<Site> {
    let up = lsc_graph::is_up(col, row);
    let (cx, cy) = if up { pair_center(col, row, d) } else { pair_center(col, row + 1, d) };
    diamond((cx, cy), d).into_iter().filter(|&(x, _)| if up { x >= cx } else { x < cx }).collect()
}
