use crate::hex::{ColorTiling, HexFace, HexVertex, RegionKey};
use crate::SubstrateError;
use lsc_gf2::Pauli;
use serde::{Deserialize, Serialize};

/// Triangular colour-code patch of distance `2t + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorCodePatch {
    pub t: usize,
    pub distance: usize,
    pub key: RegionKey,
    pub qubits: Vec<HexVertex>,
    /// Faces with their qubit indices; each carries one X and one Z check.
    pub faces: Vec<(HexFace, Vec<usize>)>,
    /// Qubits along each side, one list per line family.
    pub boundaries: [Vec<usize>; 3],
}

/// Faces owned by patch `key` restricted to its qubits, sorted by face.
pub(crate) fn patch_faces(tiling: ColorTiling, key: RegionKey, qubits: &[HexVertex]) -> Vec<(HexFace, Vec<usize>)> {
    let mut faces: Vec<HexFace> = qubits.iter().flat_map(|v| v.faces()).filter(|&f| tiling.face_region(f) == Some(key)).collect();
    faces.sort();
    faces.dedup();
    faces
        .into_iter()
        .map(|f| {
            let mut s: Vec<usize> = f.vertices().iter().filter_map(|v| qubits.binary_search(v).ok()).collect();
            s.sort();
            (f, s)
        })
        .collect()
}

impl ColorCodePatch {
    pub fn n(&self) -> usize {
        self.qubits.len()
    }

    pub fn x_stabilizers(&self) -> Vec<Pauli> {
        self.faces.iter().map(|(_, s)| Pauli::x_type(self.n(), s.iter().copied())).collect()
    }

    pub fn z_stabilizers(&self) -> Vec<Pauli> {
        self.faces.iter().map(|(_, s)| Pauli::z_type(self.n(), s.iter().copied())).collect()
    }

    pub fn logical_x(&self, side: usize) -> Pauli {
        Pauli::x_type(self.n(), self.boundaries[side].iter().copied())
    }

    pub fn logical_z(&self, side: usize) -> Pauli {
        Pauli::z_type(self.n(), self.boundaries[side].iter().copied())
    }
}

/// Patch at the origin of a tiling with parameter `t`.
pub fn build_color_patch(t: usize) -> Result<ColorCodePatch, SubstrateError> {
    if t < 1 {
        return Err(SubstrateError::BadDistance(2 * t + 1));
    }
    Ok(color_patch_at(ColorTiling::new(t), RegionKey::new(0, 0, 0)))
}

pub(crate) fn color_patch_at(tiling: ColorTiling, key: RegionKey) -> ColorCodePatch {
    let qubits = tiling.region_vertices(key);
    let faces = patch_faces(tiling, key, &qubits);
    let mut boundaries: [Vec<usize>; 3] = Default::default();
    for (i, v) in qubits.iter().enumerate() {
        let fam = v.neighbors().iter().filter(|&&u| tiling.region_of(u).is_none()).fold(0, |m, &u| m | tiling.line_families(u));
        for (b, side) in boundaries.iter_mut().enumerate() {
            if fam >> b & 1 == 1 {
                side.push(i);
            }
        }
    }
    ColorCodePatch { t: tiling.t, distance: 2 * tiling.t + 1, key, qubits, faces, boundaries }
}
