//! Honeycomb geometry underlying the colour-code substrate.
//!
//! Vertices come in two sublattices. `U(a, b)` sits at `(3a+1, 3b+1)` and
//! `D(a, b)` at `(3a+2, 3b+2)` in skewed lattice coordinates; hexagonal faces
//! are centred at `(3a, 3b)`. Triangular patches are cut out by three
//! families of parallel lines spaced `3S` apart with `S = 3t + 3`; vertices
//! lying on a line belong to no patch and serve as corridor qubits between
//! neighbouring patches.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HexVertex {
    pub up: bool,
    pub a: i64,
    pub b: i64,
}

impl HexVertex {
    pub fn u(a: i64, b: i64) -> Self {
        HexVertex { up: true, a, b }
    }

    pub fn d(a: i64, b: i64) -> Self {
        HexVertex { up: false, a, b }
    }

    pub fn coord(self) -> (i64, i64) {
        if self.up {
            (3 * self.a + 1, 3 * self.b + 1)
        } else {
            (3 * self.a + 2, 3 * self.b + 2)
        }
    }

    pub fn neighbors(self) -> [HexVertex; 3] {
        let (a, b) = (self.a, self.b);
        if self.up {
            [HexVertex::d(a, b), HexVertex::d(a - 1, b), HexVertex::d(a, b - 1)]
        } else {
            [HexVertex::u(a, b), HexVertex::u(a + 1, b), HexVertex::u(a, b + 1)]
        }
    }

    /// The three faces meeting at this vertex.
    pub fn faces(self) -> [HexFace; 3] {
        let (a, b) = (self.a, self.b);
        if self.up {
            [HexFace { a, b }, HexFace { a: a + 1, b }, HexFace { a, b: b + 1 }]
        } else {
            [HexFace { a: a + 1, b }, HexFace { a, b: b + 1 }, HexFace { a: a + 1, b: b + 1 }]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HexFace {
    pub a: i64,
    pub b: i64,
}

impl HexFace {
    pub fn vertices(self) -> [HexVertex; 6] {
        let (a, b) = (self.a, self.b);
        [
            HexVertex::u(a, b),
            HexVertex::u(a - 1, b),
            HexVertex::u(a, b - 1),
            HexVertex::d(a - 1, b),
            HexVertex::d(a, b - 1),
            HexVertex::d(a - 1, b - 1),
        ]
    }

    /// Proper three-colouring of the faces.
    pub fn color(self) -> u8 {
        (self.a - self.b).rem_euclid(3) as u8
    }

    pub fn center(self) -> (i64, i64) {
        (3 * self.a, 3 * self.b)
    }
}

/// Index of a triangular patch: the strip indices along the three line
/// families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionKey {
    pub j: i64,
    pub k: i64,
    pub i: i64,
}

impl RegionKey {
    pub fn new(j: i64, k: i64, i: i64) -> Self {
        RegionKey { j, k, i }
    }

    /// Patch hosting the brick-wall grid position `(col, row)`.
    pub fn of_brick(col: usize, row: usize) -> Self {
        let (c, r) = (col as i64, row as i64);
        if lsc_graph::is_up(col, row) {
            let j = (c + r - 1) / 2;
            RegionKey::new(j, r, j - r)
        } else {
            let j = (c + r) / 2;
            RegionKey::new(j, r, j - r - 1)
        }
    }

    /// Whether the triangle points towards increasing `j`.
    pub fn is_up(self) -> bool {
        self.i == self.j - self.k
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorTiling {
    pub t: usize,
}

impl ColorTiling {
    pub fn new(t: usize) -> Self {
        ColorTiling { t }
    }

    fn period(self) -> i64 {
        3 * (3 * self.t as i64 + 3)
    }

    fn classify_point(self, (x, y): (i64, i64)) -> Option<RegionKey> {
        let p = self.period();
        let f = 2 * x + y - 3;
        let h = x + 2 * y;
        if f.rem_euclid(p) == 0 || h.rem_euclid(p) == 0 || (f - h).rem_euclid(p) == 0 {
            return None;
        }
        Some(RegionKey::new(f.div_euclid(p), h.div_euclid(p), (f - h).div_euclid(p)))
    }

    /// Patch containing `v`, or `None` for a line vertex.
    pub fn region_of(self, v: HexVertex) -> Option<RegionKey> {
        self.classify_point(v.coord())
    }

    /// Patch owning face `f` (by its centre).
    pub fn face_region(self, f: HexFace) -> Option<RegionKey> {
        self.classify_point(f.center())
    }

    /// Which line families pass through a line vertex, as bits 0 (f), 1 (h)
    /// and 2 (f − h).
    pub fn line_families(self, v: HexVertex) -> u8 {
        let p = self.period();
        let (x, y) = v.coord();
        let f = 2 * x + y - 3;
        let h = x + 2 * y;
        (f.rem_euclid(p) == 0) as u8 | ((h.rem_euclid(p) == 0) as u8) << 1 | (((f - h).rem_euclid(p) == 0) as u8) << 2
    }

    /// All vertices of a patch, sorted.
    pub fn region_vertices(self, key: RegionKey) -> Vec<HexVertex> {
        let s = 3 * self.t as i64 + 3;
        let (j, k) = (key.j, key.k);
        let (x0, x1) = (2 * s * j + 2 - s * (k + 1), 2 * s * (j + 1) + 2 - s * k);
        let (y0, y1) = (2 * s * k - s * (j + 1) - 1, 2 * s * (k + 1) - s * j - 1);
        let mut out = Vec::new();
        for a in x0.div_euclid(3) - 1..=x1.div_euclid(3) + 1 {
            for b in y0.div_euclid(3) - 1..=y1.div_euclid(3) + 1 {
                for v in [HexVertex::u(a, b), HexVertex::d(a, b)] {
                    if self.region_of(v) == Some(key) {
                        out.push(v);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Line vertices joined to both patches by honeycomb edges, as the
    /// adjacent pairs they form. Empty when the patches do not touch.
    pub fn wall(self, k1: RegionKey, k2: RegionKey) -> Vec<(HexVertex, HexVertex)> {
        let touches = |v: HexVertex, k: RegionKey| v.neighbors().iter().any(|&u| self.region_of(u) == Some(k));
        let mut cand: Vec<HexVertex> = self
            .region_vertices(k1)
            .iter()
            .flat_map(|v| v.neighbors())
            .filter(|&u| self.region_of(u).is_none() && touches(u, k2))
            .collect();
        cand.sort();
        cand.dedup();
        let mut pairs = Vec::new();
        for &v in &cand {
            for u in v.neighbors() {
                if u > v && cand.binary_search(&u).is_ok() {
                    pairs.push((v, u));
                }
            }
        }
        pairs
    }
}
