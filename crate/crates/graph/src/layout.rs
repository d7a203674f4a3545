use crate::is_up;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutKind {
    Hexagonal,
    Row,
    Pair,
}

impl LayoutKind {
    pub const ALL: [LayoutKind; 3] = [LayoutKind::Hexagonal, LayoutKind::Row, LayoutKind::Pair];

    /// Whether the grid position hosts a data patch, ignoring the boundary
    /// margin.
    pub fn is_data(self, col: usize, row: usize) -> bool {
        let (c, r) = (col as i64, row as i64);
        match self {
            // every third up vertex along the diagonal classes
            LayoutKind::Hexagonal => {
                is_up(col, row) && {
                    let j = (c + r - 1) / 2;
                    (j + r).rem_euclid(3) == 0
                }
            }
            // every other up vertex on even rows
            LayoutKind::Row => r % 2 == 0 && is_up(col, row) && (c - 1 - r).div_euclid(2).rem_euclid(2) == 0,
            // vertical up/down pairs
            LayoutKind::Pair => c.rem_euclid(8) == 3 && (r.rem_euclid(4) == 2 || r.rem_euclid(4) == 1),
        }
    }
}

impl fmt::Display for LayoutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LayoutKind::Hexagonal => "hexagonal",
            LayoutKind::Row => "row",
            LayoutKind::Pair => "pair",
        })
    }
}

impl FromStr for LayoutKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hexagonal" | "hex" => Ok(LayoutKind::Hexagonal),
            "row" => Ok(LayoutKind::Row),
            "pair" => Ok(LayoutKind::Pair),
            _ => Err(format!("unknown layout `{s}`")),
        }
    }
}

/// Size of the brick-wall grid in columns and rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Extent {
    pub width: usize,
    pub height: usize,
}

impl Extent {
    pub fn new(width: usize, height: usize) -> Self {
        Extent { width, height }
    }

    /// Smallest extent of the family `(3s/2 + 1, s)` whose graph hosts at
    /// least `q` data vertices.
    pub fn for_data(layout: LayoutKind, q: usize) -> Extent {
        for s in 3.. {
            let e = Extent::new(3 * s / 2 + 1, s);
            if crate::build::data_positions(layout, e).len() >= q {
                return e;
            }
        }
        unreachable!()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackingRatio {
    pub value: f64,
    pub data: usize,
    pub total: usize,
    /// False when the value was read off a single finite window.
    pub asymptotic: bool,
}

/// Data fraction of one finite window (margin and pruning included).
pub fn packing_ratio_on(layout: LayoutKind, extent: Extent) -> PackingRatio {
    let data = crate::build::data_positions(layout, extent).len();
    let total = extent.width * extent.height;
    PackingRatio { value: data as f64 / total.max(1) as f64, data, total, asymptotic: false }
}

/// Asymptotic data fraction: density of the layout pattern on windows of
/// doubling size until two successive values agree to 1e-3.
pub fn packing_ratio(layout: LayoutKind) -> PackingRatio {
    let density = |s: usize| {
        let data = (0..s).flat_map(|r| (0..s).map(move |c| (c, r))).filter(|&(c, r)| layout.is_data(c, r)).count();
        (data, s * s)
    };
    let mut s = 10;
    let mut prev = density(s);
    loop {
        s *= 2;
        let cur = density(s);
        let a = prev.0 as f64 / prev.1 as f64;
        let b = cur.0 as f64 / cur.1 as f64;
        if (a - b).abs() < 1e-3 {
            return PackingRatio { value: b, data: cur.0, total: cur.1, asymptotic: true };
        }
        prev = cur;
    }
}
