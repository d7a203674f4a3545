use crate::CodegenError;
use lsc_graph::SubstrateKind;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MergeBasis {
    ZZ,
    XX,
}

impl fmt::Display for MergeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MergeBasis::ZZ => "zz",
            MergeBasis::XX => "xx",
        })
    }
}

impl FromStr for MergeBasis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "zz" => Ok(MergeBasis::ZZ),
            "xx" => Ok(MergeBasis::XX),
            _ => Err(format!("unknown merge basis `{s}`")),
        }
    }
}

/// A two-patch merge along a snake of ancilla patches. Patches are named by
/// their brick-wall grid positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeSpec {
    pub substrate: SubstrateKind,
    pub distance: usize,
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub snake: Vec<(usize, usize)>,
    pub basis: MergeBasis,
    /// Snake position that hosts the logical ancilla of a CNOT.
    pub ancilla_slot: usize,
}

impl MergeSpec {
    /// Straight snake of `len` patches along brick row `row`, starting at
    /// column `col`.
    pub fn straight(substrate: SubstrateKind, distance: usize, len: usize, basis: MergeBasis) -> Self {
        let (col, row) = (2, 2);
        MergeSpec {
            substrate,
            distance,
            left: (col, row),
            right: (col + len + 1, row),
            snake: (1..=len).map(|i| (col + i, row)).collect(),
            basis,
            ancilla_slot: 0,
        }
    }

    /// Left patch, snake and right patch in order.
    pub fn chain(&self) -> Vec<(usize, usize)> {
        let mut c = vec![self.left];
        c.extend(&self.snake);
        c.push(self.right);
        c
    }

    pub fn validate(&self) -> Result<(), CodegenError> {
        if self.distance < 3 || self.distance % 2 == 0 {
            return Err(CodegenError::BadSpec(format!("distance {} must be odd and at least 3", self.distance)));
        }
        if self.snake.is_empty() {
            return Err(CodegenError::BadSpec("snake must contain at least one ancilla patch".into()));
        }
        if self.ancilla_slot >= self.snake.len() {
            return Err(CodegenError::BadSpec(format!("ancilla slot {} outside the snake", self.ancilla_slot)));
        }
        let chain = self.chain();
        let mut sorted = chain.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != chain.len() {
            return Err(CodegenError::BadSpec("patches repeat along the snake".into()));
        }
        for (i, w) in chain.windows(2).enumerate() {
            if !brick_adjacent(w[0], w[1]) {
                return Err(CodegenError::NotAdjacent(i));
            }
        }
        Ok(())
    }
}

fn brick_adjacent(a: (usize, usize), b: (usize, usize)) -> bool {
    let (dc, dr) = (a.0.abs_diff(b.0), a.1.abs_diff(b.1));
    match (dc, dr) {
        (1, 0) => true,
        (0, 1) => {
            // the vertical edge leaves an up vertex downwards
            let (lo, hi) = if a.1 < b.1 { (a, b) } else { (b, a) };
            lsc_graph::is_up(hi.0, hi.1) && !lsc_graph::is_up(lo.0, lo.1)
        }
        _ => false,
    }
}
