//! Dressed-distance search for CSS subsystem codes.
//!
//! For a CSS gauge group the lightest dressed logical can be taken purely
//! X-type or purely Z-type, so each type is searched on its own: a Z-type
//! operator is a dressed logical when it commutes with every X-type
//! stabilizer and lies outside the Z-type part of the gauge group.

use crate::{CodegenError, SubsystemCode};
use lsc_gf2::{nullspace, Basis, Bits, Pauli};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Largest number of supports enumerated per Pauli type.
    pub budget: u64,
    /// Random information sets tried when enumeration is over budget.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 50_000_000, trials: 2000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub target: usize,
    pub passed: bool,
    /// False when part of the search was randomized.
    pub exhaustive: bool,
    /// Lightest dressed logical found below the target, if any.
    pub witness: Option<Pauli>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PauliType {
    X,
    Z,
}

struct TypedProblem {
    n: usize,
    /// Syndrome column of each qubit against the opposite-type stabilizers.
    columns: Vec<Bits>,
    checks: Vec<Bits>,
    gauge: Basis,
    kind: PauliType,
}

impl TypedProblem {
    fn new(code: &SubsystemCode, kind: PauliType) -> Self {
        let n = code.n;
        let part = |p: &Pauli, k: PauliType| match k {
            PauliType::X => p.x.clone(),
            PauliType::Z => p.z.clone(),
        };
        let opposite = match kind {
            PauliType::X => PauliType::Z,
            PauliType::Z => PauliType::X,
        };
        let checks: Vec<Bits> =
            code.stabilizers.iter().map(|p| part(p, opposite)).filter(|v| !v.is_zero()).collect();
        let columns = (0..n).map(|q| Bits::from_indices(checks.len(), (0..checks.len()).filter(|&r| checks[r].get(q)))).collect();
        let gauge_rows: Vec<Bits> = code.gauge_group().iter().map(|p| part(p, kind)).filter(|v| !v.is_zero()).collect();
        TypedProblem { n, columns, checks, gauge: Basis::from_rows(n, &gauge_rows), kind }
    }

    fn is_logical(&self, v: &Bits) -> bool {
        self.checks.iter().all(|c| !c.dot(v)) && !self.gauge.contains(v)
    }

    fn pauli(&self, v: Bits) -> Pauli {
        match self.kind {
            PauliType::X => Pauli { x: v, z: Bits::zeros(self.n) },
            PauliType::Z => Pauli { x: Bits::zeros(self.n), z: v },
        }
    }

    /// Lightest logical of weight at most `max_w`, by enumeration.
    fn enumerate(&self, max_w: usize) -> Option<Bits> {
        let zero = Bits::zeros(self.checks.len());
        for w in 1..=max_w.min(self.n) {
            let mut chosen = Vec::with_capacity(w);
            if let Some(v) = self.rec(0, w, &zero, &mut chosen) {
                return Some(v);
            }
        }
        None
    }

    fn rec(&self, start: usize, left: usize, syn: &Bits, chosen: &mut Vec<usize>) -> Option<Bits> {
        if left == 0 {
            if syn.is_zero() {
                let v = Bits::from_indices(self.n, chosen.iter().copied());
                if !self.gauge.contains(&v) {
                    return Some(v);
                }
            }
            return None;
        }
        for q in start..=self.n - left {
            chosen.push(q);
            let s = syn.xor(&self.columns[q]);
            if let Some(v) = self.rec(q + 1, left - 1, &s, chosen) {
                return Some(v);
            }
            chosen.pop();
        }
        None
    }

    /// Light logicals from random information sets.
    fn sample(&self, trials: usize, rng: &mut ChaCha8Rng) -> Option<Bits> {
        let mut best: Option<Bits> = None;
        let mut order: Vec<usize> = (0..self.n).collect();
        for _ in 0..trials {
            order.shuffle(rng);
            let rows: Vec<Bits> = self
                .checks
                .iter()
                .map(|c| Bits::from_indices(self.n, (0..self.n).filter(|&i| c.get(order[i]))))
                .collect();
            let kernel: Vec<Bits> = nullspace(self.n, &rows)
                .into_iter()
                .map(|v| Bits::from_indices(self.n, v.ones().map(|i| order[i])))
                .collect();
            let mut consider = |v: Bits| {
                if !v.is_zero() && best.as_ref().is_none_or(|b| v.weight() < b.weight()) && self.is_logical(&v) {
                    best = Some(v);
                }
            };
            for (i, a) in kernel.iter().enumerate() {
                consider(a.clone());
                for b in &kernel[i + 1..kernel.len().min(i + 8)] {
                    consider(a.xor(b));
                }
            }
        }
        best
    }
}

fn binomial_sum(n: usize, max_w: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u64 = 1;
    for w in 1..=max_w.min(n) {
        c = c.saturating_mul((n - w + 1) as u64) / w as u64;
        total = total.saturating_add(c);
    }
    total
}

/// Lightest dressed logical of `kind` with weight at most `max_w`, found by
/// exhaustive enumeration. `None` if enumeration would exceed the budget.
pub fn min_dressed_logical(code: &SubsystemCode, kind: PauliType, max_w: usize, budget: u64) -> Option<Option<Pauli>> {
    if binomial_sum(code.n, max_w) > budget {
        return None;
    }
    let p = TypedProblem::new(code, kind);
    Some(p.enumerate(max_w).map(|v| p.pauli(v)))
}

/// Check that no dressed logical lighter than `d_target` exists.
pub fn verify_distance(code: &SubsystemCode, d_target: usize, opts: &SearchOptions) -> Result<DistanceReport, CodegenError> {
    if !code.is_css() {
        return Err(CodegenError::NotCss);
    }
    let mut exhaustive = true;
    let mut witness: Option<Pauli> = None;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for kind in [PauliType::X, PauliType::Z] {
        let p = TypedProblem::new(code, kind);
        let max_w = d_target.saturating_sub(1);
        let found = if binomial_sum(code.n, max_w) <= opts.budget {
            p.enumerate(max_w)
        } else {
            exhaustive = false;
            p.sample(opts.trials, &mut rng).filter(|v| v.weight() < d_target)
        };
        if let Some(v) = found {
            let cand = p.pauli(v);
            if witness.as_ref().is_none_or(|w| cand.weight() < w.weight()) {
                witness = Some(cand);
            }
        }
    }
    Ok(DistanceReport { target: d_target, passed: witness.is_none(), exhaustive, witness })
}
