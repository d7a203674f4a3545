use crate::instance::MergeInstance;
use crate::CodegenError;
use lsc_gf2::{Basis, Bits, Pauli};
use serde::{Deserialize, Serialize};

/// Merged generators whose joint outcome is the logical product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementSubset {
    /// Indices into the merged generator list.
    pub indices: Vec<usize>,
    pub operators: Vec<Pauli>,
    pub target: Pauli,
}

impl MeasurementSubset {
    pub fn product(&self) -> Pauli {
        let n = self.target.num_qubits();
        self.operators.iter().fold(Pauli::identity(n), |acc, p| acc.mul(p))
    }

    /// Number of elements of M acting on each qubit.
    pub fn coverage(&self) -> Vec<usize> {
        let n = self.target.num_qubits();
        let mut c = vec![0; n];
        for p in &self.operators {
            for q in p.support().ones() {
                c[q] += 1;
            }
        }
        c
    }
}

/// Qubit-by-qubit parity findings; empty lists mean the subset is sound.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Qubits off the target covered an odd number of times.
    pub odd_off_target: Vec<usize>,
    /// Target qubits not covered exactly once.
    pub target_not_once: Vec<usize>,
}

impl ParityReport {
    pub fn ok(&self) -> bool {
        self.odd_off_target.is_empty() && self.target_not_once.is_empty()
    }
}

pub fn parity_report(m: &MeasurementSubset) -> ParityReport {
    let cov = m.coverage();
    let target = m.target.support();
    let mut r = ParityReport::default();
    for (q, &c) in cov.iter().enumerate() {
        if target.get(q) {
            if c != 1 {
                r.target_not_once.push(q);
            }
        } else if c % 2 == 1 {
            r.odd_off_target.push(q);
        }
    }
    r
}

/// All new checks plus the snake checks needed to cancel their product
/// off the two logical boundaries.
pub fn select_measurement_subset(inst: &MergeInstance, merged: &[Pauli]) -> Result<MeasurementSubset, CodegenError> {
    let n = inst.n;
    let key = |p: &Pauli| p.to_symplectic();
    let position = |p: &Pauli| merged.iter().position(|q| key(q) == key(p));
    let mut ops: Vec<Pauli> = inst.new_checks.clone();
    let mut prod = Pauli::identity(n);
    for p in &ops {
        prod.mul_assign(p);
    }
    let need = prod.mul(&inst.target).to_symplectic();
    let rows: Vec<Bits> = inst.snake_checks.iter().map(|(_, p)| key(p)).collect();
    let basis = Basis::from_rows(2 * n, &rows);
    let combo = basis.solve(&need).ok_or(CodegenError::NoMeasurementSubset)?;
    ops.extend(combo.iter().map(|&i| inst.snake_checks[i].1.clone()));
    let indices = ops.iter().map(|p| position(p).ok_or(CodegenError::NoMeasurementSubset)).collect::<Result<Vec<_>, _>>()?;
    Ok(MeasurementSubset { indices, operators: ops, target: inst.target.clone() })
}
