//! Logical CNOT+T circuits.
//!
//! Circuits are plain gate lists over integer qubit labels. [`layer_circuit`]
//! groups them greedily into layers of label-disjoint gates, and
//! [`generate_random_circuit`] samples the three benchmark families.

mod gate;
mod layer;
mod random;
mod text;

pub use gate::{Gate, LogicalCircuit};
pub use layer::{layer_circuit, IndexedGate, LayeredCircuit};
pub use random::{generate_random_circuit, Family, RandomCircuitSpec};
pub use text::{parse_circuit, serialize_circuit};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: qubit {label} out of range for {num_qubits} qubits")]
    LabelOutOfRange { line: usize, label: usize, num_qubits: usize },
    #[error("line {line}: cnot control equals target ({label})")]
    ControlEqualsTarget { line: usize, label: usize },
    #[error("missing `qubits <n>` header")]
    MissingHeader,
    #[error("family max requires an even qubit count, got {0}")]
    OddQubitsForMax(usize),
    #[error("invalid random circuit spec: {0}")]
    InvalidSpec(String),
    #[error("cnot ratio of an empty circuit is undefined")]
    EmptyCircuit,
}

/// Exact `#CNOT / (#CNOT + #T)` as a reduced pair `(num, den)`.
pub fn cnot_ratio_exact(c: &LogicalCircuit) -> Result<(usize, usize), CircuitError> {
    let total = c.gates.len();
    if total == 0 {
        return Err(CircuitError::EmptyCircuit);
    }
    let cnots = c.gates.iter().filter(|g| g.is_cnot()).count();
    let g = gcd(cnots, total);
    Ok((cnots / g, total / g))
}

/// `#CNOT / (#CNOT + #T)`.
pub fn cnot_ratio(c: &LogicalCircuit) -> Result<f64, CircuitError> {
    let (n, d) = cnot_ratio_exact(c)?;
    Ok(n as f64 / d as f64)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_examples() {
        let c = LogicalCircuit::new(2, vec![Gate::cnot(0, 1), Gate::t(0)]).unwrap();
        assert_eq!(cnot_ratio(&c).unwrap(), 0.5);
        let c = LogicalCircuit::new(2, vec![Gate::cnot(0, 1), Gate::cnot(1, 0)]).unwrap();
        assert_eq!(cnot_ratio(&c).unwrap(), 1.0);
        let mut gates = vec![Gate::cnot(0, 1); 80];
        gates.extend(vec![Gate::t(1); 20]);
        let c = LogicalCircuit::new(2, gates).unwrap();
        assert_eq!(cnot_ratio_exact(&c).unwrap(), (4, 5));
        assert_eq!(cnot_ratio(&c).unwrap(), 0.8);
        let e = LogicalCircuit::new(2, vec![]).unwrap();
        assert_eq!(cnot_ratio(&e), Err(CircuitError::EmptyCircuit));
    }
}
