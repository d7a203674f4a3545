use crate::CircuitError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Gate {
    Cnot { control: usize, target: usize },
    T { target: usize },
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn t(target: usize) -> Self {
        Gate::T { target }
    }

    pub fn is_cnot(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    /// Labels touched by the gate, control first.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::T { target } => vec![target],
        }
    }

    pub fn touches(&self, q: usize) -> bool {
        self.qubits().contains(&q)
    }

    pub fn shares_qubit(&self, o: &Gate) -> bool {
        self.qubits().iter().any(|&q| o.touches(q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicalCircuit {
    pub num_qubits: usize,
    pub gates: Vec<Gate>,
}

impl LogicalCircuit {
    /// Build a circuit, checking labels and CNOT operands.
    pub fn new(num_qubits: usize, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        for (i, g) in gates.iter().enumerate() {
            check_gate(g, num_qubits, i + 1)?;
        }
        Ok(LogicalCircuit { num_qubits, gates })
    }

    /// Gates acting on `q`, with their positions, in program order.
    pub fn qubit_sequence(&self, q: usize) -> Vec<usize> {
        (0..self.gates.len()).filter(|&i| self.gates[i].touches(q)).collect()
    }
}

pub(crate) fn check_gate(g: &Gate, n: usize, line: usize) -> Result<(), CircuitError> {
    for q in g.qubits() {
        if q >= n {
            return Err(CircuitError::LabelOutOfRange { line, label: q, num_qubits: n });
        }
    }
    if let Gate::Cnot { control, target } = *g {
        if control == target {
            return Err(CircuitError::ControlEqualsTarget { line, label: control });
        }
    }
    Ok(())
}
