use crate::{Gate, LogicalCircuit};
use serde::{Deserialize, Serialize};

/// A gate together with its position in the source circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexedGate {
    pub index: usize,
    pub gate: Gate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredCircuit {
    pub num_qubits: usize,
    pub layers: Vec<Vec<IndexedGate>>,
}

impl LayeredCircuit {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn gate_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Sorted labels that occur in at least one gate.
    pub fn active_labels(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_qubits];
        for g in self.layers.iter().flatten() {
            for q in g.gate.qubits() {
                seen[q] = true;
            }
        }
        (0..self.num_qubits).filter(|&q| seen[q]).collect()
    }
}

/// ASAP layering: every gate lands one layer after the latest earlier gate
/// it shares a qubit with.
pub fn layer_circuit(c: &LogicalCircuit) -> LayeredCircuit {
    let mut last: Vec<Option<usize>> = vec![None; c.num_qubits];
    let mut layers: Vec<Vec<IndexedGate>> = Vec::new();
    for (index, gate) in c.gates.iter().enumerate() {
        let qs = gate.qubits();
        let at = qs.iter().filter_map(|&q| last[q]).max().map_or(0, |l| l + 1);
        if at == layers.len() {
            layers.push(Vec::new());
        }
        layers[at].push(IndexedGate { index, gate: *gate });
        for q in qs {
            last[q] = Some(at);
        }
    }
    LayeredCircuit { num_qubits: c.num_qubits, layers }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn indices(l: &LayeredCircuit) -> Vec<Vec<usize>> {
        l.layers.iter().map(|ly| ly.iter().map(|g| g.index).collect()).collect()
    }

    #[test]
    fn conflict_on_middle_qubits() {
        let c = LogicalCircuit::new(4, vec![Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(1, 2)]).unwrap();
        assert_eq!(indices(&layer_circuit(&c)), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn empty_and_serial() {
        let c = LogicalCircuit::new(1, vec![]).unwrap();
        assert_eq!(layer_circuit(&c).depth(), 0);
        let c = LogicalCircuit::new(1, vec![Gate::t(0); 3]).unwrap();
        assert_eq!(indices(&layer_circuit(&c)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn late_gate_can_fill_early_layer() {
        let c = LogicalCircuit::new(4, vec![Gate::cnot(0, 1), Gate::cnot(0, 1), Gate::t(3)]).unwrap();
        assert_eq!(indices(&layer_circuit(&c)), vec![vec![0, 2], vec![1]]);
    }
}
