use crate::{CircuitError, Gate, LogicalCircuit};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// At most two gates per layer.
    Seq,
    /// Uniformly random operands.
    Rand,
    /// Perfect matchings, `q/2` gates per layer.
    Max,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Seq, Family::Rand, Family::Max];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Seq => "seq",
            Family::Rand => "rand",
            Family::Max => "max",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "seq" => Ok(Family::Seq),
            "rand" => Ok(Family::Rand),
            "max" => Ok(Family::Max),
            _ => Err(format!("unknown circuit family `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomCircuitSpec {
    pub family: Family,
    pub num_qubits: usize,
    pub total_gates: usize,
    pub cnot_ratio: f64,
    pub seed: u64,
}

impl RandomCircuitSpec {
    /// `4q` gates, CNOT only.
    pub fn new(family: Family, num_qubits: usize, seed: u64) -> Self {
        RandomCircuitSpec { family, num_qubits, total_gates: 4 * num_qubits, cnot_ratio: 1.0, seed }
    }

    pub fn with_ratio(mut self, r: f64) -> Self {
        self.cnot_ratio = r;
        self
    }

    pub fn with_gates(mut self, n: usize) -> Self {
        self.total_gates = n;
        self
    }

    fn validate(&self) -> Result<(), CircuitError> {
        if !(0.0..=1.0).contains(&self.cnot_ratio) {
            return Err(CircuitError::InvalidSpec(format!("cnot ratio {} outside [0, 1]", self.cnot_ratio)));
        }
        if self.total_gates == 0 {
            return Ok(());
        }
        let need = match self.family {
            Family::Seq => 4,
            Family::Rand | Family::Max => 2,
        };
        let need = if self.cnot_ratio == 0.0 { 1 } else { need };
        if self.num_qubits < need {
            return Err(CircuitError::InvalidSpec(format!(
                "family {} needs at least {need} qubits, got {}",
                self.family, self.num_qubits
            )));
        }
        if self.family == Family::Max && self.num_qubits % 2 == 1 {
            return Err(CircuitError::OddQubitsForMax(self.num_qubits));
        }
        Ok(())
    }
}

/// Sample a circuit of the requested family. Deterministic in `spec.seed`.
pub fn generate_random_circuit(spec: &RandomCircuitSpec) -> Result<LogicalCircuit, CircuitError> {
    if spec.family == Family::Max && spec.num_qubits % 2 == 1 {
        return Err(CircuitError::OddQubitsForMax(spec.num_qubits));
    }
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let q = spec.num_qubits;
    // slot kinds are drawn first so the CNOT fraction does not depend on family
    let is_t: Vec<bool> = (0..spec.total_gates).map(|_| rng.gen_bool(1.0 - spec.cnot_ratio)).collect();
    let gates = match spec.family {
        Family::Rand => rand_family(&mut rng, q, &is_t),
        Family::Seq => seq_family(&mut rng, q, &is_t),
        Family::Max => max_family(&mut rng, q, &is_t),
    };
    LogicalCircuit::new(q, gates)
}

fn rand_family(rng: &mut ChaCha8Rng, q: usize, is_t: &[bool]) -> Vec<Gate> {
    is_t.iter()
        .map(|&t| {
            if t {
                Gate::t(rng.gen_range(0..q))
            } else {
                let pick = rand::seq::index::sample(rng, q, 2);
                Gate::cnot(pick.index(0), pick.index(1))
            }
        })
        .collect()
}

fn fresh(rng: &mut ChaCha8Rng, q: usize, avoid: &[usize]) -> usize {
    loop {
        let c = rng.gen_range(0..q);
        if !avoid.contains(&c) {
            return c;
        }
    }
}

// Gates come in label-disjoint pairs. Each gate of a pair keeps exactly one
// label of the gate in the same slot of the previous pair, which chains the
// pairs into layers of two.
fn seq_family(rng: &mut ChaCha8Rng, q: usize, is_t: &[bool]) -> Vec<Gate> {
    let mut out: Vec<Gate> = Vec::with_capacity(is_t.len());
    let mut prev: Option<[Gate; 2]> = None;
    for chunk in is_t.chunks(2) {
        let mut used: Vec<usize> = Vec::new();
        let mut pair: Vec<Gate> = Vec::with_capacity(2);
        for (slot, &t) in chunk.iter().enumerate() {
            let kept = prev.map(|p| p[slot].qubits());
            let options: Vec<usize> = kept.iter().flatten().copied().filter(|l| !used.contains(l)).collect();
            let a = if options.is_empty() { fresh(rng, q, &used) } else { options[rng.gen_range(0..options.len())] };
            used.push(a);
            let g = if t {
                Gate::t(a)
            } else {
                let all_prev: Vec<usize> = prev.iter().flat_map(|p| p.iter().flat_map(|g| g.qubits())).collect();
                let tiers = [all_prev, kept.clone().unwrap_or_default(), Vec::new()];
                let avoid = tiers
                    .iter()
                    .map(|extra| {
                        let mut v = used.clone();
                        v.extend(extra);
                        v.sort_unstable();
                        v.dedup();
                        v
                    })
                    .find(|v| v.len() < q)
                    .unwrap_or_else(|| used.clone());
                let b = fresh(rng, q, &avoid);
                used.push(b);
                if rng.gen_bool(0.5) {
                    Gate::cnot(a, b)
                } else {
                    Gate::cnot(b, a)
                }
            };
            pair.push(g);
        }
        out.extend(pair.iter().copied());
        prev = if pair.len() == 2 { Some([pair[0], pair[1]]) } else { None };
    }
    out
}

fn max_family(rng: &mut ChaCha8Rng, q: usize, is_t: &[bool]) -> Vec<Gate> {
    let mut out = Vec::with_capacity(is_t.len());
    let half = q / 2;
    let mut labels: Vec<usize> = (0..q).collect();
    for block in is_t.chunks(half) {
        labels.shuffle(rng);
        for (k, &t) in block.iter().enumerate() {
            let (a, b) = (labels[2 * k], labels[2 * k + 1]);
            out.push(if t { Gate::t(a) } else { Gate::cnot(a, b) });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cnot_ratio, layer_circuit};

    #[test]
    fn seq_layers_have_at_most_two_gates() {
        for seed in 0..20 {
            let c = generate_random_circuit(&RandomCircuitSpec::new(Family::Seq, 24, seed)).unwrap();
            assert_eq!(c.gates.len(), 96);
            let l = layer_circuit(&c);
            assert!(l.layers.iter().all(|ly| ly.len() <= 2));
        }
    }

    #[test]
    fn max_layers_are_matchings() {
        let c = generate_random_circuit(&RandomCircuitSpec::new(Family::Max, 24, 7)).unwrap();
        let l = layer_circuit(&c);
        assert_eq!(l.depth(), 8);
        assert!(l.layers.iter().all(|ly| ly.len() == 12));
    }

    #[test]
    fn rand_ratio_close_to_requested() {
        let spec = RandomCircuitSpec::new(Family::Rand, 4, 3).with_gates(1000).with_ratio(0.8);
        let c = generate_random_circuit(&spec).unwrap();
        let r = cnot_ratio(&c).unwrap();
        assert!((r - 0.8).abs() <= 0.05, "ratio {r}");
    }

    #[test]
    fn odd_max_rejected() {
        let e = generate_random_circuit(&RandomCircuitSpec::new(Family::Max, 5, 0));
        assert_eq!(e, Err(CircuitError::OddQubitsForMax(5)));
    }

    #[test]
    fn same_seed_same_circuit() {
        for fam in Family::ALL {
            let s = RandomCircuitSpec::new(fam, 12, 99).with_ratio(0.7);
            assert_eq!(generate_random_circuit(&s), generate_random_circuit(&s));
        }
    }
}
