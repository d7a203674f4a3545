use crate::gate::check_gate;
use crate::{CircuitError, Gate, LogicalCircuit};
use std::fmt::Write;

/// Parse the line format: a `qubits <n>` header, then `cnot <c> <t>` or
/// `t <q>` lines. `#` starts a comment; blank lines are ignored.
pub fn parse_circuit(text: &str) -> Result<LogicalCircuit, CircuitError> {
    let mut num_qubits: Option<usize> = None;
    let mut gates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| -> Result<usize, CircuitError> {
            s.parse::<usize>().map_err(|_| CircuitError::Syntax { line, msg: format!("expected a non-negative integer, got `{s}`") })
        };
        let Some(n) = num_qubits else {
            match toks.as_slice() {
                ["qubits", v] => {
                    num_qubits = Some(num(v)?);
                    continue;
                }
                _ => return Err(CircuitError::Syntax { line, msg: "expected `qubits <n>` header".into() }),
            }
        };
        let g = match toks.as_slice() {
            ["cnot", c, t] => Gate::cnot(num(c)?, num(t)?),
            ["t", q] => Gate::t(num(q)?),
            ["qubits", _] => return Err(CircuitError::Syntax { line, msg: "duplicate header".into() }),
            _ => return Err(CircuitError::Syntax { line, msg: format!("unrecognised gate line `{body}`") }),
        };
        check_gate(&g, n, line)?;
        gates.push(g);
    }
    let n = num_qubits.ok_or(CircuitError::MissingHeader)?;
    Ok(LogicalCircuit { num_qubits: n, gates })
}

pub fn serialize_circuit(c: &LogicalCircuit) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "qubits {}", c.num_qubits);
    for g in &c.gates {
        let _ = match *g {
            Gate::Cnot { control, target } => writeln!(s, "cnot {control} {target}"),
            Gate::T { target } => writeln!(s, "t {target}"),
        };
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription() {
        let c = parse_circuit("qubits 2\ncnot 0 1").unwrap();
        assert_eq!(c, LogicalCircuit { num_qubits: 2, gates: vec![Gate::cnot(0, 1)] });
        let c = parse_circuit("qubits 1\nt 0").unwrap();
        assert_eq!(c.gates, vec![Gate::t(0)]);
    }

    #[test]
    fn comments_and_blanks() {
        let c = parse_circuit("# header\n\nqubits 3 # three\n  cnot 2 0\n\n# done\n").unwrap();
        assert_eq!(c.num_qubits, 3);
        assert_eq!(c.gates, vec![Gate::cnot(2, 0)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_circuit("qubits 2\ncnot 0 0"),
            Err(CircuitError::ControlEqualsTarget { line: 2, label: 0 })
        );
        assert_eq!(
            parse_circuit("qubits 2\n\nt 5"),
            Err(CircuitError::LabelOutOfRange { line: 3, label: 5, num_qubits: 2 })
        );
        assert!(matches!(parse_circuit("qubits 2\nh 0"), Err(CircuitError::Syntax { line: 2, .. })));
        assert!(matches!(parse_circuit("cnot 0 1"), Err(CircuitError::Syntax { line: 1, .. })));
        assert_eq!(parse_circuit("# nothing"), Err(CircuitError::MissingHeader));
    }
}
