//! Text dump of a merge: one operator per line, `X:{..} Z:{..} TAG`.
//!
//! Tags: `S` stabilizer, `G` gauge generator, `I` intermediary check,
//! `M` member of the measurement subset. A header line starting with `#`
//! carries the qubit count.

use crate::{parity_report, verify_distance, CodegenError, DistanceReport, MeasurementSubset, ParityReport, SearchOptions, SubsystemCode};
use lsc_gf2::{Basis, Bits, Pauli};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    S,
    G,
    I,
    M,
}

impl Tag {
    fn as_str(self) -> &'static str {
        match self {
            Tag::S => "S",
            Tag::G => "G",
            Tag::I => "I",
            Tag::M => "M",
        }
    }
}

fn set(b: &Bits) -> String {
    let v: Vec<String> = b.ones().map(|i| i.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn format_line(p: &Pauli, tag: Tag) -> String {
    format!("X:{} Z:{} {}", set(&p.x), set(&p.z), tag.as_str())
}

// gauge generators not already spanned by S and the intermediary set
fn extra_gauge(code: &SubsystemCode) -> Vec<Pauli> {
    let n = code.n;
    let mut span = Basis::new(2 * n);
    for p in code.stabilizers.iter().chain(&code.intermediary) {
        span.insert(&p.to_symplectic());
    }
    code.gauge.iter().chain(&code.center_partners).filter(|p| span.insert(&p.to_symplectic())).cloned().collect()
}

pub fn dump(code: &SubsystemCode, subset: Option<&MeasurementSubset>, header: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} {}", code.n, header);
    for p in &code.stabilizers {
        let _ = writeln!(out, "{}", format_line(p, Tag::S));
    }
    for p in extra_gauge(code) {
        let _ = writeln!(out, "{}", format_line(&p, Tag::G));
    }
    for p in &code.intermediary {
        let _ = writeln!(out, "{}", format_line(p, Tag::I));
    }
    if let Some(m) = subset {
        for p in &m.operators {
            let _ = writeln!(out, "{}", format_line(p, Tag::M));
        }
    }
    out
}

fn parse_set(s: &str, n: usize, line: usize) -> Result<Bits, CodegenError> {
    let bad = |msg: &str| CodegenError::Parse { line, msg: msg.to_string() };
    let inner = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(|| bad("expected {..}"))?;
    let mut v = Bits::zeros(n);
    for tok in inner.split(',').filter(|t| !t.trim().is_empty()) {
        let q: usize = tok.trim().parse().map_err(|_| bad("bad qubit index"))?;
        if q >= n {
            return Err(bad("qubit index out of range"));
        }
        v.set(q, true);
    }
    Ok(v)
}

/// Parse a dump back into tagged operators.
pub fn parse_dump(text: &str) -> Result<(usize, Vec<(Pauli, Tag)>), CodegenError> {
    let mut n: Option<usize> = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if let Some(h) = l.strip_prefix('#') {
            if n.is_none() {
                let tok = h.split_whitespace().find_map(|t| t.strip_prefix("n="));
                n = Some(tok.and_then(|t| t.parse().ok()).ok_or(CodegenError::Parse { line, msg: "missing n=".into() })?);
            }
            continue;
        }
        let nq = n.ok_or(CodegenError::Parse { line, msg: "operator before header".into() })?;
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [xs, zs, tag] = parts[..] else {
            return Err(CodegenError::Parse { line, msg: "expected `X:{..} Z:{..} TAG`".into() });
        };
        let x = parse_set(xs.strip_prefix("X:").ok_or(CodegenError::Parse { line, msg: "expected X:".into() })?, nq, line)?;
        let z = parse_set(zs.strip_prefix("Z:").ok_or(CodegenError::Parse { line, msg: "expected Z:".into() })?, nq, line)?;
        let tag = match tag {
            "S" => Tag::S,
            "G" => Tag::G,
            "I" => Tag::I,
            "M" => Tag::M,
            _ => return Err(CodegenError::Parse { line, msg: format!("unknown tag `{tag}`") }),
        };
        out.push((Pauli { x, z }, tag));
    }
    Ok((n.ok_or(CodegenError::Parse { line: 0, msg: "empty dump".into() })?, out))
}

/// Rebuild the stabilizer and gauge data of a dump for verification.
pub fn code_from_dump(text: &str) -> Result<SubsystemCode, CodegenError> {
    let (n, ops) = parse_dump(text)?;
    Ok(code_from_ops(n, &ops))
}

fn code_from_ops(n: usize, ops: &[(Pauli, Tag)]) -> SubsystemCode {
    let pick = |t: Tag| ops.iter().filter(|(_, g)| *g == t).map(|(p, _)| p.clone()).collect::<Vec<_>>();
    let intermediary = pick(Tag::I);
    let mut gauge = pick(Tag::G);
    gauge.extend(intermediary.iter().cloned());
    SubsystemCode {
        n,
        split: Vec::new(),
        merged: Vec::new(),
        stabilizers: pick(Tag::S),
        intermediary,
        gauge,
        partners: Vec::new(),
        center_partners: Vec::new(),
        bare_logicals: Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DumpVerification {
    /// Pairs `(stabilizer line, other line)` that anticommute.
    pub anticommuting: Vec<(usize, usize)>,
    /// Parity of the `M` lines against their own product, when present.
    pub parity: Option<ParityReport>,
    pub distance: DistanceReport,
}

impl DumpVerification {
    pub fn passed(&self) -> bool {
        self.anticommuting.is_empty() && self.parity.as_ref().is_none_or(ParityReport::ok) && self.distance.passed
    }
}

/// Commutation, parity and distance checks on a parsed dump. Line numbers
/// in the report count operator lines from zero.
pub fn verify_dump(text: &str, d_target: usize, opts: &SearchOptions) -> Result<DumpVerification, CodegenError> {
    let (n, ops) = parse_dump(text)?;
    let mut anticommuting = Vec::new();
    for (i, (s, t)) in ops.iter().enumerate() {
        if *t != Tag::S {
            continue;
        }
        for (j, (o, _)) in ops.iter().enumerate() {
            if j != i && s.anticommutes(o) && !(ops[j].1 == Tag::S && j < i) {
                anticommuting.push((i, j));
            }
        }
    }
    let ms: Vec<Pauli> = ops.iter().filter(|(_, t)| *t == Tag::M).map(|(p, _)| p.clone()).collect();
    let parity = (!ms.is_empty()).then(|| {
        let mut target = Pauli::identity(n);
        for m in &ms {
            target.mul_assign(m);
        }
        parity_report(&MeasurementSubset { indices: (0..ms.len()).collect(), operators: ms, target })
    });
    let distance = verify_distance(&code_from_ops(n, &ops), d_target, opts)?;
    Ok(DumpVerification { anticommuting, parity, distance })
}
