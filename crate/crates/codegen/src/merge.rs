use crate::instance::MergeInstance;
use crate::{CodegenError, MergeSpec};
use lsc_gf2::{nullspace, Basis, Bits, Pauli};

pub fn build_split_stabilizers(spec: &MergeSpec) -> Result<Vec<Pauli>, CodegenError> {
    Ok(MergeInstance::build(spec)?.split)
}

pub fn build_merged_stabilizers(spec: &MergeSpec) -> Result<Vec<Pauli>, CodegenError> {
    Ok(merged_generators(&MergeInstance::build(spec)?))
}

/// Split generators surviving the new checks, products of two or three
/// non-surviving generators near one face chosen lightest first, then the
/// new checks themselves.
pub fn merged_generators(inst: &MergeInstance) -> Vec<Pauli> {
    let n = inst.n;
    let checks = &inst.new_checks;
    let commutes_all = |p: &Pauli| checks.iter().all(|c| p.commutes(c));
    let (keep, bad): (Vec<&Pauli>, Vec<&Pauli>) = inst.split.iter().partition(|p| commutes_all(p));
    let mut basis = Basis::new(2 * n);
    let mut out: Vec<Pauli> = Vec::new();
    for p in &keep {
        basis.insert(&p.to_symplectic());
        out.push((*p).clone());
    }
    let mut cands: Vec<Pauli> = Vec::new();
    for f in &inst.faces {
        let local: Vec<&Pauli> = bad.iter().copied().filter(|p| p.support().intersects(f)).collect();
        for size in 2..=3 {
            let mut comb: Vec<usize> = (0..size).collect();
            if local.len() < size {
                continue;
            }
            loop {
                let mut prod = Pauli::identity(n);
                for &i in &comb {
                    prod.mul_assign(local[i]);
                }
                if !prod.is_identity() && commutes_all(&prod) {
                    cands.push(prod);
                }
                if !crate::instance::next_combination(&mut comb, local.len()) {
                    break;
                }
            }
        }
    }
    cands.sort_by_key(|p| p.weight());
    for c in cands {
        if basis.insert(&c.to_symplectic()) {
            out.push(c);
        }
    }
    // anything the local products missed, from the full commutant
    for p in commutant(&inst.split, checks) {
        if basis.insert(&p.to_symplectic()) {
            out.push(p);
        }
    }
    out.extend(checks.iter().cloned());
    out
}

/// Basis of the elements of `span(gens)` commuting with every `checks`
/// element.
pub fn commutant(gens: &[Pauli], checks: &[Pauli]) -> Vec<Pauli> {
    let m = gens.len();
    if m == 0 {
        return Vec::new();
    }
    let n = gens[0].num_qubits();
    let rows: Vec<Bits> =
        checks.iter().map(|c| Bits::from_indices(m, (0..m).filter(|&i| gens[i].anticommutes(c)))).collect();
    let mut out: Vec<Pauli> = nullspace(m, &rows)
        .into_iter()
        .map(|k| {
            let mut p = Pauli::identity(n);
            for i in k.ones() {
                p.mul_assign(&gens[i]);
            }
            p
        })
        .filter(|p| !p.is_identity())
        .collect();
    out.sort_by_key(|p| p.weight());
    out
}
