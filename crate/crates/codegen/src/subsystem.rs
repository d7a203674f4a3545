use crate::CodegenError;
use lsc_gf2::{intersect, nullspace, Basis, Bits, Pauli};
use serde::{Deserialize, Serialize};

/// Joint subsystem code of a split and a merged stabilizer group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemCode {
    pub n: usize,
    pub split: Vec<Pauli>,
    pub merged: Vec<Pauli>,
    /// Basis of the stabilizer group S.
    pub stabilizers: Vec<Pauli>,
    /// Merged generators outside S.
    pub intermediary: Vec<Pauli>,
    /// Gauge generators outside S.
    pub gauge: Vec<Pauli>,
    /// For each intermediary element, a gauge generator anticommuting with it.
    pub partners: Vec<Pauli>,
    /// Gauge operators added so that the centre of the gauge group is S.
    pub center_partners: Vec<Pauli>,
    /// Representatives of the bare logical operators.
    pub bare_logicals: Vec<Pauli>,
}

fn sym(ps: &[Pauli]) -> Vec<Bits> {
    ps.iter().map(Pauli::to_symplectic).collect()
}

fn is_css(ps: &[Pauli]) -> bool {
    ps.iter().all(|p| p.x.is_zero() || p.z.is_zero())
}

fn check_commuting(ps: &[Pauli], which: &'static str) -> Result<(), CodegenError> {
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            if ps[i].anticommutes(&ps[j]) {
                return Err(CodegenError::NotCommuting { which, i, j });
            }
        }
    }
    Ok(())
}

/// Row-space intersection, computed per Pauli type when both inputs are
/// CSS so that the basis stays CSS.
pub fn intersect_groups(n: usize, a: &[Pauli], b: &[Pauli]) -> Vec<Pauli> {
    if is_css(a) && is_css(b) {
        let part = |ps: &[Pauli], x: bool| -> Vec<Bits> {
            ps.iter().filter(|p| if x { p.z.is_zero() } else { p.x.is_zero() }).map(|p| if x { p.x.clone() } else { p.z.clone() }).collect()
        };
        let xs = intersect(n, &part(a, true), &part(b, true));
        let zs = intersect(n, &part(a, false), &part(b, false));
        xs.into_iter()
            .map(|x| Pauli { x, z: Bits::zeros(n) })
            .chain(zs.into_iter().map(|z| Pauli { x: Bits::zeros(n), z }))
            .collect()
    } else {
        intersect(2 * n, &sym(a), &sym(b)).iter().map(Pauli::from_symplectic).collect()
    }
}

/// Basis of the elements of `span(gens)` commuting with all of `gens`.
pub fn center(gens: &[Pauli]) -> Vec<Pauli> {
    crate::merge::commutant(gens, gens)
}

impl SubsystemCode {
    /// A stabilizer code viewed as a subsystem code without gauge qubits.
    pub fn stabilizer_code(gens: &[Pauli]) -> Result<Self, CodegenError> {
        check_commuting(gens, "stabilizers")?;
        let n = gens.first().map_or(0, Pauli::num_qubits);
        let mut code = SubsystemCode {
            n,
            split: gens.to_vec(),
            merged: gens.to_vec(),
            stabilizers: independent(n, gens),
            intermediary: Vec::new(),
            gauge: Vec::new(),
            partners: Vec::new(),
            center_partners: Vec::new(),
            bare_logicals: Vec::new(),
        };
        code.bare_logicals = bare_logicals(n, &code.gauge_group());
        Ok(code)
    }

    /// Generators of the gauge group: S, the gauge generators and the
    /// centre partners.
    pub fn gauge_group(&self) -> Vec<Pauli> {
        let mut g = self.stabilizers.clone();
        g.extend(self.gauge.iter().cloned());
        g.extend(self.center_partners.iter().cloned());
        g
    }

    pub fn logical_qubits(&self) -> usize {
        self.bare_logicals.len() / 2
    }

    pub fn gauge_qubits(&self) -> usize {
        let g = lsc_gf2::rank(2 * self.n, &sym(&self.gauge_group()));
        (g - self.stabilizers.len()) / 2
    }

    pub fn is_css(&self) -> bool {
        is_css(&self.gauge_group())
    }
}

fn independent(n: usize, ps: &[Pauli]) -> Vec<Pauli> {
    let mut b = Basis::new(2 * n);
    ps.iter().filter(|p| b.insert(&p.to_symplectic())).cloned().collect()
}

fn bare_logicals(n: usize, gauge: &[Pauli]) -> Vec<Pauli> {
    let twisted: Vec<Bits> = gauge.iter().map(Pauli::twisted).collect();
    let mut span = Basis::from_rows(2 * n, &sym(gauge));
    nullspace(2 * n, &twisted).iter().filter(|v| span.insert(v)).map(Pauli::from_symplectic).collect()
}

/// Build the joint code. Logical operators of the split code that the
/// merge turns into stabilizer-like centre elements get a partner supported
/// on `anchor` (the left patch).
pub fn build_subsystem_code(split: &[Pauli], merged: &[Pauli], anchor: &Bits) -> Result<SubsystemCode, CodegenError> {
    check_commuting(split, "split")?;
    check_commuting(merged, "merged")?;
    let n = split.first().or(merged.first()).map_or(0, Pauli::num_qubits);
    let stabilizers = intersect_groups(n, split, merged);
    let s_span = Basis::from_rows(2 * n, &sym(&stabilizers));
    let outside = |p: &&Pauli| !s_span.contains(&p.to_symplectic());
    let intermediary: Vec<Pauli> = independent(n, &merged.iter().filter(outside).cloned().collect::<Vec<_>>());
    let mut gauge: Vec<Pauli> = split.iter().chain(merged).filter(outside).cloned().collect();
    gauge = independent_mod(n, &stabilizers, &gauge);

    let split_gauge: Vec<&Pauli> = split.iter().filter(outside).collect();
    let partners = intermediary
        .iter()
        .map(|m| {
            split_gauge
                .iter()
                .filter(|g| g.anticommutes(m))
                .min_by_key(|g| g.weight())
                .map(|g| (*g).clone())
                .ok_or(CodegenError::NoPartner)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut g0: Vec<Pauli> = split.to_vec();
    g0.extend(merged.iter().cloned());
    let mut extra: Vec<Pauli> = Vec::new();
    let mut cspan = s_span.clone();
    for c in center(&g0) {
        if cspan.insert(&c.to_symplectic()) {
            extra.push(c);
        }
    }
    let mut center_partners = Vec::new();
    for (i, c) in extra.iter().enumerate() {
        let others: Vec<&Pauli> = extra.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
        let p = partner_on(n, anchor, c, &stabilizers, &others, &center_partners).ok_or(CodegenError::NoPartner)?;
        center_partners.push(p);
    }

    let mut code = SubsystemCode {
        n,
        split: split.to_vec(),
        merged: merged.to_vec(),
        stabilizers,
        intermediary,
        gauge,
        partners,
        center_partners,
        bare_logicals: Vec::new(),
    };
    let g = code.gauge_group();
    if lsc_gf2::rank(2 * n, &sym(&center(&g))) != code.stabilizers.len() {
        return Err(CodegenError::Internal("centre of the gauge group differs from S".into()));
    }
    code.bare_logicals = bare_logicals(n, &g);
    Ok(code)
}

fn independent_mod(n: usize, base: &[Pauli], ps: &[Pauli]) -> Vec<Pauli> {
    let mut b = Basis::from_rows(2 * n, &sym(base));
    ps.iter().filter(|p| b.insert(&p.to_symplectic())).cloned().collect()
}

/// Lightest operator on `anchor` of the opposite type to `c` that
/// anticommutes with `c` and commutes with S, the other centre elements and
/// the partners chosen so far.
fn partner_on(n: usize, anchor: &Bits, c: &Pauli, s: &[Pauli], others: &[&Pauli], chosen: &[Pauli]) -> Option<Pauli> {
    let as_x = c.is_z_type() || !c.is_x_type();
    let make = |v: Bits| if as_x { Pauli { x: v, z: Bits::zeros(n) } } else { Pauli { x: Bits::zeros(n), z: v } };
    let qs: Vec<usize> = anchor.ones().collect();
    let ok = |p: &Pauli| {
        p.anticommutes(c)
            && s.iter().all(|q| p.commutes(q))
            && others.iter().all(|q| p.commutes(q))
            && chosen.iter().all(|q| p.commutes(q))
    };
    let mut budget: u64 = 5_000_000;
    for w in 1..=qs.len() {
        let mut comb: Vec<usize> = (0..w).collect();
        loop {
            let p = make(Bits::from_indices(n, comb.iter().map(|&i| qs[i])));
            if ok(&p) {
                return Some(p);
            }
            budget -= 1;
            if budget == 0 {
                return solve_partner(n, &qs, c, s, others, chosen, as_x);
            }
            if !crate::instance::next_combination(&mut comb, qs.len()) {
                break;
            }
        }
    }
    None
}

// affine solve for the same conditions when enumeration is too costly
fn solve_partner(
    n: usize,
    qs: &[usize],
    c: &Pauli,
    s: &[Pauli],
    others: &[&Pauli],
    chosen: &[Pauli],
    as_x: bool,
) -> Option<Pauli> {
    let col = |p: &Pauli| -> Bits {
        let v = if as_x { &p.z } else { &p.x };
        Bits::from_indices(qs.len(), (0..qs.len()).filter(|&i| v.get(qs[i])))
    };
    // rows of the constraint system, with the target row last
    let mut rows: Vec<Bits> = s.iter().map(col).collect();
    rows.extend(others.iter().map(|p| col(p)));
    rows.extend(chosen.iter().map(col));
    let want = col(c);
    let free = nullspace(qs.len(), &rows);
    let v = free.into_iter().find(|v| v.dot(&want))?;
    let full = Bits::from_indices(n, v.ones().map(|i| qs[i]));
    Some(if as_x { Pauli { x: full, z: Bits::zeros(n) } } else { Pauli { x: Bits::zeros(n), z: full } })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixDirection {
    Merge,
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeFix {
    pub stabilizers: Vec<Pauli>,
    /// Measured products that are logical for the resulting code.
    pub fixed_logicals: Vec<Pauli>,
}

/// Measure `ops` on the stabilizer state of `gens` with the usual tableau
/// update: an anticommuting generator is replaced by the measured operator
/// after the other anticommuting generators absorb it.
pub fn measure(gens: &[Pauli], ops: &[Pauli]) -> Vec<Pauli> {
    let n = gens.first().or(ops.first()).map_or(0, Pauli::num_qubits);
    let mut cur = independent(n, gens);
    for m in ops {
        let anti: Vec<usize> = (0..cur.len()).filter(|&i| cur[i].anticommutes(m)).collect();
        match anti.split_first() {
            None => {
                if !Basis::from_rows(2 * n, &sym(&cur)).contains(&m.to_symplectic()) {
                    cur.push(m.clone());
                }
            }
            Some((&first, rest)) => {
                let a = cur[first].clone();
                for &i in rest {
                    cur[i].mul_assign(&a);
                }
                cur[first] = m.clone();
            }
        }
    }
    cur
}

/// Merge: measure the intermediary set starting from the split group.
/// Split: measure the split-side gauge generators starting from the merged
/// group; the merge outcome survives as a fixed logical.
pub fn gauge_fix(code: &SubsystemCode, direction: FixDirection) -> GaugeFix {
    let n = code.n;
    let (start, ops, reference) = match direction {
        FixDirection::Merge => (&code.split, code.intermediary.clone(), &code.merged),
        FixDirection::Split => {
            let s = Basis::from_rows(2 * n, &sym(&code.stabilizers));
            let ops: Vec<Pauli> = code.split.iter().filter(|p| !s.contains(&p.to_symplectic())).cloned().collect();
            (&code.merged, ops, &code.split)
        }
    };
    let result = measure(start, &ops);
    let stabilizers = intersect_groups(n, &result, reference);
    let fixed_logicals = independent_mod(n, &stabilizers, &result);
    GaugeFix { stabilizers, fixed_logicals }
}
