use lsc_codegen::*;
use lsc_gf2::{rank, Basis, Bits, Pauli};
use lsc_graph::SubstrateKind;

fn spec(kind: SubstrateKind, d: usize, len: usize, basis: MergeBasis) -> MergeSpec {
    MergeSpec::straight(kind, d, len, basis)
}

fn sym(ps: &[Pauli]) -> Vec<Bits> {
    ps.iter().map(Pauli::to_symplectic).collect()
}

fn same_span(n: usize, a: &[Pauli], b: &[Pauli]) -> bool {
    let ra = rank(2 * n, &sym(a));
    let rb = rank(2 * n, &sym(b));
    let mut both = sym(a);
    both.extend(sym(b));
    ra == rb && rank(2 * n, &both) == ra
}

fn all_commute(ps: &[Pauli]) -> bool {
    ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| p.commutes(q)))
}

// brute-force intersection of two small groups: elements of span(a) that
// lie in span(b)
fn in_span(n: usize, gens: &[Pauli], p: &Pauli) -> bool {
    Basis::from_rows(2 * n, &sym(gens)).contains(&p.to_symplectic())
}

const CASES: [(SubstrateKind, usize, usize); 4] = [
    (SubstrateKind::Color, 3, 1),
    (SubstrateKind::Color, 3, 2),
    (SubstrateKind::Surface, 3, 1),
    (SubstrateKind::Surface, 3, 2),
];

#[test]
fn structural_checks_at_distance_three() {
    for (kind, d, len) in CASES {
        for basis in [MergeBasis::ZZ, MergeBasis::XX] {
            let s = spec(kind, d, len, basis);
            let art = generate(&s).unwrap_or_else(|e| panic!("{kind:?} {len} {basis}: {e}"));
            let code = &art.code;
            let n = code.n;
            assert!(all_commute(&code.split), "split commutes");
            assert!(all_commute(&code.merged), "merged commutes");
            // every S generator lies in both groups and commutes with the gauge group
            for p in &code.stabilizers {
                assert!(in_span(n, &code.split, p) && in_span(n, &code.merged, p));
                assert!(code.gauge_group().iter().all(|g| g.commutes(p)));
            }
            // partners anticommute with their intermediary element
            assert_eq!(code.partners.len(), code.intermediary.len());
            for (m, p) in code.intermediary.iter().zip(&code.partners) {
                assert!(m.anticommutes(p));
            }
            let split_k = n - rank(2 * n, &sym(&code.split));
            let merged_k = n - rank(2 * n, &sym(&code.merged));
            assert_eq!(split_k, 2, "{kind:?} {len} {basis}: split encodes two qubits");
            assert_eq!(merged_k, 1, "{kind:?} {len} {basis}: merged encodes one qubit");
            // n = |S| + gauge + logical
            assert_eq!(n, code.stabilizers.len() + code.gauge_qubits() + code.logical_qubits());
            assert!(code.is_css());
            // measurement subset
            let m = &art.subset;
            assert_eq!(m.product(), art.instance.target);
            assert!(parity_report(m).ok());
            for p in &m.operators {
                assert!(in_span(n, &code.merged, p));
            }
        }
    }
}

#[test]
fn dressed_distance_three_is_exhaustive() {
    for (kind, d, len) in CASES {
        let art = generate(&spec(kind, d, len, MergeBasis::ZZ)).unwrap();
        let r = verify_distance(&art.code, d, &SearchOptions::default()).unwrap();
        assert!(r.exhaustive);
        assert!(r.passed, "{kind:?} {len}: witness {:?}", r.witness.map(|w| w.weight()));
    }
}

#[test]
fn dressed_distance_five_is_exhaustive() {
    for (kind, len) in [(SubstrateKind::Color, 1), (SubstrateKind::Surface, 1)] {
        let art = generate(&spec(kind, 5, len, MergeBasis::ZZ)).unwrap();
        let r = verify_distance(&art.code, 5, &SearchOptions::default()).unwrap();
        assert!(r.exhaustive, "{kind:?}");
        assert!(r.passed, "{kind:?}: witness weight {:?}", r.witness.map(|w| w.weight()));
    }
}

#[test]
fn gauge_fixing_round_trip() {
    for (kind, d, len) in CASES {
        let art = generate(&spec(kind, d, len, MergeBasis::ZZ)).unwrap();
        let code = &art.code;
        let n = code.n;
        let merge = gauge_fix(code, FixDirection::Merge);
        assert!(same_span(n, &merge.stabilizers, &code.merged), "{kind:?} {len}: merge lands on merged group");
        assert!(merge.fixed_logicals.is_empty());
        let split = gauge_fix(code, FixDirection::Split);
        assert!(same_span(n, &split.stabilizers, &code.split), "{kind:?} {len}: split lands on split group");
        assert_eq!(split.fixed_logicals.len(), 1);
        let mut with_fixed = split.stabilizers.clone();
        with_fixed.extend(split.fixed_logicals.iter().cloned());
        assert!(in_span(n, &with_fixed, &art.instance.target));
        assert!(!in_span(n, &split.stabilizers, &art.instance.target));
    }
}

#[test]
fn xx_merge_is_the_dual() {
    for (kind, d, len) in CASES {
        let zz = generate(&spec(kind, d, len, MergeBasis::ZZ)).unwrap();
        let xx = generate(&spec(kind, d, len, MergeBasis::XX)).unwrap();
        let dual = |ps: &[Pauli]| ps.iter().map(Pauli::dual).collect::<Vec<_>>();
        assert!(same_span(zz.code.n, &xx.code.split, &dual(&zz.code.split)));
        assert!(same_span(zz.code.n, &xx.code.merged, &dual(&zz.code.merged)));
        assert_eq!(xx.instance.target, zz.instance.target.dual());
        assert!(xx.instance.target.is_x_type());
    }
}

// lightest Z-type operator commuting with every generator and outside the
// Z part of the group, by plain subset enumeration
fn brute_min_z_logical(n: usize, gens: &[Pauli], max_w: usize) -> Option<usize> {
    let zs: Vec<Bits> = gens.iter().filter(|p| p.x.is_zero()).map(|p| p.z.clone()).collect();
    let zspan = Basis::from_rows(n, &zs);
    let mut best: Option<usize> = None;
    for mask in 1u64..(1u64 << n) {
        let w = mask.count_ones() as usize;
        if w > max_w || best.is_some_and(|b| w >= b) {
            continue;
        }
        let v = Bits::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        let p = Pauli { x: Bits::zeros(n), z: v.clone() };
        if gens.iter().all(|g| g.commutes(&p)) && !zspan.contains(&v) {
            best = Some(w);
        }
    }
    best
}

#[test]
fn deleting_a_stabilizer_exposes_a_light_logical() {
    let code = SubsystemCode::stabilizer_code(&generate(&spec(SubstrateKind::Color, 3, 1, MergeBasis::ZZ)).unwrap().code.split)
        .unwrap();
    let full = verify_distance(&code, 3, &SearchOptions::default()).unwrap();
    assert!(full.passed);
    // drop one X face: its Z partner side becomes detectable only as a logical
    let drop = code.stabilizers.iter().position(|p| p.is_x_type()).unwrap();
    let mut gens = code.stabilizers.clone();
    gens.remove(drop);
    let broken = SubsystemCode::stabilizer_code(&gens).unwrap();
    let r = verify_distance(&broken, 3, &SearchOptions::default()).unwrap();
    assert!(!r.passed);
    let w = r.witness.unwrap();
    assert!(w.weight() < 3);
    // the witness is a genuine logical: commutes with all generators, not in the group
    assert!(gens.iter().all(|g| g.commutes(&w)));
    assert!(!in_span(code.n, &gens, &w));
    if w.is_z_type() {
        assert_eq!(brute_min_z_logical(code.n, &gens, 2), Some(w.weight()));
    }
}

#[test]
fn large_distance_falls_back_to_sampling() {
    let art = generate(&spec(SubstrateKind::Color, 7, 1, MergeBasis::ZZ)).unwrap();
    let opts = SearchOptions { budget: 1_000_000, trials: 200, seed: 1 };
    let r = verify_distance(&art.code, 7, &opts).unwrap();
    assert!(!r.exhaustive);
}

#[test]
fn invalid_specs_are_rejected() {
    let mut s = spec(SubstrateKind::Color, 3, 1, MergeBasis::ZZ);
    s.snake.clear();
    assert!(matches!(generate(&s), Err(CodegenError::BadSpec(_))));
    let mut s = spec(SubstrateKind::Color, 3, 2, MergeBasis::ZZ);
    s.snake[1] = (40, 40);
    assert!(generate(&s).is_err());
    let s = spec(SubstrateKind::Surface, 4, 1, MergeBasis::ZZ);
    assert!(generate(&s).is_err());
}

#[test]
fn dump_round_trips() {
    let s = spec(SubstrateKind::Surface, 3, 1, MergeBasis::ZZ);
    let art = generate(&s).unwrap();
    let text = art.dump(&s);
    assert!(text.starts_with("# n="));
    let (n, ops) = dump::parse_dump(&text).unwrap();
    assert_eq!(n, art.code.n);
    let stabs: Vec<Pauli> = ops.iter().filter(|(_, t)| *t == dump::Tag::S).map(|(p, _)| p.clone()).collect();
    assert_eq!(stabs, art.code.stabilizers);
    let ms: Vec<Pauli> = ops.iter().filter(|(_, t)| *t == dump::Tag::M).map(|(p, _)| p.clone()).collect();
    assert_eq!(ms, art.subset.operators);
    assert!(dump::parse_dump("X:{1} Z:{} S").is_err());
    assert!(dump::parse_dump("# n=3\nX:{5} Z:{} S").is_err());
}

#[test]
fn generation_is_deterministic() {
    let s = spec(SubstrateKind::Color, 3, 2, MergeBasis::XX);
    assert_eq!(generate(&s).unwrap().dump(&s), generate(&s).unwrap().dump(&s));
}

#[test]
fn dump_verification_and_mutation() {
    let s = spec(SubstrateKind::Color, 3, 1, MergeBasis::ZZ);
    let text = generate(&s).unwrap().dump(&s);
    let opts = SearchOptions::default();
    let ok = dump::verify_dump(&text, 3, &opts).unwrap();
    assert!(ok.passed(), "{ok:?}");
    assert!(ok.distance.exhaustive);
    // the parsed dump spans the same gauge group as the generated code
    let art = generate(&s).unwrap();
    let parsed = dump::code_from_dump(&text).unwrap();
    assert!(same_span(art.code.n, &parsed.gauge_group(), &art.code.gauge_group()));
    // delete the first stabilizer line
    let mut lines: Vec<&str> = text.lines().collect();
    let first = lines.iter().position(|l| l.ends_with(" S")).unwrap();
    lines.remove(first);
    let broken = dump::verify_dump(&lines.join("\n"), 3, &opts).unwrap();
    assert!(!broken.passed());
    let w = broken.distance.witness.unwrap();
    assert!(w.weight() <= 2, "witness weight {}", w.weight());
}
