//! Router checked against brute-force oracles.

use lsc_circuit::{generate_random_circuit, layer_circuit, Family, Gate, IndexedGate, LayeredCircuit, RandomCircuitSpec};
use lsc_graph::*;
use lsc_router::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Breadth-first enumeration of simple paths in order of length, then
/// lexicographic vertex sequence; returns the first valid one.
fn oracle_path(g: &RoutingGraph, src: usize, dst: usize, occupied: &[bool]) -> Option<Vec<usize>> {
    let mut level: Vec<Vec<usize>> = vec![vec![src]];
    while !level.is_empty() {
        let mut hits: Vec<Vec<usize>> = Vec::new();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for p in &level {
            let v = *p.last().unwrap();
            for &(u, _) in g.neighbors(v) {
                if p.contains(&u) {
                    continue;
                }
                if u == dst {
                    let mut q = p.clone();
                    q.push(u);
                    if is_valid_path(g, &q).unwrap() {
                        hits.push(q);
                    }
                } else if g.kind(u) == VertexKind::Ancilla && !occupied[u] {
                    let mut q = p.clone();
                    q.push(u);
                    next.push(q);
                }
            }
        }
        if !hits.is_empty() {
            hits.sort();
            return Some(hits.remove(0));
        }
        level = next;
    }
    None
}

fn small_graph(seed: u64) -> RoutingGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let surface = rng.gen_bool(0.5);
    let (layout, sub) = if surface {
        (LayoutKind::Pair, SubstrateKind::Surface)
    } else {
        (LayoutKind::ALL[rng.gen_range(0..3)], SubstrateKind::Color)
    };
    let shapes = [(10, 5), (9, 5), (8, 6), (7, 7), (12, 4)];
    let (w, h) = shapes[rng.gen_range(0..shapes.len())];
    let f = rng.gen_range(0..3);
    build_routing_graph(layout, Extent::new(w, h), sub, &FactoryConfig::new(f, 1))
        .or_else(|_| build_routing_graph(layout, Extent::new(w, h), sub, &FactoryConfig::none()))
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shortest_path_matches_oracle(seed in any::<u64>()) {
        let g = small_graph(seed);
        prop_assume!(g.len() <= 50);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let ends: Vec<usize> = g.data_vertices().into_iter().chain(g.factory_vertices()).collect();
        prop_assume!(ends.len() >= 2);
        let s = ends[rng.gen_range(0..ends.len())];
        let t = ends[rng.gen_range(0..ends.len())];
        prop_assume!(s != t);
        let occupied: Vec<bool> = (0..g.len()).map(|v| g.kind(v) == VertexKind::Ancilla && rng.gen_bool(0.15)).collect();
        let got = shortest_valid_path(&g, s, t, &occupied);
        let want = oracle_path(&g, s, t, &occupied);
        prop_assert_eq!(&got, &want);
        if let Some(p) = got {
            prop_assert!(is_valid_path(&g, &p).unwrap());
        }
    }

    #[test]
    fn pushing_preserves_per_qubit_order(seed in any::<u64>()) {
        let c = generate_random_circuit(&RandomCircuitSpec::new(Family::Rand, 6, seed).with_gates(30)).unwrap();
        let mut layers = layer_circuit(&c).layers;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // push random subsets of random layers several times
        for _ in 0..4 {
            let i = rng.gen_range(0..layers.len());
            let (left, keep): (Vec<IndexedGate>, Vec<IndexedGate>) =
                std::mem::take(&mut layers[i]).into_iter().partition(|_| rng.gen_bool(0.5));
            layers[i] = keep;
            push_leftovers(&mut layers, left, i + 1);
        }
        for ly in &layers {
            for (a, x) in ly.iter().enumerate() {
                for y in &ly[a + 1..] {
                    prop_assert!(!x.gate.shares_qubit(&y.gate));
                }
            }
        }
        for q in 0..6 {
            let seq: Vec<usize> = layers.iter().flatten().filter(|g| g.gate.touches(q)).map(|g| g.index).collect();
            prop_assert_eq!(seq, c.qubit_sequence(q));
        }
    }
}

#[test]
fn adjacent_data_vertices_need_a_detour() {
    let g = build_routing_graph(LayoutKind::Pair, Extent::new(12, 8), SubstrateKind::Color, &FactoryConfig::none()).unwrap();
    let d = g.data_vertices();
    let (a, b) = d
        .iter()
        .flat_map(|&a| d.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| g.edge_direction(a, b).is_some())
        .expect("pair layout has adjacent data vertices");
    let p = shortest_valid_path(&g, a, b, &vec![false; g.len()]).unwrap();
    assert!(p.len() >= 3);
    assert!(is_valid_path(&g, &p).unwrap());
}

#[test]
fn surface_paths_use_three_directions() {
    let g = build_routing_graph(LayoutKind::Pair, Extent::new(18, 12), SubstrateKind::Surface, &FactoryConfig::none()).unwrap();
    let d = g.data_vertices();
    let free = vec![false; g.len()];
    for &a in &d {
        for &b in &d {
            if a < b {
                let p = shortest_valid_path(&g, a, b, &free).expect("every pair is routable");
                let dirs: std::collections::BTreeSet<Direction> = p.windows(2).map(|w| g.edge_direction(w[0], w[1]).unwrap()).collect();
                assert_eq!(dirs.len(), 3);
            }
        }
    }
}

fn all_valid_paths(g: &RoutingGraph, src: usize, dst: usize) -> Vec<Vec<usize>> {
    fn go(g: &RoutingGraph, dst: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *p.last().unwrap();
        for &(u, _) in g.neighbors(v) {
            if p.contains(&u) {
                continue;
            }
            p.push(u);
            if u == dst {
                if is_valid_path(g, p).unwrap() {
                    out.push(p.clone());
                }
            } else if g.kind(u) == VertexKind::Ancilla {
                go(g, dst, p, out);
            }
            p.pop();
        }
    }
    let mut out = Vec::new();
    go(g, dst, &mut vec![src], &mut out);
    out
}

#[test]
fn single_t_waits_for_factory() {
    let g = build_routing_graph(LayoutKind::Row, Extent::new(12, 8), SubstrateKind::Color, &FactoryConfig::new(1, 3)).unwrap();
    let lab = Labeling::new(vec![g.data_vertices()[0]]);
    let layered = LayeredCircuit { num_qubits: 1, layers: vec![vec![IndexedGate { index: 0, gate: Gate::t(0) }]] };
    let mut fs = FactoryState::cold(&g, 3);
    let mut pf = PathFinder::new(&g);
    let (routed, left) = vdp_subroutine(&g, &lab, &layered.layers[0], &mut fs, &mut pf);
    assert!(routed.is_empty());
    assert_eq!(left.len(), 1);
    let task = RoutingTask::new(&g, &lab, &layered, &FactoryConfig::new(1, 3));
    let s = route_circuit(&task).unwrap();
    // cold start: layers 0..2 idle, the magic state is ready in layer 3
    assert_eq!(s.depth(), 4);
    assert!(s.layers[..3].iter().all(Vec::is_empty));
}

fn hand_graph(kinds: &[VertexKind], edges: &[(usize, usize, Direction)]) -> RoutingGraph {
    let vertices = kinds.iter().enumerate().map(|(id, &kind)| Vertex { id, kind, col: id, row: 0 }).collect();
    let mut adj = vec![Vec::new(); kinds.len()];
    for &(u, v, d) in edges {
        adj[u].push((v, d));
        adj[v].push((u, d));
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    RoutingGraph { substrate: SubstrateKind::Color, layout: LayoutKind::Hexagonal, extent: Extent::new(kinds.len(), 1), vertices, adj }
}

#[test]
fn shared_ancilla_forces_one_leftover() {
    use Direction::*;
    use VertexKind::*;
    // two pairs joined through a single ancilla hub
    let g = hand_graph(
        &[Data, Data, Ancilla, Data, Data, Ancilla],
        &[(0, 2, A), (1, 2, B), (2, 3, A), (2, 5, C), (5, 4, A)],
    );
    let p1 = all_valid_paths(&g, 0, 3);
    let p2 = all_valid_paths(&g, 1, 4);
    assert!(!p1.is_empty() && !p2.is_empty());
    assert!(p1.iter().all(|x| p2.iter().all(|y| x.iter().any(|v| y.contains(v)))));
    let lab = Labeling::new(vec![0, 3, 1, 4]);
    let demand = vec![
        IndexedGate { index: 0, gate: Gate::cnot(0, 1) },
        IndexedGate { index: 1, gate: Gate::cnot(2, 3) },
    ];
    let mut fs = FactoryState::cold(&g, 1);
    let mut pf = PathFinder::new(&g);
    let (r, left) = vdp_subroutine(&g, &lab, &demand, &mut fs, &mut pf);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].path, vec![0, 2, 3]);
    assert_eq!(left, vec![demand[1]]);
}

#[test]
fn trivial_schedules() {
    let g = build_routing_graph(LayoutKind::Hexagonal, Extent::new(12, 8), SubstrateKind::Color, &FactoryConfig::none()).unwrap();
    let lab = Labeling::new(g.data_vertices()[..2].to_vec());
    let empty = LayeredCircuit { num_qubits: 2, layers: vec![] };
    assert_eq!(route_circuit(&RoutingTask::new(&g, &lab, &empty, &FactoryConfig::none())).unwrap().depth(), 0);
    let one = LayeredCircuit { num_qubits: 2, layers: vec![vec![IndexedGate { index: 0, gate: Gate::cnot(0, 1) }]] };
    assert_eq!(route_circuit(&RoutingTask::new(&g, &lab, &one, &FactoryConfig::none())).unwrap().depth(), 1);
    let t = LayeredCircuit { num_qubits: 2, layers: vec![vec![IndexedGate { index: 0, gate: Gate::t(0) }]] };
    assert_eq!(route_circuit(&RoutingTask::new(&g, &lab, &t, &FactoryConfig::none())), Err(RouteError::NoFactories));
}
