//! Whole-schedule invariants on random instances.

use lsc_circuit::{generate_random_circuit, layer_circuit, Family, Gate, RandomCircuitSpec};
use lsc_graph::*;
use lsc_router::*;
use proptest::prelude::*;

fn instance(layout: usize, family: usize, q: usize, f: usize, reset: u32, seed: u64) -> Option<(RoutingGraph, Labeling, lsc_circuit::LayeredCircuit, FactoryConfig)> {
    let layout = LayoutKind::ALL[layout];
    let substrate = if layout == LayoutKind::Pair && seed % 2 == 0 { SubstrateKind::Surface } else { SubstrateKind::Color };
    let factories = FactoryConfig::new(f, reset);
    let g = build_routing_graph(layout, Extent::for_data(layout, q + 2), substrate, &factories).ok()?;
    let mut family = Family::ALL[family];
    if (family == Family::Max && q % 2 == 1) || (family == Family::Seq && q < 4) {
        family = Family::Rand;
    }
    let c = generate_random_circuit(&RandomCircuitSpec::new(family, q, seed).with_gates(3 * q).with_ratio(0.7)).ok()?;
    let lab = random_labeling(&g, q, seed).ok()?;
    Some((g, lab, layer_circuit(&c), factories))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schedules_are_sound(layout in 0..3usize, family in 0..3usize, q in 2..10usize, f in 1..4usize, reset in 1..4u32, seed in any::<u64>()) {
        let Some((g, lab, layered, factories)) = instance(layout, family, q, f, reset, seed) else { return Ok(()) };
        let s = route_circuit(&RoutingTask::new(&g, &lab, &layered, &factories)).unwrap();

        prop_assert!(s.depth() >= layered.depth());
        let mut indices: Vec<usize> = s.layers.iter().flatten().map(|op| op.gate.index).collect();
        indices.sort_unstable();
        prop_assert_eq!(indices, (0..layered.gate_count()).collect::<Vec<_>>());

        let mut last_use = vec![0i64; g.len()];
        for (l, layer) in s.layers.iter().enumerate() {
            let mut used = vec![false; g.len()];
            for op in layer {
                prop_assert!(is_valid_path(&g, &op.path).unwrap());
                for &v in &op.path {
                    prop_assert!(!used[v], "vertex {} used twice in layer {}", v, l);
                    used[v] = true;
                }
                if let Gate::T { target } = op.gate.gate {
                    let fv = op.factory.unwrap();
                    prop_assert_eq!(op.path[0], lab.vertex(target));
                    prop_assert_eq!(*op.path.last().unwrap(), fv);
                    prop_assert!(l as i64 - last_use[fv] >= reset as i64);
                    last_use[fv] = l as i64;
                }
            }
        }
        for q in 0..layered.num_qubits {
            let order: Vec<usize> = s.layers.iter().flatten().filter(|op| op.gate.gate.touches(q)).map(|op| op.gate.index).collect();
            prop_assert!(order.windows(2).all(|w| w[0] < w[1]));
        }

        let task = RoutingTask::new(&g, &lab, &layered, &factories);
        prop_assert_eq!(route_depth_below(&task, s.depth() + 1).unwrap(), Some(s.depth()));
        prop_assert_eq!(route_depth_below(&task, s.depth()).unwrap(), None);
    }
}

#[test]
fn every_data_pair_is_routable_on_an_empty_graph() {
    let combos = [
        (LayoutKind::Hexagonal, SubstrateKind::Color),
        (LayoutKind::Row, SubstrateKind::Color),
        (LayoutKind::Pair, SubstrateKind::Color),
        (LayoutKind::Pair, SubstrateKind::Surface),
    ];
    for (layout, substrate) in combos {
        let mut graphs = 0;
        for (w, h) in [(8, 6), (10, 6), (11, 7), (13, 8), (16, 10)] {
            let Ok(g) = build_routing_graph(layout, Extent::new(w, h), substrate, &FactoryConfig::new(2, 1)) else { continue };
            graphs += 1;
            let empty = vec![false; g.len()];
            let ends: Vec<usize> = g.data_vertices().into_iter().chain(g.factory_vertices()).collect();
            for &a in &ends {
                for &b in &ends {
                    if a < b {
                        assert!(shortest_valid_path(&g, a, b, &empty).is_some(), "{layout} {substrate} {w}x{h}: {a} to {b}");
                    }
                }
            }
        }
        assert!(graphs > 0, "{layout} {substrate}: no extent builds");
    }
}
