use lsc_graph::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph(layout: usize, surface: bool, w: usize, h: usize, f: usize) -> Option<RoutingGraph> {
    let layout = LayoutKind::ALL[layout];
    let substrate = if surface && layout == LayoutKind::Pair { SubstrateKind::Surface } else { SubstrateKind::Color };
    build_routing_graph(layout, Extent::new(w, h), substrate, &FactoryConfig::new(f, 1)).ok()
}

// validity from the definition: at least two edges, and all three
// directions on the surface substrate
fn valid_by_definition(g: &RoutingGraph, path: &[usize], surface: bool) -> bool {
    let dirs: Vec<Direction> = path.windows(2).map(|w| g.edge_direction(w[0], w[1]).unwrap()).collect();
    let all_three = [Direction::A, Direction::B, Direction::C].iter().all(|d| dirs.contains(d));
    dirs.len() >= 2 && (!surface || all_three)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graphs_are_hexagonal(layout in 0..3usize, surface in any::<bool>(), w in 5..18usize, h in 4..12usize, f in 0..4usize) {
        let Some(g) = graph(layout, surface, w, h, f) else { return Ok(()) };
        for v in 0..g.len() {
            let nb = g.neighbors(v);
            prop_assert!(nb.len() <= 3);
            for (i, &(u, d)) in nb.iter().enumerate() {
                prop_assert_eq!(g.edge_direction(u, v), Some(d));
                prop_assert!(nb[i + 1..].iter().all(|&(x, e)| x != u && e != d), "vertex {} repeats a neighbour or direction", v);
            }
            if g.kind(v) == VertexKind::Factory {
                prop_assert_eq!(nb.len(), 2);
                prop_assert!(nb.iter().all(|&(u, _)| g.kind(u) == VertexKind::Ancilla));
            }
        }
        prop_assert_eq!(g.factory_vertices().len(), f);
        prop_assert_eq!(g.data_vertices().len() + g.ancilla_vertices().len() + f, g.len());
    }

    #[test]
    fn labelings_are_injective_and_seeded(layout in 0..3usize, w in 6..16usize, h in 5..10usize, frac in 0.0..=1.0f64, seed in any::<u64>()) {
        let Some(g) = graph(layout, false, w, h, 0) else { return Ok(()) };
        let n = g.data_vertices().len();
        let q = (frac * n as f64) as usize;
        let lab = random_labeling(&g, q, seed).unwrap();
        prop_assert_eq!(lab.len(), q);
        prop_assert!(lab.is_valid_for(&g));
        prop_assert_eq!(&lab, &random_labeling(&g, q, seed).unwrap());
        prop_assert!(random_labeling(&g, n + 1, seed).is_err());
    }

    #[test]
    fn validity_matches_definition(surface in any::<bool>(), w in 6..16usize, h in 5..10usize, seed in any::<u64>()) {
        let layout = if surface { 2 } else { (seed % 3) as usize };
        let Some(g) = graph(layout, surface, w, h, 2) else { return Ok(()) };
        let surface = g.substrate == SubstrateKind::Surface;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = g.data_vertices();
        for _ in 0..20 {
            // random simple walk through ancillas until it reaches an endpoint
            let mut path = vec![data[rng.gen_range(0..data.len())]];
            loop {
                let v = *path.last().unwrap();
                let next: Vec<usize> = g.neighbors(v).iter().map(|&(u, _)| u).filter(|u| !path.contains(u)).collect();
                if next.is_empty() {
                    break;
                }
                let u = next[rng.gen_range(0..next.len())];
                path.push(u);
                if g.kind(u) != VertexKind::Ancilla {
                    prop_assert_eq!(is_valid_path(&g, &path).unwrap(), valid_by_definition(&g, &path, surface));
                    break;
                }
            }
        }
    }
}

#[test]
fn sparser_layouts_pack_fewer_data_patches() {
    let [h, r, p] = LayoutKind::ALL.map(|l| packing_ratio(l).value);
    assert!(p < r && r < h, "{p} {r} {h}");
    assert!((h - r).abs() < 0.05);
}
