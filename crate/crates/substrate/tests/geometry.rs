use lsc_gf2::{Basis, Bits, Pauli};
use lsc_graph::{build_routing_graph, Extent, FactoryConfig, GraphError, LayoutKind, SubstrateKind, VertexKind};
use lsc_substrate::*;
use proptest::prelude::*;
use std::collections::HashSet;

// smallest weight of a Z-type operator commuting with every X check and
// outside the span of the Z checks, by enumeration of supports
fn brute_min_logical(n: usize, xs: &[Bits], zs: &[Bits]) -> usize {
    let span = Basis::from_rows(n, zs);
    fn rec(n: usize, start: usize, left: usize, cur: &mut Vec<usize>, xs: &[Bits], span: &Basis) -> bool {
        if left == 0 {
            let v = Bits::from_indices(n, cur.iter().copied());
            return xs.iter().all(|x| !x.dot(&v)) && !span.contains(&v);
        }
        for i in start..n {
            cur.push(i);
            if rec(n, i + 1, left - 1, cur, xs, span) {
                return true;
            }
            cur.pop();
        }
        false
    }
    (1..=n).find(|&w| rec(n, 0, w, &mut Vec::new(), xs, &span)).unwrap()
}

fn supports(ps: &[Pauli], z: bool) -> Vec<Bits> {
    ps.iter().map(|p| if z { p.z.clone() } else { p.x.clone() }).collect()
}

#[test]
fn color_patch_qubit_count() {
    for t in 1..=6 {
        let p = build_color_patch(t).unwrap();
        assert_eq!(p.n(), 3 * t * t + 3 * t + 1, "t={t}");
    }
}

#[test]
fn color_patch_distance_is_exhaustive_for_small_t() {
    for t in 1..=2 {
        let p = build_color_patch(t).unwrap();
        let xs = supports(&p.x_stabilizers(), false);
        let zs = supports(&p.z_stabilizers(), true);
        assert_eq!(brute_min_logical(p.n(), &xs, &zs), 2 * t + 1);
        // self-dual, so the X distance is the same computation with roles swapped
        assert_eq!(brute_min_logical(p.n(), &zs, &xs), 2 * t + 1);
    }
}

#[test]
fn color_boundaries_carry_weight_d_logicals() {
    for t in 1..=4 {
        let p = build_color_patch(t).unwrap();
        let checks: Vec<Pauli> = p.x_stabilizers().into_iter().chain(p.z_stabilizers()).collect();
        for side in 0..3 {
            assert_eq!(p.boundaries[side].len(), 2 * t + 1);
            let (x, z) = (p.logical_x(side), p.logical_z(side));
            assert!(checks.iter().all(|s| s.commutes(&x) && s.commutes(&z)));
            assert!(x.anticommutes(&z));
        }
    }
}

#[test]
fn color_checks_commute() {
    let p = build_color_patch(3).unwrap();
    let xs = p.x_stabilizers();
    for a in &xs {
        for b in &p.z_stabilizers() {
            assert!(a.commutes(b));
        }
    }
    let rank = lsc_gf2::rank(p.n(), &supports(&xs, false));
    assert_eq!(p.n() - 2 * rank, 1);
}

#[test]
fn hexagonal_cutout_has_disjoint_triangles() {
    let ext = Extent::for_data(LayoutKind::Hexagonal, 6);
    let s = build_substrate(SubstrateKind::Color, LayoutKind::Hexagonal, ext, 5).unwrap();
    let mut seen = HashSet::new();
    for r in &s.regions {
        assert_eq!(r.sites.len(), 19);
        for &q in &r.sites {
            assert!(seen.insert(q));
        }
    }
    assert!(s.regions.iter().filter(|r| r.kind == VertexKind::Data).count() >= 6);
}

#[test]
fn pair_layout_color_d3() {
    let ext = Extent::for_data(LayoutKind::Pair, 2);
    let s = build_substrate(SubstrateKind::Color, LayoutKind::Pair, ext, 3).unwrap();
    let tiling = ColorTiling::new(1);
    let mut seen = HashSet::new();
    for r in &s.regions {
        assert_eq!(r.sites.len(), 7);
        let key = RegionKey::of_brick(r.col, r.row);
        for v in tiling.region_vertices(key) {
            assert!(seen.insert(v));
        }
    }
}

#[test]
fn surface_needs_pair_layout() {
    let ext = Extent::for_data(LayoutKind::Row, 4);
    let e = build_substrate(SubstrateKind::Surface, LayoutKind::Row, ext, 3).unwrap_err();
    assert!(matches!(e, SubstrateError::Graph(GraphError::Incompatible { .. }) | SubstrateError::Graph(_)));
    assert!(build_substrate(SubstrateKind::Color, LayoutKind::Row, ext, 4).is_err());
}

#[test]
fn surface_substrate_regions_are_disjoint_half_diamonds() {
    let ext = Extent::for_data(LayoutKind::Pair, 4);
    let s = build_substrate(SubstrateKind::Surface, LayoutKind::Pair, ext, 3).unwrap();
    let mut seen = HashSet::new();
    for r in &s.regions {
        // a d=3 diamond has 13 sites, 5 of them on the axis
        assert!(r.sites.len() == 9 || r.sites.len() == 4, "{}", r.sites.len());
        for &q in &r.sites {
            assert!(seen.insert(q));
        }
    }
}

#[test]
fn routing_edges_are_region_walls() {
    for layout in LayoutKind::ALL {
        let g = build_routing_graph(layout, Extent::new(12, 8), SubstrateKind::Color, &FactoryConfig::new(2, 1)).unwrap();
        let tiling = ColorTiling::new(1);
        for v in 0..g.len() {
            let kv = RegionKey::of_brick(g.vertices[v].col, g.vertices[v].row);
            for &(u, _) in g.neighbors(v) {
                let ku = RegionKey::of_brick(g.vertices[u].col, g.vertices[u].row);
                assert!(!tiling.wall(kv, ku).is_empty());
            }
        }
    }
    // and non-neighbours share no wall
    let tiling = ColorTiling::new(1);
    assert!(tiling.wall(RegionKey::of_brick(3, 3), RegionKey::of_brick(6, 3)).is_empty());
}

#[test]
fn fold_pairs_x_faces_with_z_faces() {
    for d in [3, 5, 7] {
        let p = build_folded_surface_patch(d).unwrap();
        for (i, f) in p.faces.iter().enumerate() {
            let j = p.face_fold[i];
            assert_ne!(i, j);
            assert_eq!(p.face_fold[j], i);
            assert_ne!(f.kind, p.faces[j].kind);
        }
        for i in 0..p.n() {
            assert_eq!(p.fold[p.fold[i]], i);
        }
        assert_eq!(p.fold_line().len(), 2 * d - 1);
    }
}

#[test]
fn folded_patch_distance_d3() {
    let p = build_folded_surface_patch(3).unwrap();
    let xs = supports(&p.stabilizers(CheckType::X), false);
    let zs = supports(&p.stabilizers(CheckType::Z), true);
    assert_eq!(brute_min_logical(p.n(), &xs, &zs), 3);
    assert_eq!(brute_min_logical(p.n(), &zs, &xs), 3);
}

proptest! {
    #[test]
    fn every_patch_has_the_triangle_count(t in 1usize..4, j in -3i64..3, k in -3i64..3, up in any::<bool>()) {
        let key = RegionKey::new(j, k, if up { j - k } else { j - k - 1 });
        let n = ColorTiling::new(t).region_vertices(key).len();
        prop_assert_eq!(n, 3 * t * t + 3 * t + 1);
    }
}
