//! Qubit-level geometry of a merge: regions, corridor qubits, the split
//! generators and the new checks that perform the merge.

use crate::{CodegenError, MergeBasis, MergeSpec};
use lsc_gf2::{nullspace, Basis, Bits, Pauli};
use lsc_graph::SubstrateKind;
use lsc_substrate::surface::{diamond, square_faces, square_type, CheckType, Site};
use lsc_substrate::{ColorTiling, HexFace, HexVertex, RegionKey};
use serde::{Deserialize, Serialize};

/// All data of one merge instance, in the ZZ orientation unless the spec
/// asks for XX (then every operator is the Pauli dual).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeInstance {
    pub basis: MergeBasis,
    pub distance: usize,
    pub n: usize,
    /// Lattice coordinates per qubit.
    pub coords: Vec<(i64, i64)>,
    /// Left patch, snake patches, right patch.
    pub regions: Vec<Bits>,
    /// Corridor qubits between consecutive regions.
    pub corridor: Bits,
    pub split: Vec<Pauli>,
    /// New checks measured by the merge.
    pub new_checks: Vec<Pauli>,
    /// Checks of the snake patches of the merge type, with their snake
    /// position.
    pub snake_checks: Vec<(usize, Pauli)>,
    /// Supports of all faces meeting the instance.
    pub faces: Vec<Bits>,
    /// Logical product fixed by the merge.
    pub target: Pauli,
}

impl MergeInstance {
    pub fn build(spec: &MergeSpec) -> Result<Self, CodegenError> {
        spec.validate()?;
        let inst = match spec.substrate {
            SubstrateKind::Color => color_instance(spec)?,
            SubstrateKind::Surface => surface_instance(spec),
        };
        Ok(match spec.basis {
            MergeBasis::ZZ => inst,
            MergeBasis::XX => inst.dual(),
        })
    }

    fn dual(self) -> Self {
        let d = |v: Vec<Pauli>| v.iter().map(Pauli::dual).collect::<Vec<_>>();
        MergeInstance {
            basis: MergeBasis::XX,
            split: d(self.split),
            new_checks: d(self.new_checks),
            snake_checks: self.snake_checks.into_iter().map(|(i, p)| (i, p.dual())).collect(),
            target: self.target.dual(),
            ..self
        }
    }

    pub fn left(&self) -> &Bits {
        &self.regions[0]
    }

    /// Support touched by the new checks.
    pub fn touched(&self) -> Bits {
        let mut t = Bits::zeros(self.n);
        for p in &self.new_checks {
            t.or_assign(&p.support());
        }
        t
    }
}

fn bits(n: usize, idx: impl IntoIterator<Item = usize>) -> Bits {
    Bits::from_indices(n, idx)
}

/// Operator of the merge type (Z for ZZ) on `support`.
fn merge_type(n: usize, s: impl IntoIterator<Item = usize>) -> Pauli {
    Pauli::z_type(n, s)
}

fn other_type(n: usize, s: impl IntoIterator<Item = usize>) -> Pauli {
    Pauli::x_type(n, s)
}

fn color_instance(spec: &MergeSpec) -> Result<MergeInstance, CodegenError> {
    let d = spec.distance;
    let tiling = ColorTiling::new((d - 1) / 2);
    let keys: Vec<RegionKey> = spec.chain().iter().map(|&(c, r)| RegionKey::of_brick(c, r)).collect();
    let region_verts: Vec<Vec<HexVertex>> = keys.iter().map(|&k| tiling.region_vertices(k)).collect();
    let mut walls = Vec::new();
    for (i, w) in keys.windows(2).enumerate() {
        let pairs = tiling.wall(w[0], w[1]);
        if pairs.is_empty() {
            return Err(CodegenError::NotAdjacent(i));
        }
        walls.push(pairs);
    }
    let mut universe: Vec<HexVertex> = region_verts.iter().flatten().copied().collect();
    universe.extend(walls.iter().flatten().flat_map(|&(a, b)| [a, b]));
    universe.sort();
    universe.dedup();
    let n = universe.len();
    let id = |v: &HexVertex| universe.binary_search(v).ok();
    let regions: Vec<Bits> = region_verts.iter().map(|r| bits(n, r.iter().filter_map(id))).collect();
    let corridor = bits(n, walls.iter().flatten().flat_map(|&(a, b)| [a, b]).filter_map(|v| id(&v)));

    let mut face_ids: Vec<HexFace> = universe.iter().flat_map(|v| v.faces()).collect();
    face_ids.sort();
    face_ids.dedup();
    let support = |f: HexFace| bits(n, f.vertices().iter().filter_map(id));

    let mut split = Vec::new();
    let mut snake_checks = Vec::new();
    let last = keys.len() - 1;
    for &f in &face_ids {
        let Some(owner) = tiling.face_region(f).and_then(|k| keys.iter().position(|&c| c == k)) else { continue };
        let s = support(f).and(&regions[owner]);
        split.push(other_type(n, s.ones()));
        split.push(merge_type(n, s.ones()));
        if owner != 0 && owner != last {
            snake_checks.push((owner - 1, merge_type(n, s.ones())));
        }
    }
    for q in corridor.ones() {
        split.push(other_type(n, [q]));
    }
    // snake patches start in the +1 eigenstate of their transversal logical
    for r in &regions[1..last] {
        split.push(other_type(n, r.ones()));
    }

    let mut new_checks: Vec<Pauli> = Vec::new();
    for &f in &face_ids {
        if tiling.face_region(f).is_none() {
            let s = support(f);
            if s.intersects(&corridor) {
                new_checks.push(merge_type(n, s.ones()));
            }
        }
    }
    for &(a, b) in walls.iter().flatten() {
        new_checks.push(merge_type(n, [id(&a).unwrap(), id(&b).unwrap()]));
    }
    new_checks.dedup();

    let faces = face_ids.iter().map(|&f| support(f)).collect();
    let coords = universe.iter().map(|v| v.coord()).collect();
    Ok(finish(spec, n, coords, regions, corridor, split, new_checks, snake_checks, faces))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    spec: &MergeSpec,
    n: usize,
    coords: Vec<(i64, i64)>,
    regions: Vec<Bits>,
    corridor: Bits,
    split: Vec<Pauli>,
    new_checks: Vec<Pauli>,
    snake_checks: Vec<(usize, Pauli)>,
    faces: Vec<Bits>,
) -> MergeInstance {
    let mut touched = Bits::zeros(n);
    for p in &new_checks {
        touched.or_assign(&p.support());
    }
    let mut ends = regions[0].clone();
    ends.or_assign(&regions[regions.len() - 1]);
    let target = merge_type(n, touched.and(&ends).ones());
    MergeInstance {
        basis: MergeBasis::ZZ,
        distance: spec.distance,
        n,
        coords,
        regions,
        corridor,
        split,
        new_checks,
        snake_checks,
        faces,
        target,
    }
}

/// Straightened surface snake: the left diamond, `K` strips of `d` diagonal
/// lines and the right diamond, separated by single corridor lines.
fn surface_instance(spec: &MergeSpec) -> MergeInstance {
    let d = spec.distance as i64;
    let k = spec.snake.len();
    let line = |u: i64| -> Vec<Site> {
        (2 - d..=d).filter(|v| (u + v).rem_euclid(2) == 0).map(|v| ((u + v) / 2, (u - v) / 2)).collect()
    };
    let mut region_sites: Vec<Vec<Site>> = vec![diamond((1, 0), spec.distance)];
    let mut seams: Vec<Site> = Vec::new();
    let mut u = d + 1;
    seams.extend(line(u));
    u += 1;
    for _ in 0..k {
        let strip: Vec<Site> = (0..d).flat_map(|i| line(u + i)).collect();
        region_sites.push(strip);
        u += d;
        seams.extend(line(u));
        u += 1;
    }
    let u2 = u + d - 1;
    region_sites.push(diamond(((u2 + 1) / 2, (u2 - 1) / 2), spec.distance));
    for r in &mut region_sites {
        r.sort();
    }
    let mut universe: Vec<Site> = region_sites.iter().flatten().copied().collect();
    universe.extend(&seams);
    universe.sort();
    universe.dedup();
    let n = universe.len();
    let id = |s: &Site| universe.binary_search(s).ok();
    let regions: Vec<Bits> = region_sites.iter().map(|r| bits(n, r.iter().filter_map(id))).collect();
    let corridor = bits(n, seams.iter().filter_map(id));

    let mut split = Vec::new();
    let mut snake_checks = Vec::new();
    let last = regions.len() - 1;
    for (ri, r) in region_sites.iter().enumerate() {
        for (corner, local) in square_faces(r, 2) {
            let s = local.iter().map(|&i| id(&r[i]).unwrap());
            let p = match square_type(corner) {
                CheckType::X => other_type(n, s),
                CheckType::Z => merge_type(n, s),
            };
            if ri != 0 && ri != last && p.is_z_type() {
                snake_checks.push((ri - 1, p.clone()));
            }
            split.push(p);
        }
    }
    for q in corridor.ones() {
        split.push(other_type(n, [q]));
    }
    for r in &regions[1..last] {
        if let Some(l) = snake_logical(n, r, &split, spec.distance) {
            split.push(l);
        }
    }

    let all = square_faces(&universe, 1);
    let mut new_checks = Vec::new();
    for (corner, s) in &all {
        let sb = bits(n, s.iter().copied());
        if square_type(*corner) == CheckType::Z && sb.intersects(&corridor) {
            new_checks.push(merge_type(n, s.iter().copied()));
        }
    }
    let faces = all.iter().map(|(_, s)| bits(n, s.iter().copied())).collect();
    let coords = universe.clone();
    finish(spec, n, coords, regions, corridor, split, new_checks, snake_checks, faces)
}

/// An X-type logical of a snake strip, of smallest weight up to `d + 2`, or
/// a linear-algebra representative beyond that.
fn snake_logical(n: usize, region: &Bits, split: &[Pauli], d: usize) -> Option<Pauli> {
    let inside = |p: &Pauli| p.support().is_subset(region);
    let zs: Vec<Bits> = split.iter().filter(|p| inside(p) && p.is_z_type()).map(|p| p.z.clone()).collect();
    let xs: Vec<Bits> = split.iter().filter(|p| inside(p) && p.is_x_type()).map(|p| p.x.clone()).collect();
    let qs: Vec<usize> = region.ones().collect();
    let span = Basis::from_rows(n, &xs);
    let ok = |v: &Bits| zs.iter().all(|z| !z.dot(v)) && !span.contains(v);
    // columns restricted to the strip
    let local_rows: Vec<Bits> = zs.iter().map(|z| bits(qs.len(), (0..qs.len()).filter(|&i| z.get(qs[i])))).collect();
    let mut budget: u64 = 2_000_000;
    'search: for w in 1..=(d + 2).min(qs.len()) {
        let mut comb: Vec<usize> = (0..w).collect();
        loop {
            let v = bits(n, comb.iter().map(|&i| qs[i]));
            if ok(&v) {
                return Some(Pauli { x: v, z: Bits::zeros(n) });
            }
            budget -= 1;
            if budget == 0 {
                break 'search;
            }
            if !next_combination(&mut comb, qs.len()) {
                break;
            }
        }
    }
    nullspace(qs.len(), &local_rows)
        .into_iter()
        .map(|v| bits(n, v.ones().map(|i| qs[i])))
        .find(|v| ok(v))
        .map(|v| Pauli { x: v, z: Bits::zeros(n) })
}

/// Advance to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
