use lsc_graph::{Direction, RoutingGraph, SubstrateKind, VertexKind};
use std::collections::VecDeque;

const INF: u32 = u32::MAX;

/// Reusable buffers for path searches on one graph.
#[derive(Clone, Debug)]
pub struct PathFinder {
    masks: usize,
    required: u8,
    dist: Vec<u32>,
    queue: VecDeque<usize>,
    on_path: Vec<bool>,
}

impl PathFinder {
    pub fn new(g: &RoutingGraph) -> Self {
        let (masks, required) = match g.substrate {
            SubstrateKind::Color => (1, 0),
            SubstrateKind::Surface => (8, Direction::ALL_BITS),
        };
        PathFinder {
            masks,
            required,
            dist: vec![INF; g.len() * masks],
            queue: VecDeque::new(),
            on_path: vec![false; g.len()],
        }
    }

    fn bit(&self, d: Direction) -> usize {
        if self.masks == 1 {
            0
        } else {
            d.bit() as usize
        }
    }

    /// Shortest valid path from `src` to `dst` whose interior avoids
    /// `occupied`. Among shortest paths the lexicographically smallest vertex
    /// sequence wins.
    pub fn find(&mut self, g: &RoutingGraph, src: usize, dst: usize, occupied: &[bool]) -> Option<Vec<usize>> {
        if src == dst {
            return None;
        }
        let usable = |v: usize| g.kind(v) == VertexKind::Ancilla && !occupied[v];
        let m = self.masks;
        self.dist.iter_mut().for_each(|d| *d = INF);
        self.queue.clear();
        // dist[(v, mask)] = edges still needed from interior vertex v having
        // collected `mask`
        for &(v, d) in g.neighbors(dst) {
            if !usable(v) {
                continue;
            }
            let b = self.bit(d);
            for mask in 0..m {
                if (mask | b) as u8 & self.required == self.required && self.dist[v * m + mask] == INF {
                    self.dist[v * m + mask] = 1;
                    self.queue.push_back(v * m + mask);
                }
            }
        }
        while let Some(s) = self.queue.pop_front() {
            let (v, mask) = (s / m, s % m);
            let dv = self.dist[s];
            for &(u, d) in g.neighbors(v) {
                if !usable(u) {
                    continue;
                }
                let b = self.bit(d);
                if mask & b != b {
                    continue;
                }
                for prev in [mask, mask & !b] {
                    let t = u * m + prev;
                    if self.dist[t] == INF {
                        self.dist[t] = dv + 1;
                        self.queue.push_back(t);
                    }
                }
            }
        }
        let start = g
            .neighbors(src)
            .iter()
            .filter(|&&(a, _)| usable(a))
            .map(|&(a, d)| self.dist[a * m + self.bit(d)])
            .min()?;
        if start == INF {
            return None;
        }
        let bound = g.len() as u32;
        let mut budget = start + 1;
        while budget <= bound {
            let mut path = vec![src];
            self.on_path[src] = true;
            let found = self.dfs(g, dst, occupied, &mut path, 0, budget);
            for &v in &path {
                self.on_path[v] = false;
            }
            if found {
                return Some(path);
            }
            budget += 1;
        }
        None
    }

    /// Lower bounds on the valid path length from `src` to each of
    /// `targets` (walk distance; exact on the colour substrate).
    pub fn lower_bounds(&mut self, g: &RoutingGraph, src: usize, targets: &[usize], occupied: &[bool]) -> Vec<Option<u32>> {
        let usable = |v: usize| g.kind(v) == VertexKind::Ancilla && !occupied[v];
        let m = self.masks;
        self.dist.iter_mut().for_each(|d| *d = INF);
        self.queue.clear();
        // forward search; dist[(v, mask)] = edges walked to reach v with `mask`
        for &(v, d) in g.neighbors(src) {
            if usable(v) {
                let t = v * m + self.bit(d);
                if self.dist[t] == INF {
                    self.dist[t] = 1;
                    self.queue.push_back(t);
                }
            }
        }
        while let Some(s) = self.queue.pop_front() {
            let (v, mask) = (s / m, s % m);
            for &(u, d) in g.neighbors(v) {
                if !usable(u) {
                    continue;
                }
                let t = u * m + (mask | self.bit(d));
                if self.dist[t] == INF {
                    self.dist[t] = self.dist[s] + 1;
                    self.queue.push_back(t);
                }
            }
        }
        targets
            .iter()
            .map(|&f| {
                let mut best: Option<u32> = None;
                for &(v, d) in g.neighbors(f) {
                    if v == src || !usable(v) {
                        continue;
                    }
                    for mask in 0..m {
                        let dv = self.dist[v * m + mask];
                        if dv != INF && (mask | self.bit(d)) as u8 & self.required == self.required {
                            best = Some(best.map_or(dv + 1, |b: u32| b.min(dv + 1)));
                        }
                    }
                }
                best
            })
            .collect()
    }

    // depth-first search for a simple path of exactly `budget` edges, in
    // increasing vertex-id order
    fn dfs(&mut self, g: &RoutingGraph, dst: usize, occupied: &[bool], path: &mut Vec<usize>, mask: usize, budget: u32) -> bool {
        let v = *path.last().unwrap();
        let used = (path.len() - 1) as u32;
        let m = self.masks;
        for &(u, d) in g.neighbors(v) {
            let nm = mask | self.bit(d);
            if u == dst {
                if used + 1 == budget && path.len() >= 2 && nm as u8 & self.required == self.required {
                    path.push(u);
                    return true;
                }
                continue;
            }
            if g.kind(u) != VertexKind::Ancilla || occupied[u] || self.on_path[u] {
                continue;
            }
            let h = self.dist[u * m + nm];
            if h == INF || used + 1 + h > budget {
                continue;
            }
            path.push(u);
            self.on_path[u] = true;
            if self.dfs(g, dst, occupied, path, nm, budget) {
                return true;
            }
            self.on_path[u] = false;
            path.pop();
        }
        false
    }
}

/// One-shot convenience wrapper around [`PathFinder::find`].
pub fn shortest_valid_path(g: &RoutingGraph, src: usize, dst: usize, occupied: &[bool]) -> Option<Vec<usize>> {
    PathFinder::new(g).find(g, src, dst, occupied)
}
