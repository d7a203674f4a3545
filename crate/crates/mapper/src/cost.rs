use crate::{MapperError, MetricKind};
use lsc_circuit::{Gate, LayeredCircuit};
use lsc_graph::{FactoryConfig, Labeling, RoutingGraph, VertexKind};
use lsc_router::{route_circuit, route_depth_below, PathFinder, RoutingTask};

/// Shortest valid paths between data vertices on the empty graph. They do
/// not depend on the labeling, so one table serves a whole optimisation.
#[derive(Clone, Debug)]
pub struct PathTable {
    index: Vec<usize>,
    paths: Vec<Option<Vec<usize>>>,
    n: usize,
}

impl PathTable {
    pub fn new(g: &RoutingGraph) -> Self {
        let data = g.data_vertices();
        let n = data.len();
        let mut index = vec![usize::MAX; g.len()];
        for (i, &v) in data.iter().enumerate() {
            index[v] = i;
        }
        let free = vec![false; g.len()];
        let mut pf = PathFinder::new(g);
        let mut paths = Vec::with_capacity(n * n);
        for &a in &data {
            for &b in &data {
                paths.push(if a == b { None } else { pf.find(g, a, b, &free) });
            }
        }
        PathTable { index, paths, n }
    }

    pub fn path(&self, a: usize, b: usize) -> Option<&[usize]> {
        let (i, j) = (self.index[a], self.index[b]);
        self.paths[i * self.n + j].as_deref()
    }
}

/// Sum over layers and ancilla vertices of `K choose 2`, where `K` counts
/// the layer's CNOT shortest paths through the vertex.
pub fn crossing_cost(g: &RoutingGraph, layered: &LayeredCircuit, labeling: &Labeling, table: &PathTable) -> u64 {
    let mut count = vec![0u32; g.len()];
    let mut total = 0u64;
    for layer in &layered.layers {
        let mut touched: Vec<usize> = Vec::new();
        for ig in layer {
            let Gate::Cnot { control, target } = ig.gate else { continue };
            let Some(p) = table.path(labeling.vertex(control), labeling.vertex(target)) else { continue };
            for &v in &p[1..p.len() - 1] {
                debug_assert_eq!(g.kind(v), VertexKind::Ancilla);
                total += count[v] as u64;
                count[v] += 1;
                touched.push(v);
            }
        }
        for v in touched {
            count[v] = 0;
        }
    }
    total
}

/// Compiled depth Δ of the shortest-first router.
pub fn depth_cost(g: &RoutingGraph, layered: &LayeredCircuit, labeling: &Labeling, factories: &FactoryConfig) -> Result<u64, MapperError> {
    let task = RoutingTask::new(g, labeling, layered, factories);
    Ok(route_circuit(&task)?.depth() as u64)
}

/// Everything needed to evaluate one metric.
#[derive(Clone, Debug)]
pub struct CostModel<'a> {
    pub graph: &'a RoutingGraph,
    pub layered: &'a LayeredCircuit,
    pub factories: &'a FactoryConfig,
    pub metric: MetricKind,
    table: Option<PathTable>,
}

impl<'a> CostModel<'a> {
    pub fn new(graph: &'a RoutingGraph, layered: &'a LayeredCircuit, factories: &'a FactoryConfig, metric: MetricKind) -> Self {
        let table = (metric == MetricKind::Crossings).then(|| PathTable::new(graph));
        CostModel { graph, layered, factories, metric, table }
    }

    /// Cost if it is strictly below `cutoff`.
    pub fn cost_below(&self, labeling: &Labeling, cutoff: u64) -> Result<Option<u64>, MapperError> {
        match self.metric {
            MetricKind::Crossings => Ok(Some(self.cost(labeling)?).filter(|&c| c < cutoff)),
            MetricKind::Depth => {
                let task = RoutingTask::new(self.graph, labeling, self.layered, self.factories);
                let cut = usize::try_from(cutoff).unwrap_or(usize::MAX);
                Ok(route_depth_below(&task, cut)?.map(|d| d as u64))
            }
        }
    }

    pub fn cost(&self, labeling: &Labeling) -> Result<u64, MapperError> {
        match self.metric {
            MetricKind::Crossings => Ok(crossing_cost(self.graph, self.layered, labeling, self.table.as_ref().unwrap())),
            MetricKind::Depth => depth_cost(self.graph, self.layered, labeling, self.factories),
        }
    }
}
