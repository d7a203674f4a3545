use crate::{PathFinder, RouteError};
use lsc_circuit::{Gate, IndexedGate, LayeredCircuit};
use lsc_graph::{FactoryConfig, Labeling, RoutingGraph};
use serde::{Deserialize, Serialize};

/// Per-factory countdowns. A factory can serve a T gate when its countdown
/// is at most zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoryState {
    pub vertices: Vec<usize>,
    pub countdown: Vec<i64>,
    pub reset_period: i64,
}

impl FactoryState {
    /// Cold start: every factory begins a full period away from its first
    /// magic state.
    pub fn cold(g: &RoutingGraph, reset_period: u32) -> Self {
        Self::with_initial(g, reset_period, reset_period as i64)
    }

    pub fn with_initial(g: &RoutingGraph, reset_period: u32, initial: i64) -> Self {
        let vertices = g.factory_vertices();
        let countdown = vec![initial; vertices.len()];
        FactoryState { vertices, countdown, reset_period: reset_period as i64 }
    }

    fn available(&self, k: usize) -> bool {
        self.countdown[k] <= 0
    }

    fn tick(&mut self) {
        for c in &mut self.countdown {
            *c -= 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct RoutingTask<'a> {
    pub graph: &'a RoutingGraph,
    pub labeling: &'a Labeling,
    pub layered: &'a LayeredCircuit,
    pub reset_period: u32,
    /// Initial factory countdown; `None` means a cold start.
    pub initial_countdown: Option<i64>,
}

impl<'a> RoutingTask<'a> {
    pub fn new(graph: &'a RoutingGraph, labeling: &'a Labeling, layered: &'a LayeredCircuit, factories: &FactoryConfig) -> Self {
        RoutingTask { graph, labeling, layered, reset_period: factories.reset_period, initial_countdown: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoutedOp {
    pub gate: IndexedGate,
    pub path: Vec<usize>,
    /// Interior vertex hosting the logical ancilla of the CNOT.
    pub ancilla: usize,
    pub factory: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompiledSchedule {
    pub layers: Vec<Vec<RoutedOp>>,
}

impl CompiledSchedule {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// `{depth, layers:[[{gate, control, target, path, ancilla, factory}]]}`
    pub fn to_json(&self) -> serde_json::Value {
        let layers: Vec<Vec<serde_json::Value>> = self
            .layers
            .iter()
            .map(|ly| {
                ly.iter()
                    .map(|op| {
                        let (control, target) = match op.gate.gate {
                            Gate::Cnot { control, target } => (Some(control), target),
                            Gate::T { target } => (None, target),
                        };
                        serde_json::json!({
                            "gate": op.gate.index,
                            "control": control,
                            "target": target,
                            "path": op.path,
                            "ancilla": op.ancilla,
                            "factory": op.factory,
                        })
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "depth": self.depth(), "layers": layers })
    }
}

#[derive(Clone, Debug)]
struct Candidate {
    path: Vec<usize>,
    factory: Option<usize>,
}

fn better(a: &Candidate, b: &Candidate) -> bool {
    (a.path.len(), &a.path) < (b.path.len(), &b.path)
}

fn candidate(
    pf: &mut PathFinder,
    g: &RoutingGraph,
    lab: &Labeling,
    gate: &Gate,
    occupied: &[bool],
    factories: &FactoryState,
    ignore_countdown: bool,
) -> Option<Candidate> {
    match *gate {
        Gate::Cnot { control, target } => {
            pf.find(g, lab.vertex(control), lab.vertex(target), occupied).map(|path| Candidate { path, factory: None })
        }
        Gate::T { target } => {
            let src = lab.vertex(target);
            let open: Vec<usize> = (0..factories.vertices.len())
                .filter(|&k| !occupied[factories.vertices[k]] && (ignore_countdown || factories.available(k)))
                .collect();
            let targets: Vec<usize> = open.iter().map(|&k| factories.vertices[k]).collect();
            let bounds = pf.lower_bounds(g, src, &targets, occupied);
            let mut order: Vec<(u32, usize)> =
                bounds.iter().zip(&open).filter_map(|(b, &k)| b.map(|b| (b, k))).collect();
            order.sort();
            let mut best: Option<Candidate> = None;
            for (lb, k) in order {
                if best.as_ref().is_some_and(|b| lb as usize + 1 > b.path.len()) {
                    break;
                }
                if let Some(path) = pf.find(g, src, factories.vertices[k], occupied) {
                    let c = Candidate { path, factory: Some(k) };
                    if best.as_ref().is_none_or(|b| better(&c, b)) {
                        best = Some(c);
                    }
                }
            }
            best
        }
    }
}

/// Route one demand layer. Returns the routed operations (in commit order)
/// and the gates left over. Consumed factories are reset; the caller ticks
/// the countdowns at layer end.
pub fn vdp_subroutine(
    g: &RoutingGraph,
    labeling: &Labeling,
    demand: &[IndexedGate],
    factories: &mut FactoryState,
    pf: &mut PathFinder,
) -> (Vec<RoutedOp>, Vec<IndexedGate>) {
    let mut occupied = vec![false; g.len()];
    let mut cands: Vec<Option<Candidate>> =
        demand.iter().map(|d| candidate(pf, g, labeling, &d.gate, &occupied, factories, false)).collect();
    let mut done = vec![false; demand.len()];
    let mut routed = Vec::new();
    loop {
        let mut pick: Option<usize> = None;
        for i in 0..demand.len() {
            let Some(c) = &cands[i] else { continue };
            if done[i] {
                continue;
            }
            pick = match pick {
                None => Some(i),
                Some(j) => {
                    let cj = cands[j].as_ref().unwrap();
                    let key_i = (c.path.len(), demand[i].index);
                    let key_j = (cj.path.len(), demand[j].index);
                    if key_i < key_j {
                        Some(i)
                    } else {
                        Some(j)
                    }
                }
            };
        }
        let Some(i) = pick else { break };
        let c = cands[i].take().unwrap();
        done[i] = true;
        for &v in &c.path {
            occupied[v] = true;
        }
        let factory_vertex = c.factory.map(|k| {
            factories.countdown[k] = factories.reset_period;
            factories.vertices[k]
        });
        // a cached path stays optimal unless it touches the new occupation or
        // its factory was just consumed
        for j in 0..demand.len() {
            if done[j] {
                continue;
            }
            let stale = match &cands[j] {
                Some(cj) => {
                    cj.path.iter().any(|&v| occupied[v]) || (c.factory.is_some() && cj.factory == c.factory)
                }
                None => false,
            };
            if stale {
                cands[j] = candidate(pf, g, labeling, &demand[j].gate, &occupied, factories, false);
            }
        }
        routed.push(RoutedOp { gate: demand[i], ancilla: c.path[1], path: c.path, factory: factory_vertex });
    }
    let leftovers = (0..demand.len()).filter(|&i| !done[i]).map(|i| demand[i]).collect();
    (routed, leftovers)
}

/// Insert `leftovers` at layer `position`. Gates there that share a qubit
/// with an inserted gate move on to the following layer, recursively.
pub fn push_leftovers(layers: &mut Vec<Vec<IndexedGate>>, leftovers: Vec<IndexedGate>, position: usize) {
    let mut carry = leftovers;
    let mut p = position;
    while !carry.is_empty() {
        if p >= layers.len() {
            layers.resize(p + 1, Vec::new());
        }
        let current = std::mem::take(&mut layers[p]);
        let (push, stay): (Vec<IndexedGate>, Vec<IndexedGate>) =
            current.into_iter().partition(|g| carry.iter().any(|c| c.gate.shares_qubit(&g.gate)));
        let mut merged = carry;
        merged.extend(stay);
        merged.sort_by_key(|g| g.index);
        layers[p] = merged;
        carry = push;
        p += 1;
    }
}

/// Route a whole layered circuit.
pub fn route_circuit(task: &RoutingTask) -> Result<CompiledSchedule, RouteError> {
    Ok(route(task, usize::MAX)?.expect("no cutoff"))
}

/// Compiled depth if it is below `cutoff`, `None` otherwise. Stops as soon
/// as the pending layer count reaches the cutoff.
pub fn route_depth_below(task: &RoutingTask, cutoff: usize) -> Result<Option<usize>, RouteError> {
    Ok(route(task, cutoff)?.map(|s| s.depth()))
}

fn route(task: &RoutingTask, cutoff: usize) -> Result<Option<CompiledSchedule>, RouteError> {
    let g = task.graph;
    let lab = task.labeling;
    let n = task.layered.num_qubits;
    for q in 0..n {
        if q >= lab.len() {
            return Err(RouteError::BadLabeling(q));
        }
    }
    if !lab.is_valid_for(g) {
        return Err(RouteError::BadLabeling(0));
    }
    let has_t = task.layered.layers.iter().flatten().any(|g| !g.gate.is_cnot());
    let mut factories = match task.initial_countdown {
        Some(c) => FactoryState::with_initial(g, task.reset_period, c),
        None => FactoryState::cold(g, task.reset_period),
    };
    if has_t && factories.vertices.is_empty() {
        return Err(RouteError::NoFactories);
    }
    let mut pf = PathFinder::new(g);
    let mut checked = vec![false; task.layered.layers.iter().flatten().map(|g| g.index + 1).max().unwrap_or(0)];
    let mut pending: Vec<Vec<IndexedGate>> = task.layered.layers.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while i < pending.len() {
        if pending.len() >= cutoff {
            return Ok(None);
        }
        let demand = std::mem::take(&mut pending[i]);
        let (routed, leftovers) = vdp_subroutine(g, lab, &demand, &mut factories, &mut pf);
        factories.tick();
        for lo in &leftovers {
            if !checked[lo.index] {
                let empty = vec![false; g.len()];
                if candidate(&mut pf, g, lab, &lo.gate, &empty, &factories, true).is_none() {
                    return Err(RouteError::UnroutableDemand { index: lo.index });
                }
                checked[lo.index] = true;
            }
        }
        out.push(routed);
        if !leftovers.is_empty() {
            push_leftovers(&mut pending, leftovers, i + 1);
        }
        i += 1;
    }
    if out.len() >= cutoff {
        return Ok(None);
    }
    Ok(Some(CompiledSchedule { layers: out }))
}
