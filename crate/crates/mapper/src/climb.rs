use crate::{CostModel, MapperError, MetricKind};
use lsc_circuit::LayeredCircuit;
use lsc_graph::{random_labeling, Labeling};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HillClimbConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub metric: MetricKind,
    pub seed: u64,
}

impl HillClimbConfig {
    pub fn new(metric: MetricKind, seed: u64) -> Self {
        HillClimbConfig { restarts: 10, max_iterations: 50, metric, seed }
    }

    fn validate(&self) -> Result<(), MapperError> {
        if self.restarts == 0 {
            return Err(MapperError::BadConfig("restarts must be at least 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(MapperError::BadConfig("iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestartTrace {
    pub seed: u64,
    pub initial: Labeling,
    /// Cost after each accepted move, starting with the initial cost.
    pub costs: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingResult {
    pub labeling: Labeling,
    pub cost: u64,
    /// Restart that produced `labeling`.
    pub best_restart: usize,
    pub restarts: Vec<RestartTrace>,
}

impl MappingResult {
    pub fn initial_costs(&self) -> Vec<u64> {
        self.restarts.iter().map(|r| r.costs[0]).collect()
    }

    /// Random starting labeling of the winning restart.
    pub fn best_initial(&self) -> &Labeling {
        &self.restarts[self.best_restart].initial
    }
}

/// Labelings reached by exchanging the vertices of two labels that occur in
/// the circuit.
pub fn neighbors(labeling: &Labeling, layered: &LayeredCircuit) -> Vec<Labeling> {
    let active = layered.active_labels();
    let mut out = Vec::with_capacity(active.len() * active.len().saturating_sub(1) / 2);
    for (i, &a) in active.iter().enumerate() {
        for &b in &active[i + 1..] {
            out.push(labeling.swapped(a, b));
        }
    }
    out
}

/// Seed of restart `r`, derived so restarts are independent of scheduling.
pub fn restart_seed(seed: u64, r: usize) -> u64 {
    // splitmix64 finaliser
    let mut z = seed ^ (r as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn climb(model: &CostModel, start: Labeling, max_iterations: usize) -> Result<(Labeling, Vec<u64>), MapperError> {
    let mut cur = start;
    let mut cost = model.cost(&cur)?;
    let mut trace = vec![cost];
    for _ in 0..max_iterations {
        let nbs = neighbors(&cur, model.layered);
        // only strict improvements matter, so costs at or above the current
        // one are not computed exactly
        let costs: Vec<Option<u64>> = nbs.par_iter().map(|l| model.cost_below(l, cost)).collect::<Result<_, _>>()?;
        let best = (0..nbs.len())
            .filter_map(|i| costs[i].map(|c| (c, i)))
            .min_by(|&(ci, i), &(cj, j)| (ci, &nbs[i]).cmp(&(cj, &nbs[j])));
        match best {
            Some((c, i)) => {
                cost = c;
                cur = nbs[i].clone();
                trace.push(cost);
            }
            _ => break,
        }
    }
    Ok((cur, trace))
}

/// Steepest-descent hill climbing with random restarts.
pub fn hill_climb(model: &CostModel, q: usize, config: &HillClimbConfig) -> Result<MappingResult, MapperError> {
    config.validate()?;
    let mut best: Option<(Labeling, u64, usize)> = None;
    let mut restarts = Vec::with_capacity(config.restarts);
    for r in 0..config.restarts {
        let seed = restart_seed(config.seed, r);
        let initial = random_labeling(model.graph, q, seed)?;
        let (lab, trace) = climb(model, initial.clone(), config.max_iterations)?;
        let c = *trace.last().unwrap();
        if best.as_ref().is_none_or(|(_, b, _)| c < *b) {
            best = Some((lab, c, r));
        }
        restarts.push(RestartTrace { seed, initial, costs: trace });
    }
    let (labeling, cost, best_restart) = best.unwrap();
    Ok(MappingResult { labeling, cost, best_restart, restarts })
}
