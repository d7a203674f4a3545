//! Parameter sweeps over layouts, circuit families and factory grids.

use crate::CliError;
use lsc_circuit::{generate_random_circuit, layer_circuit, Family, LayeredCircuit, RandomCircuitSpec};
use lsc_graph::{build_routing_graph, Extent, FactoryConfig, LayoutKind, RoutingGraph, SubstrateKind};
use lsc_mapper::{hill_climb, improvement, restart_seed, CostModel, Denominator, HillClimbConfig, MetricKind};
use lsc_router::{route_circuit, RoutingTask};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::{self, Write};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// Circuit parallelism against layout, CNOT only.
    Parallelism,
    /// Factory count against reset period, CNOT and T.
    Factories,
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Parallelism => "parallelism",
            Preset::Factories => "factories",
        })
    }
}

impl FromStr for Preset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "parallelism" => Ok(Preset::Parallelism),
            "factories" => Ok(Preset::Factories),
            _ => Err(format!("unknown preset `{s}` (expected parallelism or factories)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub preset: Preset,
    pub layouts: Vec<LayoutKind>,
    pub families: Vec<Family>,
    pub metrics: Vec<MetricKind>,
    pub q: usize,
    pub gates: usize,
    /// CNOT fraction of the sampled circuits.
    pub ratio: f64,
    pub samples: usize,
    pub restarts: usize,
    pub iterations: usize,
    pub factory_counts: Vec<usize>,
    pub reset_periods: Vec<u32>,
    pub denominator: Denominator,
    pub seed: u64,
}

impl ExperimentSpec {
    pub fn preset(preset: Preset) -> Self {
        let q = 24;
        let base = ExperimentSpec {
            preset,
            layouts: LayoutKind::ALL.to_vec(),
            families: Family::ALL.to_vec(),
            metrics: vec![MetricKind::Crossings],
            q,
            gates: 4 * q,
            ratio: 1.0,
            samples: 50,
            restarts: 10,
            iterations: 50,
            factory_counts: vec![0],
            reset_periods: vec![1],
            denominator: Denominator::Final,
            seed: 0,
        };
        match preset {
            Preset::Parallelism => base,
            Preset::Factories => ExperimentSpec {
                layouts: vec![LayoutKind::Row],
                families: vec![Family::Rand],
                metrics: vec![MetricKind::Crossings, MetricKind::Depth],
                ratio: 0.8,
                factory_counts: vec![2, 4, 8],
                reset_periods: vec![2, 4, 8],
                denominator: Denominator::Initial,
                ..base
            },
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let empty = [
            ("layouts", self.layouts.is_empty()),
            ("families", self.families.is_empty()),
            ("metrics", self.metrics.is_empty()),
            ("factory counts", self.factory_counts.is_empty()),
            ("reset periods", self.reset_periods.is_empty()),
        ];
        if let Some((name, _)) = empty.iter().find(|(_, e)| *e) {
            return Err(CliError::Grid(format!("no {name} selected")));
        }
        if self.samples == 0 {
            return Err(CliError::Grid("samples must be at least 1".into()));
        }
        if self.q < 2 {
            return Err(CliError::Grid("q must be at least 2".into()));
        }
        if !(0.0..=1.0).contains(&self.ratio) {
            return Err(CliError::Grid(format!("ratio {} outside [0, 1]", self.ratio)));
        }
        if self.reset_periods.contains(&0) {
            return Err(CliError::Grid("reset periods must be positive".into()));
        }
        if self.ratio < 1.0 && self.factory_counts.contains(&0) {
            return Err(CliError::Grid("circuits with T gates need at least one factory".into()));
        }
        if self.restarts == 0 || self.iterations == 0 {
            return Err(CliError::Grid("restarts and iterations must be at least 1".into()));
        }
        Ok(())
    }

    /// Stable FNV-1a hash of the canonical JSON form.
    pub fn config_hash(&self) -> u64 {
        let text = serde_json::to_string(self).expect("spec serializes");
        text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
    }

    /// Cells in canonical order.
    pub fn cells(&self) -> Vec<CellKey> {
        let mut out = Vec::new();
        for &layout in &self.layouts {
            for &family in &self.families {
                for &metric in &self.metrics {
                    for &factories in &self.factory_counts {
                        for &reset_period in &self.reset_periods {
                            out.push(CellKey { layout, family, metric, factories, reset_period });
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellKey {
    pub layout: LayoutKind,
    pub family: Family,
    pub metric: MetricKind,
    pub factories: usize,
    pub reset_period: u32,
}

/// Seed of the circuit for sample `index` of `family`. Shared by every cell
/// with that family, so cells are compared on the same circuits.
pub fn circuit_seed(seed: u64, family: Family, index: usize) -> u64 {
    let f = Family::ALL.iter().position(|&x| x == family).unwrap();
    restart_seed(restart_seed(seed, f), index)
}

pub fn climb_seed(circuit_seed: u64) -> u64 {
    restart_seed(circuit_seed, usize::MAX)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleResult {
    pub index: usize,
    pub circuit_seed: u64,
    pub climb_seed: u64,
    /// Depth under the starting labeling of the winning restart.
    pub delta_i: usize,
    /// Depth under the optimised labeling.
    pub delta_f: usize,
    pub improvement: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub key: CellKey,
    pub samples: Vec<SampleResult>,
    pub mean_improvement: f64,
    pub stderr_improvement: Option<f64>,
    pub mean_delta_i: f64,
    pub mean_delta_f: f64,
    pub stderr_delta_f: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub spec: ExperimentSpec,
    pub config_hash: String,
    pub cells: Vec<CellReport>,
}

/// Mean and standard error; the error is undefined for one sample.
pub fn mean_stderr(xs: &[f64]) -> (f64, Option<f64>) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, None);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, Some((var / n).sqrt()))
}

fn circuit(spec: &ExperimentSpec, family: Family, index: usize) -> Result<(u64, LayeredCircuit), CliError> {
    let seed = circuit_seed(spec.seed, family, index);
    let c = generate_random_circuit(&RandomCircuitSpec::new(family, spec.q, seed).with_gates(spec.gates).with_ratio(spec.ratio))?;
    Ok((seed, layer_circuit(&c)))
}

fn run_sample(
    spec: &ExperimentSpec,
    key: &CellKey,
    graph: &RoutingGraph,
    factories: &FactoryConfig,
    index: usize,
) -> Result<SampleResult, CliError> {
    let (cseed, layered) = circuit(spec, key.family, index)?;
    let model = CostModel::new(graph, &layered, factories, key.metric);
    let config = HillClimbConfig { restarts: spec.restarts, max_iterations: spec.iterations, metric: key.metric, seed: climb_seed(cseed) };
    let result = hill_climb(&model, spec.q, &config)?;
    let depth = |lab| -> Result<usize, CliError> { Ok(route_circuit(&RoutingTask::new(graph, lab, &layered, factories))?.depth()) };
    let delta_i = depth(result.best_initial())?;
    let delta_f = depth(&result.labeling)?;
    Ok(SampleResult {
        index,
        circuit_seed: cseed,
        climb_seed: config.seed,
        delta_i,
        delta_f,
        improvement: improvement(delta_i, delta_f, spec.denominator)?,
    })
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<RunReport, CliError> {
    spec.validate()?;
    let cells = spec.cells();
    let graphs: Vec<(RoutingGraph, FactoryConfig)> = cells
        .iter()
        .map(|k| {
            let f = FactoryConfig::new(k.factories, k.reset_period);
            let g = build_routing_graph(k.layout, Extent::for_data(k.layout, spec.q), SubstrateKind::Color, &f)?;
            Ok((g, f))
        })
        .collect::<Result<_, CliError>>()?;
    let jobs: Vec<(usize, usize)> = (0..cells.len()).flat_map(|c| (0..spec.samples).map(move |s| (c, s))).collect();
    let results: Vec<SampleResult> = jobs
        .par_iter()
        .map(|&(c, s)| run_sample(spec, &cells[c], &graphs[c].0, &graphs[c].1, s))
        .collect::<Result<_, CliError>>()?;
    let reports = cells
        .iter()
        .zip(results.chunks(spec.samples))
        .map(|(key, samples)| {
            let imp: Vec<f64> = samples.iter().map(|s| s.improvement).collect();
            let di: Vec<f64> = samples.iter().map(|s| s.delta_i as f64).collect();
            let df: Vec<f64> = samples.iter().map(|s| s.delta_f as f64).collect();
            let (mean_improvement, stderr_improvement) = mean_stderr(&imp);
            let (mean_delta_f, stderr_delta_f) = mean_stderr(&df);
            CellReport {
                key: *key,
                samples: samples.to_vec(),
                mean_improvement,
                stderr_improvement,
                mean_delta_i: mean_stderr(&di).0,
                mean_delta_f,
                stderr_delta_f,
            }
        })
        .collect();
    Ok(RunReport { spec: spec.clone(), config_hash: format!("{:016x}", spec.config_hash()), cells: reports })
}

pub const CSV_HEADER: &str = "preset,layout,family,metric,factories,reset_period,denominator,q,gates,ratio,samples,seed,\
mean_improvement,stderr_improvement,mean_delta_i,mean_delta_f,stderr_delta_f";

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_default()
}

impl RunReport {
    /// One row per cell; every row carries the master seed that, with the
    /// cell's own columns, reproduces it.
    pub fn to_csv(&self) -> String {
        let s = &self.spec;
        let mut out = String::new();
        let _ = writeln!(out, "{CSV_HEADER}");
        for c in &self.cells {
            let k = &c.key;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{:.6},{},{:.6},{:.6},{}",
                s.preset,
                k.layout,
                k.family,
                k.metric,
                k.factories,
                k.reset_period,
                s.denominator,
                s.q,
                s.gates,
                s.ratio,
                c.samples.len(),
                s.seed,
                c.mean_improvement,
                opt(c.stderr_improvement),
                c.mean_delta_i,
                c.mean_delta_f,
                opt(c.stderr_delta_f)
            );
        }
        out
    }

    pub fn cell(&self, layout: LayoutKind, family: Family, metric: MetricKind, factories: usize, reset: u32) -> Option<&CellReport> {
        self.cells.iter().find(|c| c.key == CellKey { layout, family, metric, factories, reset_period: reset })
    }
}
