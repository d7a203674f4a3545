use crate::CliError;
use lsc_circuit::{layer_circuit, parse_circuit, LayeredCircuit};
use lsc_codegen::{
    build_subsystem_code, dump, generate, intersect_groups, parity_report, verify_distance, DistanceReport, MergeArtifacts,
    MergeSpec, SearchOptions,
};
use lsc_graph::{
    build_routing_graph, random_labeling, Extent, FactoryConfig, Labeling, LayoutKind, RoutingGraph, SubstrateKind,
};
use lsc_mapper::{crossing_cost, hill_climb, CostModel, HillClimbConfig, MappingResult, MetricKind, PathTable};
use lsc_router::{route_circuit, CompiledSchedule, RoutingTask};
use lsc_gf2::{rank, Pauli};
use serde_json::json;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct CompileOptions {
    pub layout: LayoutKind,
    pub substrate: SubstrateKind,
    pub extent: Option<Extent>,
    pub factories: FactoryConfig,
    pub metric: MetricKind,
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    /// Skip hill climbing and route under a seeded random labeling.
    pub no_mapping: bool,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            layout: LayoutKind::Hexagonal,
            substrate: SubstrateKind::Color,
            extent: None,
            factories: FactoryConfig::new(2, 1),
            metric: MetricKind::Crossings,
            restarts: 10,
            iterations: 50,
            seed: 0,
            no_mapping: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompileOutput {
    pub graph: RoutingGraph,
    pub layered: LayeredCircuit,
    pub labeling: Labeling,
    pub mapping: Option<MappingResult>,
    pub schedule: CompiledSchedule,
    pub crossings: u64,
}

impl CompileOutput {
    pub fn depth(&self) -> usize {
        self.schedule.depth()
    }

    pub fn summary(&self) -> String {
        format!(
            "delta={} layers={} gates={} crossings={} vertices={}",
            self.depth(),
            self.layered.depth(),
            self.layered.gate_count(),
            self.crossings,
            self.graph.len()
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "delta": self.depth(),
            "layers": self.layered.depth(),
            "crossings": self.crossings,
            "graph": self.graph.to_json(Some(&self.labeling)),
            "mapping": self.mapping,
            "schedule": self.schedule.to_json(),
        })
    }
}

pub fn compile(circuit_text: &str, opts: &CompileOptions) -> Result<CompileOutput, CliError> {
    let circuit = parse_circuit(circuit_text)?;
    let layered = layer_circuit(&circuit);
    let q = circuit.num_qubits;
    let extent = opts.extent.unwrap_or_else(|| Extent::for_data(opts.layout, q));
    let graph = build_routing_graph(opts.layout, extent, opts.substrate, &opts.factories)?;
    let (labeling, mapping) = if opts.no_mapping {
        (random_labeling(&graph, q, opts.seed)?, None)
    } else {
        let model = CostModel::new(&graph, &layered, &opts.factories, opts.metric);
        let config = HillClimbConfig { restarts: opts.restarts, max_iterations: opts.iterations, metric: opts.metric, seed: opts.seed };
        let r = hill_climb(&model, q, &config)?;
        (r.labeling.clone(), Some(r))
    };
    let schedule = route_circuit(&RoutingTask::new(&graph, &labeling, &layered, &opts.factories))?;
    let crossings = crossing_cost(&graph, &layered, &labeling, &PathTable::new(&graph));
    Ok(CompileOutput { graph, layered, labeling, mapping, schedule, crossings })
}

fn substrate_name(s: SubstrateKind) -> &'static str {
    match s {
        SubstrateKind::Color => "color",
        SubstrateKind::Surface => "surface",
    }
}

/// JSON form of a merge: geometry reference plus tagged operators.
pub fn codegen_json(spec: &MergeSpec, art: &MergeArtifacts) -> serde_json::Value {
    let (_, ops) = dump::parse_dump(&art.dump(spec)).expect("own dump parses");
    let ops: Vec<serde_json::Value> = ops
        .iter()
        .map(|(p, t)| json!({ "x": p.x.ones().collect::<Vec<_>>(), "z": p.z.ones().collect::<Vec<_>>(), "tag": format!("{t:?}") }))
        .collect();
    json!({
        "substrate": substrate_name(spec.substrate),
        "distance": spec.distance,
        "basis": spec.basis.to_string(),
        "chain": spec.chain(),
        "n": art.code.n,
        "coords": art.instance.coords,
        "operators": ops,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<(String, bool)>,
    pub distance: DistanceReport,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok) && self.distance.passed
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, ok) in &self.checks {
            let _ = writeln!(out, "{name}: {}", if *ok { "ok" } else { "FAIL" });
        }
        let d = &self.distance;
        let mode = if d.exhaustive { "exhaustive" } else { "bounded search only" };
        let _ = writeln!(out, "distance >= {}: {} ({mode})", d.target, if d.passed { "pass" } else { "FAIL" });
        if let Some(w) = &d.witness {
            let _ = writeln!(out, "witness weight {}: {}", w.weight(), dump::format_line(w, dump::Tag::G).trim_end_matches(" G"));
        }
        out
    }
}

fn all_commute(ps: &[Pauli]) -> bool {
    ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| p.commutes(q)))
}

fn same_row_space(n: usize, a: &[Pauli], b: &[Pauli]) -> bool {
    let sym = |ps: &[Pauli]| ps.iter().map(Pauli::to_symplectic).collect::<Vec<_>>();
    let mut both = sym(a);
    both.extend(sym(b));
    let r = rank(2 * n, &both);
    r == rank(2 * n, &sym(a)) && r == rank(2 * n, &sym(b))
}

/// Full invariant suite on a generated merge.
pub fn verify_merge(spec: &MergeSpec, d_target: usize, opts: &SearchOptions) -> Result<VerifyReport, CliError> {
    let art = generate(spec)?;
    let code = &art.code;
    let n = code.n;
    let rebuilt = build_subsystem_code(&code.split, &code.merged, art.instance.left())?;
    let s_again = intersect_groups(n, &code.split, &code.merged);
    let same_s = same_row_space(n, &s_again, &rebuilt.stabilizers);
    let partners_ok = code.intermediary.iter().zip(&code.partners).all(|(m, p)| m.anticommutes(p))
        && code.partners.len() == code.intermediary.len();
    let checks = vec![
        ("split generators commute".to_string(), all_commute(&code.split)),
        ("merged generators commute".to_string(), all_commute(&code.merged)),
        ("S equals split and merged intersection".to_string(), same_s),
        ("intermediary partners anticommute".to_string(), partners_ok),
        ("M product equals boundary logicals".to_string(), art.subset.product() == art.instance.target),
        ("M parity".to_string(), parity_report(&art.subset).ok()),
    ];
    let distance = verify_distance(code, d_target, opts)?;
    Ok(VerifyReport { checks, distance })
}

/// Checks on a stabilizer dump.
pub fn verify_dump_text(text: &str, d_target: usize, opts: &SearchOptions) -> Result<VerifyReport, CliError> {
    let v = dump::verify_dump(text, d_target, opts)?;
    let mut checks = vec![("stabilizers commute with every operator".to_string(), v.anticommuting.is_empty())];
    if let Some(p) = &v.parity {
        checks.push(("M parity".to_string(), p.ok()));
    }
    Ok(VerifyReport { checks, distance: v.distance })
}
