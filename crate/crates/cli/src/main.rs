use clap::{Args, Parser, Subcommand};
use lsc_circuit::Family;
use lsc_tool::config::{ConfigFile, Settings};
use lsc_tool::*;
use lsc_codegen::{generate, MergeBasis, MergeSpec, SearchOptions};
use lsc_graph::{Extent, FactoryConfig, LayoutKind, SubstrateKind};
use lsc_mapper::{Denominator, MetricKind};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lsc", version, about = "Lattice-surgery compilation on code substrates")]
struct Cli {
    /// Flat `key = value` file; command-line flags take precedence
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Shared {
    /// hexagonal, row or pair (experiment: comma-separated list)
    #[arg(long)]
    layout: Option<String>,
    /// color or surface
    #[arg(long)]
    substrate: Option<String>,
    #[arg(long)]
    distance: Option<String>,
    /// Factory count (experiment: comma-separated list)
    #[arg(long)]
    factories: Option<String>,
    /// Factory reset period (experiment: comma-separated list)
    #[arg(long)]
    reset_period: Option<String>,
    /// crossings or depth (experiment: comma-separated list)
    #[arg(long)]
    metric: Option<String>,
    #[arg(long)]
    restarts: Option<String>,
    #[arg(long)]
    iterations: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// final or initial
    #[arg(long)]
    denominator: Option<String>,
    /// Output file; standard output when absent
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Map and route a circuit file, writing the schedule as JSON
    Compile {
        /// Circuit in the `qubits n` / `cnot c t` / `t q` line format
        #[arg(long)]
        circuit: Option<String>,
        /// Route under a seeded random labeling instead of hill climbing
        #[arg(long)]
        no_mapping: bool,
        #[arg(long)]
        width: Option<String>,
        #[arg(long)]
        height: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Run a preset sweep and print one CSV row per cell
    Experiment {
        /// parallelism or factories
        #[arg(long)]
        preset: Option<String>,
        /// seq, rand, max (comma-separated)
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        gates: Option<String>,
        #[arg(long)]
        samples: Option<String>,
        /// CNOT fraction of the sampled circuits
        #[arg(long)]
        ratio: Option<String>,
        /// Also write the per-sample report as JSON
        #[arg(long)]
        report: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Emit the stabilizer dump of a merge
    Codegen {
        #[command(flatten)]
        merge: MergeArgs,
        /// text or json
        #[arg(long)]
        format: Option<String>,
        #[command(flatten)]
        shared: Shared,
    },
    /// Check a dump or a generated merge against a target distance
    Verify {
        /// Stabilizer dump to check instead of generating one
        #[arg(long)]
        dump: Option<String>,
        /// Distance to certify; defaults to --distance
        #[arg(long)]
        target: Option<String>,
        /// Largest number of supports enumerated per Pauli type
        #[arg(long)]
        budget: Option<String>,
        /// Random trials once the enumeration budget is exceeded
        #[arg(long)]
        trials: Option<String>,
        #[command(flatten)]
        merge: MergeArgs,
        #[command(flatten)]
        shared: Shared,
    },
}

#[derive(Args)]
struct MergeArgs {
    /// zz or xx
    #[arg(long)]
    basis: Option<String>,
    /// Ancilla patches in a straight snake
    #[arg(long)]
    snake_length: Option<String>,
    /// Explicit chain `c,r;c,r;...` from the left to the right patch
    #[arg(long)]
    chain: Option<String>,
}

fn write_out(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io { path: p.into(), source: e }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), source: e })
}

fn merge_spec(s: &Settings, m: &MergeArgs, sh: &Shared) -> Result<MergeSpec, CliError> {
    let substrate = s.value("substrate", sh.substrate.as_deref(), SubstrateKind::Color)?;
    let distance = s.value("distance", sh.distance.as_deref(), 3usize)?;
    let basis = s.value("basis", m.basis.as_deref(), MergeBasis::ZZ)?;
    let len = s.value("snake-length", m.snake_length.as_deref(), 1usize)?;
    let mut spec = MergeSpec::straight(substrate, distance, len, basis);
    if let Some(chain) = s.optional::<String>("chain", m.chain.as_deref())? {
        let chain = parse_chain(&chain).map_err(CliError::Usage)?;
        if chain.len() < 2 {
            return Err(CliError::Usage("--chain needs at least the two data patches".into()));
        }
        spec.left = chain[0];
        spec.right = chain[chain.len() - 1];
        spec.snake = chain[1..chain.len() - 1].to_vec();
    }
    Ok(spec)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let s = Settings::new(&file);
    match cli.command {
        Command::Compile { circuit, no_mapping, width, height, shared: sh } => {
            let path: String = s.optional("circuit", circuit.as_deref())?.ok_or(CliError::Usage("--circuit is required".into()))?;
            let d = CompileOptions::default();
            let w: Option<usize> = s.optional("width", width.as_deref())?;
            let h: Option<usize> = s.optional("height", height.as_deref())?;
            let extent = match (w, h) {
                (Some(w), Some(h)) => Some(Extent::new(w, h)),
                (None, None) => None,
                _ => return Err(CliError::Usage("--width and --height go together".into())),
            };
            let opts = CompileOptions {
                layout: s.value("layout", sh.layout.as_deref(), d.layout)?,
                substrate: s.value("substrate", sh.substrate.as_deref(), d.substrate)?,
                extent,
                factories: FactoryConfig::new(
                    s.value("factories", sh.factories.as_deref(), d.factories.count)?,
                    s.value("reset-period", sh.reset_period.as_deref(), d.factories.reset_period)?,
                ),
                metric: s.value("metric", sh.metric.as_deref(), d.metric)?,
                restarts: s.value("restarts", sh.restarts.as_deref(), d.restarts)?,
                iterations: s.value("iterations", sh.iterations.as_deref(), d.iterations)?,
                seed: s.value("seed", sh.seed.as_deref(), d.seed)?,
                no_mapping: s.flag("no-mapping", no_mapping)?,
            };
            let out = compile(&read(&path)?, &opts)?;
            println!("{}", out.summary());
            if let Some(p) = s.optional::<String>("out", sh.out.as_deref())? {
                let text = serde_json::to_string_pretty(&out.to_json()).expect("json");
                write_out(Some(&p), &(text + "\n"))?;
            }
        }
        Command::Experiment { preset, family, q, gates, samples, ratio, report, shared: sh } => {
            let preset = s.value("preset", preset.as_deref(), Preset::Parallelism)?;
            let d = ExperimentSpec::preset(preset);
            let q_value = s.value("q", q.as_deref(), d.q)?;
            let spec = ExperimentSpec {
                preset,
                layouts: s.list::<LayoutKind>("layout", sh.layout.as_deref(), d.layouts)?,
                families: s.list::<Family>("family", family.as_deref(), d.families)?,
                metrics: s.list::<MetricKind>("metric", sh.metric.as_deref(), d.metrics)?,
                q: q_value,
                gates: s.value("gates", gates.as_deref(), 4 * q_value)?,
                ratio: s.value("ratio", ratio.as_deref(), d.ratio)?,
                samples: s.value("samples", samples.as_deref(), d.samples)?,
                restarts: s.value("restarts", sh.restarts.as_deref(), d.restarts)?,
                iterations: s.value("iterations", sh.iterations.as_deref(), d.iterations)?,
                factory_counts: s.list("factories", sh.factories.as_deref(), d.factory_counts)?,
                reset_periods: s.list("reset-period", sh.reset_period.as_deref(), d.reset_periods)?,
                denominator: s.value::<Denominator>("denominator", sh.denominator.as_deref(), d.denominator)?,
                seed: s.value("seed", sh.seed.as_deref(), d.seed)?,
            };
            let r = run_experiment(&spec)?;
            write_out(s.optional::<String>("out", sh.out.as_deref())?.as_deref(), &r.to_csv())?;
            if let Some(p) = s.optional::<String>("report", report.as_deref())? {
                let text = serde_json::to_string_pretty(&r).expect("json");
                write_out(Some(&p), &(text + "\n"))?;
            }
        }
        Command::Codegen { merge, format, shared: sh } => {
            let spec = merge_spec(&s, &merge, &sh)?;
            let art = generate(&spec)?;
            let text = match s.value("format", format.as_deref(), "text".to_string())?.as_str() {
                "text" => art.dump(&spec),
                "json" => serde_json::to_string_pretty(&codegen_json(&spec, &art)).expect("json") + "\n",
                other => return Err(CliError::Usage(format!("--format: unknown format `{other}`"))),
            };
            write_out(s.optional::<String>("out", sh.out.as_deref())?.as_deref(), &text)?;
        }
        Command::Verify { dump, target, budget, trials, merge, shared: sh } => {
            let d = SearchOptions::default();
            let opts = SearchOptions {
                budget: s.value("budget", budget.as_deref(), d.budget)?,
                trials: s.value("trials", trials.as_deref(), d.trials)?,
                seed: s.value("seed", sh.seed.as_deref(), d.seed)?,
            };
            let distance = s.value("distance", sh.distance.as_deref(), 3usize)?;
            let target = s.value("target", target.as_deref(), distance)?;
            let report = match s.optional::<String>("dump", dump.as_deref())? {
                Some(p) => verify_dump_text(&read(&p)?, target, &opts)?,
                None => verify_merge(&merge_spec(&s, &merge, &sh)?, target, &opts)?,
            };
            write_out(s.optional::<String>("out", sh.out.as_deref())?.as_deref(), &report.render())?;
            if !report.passed() {
                return Err(CliError::VerificationFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
