//! Driver library behind the `lsc` binary.

mod commands;
pub mod config;
mod error;
pub mod experiment;

pub use commands::{codegen_json, compile, verify_dump_text, verify_merge, CompileOptions, CompileOutput, VerifyReport};
pub use error::CliError;
pub use experiment::{run_experiment, CellKey, CellReport, ExperimentSpec, Preset, RunReport, SampleResult};

/// The six-qubit, two-layer example circuit shipped with the crate.
pub const EXAMPLE_CIRCUIT: &str = include_str!("../data/example.circuit");

/// Parse a snake chain `c,r;c,r;...` (left patch, ancillas, right patch).
pub fn parse_chain(s: &str) -> Result<Vec<(usize, usize)>, String> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (c, r) = t.split_once(',').ok_or_else(|| format!("expected `col,row`, got `{t}`"))?;
            let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad coordinate `{x}`"));
            Ok((num(c)?, num(r)?))
        })
        .collect()
}
