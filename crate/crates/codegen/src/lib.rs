//! Lattice-surgery code generation: split and merged stabilizer groups for
//! a snake merge, the joint subsystem code, gauge fixing, the measurement
//! subset and a dressed-distance check.

mod distance;
pub mod dump;
mod instance;
mod merge;
mod spec;
mod subset;
mod subsystem;

pub use distance::{min_dressed_logical, verify_distance, DistanceReport, PauliType, SearchOptions};
pub use instance::MergeInstance;
pub use merge::{build_merged_stabilizers, build_split_stabilizers, commutant, merged_generators};
pub use spec::{MergeBasis, MergeSpec};
pub use subset::{parity_report, select_measurement_subset, MeasurementSubset, ParityReport};
pub use subsystem::{
    build_subsystem_code, center, gauge_fix, intersect_groups, measure, FixDirection, GaugeFix, SubsystemCode,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodegenError {
    #[error("invalid merge spec: {0}")]
    BadSpec(String),
    #[error("patches {0} and {} along the snake are not adjacent", .0 + 1)]
    NotAdjacent(usize),
    #[error("{which} generators {i} and {j} anticommute")]
    NotCommuting { which: &'static str, i: usize, j: usize },
    #[error("no gauge partner found")]
    NoPartner,
    #[error("no subset of merged checks reproduces the logical product")]
    NoMeasurementSubset,
    #[error("distance search needs a CSS gauge group")]
    NotCss,
    #[error("dump line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Everything generated for one merge.
#[derive(Clone, Debug)]
pub struct MergeArtifacts {
    pub instance: MergeInstance,
    pub merged: Vec<lsc_gf2::Pauli>,
    pub code: SubsystemCode,
    pub subset: MeasurementSubset,
}

pub fn generate(spec: &MergeSpec) -> Result<MergeArtifacts, CodegenError> {
    let instance = MergeInstance::build(spec)?;
    let merged = merged_generators(&instance);
    let code = build_subsystem_code(&instance.split, &merged, instance.left())?;
    let subset = select_measurement_subset(&instance, &merged)?;
    Ok(MergeArtifacts { instance, merged, code, subset })
}

impl MergeArtifacts {
    pub fn dump(&self, spec: &MergeSpec) -> String {
        let header = format!(
            "substrate={} d={} basis={} snake={}",
            match spec.substrate {
                lsc_graph::SubstrateKind::Color => "color",
                lsc_graph::SubstrateKind::Surface => "surface",
            },
            spec.distance,
            spec.basis,
            spec.snake.len()
        );
        dump::dump(&self.code, Some(&self.subset), &header)
    }
}
