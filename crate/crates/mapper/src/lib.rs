//! Placement optimisation by hill climbing with random restarts.

mod climb;
mod cost;

pub use climb::{hill_climb, neighbors, restart_seed, HillClimbConfig, MappingResult, RestartTrace};
pub use cost::{crossing_cost, depth_cost, CostModel, PathTable};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapperError {
    #[error(transparent)]
    Route(#[from] lsc_router::RouteError),
    #[error(transparent)]
    Graph(#[from] lsc_graph::GraphError),
    #[error("invalid hill-climbing configuration: {0}")]
    BadConfig(String),
    #[error("improvement denominator is zero")]
    ZeroDenominator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Crossings,
    Depth,
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricKind::Crossings => "crossings",
            MetricKind::Depth => "depth",
        })
    }
}

impl FromStr for MetricKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "crossings" => Ok(MetricKind::Crossings),
            "depth" => Ok(MetricKind::Depth),
            _ => Err(format!("unknown metric `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Denominator {
    Final,
    Initial,
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Denominator::Final => "final",
            Denominator::Initial => "initial",
        })
    }
}

impl FromStr for Denominator {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "final" => Ok(Denominator::Final),
            "initial" => Ok(Denominator::Initial),
            _ => Err(format!("unknown denominator `{s}`")),
        }
    }
}

/// Relative depth improvement `(Δi − Δf) / Δf` or `(Δi − Δf) / Δi`.
pub fn improvement(delta_i: usize, delta_f: usize, denominator: Denominator) -> Result<f64, MapperError> {
    let den = match denominator {
        Denominator::Final => delta_f,
        Denominator::Initial => delta_i,
    };
    if den == 0 {
        return Err(MapperError::ZeroDenominator);
    }
    Ok((delta_i as f64 - delta_f as f64) / den as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn improvement_examples() {
        assert_eq!(improvement(10, 8, Denominator::Final).unwrap(), 0.25);
        assert_eq!(improvement(10, 8, Denominator::Initial).unwrap(), 0.2);
        assert_eq!(improvement(5, 5, Denominator::Final).unwrap(), 0.0);
        assert_eq!(improvement(5, 5, Denominator::Initial).unwrap(), 0.0);
        assert_eq!(improvement(0, 0, Denominator::Final), Err(MapperError::ZeroDenominator));
    }
}
