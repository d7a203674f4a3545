//! Shortest-first VDP routing.
//!
//! Each input layer is offered to [`vdp_subroutine`], which greedily commits
//! the globally shortest valid path until nothing else fits. Gates that do
//! not fit are pushed into the next layer, dragging later gates on the same
//! qubits along.

mod path;
mod schedule;

pub use path::{shortest_valid_path, PathFinder};
pub use schedule::{
    push_leftovers, route_circuit, route_depth_below, vdp_subroutine, CompiledSchedule, FactoryState, RoutedOp, RoutingTask,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RouteError {
    #[error("circuit contains T gates but the graph has no factories")]
    NoFactories,
    #[error("gate {index} has no valid path even on an empty graph")]
    UnroutableDemand { index: usize },
    #[error("labeling does not cover qubit {0} or is not injective onto data vertices")]
    BadLabeling(usize),
    #[error("demand gates share qubit {0}")]
    ConflictingDemand(usize),
}
