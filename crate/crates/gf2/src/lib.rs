//! Linear algebra over GF(2) for stabilizer bookkeeping.
//!
//! Vectors are packed into `u64` words. Pauli operators drop phases and are
//! stored as an `(x, z)` pair of vectors over the same qubit universe.

mod bits;
mod basis;
mod pauli;

pub use basis::{intersect, nullspace, rank, Basis};
pub use bits::Bits;
pub use pauli::Pauli;
