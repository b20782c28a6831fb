//! Exact simulation of Hadamard-test and one-clean-qubit circuits, the
//! path-model Jones representation, and sampling estimators for normalised
//! Jones values of braid closures.

pub mod circuit;
pub mod error;
pub mod hadamard;
pub mod pathmodel;
pub mod estimate;
pub mod unitary;

pub use circuit::{Circuit, Gate, MixedState};
pub use error::QsimError;
pub use estimate::EstimateReport;
pub use unitary::Unitary;
