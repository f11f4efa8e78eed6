//! Circuit intermediate representation for reversible and Clifford+T
//! circuits: gates, role-labelled registers, V-shape segment annotations,
//! the dependency DAG and the T/CNOT count and depth metrics.

pub mod circuit;
pub mod dag;
pub mod error;
pub mod gate;
pub mod json;
pub mod metrics;

pub use circuit::{concat, reverse, Circuit, CircuitBuilder, QubitRole, Segment, SegmentTag};
pub use dag::{build_dag, Dag};
pub use error::CircuitError;
pub use gate::{Gate, GateKind};
pub use json::{from_json, to_json, to_json_with, CircuitDoc, Metadata};
pub use metrics::{metrics, MetricReport};
