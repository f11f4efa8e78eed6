use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::dag::build_dag;
use crate::error::CircuitError;
use crate::gate::GateKind;

/// The four cost figures of a Clifford+T circuit plus raw totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetricReport {
    pub t_count: usize,
    pub t_depth: usize,
    pub cnot_count: usize,
    pub cnot_depth: usize,
    pub total_gate_count: usize,
    pub total_depth: usize,
}

impl fmt::Display for MetricReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CNOT-depth {} | CNOT-count {} | T-depth {} | T-count {} | gates {} | depth {}",
            self.cnot_depth,
            self.cnot_count,
            self.t_depth,
            self.t_count,
            self.total_gate_count,
            self.total_depth
        )
    }
}

/// Counts and DAG longest-path depths. Depths count only nodes of the
/// measured kind along a path; other gates contribute ordering only.
pub fn metrics(circuit: &Circuit) -> Result<MetricReport, CircuitError> {
    let gates = circuit.gates();
    if let Some((index, g)) = gates
        .iter()
        .enumerate()
        .find(|(_, g)| g.kind().is_composite())
    {
        return Err(CircuitError::CompositeGatePresent {
            index,
            kind: g.kind(),
        });
    }
    let dag = build_dag(circuit);
    let is_t = |v: usize| usize::from(gates[v].kind().is_t_like());
    let is_cnot = |v: usize| usize::from(gates[v].kind() == GateKind::Cnot);
    Ok(MetricReport {
        t_count: gates.iter().filter(|g| g.kind().is_t_like()).count(),
        t_depth: dag.longest_path(is_t),
        cnot_count: gates.iter().filter(|g| g.kind() == GateKind::Cnot).count(),
        cnot_depth: dag.longest_path(is_cnot),
        total_gate_count: gates.len(),
        total_depth: dag.longest_path(|_| 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::Gate;

    #[test]
    fn empty_circuit_is_all_zero() {
        assert_eq!(
            metrics(&Circuit::empty(3)).unwrap(),
            MetricReport::default()
        );
    }

    #[test]
    fn composites_are_rejected() {
        let c = Circuit::from_gates(3, vec![Gate::h(2), Gate::toffoli(0, 1, 2)]).unwrap();
        assert_eq!(
            metrics(&c).unwrap_err(),
            CircuitError::CompositeGatePresent {
                index: 1,
                kind: GateKind::Toffoli
            }
        );
    }

    #[test]
    fn single_qubit_gates_only_order() {
        // T - CNOT - T on a line: T-depth 2, CNOT-depth 1
        let c = Circuit::from_gates(2, vec![Gate::t(0), Gate::cnot(0, 1), Gate::tdg(1)]).unwrap();
        let m = metrics(&c).unwrap();
        assert_eq!(
            (m.t_count, m.t_depth, m.cnot_count, m.cnot_depth),
            (2, 2, 1, 1)
        );
        assert_eq!(m.total_depth, 3);
    }

    #[test]
    fn parallel_t_gates_share_a_layer() {
        let c = Circuit::from_gates(3, vec![Gate::t(0), Gate::t(1), Gate::t(2)]).unwrap();
        let m = metrics(&c).unwrap();
        assert_eq!((m.t_count, m.t_depth, m.total_depth), (3, 1, 1));
    }
}
