use circuit_core::{Circuit, Gate, GateKind, Segment};

fn cancellable(kind: GateKind) -> bool {
    matches!(
        kind,
        GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg | GateKind::Cnot
    )
}

/// `true` for every gate that survives cancellation.
///
/// One left-to-right sweep reaches the fixpoint: each wire keeps a stack of
/// surviving gates, and a new gate can only pair with the gate on top of all
/// of its wires' stacks. Removing that partner exposes older gates, which
/// later arrivals are checked against in turn.
pub(crate) fn survivors(gates: &[Gate], n_qubits: usize) -> Vec<bool> {
    let mut alive = vec![true; gates.len()];
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); n_qubits];
    for (i, gate) in gates.iter().enumerate() {
        let qs = gate.qubits();
        let partner = stacks[qs[0]].last().copied().filter(|&j| {
            cancellable(gate.kind())
                && gates[j].qubits() == qs
                && qs.iter().all(|&q| stacks[q].last() == Some(&j))
                && gates[j].inverse().as_ref() == Some(gate)
        });
        match partner {
            Some(j) => {
                alive[i] = false;
                alive[j] = false;
                for &q in qs {
                    stacks[q].pop();
                }
            }
            None => {
                for &q in qs {
                    stacks[q].push(i);
                }
            }
        }
    }
    alive
}

/// Maps each segment onto the surviving gates, dropping emptied ones.
pub(crate) fn remap_segments(segments: &[Segment], alive: &[bool]) -> Vec<Segment> {
    let mut before = Vec::with_capacity(alive.len() + 1);
    before.push(0);
    for &a in alive {
        before.push(before.last().unwrap() + usize::from(a));
    }
    segments
        .iter()
        .map(|s| Segment {
            tag: s.tag,
            from: before[s.from],
            to: before[s.to],
        })
        .filter(|s| s.from < s.to)
        .collect()
}

/// Removes DAG-adjacent inverse pairs (T/T†, H/H, X/X, identical CNOTs)
/// until none remain. Two gates are adjacent when they act on the same
/// wires and nothing touches those wires between them.
pub fn cancel_pairs(circuit: &Circuit) -> Circuit {
    let alive = survivors(circuit.gates(), circuit.n_qubits());
    let gates = circuit
        .gates()
        .iter()
        .zip(&alive)
        .filter(|(_, a)| **a)
        .map(|(g, _)| g.clone())
        .collect();
    let segments = remap_segments(circuit.segments(), &alive);
    circuit
        .with_gates(gates, segments)
        .expect("a subsequence of a valid circuit is valid")
}
