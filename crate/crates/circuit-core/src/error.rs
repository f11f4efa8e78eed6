use thiserror::Error;

use crate::gate::GateKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("unknown gate kind '{0}'")]
    UnknownGateKind(String),

    #[error("gate '{kind}' expects {expected} qubit(s), got {got}")]
    ArityMismatch {
        kind: GateKind,
        expected: usize,
        got: usize,
    },

    #[error("gate '{kind}' uses qubit {qubit} more than once")]
    RepeatedQubit { kind: GateKind, qubit: usize },

    #[error("gate {index} touches qubit {qubit} but the register has {n_qubits} wires")]
    QubitOutOfRange {
        index: usize,
        qubit: usize,
        n_qubits: usize,
    },

    #[error("role table covers wire {wire} but the register has {n_qubits} wires")]
    RoleOutOfRange { wire: usize, n_qubits: usize },

    #[error("wire {wire} has more than one role")]
    DuplicateWireRole { wire: usize },

    #[error("role {role} is assigned to more than one wire")]
    DuplicateRole { role: String },

    #[error("segment {tag} [{from}, {to}) is invalid for {len} gates or overlaps its predecessor")]
    BadSegment {
        tag: String,
        from: usize,
        to: usize,
        len: usize,
    },

    #[error("unknown segment tag '{0}'")]
    UnknownSegmentTag(String),

    #[error("gate {index} is a '{kind}' composite; compile to Clifford+T first")]
    CompositeGatePresent { index: usize, kind: GateKind },

    #[error("registers differ: {0}")]
    RegisterMismatch(String),

    #[error("gate {index} ('{kind}') has no registered inverse")]
    NonInvertibleComposite { index: usize, kind: GateKind },

    #[error("invalid circuit document: {0}")]
    Schema(String),
}
