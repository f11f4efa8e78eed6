use circuit_core::GateKind;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("'{kind}' (gate {index}) has no classical basis-state semantics")]
    NotClassical { index: usize, kind: GateKind },

    #[error("state has {got} qubits but the circuit has {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{n_qubits} qubits exceed the limit of {max}")]
    TooLarge { n_qubits: usize, max: usize },

    #[error("operand {value} does not fit in {bits} bits")]
    OutOfRange { value: u128, bits: usize },

    #[error("claimed table has arity {got}, gate has arity {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("register {0} is not present in the circuit")]
    MissingRegister(&'static str),
}
