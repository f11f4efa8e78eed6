use circuit_core::CircuitError;
use semantics::SemanticsError;
use synthesis::SynthesisError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(
        "exhaustive sweep over {wires} wires exceeds the {max}-bit cap; use a random strategy"
    )]
    TooLargeForExhaustive { wires: usize, max: usize },

    #[error("unitary comparison over {wires} wires exceeds the {max}-wire cap")]
    TooLarge { wires: usize, max: usize },

    #[error("n={n} is outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error(transparent)]
    Synthesis(#[from] SynthesisError),

    #[error(transparent)]
    Semantics(#[from] SemanticsError),

    #[error(transparent)]
    Circuit(#[from] CircuitError),
}
