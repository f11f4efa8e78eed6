//! Executable meaning of circuits: truth tables for the reversible gates,
//! basis-state and statevector simulation, full unitaries for small
//! registers, and the classical ripple-carry and comparison oracles.

pub mod classical;
pub mod error;
pub mod permutation;
pub mod registers;
pub mod statevector;

pub use classical::{classical_ripple_add, compare_le, simulate_permutation, CarryString};
pub use error::SemanticsError;
pub use permutation::{
    check_claimed_mapping, circuit_permutation, gate_permutation, PermutationTable,
};
pub use registers::{decode, encode, operand_width, RegisterValues};
pub use statevector::{
    full_unitary, simulate_basis, simulate_statevector, SparseState, Statevector, Unitary,
};

/// Entry-wise tolerance for unitary and amplitude equivalence.
pub const EQ_TOL: f64 = 1e-9;
