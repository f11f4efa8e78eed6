//! Builders for the five ripple-carry constructions as high-level circuits
//! over X, CNOT, TOFFOLI, PERES and TR, annotated with their V-shape
//! segments.
//!
//! Adders map `|a, b, z⟩` to `|a, a+b mod 2^n, z ⊕ carry-out⟩`; comparators
//! map it to `|a, b, z ⊕ (a ≤ b)⟩`. The ancilla, when present, returns to 0.

pub mod builders;
pub mod family;

pub use builders::{
    build, build_cdkm_compact, build_cdkm_comparator, build_cdkm_shallow, build_family,
    build_ttk_adder, build_ttk_comparator, Layout,
};
pub use family::{CircuitFamily, Family, SynthesisError};
