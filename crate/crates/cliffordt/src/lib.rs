//! Compilation of reversible circuits over {X, CNOT, Toffoli, Peres, TR}
//! to Clifford+T.
//!
//! Naive mode substitutes one fixed template per composite. Optimized mode
//! reads the segment annotations of a V-shaped circuit, picks templates
//! whose boundary T/T† gates and CNOTs line up with their mirrored partner,
//! and then removes adjacent inverse pairs with [`cancel_pairs`].

pub mod cancel;
pub mod cascade;
pub mod compile;
pub mod templates;

pub use cancel::cancel_pairs;
pub use cascade::{
    cascade_circuit, cascade_metrics_formula, cascade_reduced, cascade_unreduced, measure,
    CascadeCost, CascadePrediction, CascadeShape,
};
pub use compile::{compile, compile_with, CompileMode, Compiled, FALLBACK_WARNING};
pub use templates::{Template, TemplateError, TemplateSet};
