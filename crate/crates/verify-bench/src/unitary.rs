use circuit_core::Circuit;
use cliffordt::{compile_with, CompileMode, TemplateSet};
use semantics::full_unitary;
use synthesis::{build, Family};

use crate::error::VerifyError;
use crate::report::{VerifyMode, VerifyReport};

pub const MAX_UNITARY_WIRES: usize = 8;
pub const MAX_UNITARY_N: usize = 3;

/// Compares the full unitaries of the reversible circuit and both
/// compilations, entry by entry with no phase freedom.
pub fn verify_unitary(family: Family, n: usize) -> Result<VerifyReport, VerifyError> {
    verify_unitary_with(family, n, TemplateSet::standard())
}

pub fn verify_unitary_with(
    family: Family,
    n: usize,
    templates: &TemplateSet,
) -> Result<VerifyReport, VerifyError> {
    let wires = family.wire_count(n);
    if n > MAX_UNITARY_N || wires > MAX_UNITARY_WIRES {
        return Err(VerifyError::TooLarge {
            wires,
            max: MAX_UNITARY_WIRES,
        });
    }
    let high = build(family, n)?;
    let naive = compile_with(&high, CompileMode::Naive, templates).circuit;
    let optimized = compile_with(&high, CompileMode::Optimized, templates).circuit;
    let unitaries = [
        full_unitary(&high)?,
        full_unitary(&naive)?,
        full_unitary(&optimized)?,
    ];
    let mut deviation: f64 = 0.0;
    for i in 0..unitaries.len() {
        for j in i + 1..unitaries.len() {
            deviation = deviation.max(unitaries[i].max_abs_diff(&unitaries[j]));
        }
    }
    let mut report = VerifyReport::new(family, n, VerifyMode::Optimized, "unitary");
    report.checks_run = 3;
    report.max_deviation = Some(deviation);
    Ok(report.finish())
}

/// Compares a given circuit with the reversible construction it claims to implement.
pub fn verify_unitary_circuit(
    circuit: &Circuit,
    family: Family,
    n: usize,
    mode: VerifyMode,
) -> Result<VerifyReport, VerifyError> {
    if circuit.n_qubits() > MAX_UNITARY_WIRES {
        return Err(VerifyError::TooLarge {
            wires: circuit.n_qubits(),
            max: MAX_UNITARY_WIRES,
        });
    }
    let reference = build(family, n)?;
    let deviation = full_unitary(circuit)?.max_abs_diff(&full_unitary(&reference)?);
    let mut report = VerifyReport::new(family, n, mode, "unitary");
    report.checks_run = 1;
    report.max_deviation = Some(deviation);
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_cap() {
        assert!(matches!(
            verify_unitary(Family::CdkmShallow, 4),
            Err(VerifyError::TooLarge { wires: 10, max: 8 })
        ));
        assert!(matches!(
            verify_unitary(Family::TtkAdder, 4),
            Err(VerifyError::TooLarge { .. })
        ));
    }
}
