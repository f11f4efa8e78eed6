//! OpenQASM 2.0 export and a small syntax checker for the subset we emit.

use std::fmt::Write as _;

use circuit_core::{Circuit, GateKind};
use thiserror::Error;

pub const HEADER: &str = "OPENQASM 2.0;";
pub const INCLUDE: &str = "include \"qelib1.inc\";";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QasmError {
    #[error("gate {index}: '{kind}' has no qelib1 equivalent; compile first")]
    Unsupported { index: usize, kind: GateKind },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

fn qelib_name(kind: GateKind) -> Option<&'static str> {
    match kind {
        GateKind::X => Some("x"),
        GateKind::H => Some("h"),
        GateKind::T => Some("t"),
        GateKind::Tdg => Some("tdg"),
        GateKind::Cnot => Some("cx"),
        _ => None,
    }
}

/// Emits a Clifford+T circuit as OpenQASM 2.0 on a single register `q`.
pub fn to_qasm(circuit: &Circuit) -> Result<String, QasmError> {
    let mut out = format!("{HEADER}\n{INCLUDE}\nqreg q[{}];\n", circuit.n_qubits());
    for (index, gate) in circuit.gates().iter().enumerate() {
        let name = qelib_name(gate.kind()).ok_or(QasmError::Unsupported {
            index,
            kind: gate.kind(),
        })?;
        let args: Vec<String> = gate.qubits().iter().map(|q| format!("q[{q}]")).collect();
        let _ = writeln!(out, "{name} {};", args.join(","));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QasmSummary {
    pub n_qubits: usize,
    pub gate_count: usize,
}

fn arity(name: &str) -> Option<usize> {
    match name {
        "x" | "y" | "z" | "h" | "s" | "sdg" | "t" | "tdg" | "id" => Some(1),
        "cx" | "cz" | "swap" => Some(2),
        "ccx" => Some(3),
        _ => None,
    }
}

/// Accepts the header, one `qreg`, and parameter-free qelib1 gate
/// applications on in-range, pairwise distinct qubits.
pub fn check_qasm(text: &str) -> Result<QasmSummary, QasmError> {
    let err = |line: usize, message: String| QasmError::Syntax { line, message };
    let mut statements = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split("//").next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match statements.next() {
        Some((_, l)) if l == HEADER => {}
        Some((line, l)) => return Err(err(line, format!("expected '{HEADER}', found '{l}'"))),
        None => return Err(err(0, "empty program".into())),
    }
    match statements.next() {
        Some((_, l)) if l == INCLUDE => {}
        Some((line, l)) => return Err(err(line, format!("expected '{INCLUDE}', found '{l}'"))),
        None => return Err(err(0, "missing include".into())),
    }
    let n_qubits = match statements.next() {
        Some((line, l)) => l
            .strip_prefix("qreg q[")
            .and_then(|r| r.strip_suffix("];"))
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| err(line, format!("expected 'qreg q[N];', found '{l}'")))?,
        None => return Err(err(0, "missing qreg".into())),
    };

    let mut gate_count = 0;
    for (line, l) in statements {
        let body = l
            .strip_suffix(';')
            .ok_or_else(|| err(line, "missing ';'".into()))?;
        let (name, args) = body
            .split_once(' ')
            .ok_or_else(|| err(line, format!("malformed statement '{l}'")))?;
        let expected = arity(name).ok_or_else(|| err(line, format!("unknown gate '{name}'")))?;
        let qubits = args
            .split(',')
            .map(|a| {
                a.trim()
                    .strip_prefix("q[")
                    .and_then(|r| r.strip_suffix(']'))
                    .and_then(|i| i.parse::<usize>().ok())
                    .ok_or_else(|| err(line, format!("bad operand '{}'", a.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if qubits.len() != expected {
            return Err(err(
                line,
                format!("'{name}' takes {expected} operand(s), got {}", qubits.len()),
            ));
        }
        if let Some(q) = qubits.iter().find(|&&q| q >= n_qubits) {
            return Err(err(line, format!("q[{q}] is outside qreg q[{n_qubits}]")));
        }
        if qubits
            .iter()
            .enumerate()
            .any(|(i, q)| qubits[..i].contains(q))
        {
            return Err(err(line, "repeated operand".into()));
        }
        gate_count += 1;
    }
    Ok(QasmSummary {
        n_qubits,
        gate_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use circuit_core::Gate;

    #[test]
    fn single_cnot() {
        let c = Circuit::from_gates(2, vec![Gate::cnot(0, 1)]).unwrap();
        let text = to_qasm(&c).unwrap();
        assert_eq!(
            text,
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n"
        );
        assert_eq!(
            check_qasm(&text).unwrap(),
            QasmSummary {
                n_qubits: 2,
                gate_count: 1
            }
        );
    }

    #[test]
    fn composites_are_rejected() {
        let c = Circuit::from_gates(3, vec![Gate::h(0), Gate::toffoli(0, 1, 2)]).unwrap();
        assert_eq!(
            to_qasm(&c),
            Err(QasmError::Unsupported {
                index: 1,
                kind: GateKind::Toffoli
            })
        );
    }

    #[test]
    fn checker_catches_mistakes() {
        let head = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n";
        assert!(check_qasm(&format!("{head}cx q[0],q[2];")).is_err());
        assert!(check_qasm(&format!("{head}cx q[0],q[0];")).is_err());
        assert!(check_qasm(&format!("{head}cx q[0];")).is_err());
        assert!(check_qasm(&format!("{head}foo q[0];")).is_err());
        assert!(check_qasm(&format!("{head}h q[0]")).is_err());
        assert!(check_qasm("OPENQASM 3.0;\n").is_err());
        assert!(check_qasm(&format!("{head}// note\nh q[1]; // trailing\n")).is_ok());
    }
}
