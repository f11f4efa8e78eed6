use std::fmt;
use std::str::FromStr;

use crate::error::CircuitError;

/// Gate alphabet: the Clifford+T primitives plus the three reversible
/// 3-qubit composites used by ripple-carry constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    X,
    H,
    T,
    Tdg,
    Cnot,
    Toffoli,
    Peres,
    Tr,
}

impl GateKind {
    pub const ALL: [GateKind; 8] = [
        GateKind::X,
        GateKind::H,
        GateKind::T,
        GateKind::Tdg,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::Peres,
        GateKind::Tr,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg => 1,
            GateKind::Cnot => 2,
            GateKind::Toffoli | GateKind::Peres | GateKind::Tr => 3,
        }
    }

    /// TOFFOLI, PERES and TR.
    pub fn is_composite(self) -> bool {
        self.arity() == 3
    }

    /// Maps computational basis states to basis states.
    pub fn is_classical(self) -> bool {
        !matches!(self, GateKind::H | GateKind::T | GateKind::Tdg)
    }

    pub fn is_t_like(self) -> bool {
        matches!(self, GateKind::T | GateKind::Tdg)
    }

    /// Lower-case name used by the JSON document format.
    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::H => "h",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::Cnot => "cnot",
            GateKind::Toffoli => "toffoli",
            GateKind::Peres => "peres",
            GateKind::Tr => "tr",
        }
    }

    /// Classical action on the local operand bits (bit i = operand i).
    ///
    /// With operands (q1, q2, q3) = (a, b, c):
    /// TOFFOLI maps c to c⊕ab, PERES maps (a, b, c) to (a, a⊕b, c⊕ab) and
    /// TR maps (a, b, c) to (a, a⊕b, c⊕(a∧¬b)). Returns `None` for H, T, T†.
    pub fn classical_action(self, local: u32) -> Option<u32> {
        let bit = |i: u32| (local >> i) & 1;
        let out = match self {
            GateKind::X => local ^ 1,
            GateKind::Cnot => local ^ (bit(0) << 1),
            GateKind::Toffoli => local ^ ((bit(0) & bit(1)) << 2),
            GateKind::Peres => local ^ (bit(0) << 1) ^ ((bit(0) & bit(1)) << 2),
            GateKind::Tr => local ^ (bit(0) << 1) ^ ((bit(0) & (1 ^ bit(1))) << 2),
            GateKind::H | GateKind::T | GateKind::Tdg => return None,
        };
        Some(out)
    }

    /// Inverse kind acting on the same operands, when one exists in the alphabet.
    ///
    /// PERES and TR are paired only after their truth tables are confirmed
    /// to compose to the identity.
    pub fn inverse(self) -> Option<GateKind> {
        match self {
            GateKind::T => Some(GateKind::Tdg),
            GateKind::Tdg => Some(GateKind::T),
            GateKind::X | GateKind::H | GateKind::Cnot | GateKind::Toffoli => Some(self),
            GateKind::Peres if mutually_inverse(GateKind::Peres, GateKind::Tr) => {
                Some(GateKind::Tr)
            }
            GateKind::Tr if mutually_inverse(GateKind::Tr, GateKind::Peres) => {
                Some(GateKind::Peres)
            }
            _ => None,
        }
    }
}

fn mutually_inverse(first: GateKind, second: GateKind) -> bool {
    if first.arity() != second.arity() {
        return false;
    }
    (0..1u32 << first.arity()).all(|x| {
        first
            .classical_action(x)
            .and_then(|y| second.classical_action(y))
            == Some(x)
    })
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = CircuitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CircuitError::UnknownGateKind(s.to_string()))
    }
}

/// One gate instance. For CNOT the operands are (control, target); for the
/// 3-qubit kinds they are (q1, q2, q3) with q3 the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>) -> Result<Gate, CircuitError> {
        if qubits.len() != kind.arity() {
            return Err(CircuitError::ArityMismatch {
                kind,
                expected: kind.arity(),
                got: qubits.len(),
            });
        }
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(CircuitError::RepeatedQubit { kind, qubit: *q });
            }
        }
        Ok(Gate { kind, qubits })
    }

    pub fn x(q: usize) -> Gate {
        Gate {
            kind: GateKind::X,
            qubits: vec![q],
        }
    }

    pub fn h(q: usize) -> Gate {
        Gate {
            kind: GateKind::H,
            qubits: vec![q],
        }
    }

    pub fn t(q: usize) -> Gate {
        Gate {
            kind: GateKind::T,
            qubits: vec![q],
        }
    }

    pub fn tdg(q: usize) -> Gate {
        Gate {
            kind: GateKind::Tdg,
            qubits: vec![q],
        }
    }

    /// Panics if `control == target`.
    pub fn cnot(control: usize, target: usize) -> Gate {
        Gate::new(GateKind::Cnot, vec![control, target]).expect("distinct CNOT operands")
    }

    /// Panics on repeated operands.
    pub fn toffoli(a: usize, b: usize, c: usize) -> Gate {
        Gate::new(GateKind::Toffoli, vec![a, b, c]).expect("distinct operands")
    }

    /// Panics on repeated operands.
    pub fn peres(a: usize, b: usize, c: usize) -> Gate {
        Gate::new(GateKind::Peres, vec![a, b, c]).expect("distinct operands")
    }

    /// Panics on repeated operands.
    pub fn tr(a: usize, b: usize, c: usize) -> Gate {
        Gate::new(GateKind::Tr, vec![a, b, c]).expect("distinct operands")
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    pub fn max_qubit(&self) -> usize {
        self.qubits.iter().copied().max().unwrap_or(0)
    }

    pub fn acts_on(&self, q: usize) -> bool {
        self.qubits.contains(&q)
    }

    /// The inverse gate on the same operands, if the alphabet has one.
    pub fn inverse(&self) -> Option<Gate> {
        self.kind.inverse().map(|kind| Gate {
            kind,
            qubits: self.qubits.clone(),
        })
    }

    /// Same gate with every operand passed through `map`.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Gate {
        Gate {
            kind: self.kind,
            qubits: self.qubits.iter().map(|&q| map(q)).collect(),
        }
    }

    /// Applies the gate to a computational basis state (bit k = wire k).
    pub fn apply_basis(&self, state: u128) -> Option<u128> {
        let local = self.qubits.iter().enumerate().fold(0u32, |acc, (i, &q)| {
            acc | ((((state >> q) & 1) as u32) << i)
        });
        let out = self.kind.classical_action(local)?;
        let mut next = state;
        for (i, &q) in self.qubits.iter().enumerate() {
            let mask = 1u128 << q;
            if (out >> i) & 1 == 1 {
                next |= mask;
            } else {
                next &= !mask;
            }
        }
        Some(next)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (i, q) in self.qubits.iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}q{q}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_is_enforced() {
        assert!(Gate::new(GateKind::Cnot, vec![0]).is_err());
        assert!(Gate::new(GateKind::Toffoli, vec![0, 1, 1]).is_err());
        assert!(Gate::new(GateKind::T, vec![4]).is_ok());
    }

    #[test]
    fn names_round_trip() {
        for kind in GateKind::ALL {
            assert_eq!(kind.name().parse::<GateKind>().unwrap(), kind);
        }
        assert!("ccz".parse::<GateKind>().is_err());
    }

    #[test]
    fn peres_and_tr_pair_up() {
        assert_eq!(GateKind::Peres.inverse(), Some(GateKind::Tr));
        assert_eq!(GateKind::Tr.inverse(), Some(GateKind::Peres));
        assert_eq!(GateKind::T.inverse(), Some(GateKind::Tdg));
    }

    #[test]
    fn basis_action_uses_wire_bits() {
        // control on wire 2, target on wire 0
        let g = Gate::cnot(2, 0);
        assert_eq!(g.apply_basis(0b100), Some(0b101));
        assert_eq!(g.apply_basis(0b001), Some(0b001));
        assert_eq!(Gate::h(0).apply_basis(0), None);
        let p = Gate::peres(0, 1, 2);
        assert_eq!(p.apply_basis(0b011), Some(0b101));
    }
}
