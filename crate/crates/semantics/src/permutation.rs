use std::fmt;

use circuit_core::{Circuit, GateKind};

use crate::error::SemanticsError;

/// Basis-state bijection on `arity` bits; `mapping[x]` is the image of `x`,
/// with bit i of `x` the value on operand i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTable {
    arity: usize,
    mapping: Vec<usize>,
}

impl PermutationTable {
    /// `None` unless `mapping` is a bijection on `[0, 2^arity)`.
    pub fn new(arity: usize, mapping: Vec<usize>) -> Option<PermutationTable> {
        let size = 1usize << arity;
        if mapping.len() != size {
            return None;
        }
        let mut seen = vec![false; size];
        for &y in &mapping {
            if y >= size || std::mem::replace(&mut seen[y], true) {
                return None;
            }
        }
        Some(PermutationTable { arity, mapping })
    }

    pub fn from_fn(arity: usize, f: impl Fn(usize) -> usize) -> Option<PermutationTable> {
        PermutationTable::new(arity, (0..1usize << arity).map(f).collect())
    }

    pub fn identity(arity: usize) -> PermutationTable {
        PermutationTable {
            arity,
            mapping: (0..1usize << arity).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &PermutationTable) -> PermutationTable {
        assert_eq!(self.arity, next.arity, "arity mismatch in composition");
        PermutationTable {
            arity: self.arity,
            mapping: self.mapping.iter().map(|&y| next.mapping[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Display for PermutationTable {
    /// One row per input: `in -> out` with operand 1 written first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |v: usize| -> String {
            (0..self.arity)
                .map(|i| if (v >> i) & 1 == 1 { '1' } else { '0' })
                .collect()
        };
        for (x, &y) in self.mapping.iter().enumerate() {
            writeln!(f, "{} -> {}", bits(x), bits(y))?;
        }
        Ok(())
    }
}

/// Truth table of a reversible-classical gate kind.
pub fn gate_permutation(kind: GateKind) -> Result<PermutationTable, SemanticsError> {
    if !kind.is_classical() {
        return Err(SemanticsError::NotClassical { index: 0, kind });
    }
    let table = PermutationTable::from_fn(kind.arity(), |x| {
        kind.classical_action(x as u32).expect("classical kind") as usize
    });
    Ok(table.expect("gate truth tables are bijections"))
}

/// Truth table of a classical circuit on its own `n_qubits` wires.
pub fn circuit_permutation(circuit: &Circuit) -> Result<PermutationTable, SemanticsError> {
    const MAX: usize = 20;
    if circuit.n_qubits() > MAX {
        return Err(SemanticsError::TooLarge {
            n_qubits: circuit.n_qubits(),
            max: MAX,
        });
    }
    let mapping = (0..1usize << circuit.n_qubits())
        .map(|x| crate::classical::simulate_permutation(circuit, x as u128).map(|y| y as usize))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermutationTable::new(circuit.n_qubits(), mapping).expect("reversible circuits permute"))
}

/// Inputs on which `kind` and `claimed` disagree (empty when the claim holds).
pub fn check_claimed_mapping(
    kind: GateKind,
    claimed: &PermutationTable,
) -> Result<Vec<usize>, SemanticsError> {
    let actual = gate_permutation(kind)?;
    if actual.arity() != claimed.arity() {
        return Err(SemanticsError::ArityMismatch {
            expected: actual.arity(),
            got: claimed.arity(),
        });
    }
    Ok((0..1usize << actual.arity())
        .filter(|&x| actual.apply(x) != claimed.apply(x))
        .collect())
}
