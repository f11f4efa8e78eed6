use circuit_core::Circuit;

use crate::error::SemanticsError;

/// Widest register a basis state (`u128`, bit k = wire k) can hold.
pub const MAX_BASIS_QUBITS: usize = 128;

/// Runs a reversible-classical circuit on one basis state.
pub fn simulate_permutation(circuit: &Circuit, input: u128) -> Result<u128, SemanticsError> {
    if circuit.n_qubits() > MAX_BASIS_QUBITS {
        return Err(SemanticsError::TooLarge {
            n_qubits: circuit.n_qubits(),
            max: MAX_BASIS_QUBITS,
        });
    }
    circuit
        .gates()
        .iter()
        .enumerate()
        .try_fold(input, |state, (index, gate)| {
            gate.apply_basis(state).ok_or(SemanticsError::NotClassical {
                index,
                kind: gate.kind(),
            })
        })
}

/// Carries and sum bits of a ripple-carry addition, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarryString {
    /// `c[0] = 0`, `c[i] = maj(a[i-1], b[i-1], c[i-1])`; length n+1.
    pub c: Vec<bool>,
    /// `s[i] = a[i] ⊕ b[i] ⊕ c[i]` for i < n and `s[n] = c[n]`; length n+1.
    pub s: Vec<bool>,
}

impl CarryString {
    pub fn sum(&self) -> u128 {
        self.s
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &bit)| acc | (u128::from(bit) << i))
    }

    pub fn carry_out(&self) -> bool {
        *self.c.last().expect("n+1 carries")
    }
}

fn check_width(value: u128, bits: usize) -> Result<(), SemanticsError> {
    if bits < 128 && value >> bits != 0 {
        return Err(SemanticsError::OutOfRange { value, bits });
    }
    Ok(())
}

/// Bitwise ripple-carry addition of two `n`-bit operands.
pub fn classical_ripple_add(a: u128, b: u128, n: usize) -> Result<CarryString, SemanticsError> {
    if n >= 128 {
        return Err(SemanticsError::OutOfRange { value: 0, bits: n });
    }
    check_width(a, n)?;
    check_width(b, n)?;
    let bit = |v: u128, i: usize| (v >> i) & 1 == 1;
    let mut c = vec![false; n + 1];
    for i in 1..=n {
        let (x, y, z) = (bit(a, i - 1), bit(b, i - 1), c[i - 1]);
        c[i] = (x & y) ^ (y & z) ^ (z & x);
    }
    let mut s: Vec<bool> = (0..n).map(|i| bit(a, i) ^ bit(b, i) ^ c[i]).collect();
    s.push(c[n]);
    Ok(CarryString { c, s })
}

/// The comparator predicate: true iff `a ≤ b`.
pub fn compare_le(a: u128, b: u128) -> bool {
    a <= b
}
