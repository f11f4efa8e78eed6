//! Packing operand registers into basis states through the wire roles, so
//! oracle comparisons never depend on a particular interleaving of wires.

use circuit_core::{Circuit, QubitRole};

use crate::error::SemanticsError;

/// Integer contents of the role-labelled registers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RegisterValues {
    pub a: u128,
    pub b: u128,
    pub z: bool,
    pub ancilla: bool,
}

/// Width of register A (number of `A(i)` wires).
pub fn operand_width(circuit: &Circuit) -> usize {
    circuit
        .roles()
        .iter()
        .filter(|r| matches!(r, Some(QubitRole::A(_))))
        .count()
}

pub fn encode(circuit: &Circuit, values: RegisterValues) -> Result<u128, SemanticsError> {
    let mut state = 0u128;
    let mut has_z = false;
    for (wire, role) in circuit.roles().iter().enumerate() {
        let bit = match role {
            Some(QubitRole::A(i)) => (values.a >> i) & 1 == 1,
            Some(QubitRole::B(i)) => (values.b >> i) & 1 == 1,
            Some(QubitRole::Z) => {
                has_z = true;
                values.z
            }
            Some(QubitRole::Ancilla) => values.ancilla,
            None => false,
        };
        if bit {
            state |= 1u128 << wire;
        }
    }
    if !has_z {
        return Err(SemanticsError::MissingRegister("Z"));
    }
    Ok(state)
}

/// Reads registers back; `ancilla` is true if any ancilla wire is set.
pub fn decode(circuit: &Circuit, state: u128) -> RegisterValues {
    let mut values = RegisterValues::default();
    for (wire, role) in circuit.roles().iter().enumerate() {
        let bit = (state >> wire) & 1;
        match role {
            Some(QubitRole::A(i)) => values.a |= bit << i,
            Some(QubitRole::B(i)) => values.b |= bit << i,
            Some(QubitRole::Z) => values.z = bit == 1,
            Some(QubitRole::Ancilla) => values.ancilla |= bit == 1,
            None => {}
        }
    }
    values
}
