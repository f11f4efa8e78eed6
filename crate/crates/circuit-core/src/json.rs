//! JSON circuit document:
//! `{ "n_qubits", "roles": [{wire, role, index}], "gates": [{kind, qubits}],
//!    "segments": [{tag, from, to}] }` plus an optional `metadata` object.

use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, QubitRole, Segment, SegmentTag};
use crate::error::CircuitError;
use crate::gate::{Gate, GateKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoleDoc {
    pub wire: usize,
    pub role: String,
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateDoc {
    pub kind: String,
    pub qubits: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentDoc {
    pub tag: String,
    pub from: usize,
    pub to: usize,
}

/// Free-form provenance attached by tools (compile mode, warnings).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDoc {
    pub n_qubits: usize,
    #[serde(default)]
    pub roles: Vec<RoleDoc>,
    pub gates: Vec<GateDoc>,
    #[serde(default)]
    pub segments: Vec<SegmentDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl CircuitDoc {
    pub fn from_circuit(circuit: &Circuit) -> CircuitDoc {
        let roles = circuit
            .roles()
            .iter()
            .enumerate()
            .filter_map(|(wire, r)| {
                let (role, index) = match (*r)? {
                    QubitRole::A(i) => ("A", Some(i)),
                    QubitRole::B(i) => ("B", Some(i)),
                    QubitRole::Ancilla => ("ANCILLA", None),
                    QubitRole::Z => ("Z", None),
                };
                Some(RoleDoc {
                    wire,
                    role: role.to_string(),
                    index,
                })
            })
            .collect();
        let gates = circuit
            .gates()
            .iter()
            .map(|g| GateDoc {
                kind: g.kind().name().to_string(),
                qubits: g.qubits().to_vec(),
            })
            .collect();
        let segments = circuit
            .segments()
            .iter()
            .map(|s| SegmentDoc {
                tag: s.tag.to_string(),
                from: s.from,
                to: s.to,
            })
            .collect();
        CircuitDoc {
            n_qubits: circuit.n_qubits(),
            roles,
            gates,
            segments,
            metadata: None,
        }
    }

    /// Validates the document; errors name the offending entry.
    pub fn to_circuit(&self) -> Result<Circuit, CircuitError> {
        let mut roles = vec![None; self.n_qubits];
        for (i, r) in self.roles.iter().enumerate() {
            let role = match (r.role.as_str(), r.index) {
                ("A", Some(k)) => QubitRole::A(k),
                ("B", Some(k)) => QubitRole::B(k),
                ("ANCILLA", _) => QubitRole::Ancilla,
                ("Z", _) => QubitRole::Z,
                (other, idx) => {
                    return Err(CircuitError::Schema(format!(
                        "roles[{i}]: bad role '{other}' with index {idx:?}"
                    )))
                }
            };
            let slot = roles.get_mut(r.wire).ok_or_else(|| {
                CircuitError::Schema(format!(
                    "roles[{i}]: wire {} outside register of {} wires",
                    r.wire, self.n_qubits
                ))
            })?;
            if slot.is_some() {
                return Err(CircuitError::Schema(format!(
                    "roles[{i}]: wire {} already has a role",
                    r.wire
                )));
            }
            *slot = Some(role);
        }
        let gates = self
            .gates
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let kind: GateKind = g
                    .kind
                    .parse()
                    .map_err(|e| CircuitError::Schema(format!("gates[{i}]: {e}")))?;
                Gate::new(kind, g.qubits.clone())
                    .map_err(|e| CircuitError::Schema(format!("gates[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let segments = self
            .segments
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let tag: SegmentTag = s
                    .tag
                    .parse()
                    .map_err(|e| CircuitError::Schema(format!("segments[{i}]: {e}")))?;
                Ok(Segment {
                    tag,
                    from: s.from,
                    to: s.to,
                })
            })
            .collect::<Result<Vec<_>, CircuitError>>()?;
        Circuit::new(self.n_qubits, roles, gates, segments)
            .map_err(|e| CircuitError::Schema(e.to_string()))
    }
}

pub fn to_json(circuit: &Circuit) -> String {
    to_json_with(circuit, None)
}

pub fn to_json_with(circuit: &Circuit, metadata: Option<Metadata>) -> String {
    let mut doc = CircuitDoc::from_circuit(circuit);
    doc.metadata = metadata;
    serde_json::to_string_pretty(&doc).expect("circuit documents always serialize")
}

pub fn parse_doc(text: &str) -> Result<CircuitDoc, CircuitError> {
    serde_json::from_str(text).map_err(|e| CircuitError::Schema(e.to_string()))
}

pub fn from_json(text: &str) -> Result<Circuit, CircuitError> {
    parse_doc(text)?.to_circuit()
}
