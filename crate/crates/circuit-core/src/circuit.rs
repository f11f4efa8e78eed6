use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::CircuitError;
use crate::gate::Gate;

/// What a wire holds: a bit of operand `a`, a bit of operand `b` (which
/// becomes the sum for adders), the ancilla, or the carry/comparison wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QubitRole {
    A(usize),
    B(usize),
    Ancilla,
    Z,
}

impl fmt::Display for QubitRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QubitRole::A(i) => write!(f, "A({i})"),
            QubitRole::B(i) => write!(f, "B({i})"),
            QubitRole::Ancilla => f.write_str("ANCILLA"),
            QubitRole::Z => f.write_str("Z"),
        }
    }
}

/// Structural annotation of a V-shaped circuit. Cascade layers count from 1
/// at the least significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentTag {
    Pre,
    LeftCascade(usize),
    Apex,
    RightCascade(usize),
    Post,
}

impl fmt::Display for SegmentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentTag::Pre => f.write_str("PRE"),
            SegmentTag::LeftCascade(k) => write!(f, "LEFT_CASCADE({k})"),
            SegmentTag::Apex => f.write_str("APEX"),
            SegmentTag::RightCascade(k) => write!(f, "RIGHT_CASCADE({k})"),
            SegmentTag::Post => f.write_str("POST"),
        }
    }
}

impl FromStr for SegmentTag {
    type Err = CircuitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CircuitError::UnknownSegmentTag(s.to_string());
        match s {
            "PRE" => return Ok(SegmentTag::Pre),
            "APEX" => return Ok(SegmentTag::Apex),
            "POST" => return Ok(SegmentTag::Post),
            _ => {}
        }
        let layer = |prefix: &str| -> Option<usize> {
            s.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
        };
        if let Some(k) = layer("LEFT_CASCADE(") {
            Ok(SegmentTag::LeftCascade(k))
        } else if let Some(k) = layer("RIGHT_CASCADE(") {
            Ok(SegmentTag::RightCascade(k))
        } else {
            Err(bad())
        }
    }
}

/// Half-open gate index range `[from, to)` carrying a structural tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub tag: SegmentTag,
    pub from: usize,
    pub to: usize,
}

impl Segment {
    pub fn contains(&self, index: usize) -> bool {
        self.from <= index && index < self.to
    }
}

/// Ordered gate list over a fixed register. Immutable once constructed;
/// every constructor validates qubit ranges, roles and segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n_qubits: usize,
    roles: Vec<Option<QubitRole>>,
    gates: Vec<Gate>,
    segments: Vec<Segment>,
}

impl Circuit {
    pub fn new(
        n_qubits: usize,
        roles: Vec<Option<QubitRole>>,
        gates: Vec<Gate>,
        segments: Vec<Segment>,
    ) -> Result<Circuit, CircuitError> {
        let roles = if roles.is_empty() {
            vec![None; n_qubits]
        } else {
            roles
        };
        if roles.len() != n_qubits {
            return Err(CircuitError::RoleOutOfRange {
                wire: roles.len().saturating_sub(1),
                n_qubits,
            });
        }
        let mut seen = HashSet::new();
        for role in roles.iter().flatten() {
            // several ancillas are fine; operand bits and Z are unique
            if *role != QubitRole::Ancilla && !seen.insert(*role) {
                return Err(CircuitError::DuplicateRole {
                    role: role.to_string(),
                });
            }
        }
        for (index, gate) in gates.iter().enumerate() {
            if let Some(&qubit) = gate.qubits().iter().find(|&&q| q >= n_qubits) {
                return Err(CircuitError::QubitOutOfRange {
                    index,
                    qubit,
                    n_qubits,
                });
            }
        }
        let mut previous_end = 0;
        for seg in &segments {
            if seg.from > seg.to || seg.to > gates.len() || seg.from < previous_end {
                return Err(CircuitError::BadSegment {
                    tag: seg.tag.to_string(),
                    from: seg.from,
                    to: seg.to,
                    len: gates.len(),
                });
            }
            previous_end = seg.to;
        }
        Ok(Circuit {
            n_qubits,
            roles,
            gates,
            segments,
        })
    }

    /// Unlabelled circuit without segments.
    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Result<Circuit, CircuitError> {
        Circuit::new(n_qubits, Vec::new(), gates, Vec::new())
    }

    pub fn empty(n_qubits: usize) -> Circuit {
        Circuit {
            n_qubits,
            roles: vec![None; n_qubits],
            gates: Vec::new(),
            segments: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn roles(&self) -> &[Option<QubitRole>] {
        &self.roles
    }

    pub fn role(&self, wire: usize) -> Option<QubitRole> {
        self.roles.get(wire).copied().flatten()
    }

    /// Wire carrying `role`, if any.
    pub fn wire_of(&self, role: QubitRole) -> Option<usize> {
        self.roles.iter().position(|r| *r == Some(role))
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Segment containing gate `index`, if annotated.
    pub fn segment_of(&self, index: usize) -> Option<&Segment> {
        self.segments.iter().find(|s| s.contains(index))
    }

    pub fn has_composites(&self) -> bool {
        self.gates.iter().any(|g| g.kind().is_composite())
    }

    /// Same register and roles with a new gate list and segment list.
    pub fn with_gates(
        &self,
        gates: Vec<Gate>,
        segments: Vec<Segment>,
    ) -> Result<Circuit, CircuitError> {
        Circuit::new(self.n_qubits, self.roles.clone(), gates, segments)
    }
}

/// Incremental construction with segment bookkeeping.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    n_qubits: usize,
    roles: Vec<Option<QubitRole>>,
    gates: Vec<Gate>,
    segments: Vec<Segment>,
    open: Option<(SegmentTag, usize)>,
}

impl CircuitBuilder {
    pub fn new(n_qubits: usize) -> CircuitBuilder {
        CircuitBuilder {
            n_qubits,
            roles: vec![None; n_qubits],
            gates: Vec::new(),
            segments: Vec::new(),
            open: None,
        }
    }

    pub fn role(&mut self, wire: usize, role: QubitRole) -> &mut Self {
        self.roles[wire] = Some(role);
        self
    }

    pub fn push(&mut self, gate: Gate) -> &mut Self {
        self.gates.push(gate);
        self
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> &mut Self {
        self.gates.extend(gates);
        self
    }

    /// Closes any open segment and starts a new one at the current position.
    pub fn segment(&mut self, tag: SegmentTag) -> &mut Self {
        self.close();
        self.open = Some((tag, self.gates.len()));
        self
    }

    fn close(&mut self) {
        if let Some((tag, from)) = self.open.take() {
            self.segments.push(Segment {
                tag,
                from,
                to: self.gates.len(),
            });
        }
    }

    pub fn build(mut self) -> Result<Circuit, CircuitError> {
        self.close();
        Circuit::new(self.n_qubits, self.roles, self.gates, self.segments)
    }
}

/// `c1` followed by `c2`; `c2`'s segments are shifted past `c1`'s gates.
pub fn concat(c1: &Circuit, c2: &Circuit) -> Result<Circuit, CircuitError> {
    if c1.n_qubits != c2.n_qubits {
        return Err(CircuitError::RegisterMismatch(format!(
            "{} wires vs {} wires",
            c1.n_qubits, c2.n_qubits
        )));
    }
    let mut roles = c1.roles.clone();
    for (wire, (r1, r2)) in c1.roles.iter().zip(&c2.roles).enumerate() {
        match (r1, r2) {
            (Some(a), Some(b)) if a != b => {
                return Err(CircuitError::RegisterMismatch(format!(
                    "wire {wire} is {a} in the first circuit and {b} in the second"
                )))
            }
            (None, Some(b)) => roles[wire] = Some(*b),
            _ => {}
        }
    }
    let offset = c1.gates.len();
    let gates = c1.gates.iter().chain(&c2.gates).cloned().collect();
    let segments = c1
        .segments
        .iter()
        .copied()
        .chain(c2.segments.iter().map(|s| Segment {
            tag: s.tag,
            from: s.from + offset,
            to: s.to + offset,
        }))
        .collect();
    Circuit::new(c1.n_qubits, roles, gates, segments)
}

/// Adjoint circuit: gates in reverse order, each replaced by its inverse.
/// Segments are dropped since the V-shape roles do not survive reversal.
pub fn reverse(circuit: &Circuit) -> Result<Circuit, CircuitError> {
    let gates = circuit
        .gates
        .iter()
        .enumerate()
        .rev()
        .map(|(index, g)| {
            g.inverse().ok_or(CircuitError::NonInvertibleComposite {
                index,
                kind: g.kind(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    circuit.with_gates(gates, Vec::new())
}
