use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use circuit_core::{Circuit, Gate, GateKind, Segment, SegmentTag};

use crate::cancel::cancel_pairs;
use crate::templates::{Template, TemplateSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompileMode {
    /// Every composite replaced by its standalone decomposition.
    Naive,
    /// Segment-aware stitched decompositions, then pair cancellation.
    Optimized,
}

impl CompileMode {
    pub fn name(self) -> &'static str {
        match self {
            CompileMode::Naive => "naive",
            CompileMode::Optimized => "optimized",
        }
    }
}

impl fmt::Display for CompileMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CompileMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(CompileMode::Naive),
            "optimized" => Ok(CompileMode::Optimized),
            other => Err(format!(
                "unknown compile mode '{other}' (expected naive or optimized)"
            )),
        }
    }
}

pub const FALLBACK_WARNING: &str = "no segment annotations; compiled in naive mode";

/// Result of compilation. `fell_back` is set when optimized compilation
/// was requested for a circuit with no segment annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Compiled {
    pub circuit: Circuit,
    pub mode: CompileMode,
    pub fell_back: bool,
}

impl Compiled {
    pub fn warnings(&self) -> Vec<String> {
        if self.fell_back {
            vec![FALLBACK_WARNING.to_string()]
        } else {
            Vec::new()
        }
    }
}

pub fn compile(circuit: &Circuit, mode: CompileMode) -> Compiled {
    compile_with(circuit, mode, TemplateSet::standard())
}

/// Compiles with an explicit template set (used to inject faulty
/// templates in negative tests).
pub fn compile_with(circuit: &Circuit, mode: CompileMode, templates: &TemplateSet) -> Compiled {
    let fell_back = mode == CompileMode::Optimized && circuit.segments().is_empty();
    let circuit = if mode == CompileMode::Naive || fell_back {
        expand(circuit, |_, kind| naive_choice(templates, kind))
    } else {
        let mut left = HashSet::new();
        let mut right = HashSet::new();
        for s in circuit.segments() {
            match s.tag {
                SegmentTag::LeftCascade(k) => left.insert(k),
                SegmentTag::RightCascade(k) => right.insert(k),
                _ => false,
            };
        }
        let stitched = expand(circuit, |tag, kind| match (tag, kind) {
            (Some(SegmentTag::LeftCascade(k)), GateKind::Toffoli) if right.contains(&k) => {
                &templates.toffoli_stitched
            }
            (Some(SegmentTag::RightCascade(k)), GateKind::Toffoli) if left.contains(&k) => {
                &templates.toffoli_stitched_mirror
            }
            (Some(SegmentTag::RightCascade(_)), GateKind::Toffoli) => &templates.toffoli_mirror,
            (Some(SegmentTag::RightCascade(_)), GateKind::Peres) => &templates.peres_cascade,
            (Some(SegmentTag::Apex), GateKind::Peres) => &templates.peres_apex,
            (Some(SegmentTag::Apex), GateKind::Tr) => &templates.tr_apex,
            (_, kind) => naive_choice(templates, kind),
        });
        cancel_pairs(&stitched)
    };
    Compiled {
        circuit,
        mode,
        fell_back,
    }
}

fn naive_choice(templates: &TemplateSet, kind: GateKind) -> &Template {
    match kind {
        GateKind::Toffoli => &templates.toffoli,
        GateKind::Peres => &templates.peres,
        GateKind::Tr => &templates.tr,
        other => unreachable!("{other} is not a composite"),
    }
}

/// Replaces every composite by the template `choose` picks for it, given
/// the tag of the segment it sits in. Segments are carried over to the
/// expanded index ranges.
pub(crate) fn expand<'t>(
    circuit: &Circuit,
    choose: impl Fn(Option<SegmentTag>, GateKind) -> &'t Template,
) -> Circuit {
    let mut gates: Vec<Gate> = Vec::with_capacity(circuit.len() * 8);
    let mut start = Vec::with_capacity(circuit.len() + 1);
    for (i, gate) in circuit.gates().iter().enumerate() {
        start.push(gates.len());
        if gate.kind().is_composite() {
            let tag = circuit.segment_of(i).map(|s| s.tag);
            gates.extend(choose(tag, gate.kind()).instantiate(gate.qubits()));
        } else {
            gates.push(gate.clone());
        }
    }
    start.push(gates.len());
    let segments = circuit
        .segments()
        .iter()
        .map(|s| Segment {
            tag: s.tag,
            from: start[s.from],
            to: start[s.to],
        })
        .collect();
    circuit
        .with_gates(gates, segments)
        .expect("templates act on the composite's own wires")
}

#[cfg(test)]
mod tests {
    use super::*;
    use circuit_core::metrics;

    #[test]
    fn naive_toffoli_inventory() {
        let c = Circuit::from_gates(3, vec![Gate::toffoli(0, 1, 2)]).unwrap();
        let out = compile(&c, CompileMode::Naive);
        let m = metrics(&out.circuit).unwrap();
        assert_eq!((m.t_count, m.cnot_count, m.t_depth), (7, 7, 3));
        assert!(!out.fell_back);
    }

    #[test]
    fn unannotated_optimized_falls_back() {
        let c = Circuit::from_gates(3, vec![Gate::peres(0, 1, 2)]).unwrap();
        let out = compile(&c, CompileMode::Optimized);
        assert!(out.fell_back);
        assert_eq!(out.warnings(), vec![FALLBACK_WARNING.to_string()]);
        assert_eq!(out.circuit, compile(&c, CompileMode::Naive).circuit);
    }

    #[test]
    fn output_is_clifford_t() {
        let c =
            Circuit::from_gates(4, vec![Gate::x(3), Gate::tr(3, 1, 0), Gate::cnot(0, 2)]).unwrap();
        for mode in [CompileMode::Naive, CompileMode::Optimized] {
            let out = compile(&c, mode).circuit;
            assert!(!out.has_composites());
            assert_eq!(out.gates()[0], Gate::x(3));
            assert_eq!(out.gates().last(), Some(&Gate::cnot(0, 2)));
        }
    }

    #[test]
    fn mode_names() {
        assert_eq!("naive".parse::<CompileMode>(), Ok(CompileMode::Naive));
        assert_eq!(CompileMode::Optimized.to_string(), "optimized");
        assert!("fast".parse::<CompileMode>().is_err());
    }
}
