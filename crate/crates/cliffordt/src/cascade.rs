use std::fmt;

use circuit_core::{metrics, Circuit, CircuitBuilder, Gate, GateKind, MetricReport, SegmentTag};

use crate::compile::{compile, expand, CompileMode};
use crate::templates::TemplateSet;

/// Cascade shapes whose costs have closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CascadeShape {
    /// k computing Toffolis.
    ToffoliLeft,
    /// k uncomputing Peres gates.
    PeresRight,
    /// Toffoli cascade mirrored by a Peres cascade.
    VToffPeres,
    /// Toffoli cascade mirrored by a Toffoli cascade.
    VToffToff,
}

impl CascadeShape {
    pub const ALL: [CascadeShape; 4] = [
        CascadeShape::ToffoliLeft,
        CascadeShape::PeresRight,
        CascadeShape::VToffPeres,
        CascadeShape::VToffToff,
    ];

    fn has_left(self) -> bool {
        self != CascadeShape::PeresRight
    }

    fn right_kind(self) -> Option<GateKind> {
        match self {
            CascadeShape::ToffoliLeft => None,
            CascadeShape::PeresRight | CascadeShape::VToffPeres => Some(GateKind::Peres),
            CascadeShape::VToffToff => Some(GateKind::Toffoli),
        }
    }
}

impl fmt::Display for CascadeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CascadeShape::ToffoliLeft => "TOFFOLI_LEFT",
            CascadeShape::PeresRight => "PERES_RIGHT",
            CascadeShape::VToffPeres => "V_TOFF_PERES",
            CascadeShape::VToffToff => "V_TOFF_TOFF",
        })
    }
}

/// The four cost figures, in (T-depth, T-count, CNOT-depth, CNOT-count) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CascadeCost {
    pub t_depth: usize,
    pub t_count: usize,
    pub cnot_depth: usize,
    pub cnot_count: usize,
}

impl CascadeCost {
    pub const fn new(
        t_depth: usize,
        t_count: usize,
        cnot_depth: usize,
        cnot_count: usize,
    ) -> CascadeCost {
        CascadeCost {
            t_depth,
            t_count,
            cnot_depth,
            cnot_count,
        }
    }

    pub fn from_report(m: &MetricReport) -> CascadeCost {
        CascadeCost::new(m.t_depth, m.t_count, m.cnot_depth, m.cnot_count)
    }

    /// Counts equal and depths no larger.
    pub fn within(&self, bound: &CascadeCost) -> bool {
        self.t_count == bound.t_count
            && self.cnot_count == bound.cnot_count
            && self.t_depth <= bound.t_depth
            && self.cnot_depth <= bound.cnot_depth
    }
}

impl fmt::Display for CascadeCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.t_depth, self.t_count, self.cnot_depth, self.cnot_count
        )
    }
}

/// Predicted costs before and after cross-gate cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CascadePrediction {
    pub unreduced: CascadeCost,
    pub reduced: CascadeCost,
}

/// Closed-form costs of a k-layer cascade.
///
/// The V shapes lose 2k T gates (Toffoli then Peres) or 4k T gates,
/// 4k CNOTs, 2 T-layers and 4 CNOT-layers (Toffoli then mirrored Toffoli)
/// to cancellation; single cascades have nothing to cancel against.
pub fn cascade_metrics_formula(shape: CascadeShape, k: usize) -> CascadePrediction {
    assert!(k >= 1, "a cascade needs at least one layer");
    let unreduced = match shape {
        CascadeShape::ToffoliLeft => CascadeCost::new(2 * k + 1, 7 * k, 4 * k + 3, 7 * k),
        CascadeShape::PeresRight => CascadeCost::new(k + 3, 7 * k, 4 * k + 1, 5 * k),
        CascadeShape::VToffPeres => CascadeCost::new(3 * k + 4, 14 * k, 8 * k + 4, 12 * k),
        CascadeShape::VToffToff => CascadeCost::new(4 * k + 2, 14 * k, 8 * k + 6, 14 * k),
    };
    let reduced = match shape {
        CascadeShape::ToffoliLeft | CascadeShape::PeresRight => unreduced,
        CascadeShape::VToffPeres => CascadeCost {
            t_count: unreduced.t_count - 2 * k,
            ..unreduced
        },
        CascadeShape::VToffToff => CascadeCost::new(
            unreduced.t_depth - 2,
            unreduced.t_count - 4 * k,
            unreduced.cnot_depth - 4,
            unreduced.cnot_count - 4 * k,
        ),
    };
    CascadePrediction { unreduced, reduced }
}

/// High-level k-layer cascade on wires 0..=2k. Layer j acts on
/// (w[2j-2], w[2j-1], w[2j]); the V shapes put an X on the top target as
/// the apex placeholder.
pub fn cascade_circuit(shape: CascadeShape, k: usize) -> Circuit {
    assert!(k >= 1, "a cascade needs at least one layer");
    let ops = |j: usize| [2 * j - 2, 2 * j - 1, 2 * j];
    let mut b = CircuitBuilder::new(2 * k + 1);
    if shape.has_left() {
        for j in 1..=k {
            let [x, y, z] = ops(j);
            b.segment(SegmentTag::LeftCascade(j))
                .push(Gate::toffoli(x, y, z));
        }
    }
    if let Some(kind) = shape.right_kind() {
        if shape.has_left() {
            b.segment(SegmentTag::Apex).push(Gate::x(2 * k));
        }
        for j in (1..=k).rev() {
            b.segment(SegmentTag::RightCascade(j))
                .push(Gate::new(kind, ops(j).to_vec()).expect("three distinct wires"));
        }
    }
    b.build().expect("cascade wires are in range")
}

/// Each composite replaced by its standalone template, no cancellation.
pub fn cascade_unreduced(shape: CascadeShape, k: usize) -> Circuit {
    let templates = TemplateSet::standard();
    expand(&cascade_circuit(shape, k), |tag, kind| match (tag, kind) {
        (Some(SegmentTag::RightCascade(_)), GateKind::Toffoli) => &templates.toffoli_mirror,
        (_, GateKind::Toffoli) => &templates.toffoli,
        (_, GateKind::Peres) => &templates.peres_cascade,
        (_, other) => unreachable!("cascades contain no {other}"),
    })
}

/// Stitched templates followed by pair cancellation.
pub fn cascade_reduced(shape: CascadeShape, k: usize) -> Circuit {
    compile(&cascade_circuit(shape, k), CompileMode::Optimized).circuit
}

pub fn measure(circuit: &Circuit) -> CascadeCost {
    CascadeCost::from_report(&metrics(circuit).expect("compiled cascades are Clifford+T"))
}
