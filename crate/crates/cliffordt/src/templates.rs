use std::sync::OnceLock;

use circuit_core::{Circuit, Gate, GateKind};
use semantics::{full_unitary, EQ_TOL};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TemplateError {
    #[error("template '{name}' deviates from {kind} by {deviation:.3e} (tolerance {tol:e})")]
    Mismatch {
        name: &'static str,
        kind: GateKind,
        deviation: f64,
        tol: f64,
    },

    #[error("template '{name}' replaces {kind}, which is not a three-qubit composite")]
    NotComposite { name: &'static str, kind: GateKind },

    #[error("template '{name}' is not a Clifford+T gate list")]
    NotCliffordT { name: &'static str },
}

/// Clifford+T gate list over placeholder wires 0, 1, 2 standing for the
/// operands (q1, q2, q3) of the composite it replaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub name: &'static str,
    pub replaces: GateKind,
    pub gates: Vec<Gate>,
    /// Where the decomposition is used.
    pub origin: &'static str,
}

impl Template {
    fn new(
        name: &'static str,
        replaces: GateKind,
        gates: Vec<Gate>,
        origin: &'static str,
    ) -> Template {
        Template {
            name,
            replaces,
            gates,
            origin,
        }
    }

    /// Mirror image: reversed order, T and T† swapped. Replaces the inverse composite.
    pub fn adjoint(&self, name: &'static str, origin: &'static str) -> Template {
        let gates = self
            .gates
            .iter()
            .rev()
            .map(|g| g.inverse().expect("Clifford+T gates are invertible"))
            .collect();
        let replaces = self.replaces.inverse().expect("composites are invertible");
        Template::new(name, replaces, gates, origin)
    }

    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.kind().is_t_like()).count()
    }

    pub fn cnot_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| g.kind() == GateKind::Cnot)
            .count()
    }

    /// Gates with placeholder `i` replaced by `operands[i]`.
    pub fn instantiate<'a>(&'a self, operands: &'a [usize]) -> impl Iterator<Item = Gate> + 'a {
        self.gates.iter().map(move |g| g.remap(|q| operands[q]))
    }

    /// Entry-wise comparison of the template unitary with the composite's
    /// permutation matrix. No global phase is factored out.
    pub fn check(&self) -> Result<(), TemplateError> {
        if !self.replaces.is_composite() {
            return Err(TemplateError::NotComposite {
                name: self.name,
                kind: self.replaces,
            });
        }
        if self.gates.iter().any(|g| g.kind().is_composite()) {
            return Err(TemplateError::NotCliffordT { name: self.name });
        }
        let body = Circuit::from_gates(3, self.gates.clone())
            .map_err(|_| TemplateError::NotCliffordT { name: self.name })?;
        let composite = Circuit::from_gates(
            3,
            vec![Gate::new(self.replaces, vec![0, 1, 2]).expect("arity 3")],
        )
        .expect("three wires");
        let deviation = full_unitary(&body)
            .expect("three wires")
            .max_abs_diff(&full_unitary(&composite).expect("three wires"));
        if deviation > EQ_TOL {
            return Err(TemplateError::Mismatch {
                name: self.name,
                kind: self.replaces,
                deviation,
                tol: EQ_TOL,
            });
        }
        Ok(())
    }
}

fn h(q: usize) -> Gate {
    Gate::h(q)
}
fn t(q: usize) -> Gate {
    Gate::t(q)
}
fn td(q: usize) -> Gate {
    Gate::tdg(q)
}
fn cx(c: usize, q: usize) -> Gate {
    Gate::cnot(c, q)
}

/// T-depth-3 body shared by every Toffoli variant; leaves the controls
/// needing a final phase correction.
fn toffoli_body() -> Vec<Gate> {
    vec![
        h(2),
        cx(1, 2),
        cx(2, 0),
        td(0),
        td(1),
        t(2),
        cx(1, 0),
        cx(1, 2),
        t(0),
        td(2),
        cx(2, 0),
        h(2),
    ]
}

/// The control phase correction, bracketed by a CNOT pair.
fn toffoli_tail() -> Vec<Gate> {
    vec![cx(0, 1), td(0), t(1), cx(0, 1)]
}

/// The same correction with T† on q1 moved last, so that it meets the
/// mirrored gate of the uncomputing branch.
fn toffoli_tail_open() -> Vec<Gate> {
    vec![cx(0, 1), t(1), cx(0, 1), td(0)]
}

/// The full set of decompositions used by the compiler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateSet {
    /// Standalone Toffoli: 7 T, 7 CNOT, T-depth 3.
    pub toffoli: Template,
    /// Its adjoint, used on the uncomputing branch without a partner.
    pub toffoli_mirror: Template,
    /// Toffoli whose trailing T† is exposed for cancellation.
    pub toffoli_stitched: Template,
    /// Adjoint of the stitched Toffoli.
    pub toffoli_stitched_mirror: Template,
    /// Toffoli followed by the control CNOT, absorbed into the tail.
    pub peres: Template,
    pub tr: Template,
    /// Five-CNOT Peres used along an uncomputing cascade.
    pub peres_cascade: Template,
    /// Five-CNOT Peres with the q1 phase moved past the first CNOT pair.
    pub peres_apex: Template,
    pub tr_apex: Template,
}

impl TemplateSet {
    /// Fresh, unchecked set.
    pub fn build() -> TemplateSet {
        let toffoli = Template::new(
            "toffoli",
            GateKind::Toffoli,
            [toffoli_body(), toffoli_tail()].concat(),
            "any Toffoli without a stitching partner",
        );
        let toffoli_stitched = Template::new(
            "toffoli-stitched",
            GateKind::Toffoli,
            [toffoli_body(), toffoli_tail_open()].concat(),
            "computing branch with a mirrored partner",
        );
        let mut peres_gates = toffoli_body();
        peres_gates.extend([cx(0, 1), td(0), t(1)]);
        let peres = Template::new("peres", GateKind::Peres, peres_gates, "naive Peres");
        let peres_cascade = Template::new(
            "peres-cascade",
            GateKind::Peres,
            vec![
                t(0),
                t(1),
                h(2),
                cx(2, 1),
                cx(0, 2),
                td(1),
                td(2),
                cx(0, 1),
                cx(0, 2),
                t(1),
                t(2),
                cx(2, 1),
                td(1),
                h(2),
            ],
            "uncomputing Peres branch",
        );
        let peres_apex = Template::new(
            "peres-apex",
            GateKind::Peres,
            vec![
                t(1),
                h(2),
                cx(2, 1),
                cx(0, 2),
                t(0),
                td(1),
                td(2),
                cx(0, 1),
                cx(0, 2),
                t(1),
                t(2),
                cx(2, 1),
                td(1),
                h(2),
            ],
            "apex Peres",
        );
        TemplateSet {
            toffoli_mirror: toffoli
                .adjoint("toffoli-mirror", "uncomputing Toffoli without a partner"),
            toffoli_stitched_mirror: toffoli_stitched.adjoint(
                "toffoli-stitched-mirror",
                "uncomputing branch with a computing partner",
            ),
            tr: peres.adjoint("tr", "naive TR"),
            tr_apex: peres_apex.adjoint("tr-apex", "apex TR"),
            toffoli,
            toffoli_stitched,
            peres,
            peres_cascade,
            peres_apex,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Template> {
        [
            &self.toffoli,
            &self.toffoli_mirror,
            &self.toffoli_stitched,
            &self.toffoli_stitched_mirror,
            &self.peres,
            &self.tr,
            &self.peres_cascade,
            &self.peres_apex,
            &self.tr_apex,
        ]
        .into_iter()
    }

    pub fn check(&self) -> Result<(), TemplateError> {
        self.iter().try_for_each(Template::check)
    }

    /// The checked registry. Every template is compared against its
    /// composite on first use; a mismatch is a programming error.
    pub fn standard() -> &'static TemplateSet {
        static SET: OnceLock<TemplateSet> = OnceLock::new();
        SET.get_or_init(|| {
            let set = TemplateSet::build();
            if let Err(e) = set.check() {
                panic!("template registration failed: {e}");
            }
            set
        })
    }
}
