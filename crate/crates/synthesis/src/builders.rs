//! V-shaped ripple-carry circuits. Every builder emits
//! `PRE | LEFT_CASCADE(1..n-1) | APEX | RIGHT_CASCADE(n-1..1) | POST`
//! segments; cascade layer k handles bit position k-1.

use circuit_core::{Circuit, CircuitBuilder, Gate, QubitRole, SegmentTag};

use crate::family::{CircuitFamily, Family, SynthesisError};

/// Wire assignment of one construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub ancilla: Option<usize>,
    pub z: usize,
    pub n_qubits: usize,
}

impl Layout {
    /// `b0, a0, anc, b1, a1, ..., b(n-1), a(n-1), z`.
    pub fn cdkm(n: usize) -> Layout {
        let mut a = vec![1];
        let mut b = vec![0];
        for i in 1..n {
            b.push(1 + 2 * i);
            a.push(2 + 2 * i);
        }
        Layout {
            a,
            b,
            ancilla: Some(2),
            z: 2 * n + 1,
            n_qubits: 2 * n + 2,
        }
    }

    /// `a0, b0, a1, b1, ..., a(n-1), b(n-1), z`.
    pub fn ttk(n: usize) -> Layout {
        Layout {
            a: (0..n).map(|i| 2 * i).collect(),
            b: (0..n).map(|i| 2 * i + 1).collect(),
            ancilla: None,
            z: 2 * n,
            n_qubits: 2 * n + 1,
        }
    }

    fn builder(&self) -> CircuitBuilder {
        let mut builder = CircuitBuilder::new(self.n_qubits);
        for (i, &w) in self.a.iter().enumerate() {
            builder.role(w, QubitRole::A(i));
        }
        for (i, &w) in self.b.iter().enumerate() {
            builder.role(w, QubitRole::B(i));
        }
        if let Some(w) = self.ancilla {
            builder.role(w, QubitRole::Ancilla);
        }
        builder.role(self.z, QubitRole::Z);
        builder
    }

    /// Toffoli operands of the CDKM carry cascade, bottom layer first:
    /// `(a0, b0, anc)`, `(anc, b1, a1)`, `(a1, b2, a2)`, ...
    fn cdkm_layers(&self) -> Vec<[usize; 3]> {
        let n = self.a.len();
        let anc = self.ancilla.expect("CDKM layouts carry an ancilla");
        let mut layers = vec![[self.a[0], self.b[0], anc]];
        for j in 1..n - 1 {
            let carry_in = if j == 1 { anc } else { self.a[j - 1] };
            layers.push([carry_in, self.b[j], self.a[j]]);
        }
        layers
    }

    /// Toffoli operands of the TTK carry cascade: `(a_j, b_j, a_{j+1})`.
    fn ttk_layers(&self) -> Vec<[usize; 3]> {
        (0..self.a.len() - 1)
            .map(|j| [self.a[j], self.b[j], self.a[j + 1]])
            .collect()
    }

    /// Wire holding the top carry once the left cascade has run.
    fn top_carry(&self, layers: &[[usize; 3]]) -> usize {
        layers.last().map(|l| l[2]).unwrap_or(self.a[0])
    }
}

fn check_n(n: usize) -> Result<(), SynthesisError> {
    if n < 1 {
        return Err(SynthesisError::NTooSmall(n));
    }
    Ok(())
}

fn toffoli(l: [usize; 3]) -> Gate {
    Gate::toffoli(l[0], l[1], l[2])
}

fn peres(l: [usize; 3]) -> Gate {
    Gate::peres(l[0], l[1], l[2])
}

/// `b_i ^= a_i` for i ≥ 1.
fn fan(layout: &Layout) -> impl Iterator<Item = Gate> + '_ {
    (1..layout.a.len()).map(|i| Gate::cnot(layout.a[i], layout.b[i]))
}

fn left_cascade(builder: &mut CircuitBuilder, layers: &[[usize; 3]]) {
    for (k, &l) in layers.iter().enumerate() {
        builder
            .segment(SegmentTag::LeftCascade(k + 1))
            .push(toffoli(l));
    }
}

/// CDKM in-place adder with a Peres right branch.
pub fn build_cdkm_shallow(n: usize) -> Result<Circuit, SynthesisError> {
    check_n(n)?;
    let layout = Layout::cdkm(n);
    let mut c = layout.builder();
    if n == 1 {
        c.segment(SegmentTag::Apex)
            .push(Gate::peres(layout.a[0], layout.b[0], layout.z));
        return Ok(c.build().expect("valid layout"));
    }
    let (a, anc, z) = (&layout.a, layout.ancilla.unwrap(), layout.z);
    let layers = layout.cdkm_layers();

    c.segment(SegmentTag::Pre).extend(fan(&layout));
    c.push(Gate::cnot(a[1], anc));
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i + 1], a[i]));
    }
    c.push(Gate::cnot(a[n - 1], z));
    left_cascade(&mut c, &layers);
    c.segment(SegmentTag::Apex)
        .push(Gate::peres(layout.top_carry(&layers), layout.b[n - 1], z));
    for (k, &l) in layers.iter().enumerate().rev() {
        c.segment(SegmentTag::RightCascade(k + 1)).push(peres(l));
    }
    c.segment(SegmentTag::Post);
    for i in (1..n - 1).rev() {
        c.push(Gate::cnot(a[i + 1], a[i]));
    }
    c.push(Gate::cnot(a[1], anc));
    c.extend(fan(&layout));
    Ok(c.build().expect("valid layout"))
}

/// CDKM in-place adder whose right branch is Toffolis interleaved with
/// CNOT pairs (size-efficient variant).
pub fn build_cdkm_compact(n: usize) -> Result<Circuit, SynthesisError> {
    check_n(n)?;
    let layout = Layout::cdkm(n);
    let mut c = layout.builder();
    if n == 1 {
        c.segment(SegmentTag::Apex)
            .push(Gate::peres(layout.a[0], layout.b[0], layout.z));
        return Ok(c.build().expect("valid layout"));
    }
    let (a, b, anc, z) = (&layout.a, &layout.b, layout.ancilla.unwrap(), layout.z);
    let layers = layout.cdkm_layers();

    c.segment(SegmentTag::Pre).extend(fan(&layout));
    c.push(Gate::cnot(a[1], anc));
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i + 1], a[i]));
    }
    c.push(Gate::cnot(a[n - 1], z));
    left_cascade(&mut c, &layers);
    let top = layout.top_carry(&layers);
    c.segment(SegmentTag::Apex)
        .push(Gate::peres(top, b[n - 1], z));
    // Each right layer first restores the wires of the layer above it
    // (a_{j+1} → carry wire of layer j+1, then into b_{j+1}), then undoes
    // its own carry Toffoli.
    for (k, &l) in layers.iter().enumerate().rev() {
        let above = if k + 1 == layers.len() {
            [top, b[n - 1], a[n - 1]]
        } else {
            layers[k + 1]
        };
        let [carry_in, b_above, a_above] = above;
        c.segment(SegmentTag::RightCascade(k + 1));
        if k + 1 == layers.len() {
            c.push(Gate::cnot(a_above, carry_in));
            c.push(Gate::cnot(a_above, b_above));
        } else {
            c.push(Gate::cnot(a_above, carry_in));
            c.push(Gate::cnot(carry_in, b_above));
        }
        c.push(toffoli(l));
    }
    c.segment(SegmentTag::Post).push(Gate::cnot(a[0], b[0]));
    Ok(c.build().expect("valid layout"))
}

/// Ancilla-free TTK in-place adder.
pub fn build_ttk_adder(n: usize) -> Result<Circuit, SynthesisError> {
    check_n(n)?;
    let layout = Layout::ttk(n);
    let mut c = layout.builder();
    if n == 1 {
        c.segment(SegmentTag::Apex)
            .push(Gate::peres(layout.a[0], layout.b[0], layout.z));
        return Ok(c.build().expect("valid layout"));
    }
    let (a, z) = (&layout.a, layout.z);
    let layers = layout.ttk_layers();

    c.segment(SegmentTag::Pre).extend(fan(&layout));
    c.push(Gate::cnot(a[n - 1], z));
    for i in (1..n - 1).rev() {
        c.push(Gate::cnot(a[i], a[i + 1]));
    }
    left_cascade(&mut c, &layers);
    c.segment(SegmentTag::Apex)
        .push(Gate::peres(a[n - 1], layout.b[n - 1], z));
    for (k, &l) in layers.iter().enumerate().rev() {
        c.segment(SegmentTag::RightCascade(k + 1)).push(peres(l));
    }
    c.segment(SegmentTag::Post);
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i], a[i + 1]));
    }
    c.extend(fan(&layout));
    Ok(c.build().expect("valid layout"))
}

/// Comparator from the shallow CDKM adder: the carry of a + ¬b is computed
/// on X-conjugated b, copied onto z by the apex and uncomputed. A final X
/// on z turns z ⊕ (a > b) into z ⊕ (a ≤ b).
pub fn build_cdkm_comparator(n: usize) -> Result<Circuit, SynthesisError> {
    check_n(n)?;
    let layout = Layout::cdkm(n);
    let (a, b, z) = (&layout.a, &layout.b, layout.z);
    let mut c = layout.builder();
    if n == 1 {
        c.segment(SegmentTag::Pre).push(Gate::x(b[0]));
        c.segment(SegmentTag::Apex)
            .push(Gate::toffoli(a[0], b[0], z));
        c.segment(SegmentTag::Post)
            .push(Gate::x(b[0]))
            .push(Gate::x(z));
        return Ok(c.build().expect("valid layout"));
    }
    let anc = layout.ancilla.unwrap();
    let layers = layout.cdkm_layers();

    c.segment(SegmentTag::Pre).extend(fan(&layout));
    c.push(Gate::cnot(a[1], anc));
    c.extend(b.iter().map(|&w| Gate::x(w)));
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i + 1], a[i]));
    }
    c.push(Gate::cnot(a[n - 1], z));
    left_cascade(&mut c, &layers);
    c.segment(SegmentTag::Apex)
        .push(Gate::toffoli(layout.top_carry(&layers), b[n - 1], z));
    for (k, &l) in layers.iter().enumerate().rev() {
        c.segment(SegmentTag::RightCascade(k + 1)).push(toffoli(l));
    }
    c.segment(SegmentTag::Post);
    for i in (1..n - 1).rev() {
        c.push(Gate::cnot(a[i + 1], a[i]));
    }
    c.extend(b.iter().map(|&w| Gate::x(w)));
    c.push(Gate::cnot(a[1], anc));
    c.extend(fan(&layout));
    c.push(Gate::x(z));
    Ok(c.build().expect("valid layout"))
}

/// Ancilla-free comparator from the TTK adder; the apex is a TR gate
/// followed by the CNOT that restores b_{n-1}.
pub fn build_ttk_comparator(n: usize) -> Result<Circuit, SynthesisError> {
    check_n(n)?;
    let layout = Layout::ttk(n);
    let (a, b, z) = (&layout.a, &layout.b, layout.z);
    let mut c = layout.builder();
    if n == 1 {
        c.segment(SegmentTag::Apex)
            .push(Gate::tr(a[0], b[0], z))
            .push(Gate::cnot(a[0], b[0]));
        c.segment(SegmentTag::Post).push(Gate::x(z));
        return Ok(c.build().expect("valid layout"));
    }
    let layers = layout.ttk_layers();

    c.segment(SegmentTag::Pre).extend(fan(&layout));
    c.push(Gate::cnot(a[n - 1], z));
    for i in (1..n - 1).rev() {
        c.push(Gate::cnot(a[i], a[i + 1]));
    }
    c.extend(b[..n - 1].iter().map(|&w| Gate::x(w)));
    left_cascade(&mut c, &layers);
    c.segment(SegmentTag::Apex)
        .push(Gate::tr(a[n - 1], b[n - 1], z))
        .push(Gate::cnot(a[n - 1], b[n - 1]));
    for (k, &l) in layers.iter().enumerate().rev() {
        c.segment(SegmentTag::RightCascade(k + 1)).push(toffoli(l));
    }
    c.segment(SegmentTag::Post)
        .extend(b[..n - 1].iter().map(|&w| Gate::x(w)));
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i], a[i + 1]));
    }
    c.extend(fan(&layout));
    c.push(Gate::x(z));
    Ok(c.build().expect("valid layout"))
}

pub fn build(family: Family, n: usize) -> Result<Circuit, SynthesisError> {
    match family {
        Family::CdkmShallow => build_cdkm_shallow(n),
        Family::CdkmCompact => build_cdkm_compact(n),
        Family::TtkAdder => build_ttk_adder(n),
        Family::CdkmComparator => build_cdkm_comparator(n),
        Family::TtkComparator => build_ttk_comparator(n),
    }
}

pub fn build_family(spec: CircuitFamily) -> Result<Circuit, SynthesisError> {
    build(spec.family, spec.n)
}
