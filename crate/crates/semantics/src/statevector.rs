use std::collections::HashMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use circuit_core::{Circuit, Gate, GateKind};
use num_complex::Complex64;

use crate::error::SemanticsError;

/// Largest register for dense statevectors and full unitaries.
pub const MAX_DENSE_QUBITS: usize = 12;

/// Amplitudes below this magnitude are dropped by the sparse simulator.
const SPARSE_CUTOFF: f64 = 1e-13;

fn t_phase() -> Complex64 {
    Complex64::from_polar(1.0, FRAC_PI_4)
}

/// Dense state over `n_qubits` wires; amplitude index bit k = wire k.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    pub fn basis(n_qubits: usize, index: usize) -> Result<Statevector, SemanticsError> {
        if n_qubits > MAX_DENSE_QUBITS {
            return Err(SemanticsError::TooLarge {
                n_qubits,
                max: MAX_DENSE_QUBITS,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Statevector {
            n_qubits,
            amplitudes,
        })
    }

    /// `None` unless there are exactly `2^n_qubits` amplitudes.
    pub fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Complex64>) -> Option<Statevector> {
        (n_qubits <= MAX_DENSE_QUBITS && amplitudes.len() == 1 << n_qubits).then_some(Statevector {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn max_abs_diff(&self, other: &Statevector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn apply(&mut self, gate: &Gate) {
        let q = gate.qubits();
        match gate.kind() {
            GateKind::H => {
                let m = 1usize << q[0];
                for i in (0..self.amplitudes.len()).filter(|i| i & m == 0) {
                    let (a, b) = (self.amplitudes[i], self.amplitudes[i | m]);
                    self.amplitudes[i] = (a + b) * FRAC_1_SQRT_2;
                    self.amplitudes[i | m] = (a - b) * FRAC_1_SQRT_2;
                }
            }
            GateKind::T | GateKind::Tdg => {
                let phase = if gate.kind() == GateKind::T {
                    t_phase()
                } else {
                    t_phase().conj()
                };
                let m = 1usize << q[0];
                for (i, amp) in self.amplitudes.iter_mut().enumerate() {
                    if i & m != 0 {
                        *amp *= phase;
                    }
                }
            }
            _ => {
                let mut next = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
                for (i, amp) in self.amplitudes.iter().enumerate() {
                    let j = gate.apply_basis(i as u128).expect("classical gate") as usize;
                    next[j] = *amp;
                }
                self.amplitudes = next;
            }
        }
    }
}

/// Applies each gate's unitary in order; composites act as permutations.
pub fn simulate_statevector(
    circuit: &Circuit,
    input: &Statevector,
) -> Result<Statevector, SemanticsError> {
    if input.n_qubits != circuit.n_qubits() {
        return Err(SemanticsError::DimensionMismatch {
            expected: circuit.n_qubits(),
            got: input.n_qubits,
        });
    }
    let mut state = input.clone();
    for gate in circuit.gates() {
        state.apply(gate);
    }
    Ok(state)
}

/// Sparse state keyed by basis index; suited to basis inputs of circuits
/// whose superpositions stay local (compiled arithmetic circuits).
#[derive(Debug, Clone, PartialEq)]
pub struct SparseState {
    amplitudes: HashMap<u128, Complex64>,
}

impl SparseState {
    pub fn basis(index: u128) -> SparseState {
        SparseState {
            amplitudes: HashMap::from([(index, Complex64::new(1.0, 0.0))]),
        }
    }

    pub fn amplitude(&self, index: u128) -> Complex64 {
        self.amplitudes
            .get(&index)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn support(&self) -> impl Iterator<Item = (u128, Complex64)> + '_ {
        self.amplitudes.iter().map(|(&k, &v)| (k, v))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    fn apply(&mut self, gate: &Gate) {
        let q = gate.qubits();
        match gate.kind() {
            GateKind::H => {
                let m = 1u128 << q[0];
                let mut next: HashMap<u128, Complex64> =
                    HashMap::with_capacity(self.amplitudes.len() * 2);
                for (&i, &amp) in &self.amplitudes {
                    let half = amp * FRAC_1_SQRT_2;
                    *next.entry(i & !m).or_default() += half;
                    *next.entry(i | m).or_default() += if i & m == 0 { half } else { -half };
                }
                next.retain(|_, a| a.norm() > SPARSE_CUTOFF);
                self.amplitudes = next;
            }
            GateKind::T | GateKind::Tdg => {
                let phase = if gate.kind() == GateKind::T {
                    t_phase()
                } else {
                    t_phase().conj()
                };
                let m = 1u128 << q[0];
                for (i, amp) in self.amplitudes.iter_mut() {
                    if i & m != 0 {
                        *amp *= phase;
                    }
                }
            }
            _ => {
                self.amplitudes = self
                    .amplitudes
                    .drain()
                    .map(|(i, amp)| (gate.apply_basis(i).expect("classical gate"), amp))
                    .collect();
            }
        }
    }
}

/// Runs a circuit on one basis state without materializing `2^n` amplitudes.
pub fn simulate_basis(circuit: &Circuit, input: u128) -> Result<SparseState, SemanticsError> {
    if circuit.n_qubits() > crate::classical::MAX_BASIS_QUBITS {
        return Err(SemanticsError::TooLarge {
            n_qubits: circuit.n_qubits(),
            max: crate::classical::MAX_BASIS_QUBITS,
        });
    }
    let mut state = SparseState::basis(input);
    for gate in circuit.gates() {
        state.apply(gate);
    }
    Ok(state)
}

/// Square complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    dim: usize,
    data: Vec<Complex64>,
}

impl Unitary {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[col * self.dim + row]
    }

    pub fn column(&self, col: usize) -> &[Complex64] {
        &self.data[col * self.dim..(col + 1) * self.dim]
    }

    /// Largest entry-wise deviation; infinite when dimensions differ.
    pub fn max_abs_diff(&self, other: &Unitary) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Unitary, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Image of each basis column when this is a 0/1 permutation matrix within `tol`.
    pub fn as_permutation(&self, tol: f64) -> Option<Vec<usize>> {
        (0..self.dim)
            .map(|col| {
                let column = self.column(col);
                let row =
                    (0..self.dim).max_by(|&a, &b| column[a].norm().total_cmp(&column[b].norm()))?;
                let ok = column.iter().enumerate().all(|(r, v)| {
                    let expected = if r == row { 1.0 } else { 0.0 };
                    (v - Complex64::new(expected, 0.0)).norm() <= tol
                });
                ok.then_some(row)
            })
            .collect()
    }
}

/// Product of the gate unitaries; column j is the image of basis state j.
pub fn full_unitary(circuit: &Circuit) -> Result<Unitary, SemanticsError> {
    let n = circuit.n_qubits();
    if n > MAX_DENSE_QUBITS {
        return Err(SemanticsError::TooLarge {
            n_qubits: n,
            max: MAX_DENSE_QUBITS,
        });
    }
    let dim = 1usize << n;
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let out = simulate_basis(circuit, col as u128)?;
        for (row, amp) in out.support() {
            data[col * dim + row as usize] = amp;
        }
    }
    Ok(Unitary { dim, data })
}
