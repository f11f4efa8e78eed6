use circuit_core::Circuit;
use cliffordt::{compile_with, TemplateSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semantics::{
    classical_ripple_add, compare_le, decode, encode, simulate_basis, simulate_permutation,
    RegisterValues,
};
use synthesis::{build, Family};

use crate::error::VerifyError;
use crate::report::{Failure, Registers, VerifyMode, VerifyReport};

/// Largest register swept exhaustively, in wires.
pub const MAX_EXHAUSTIVE_BITS: usize = 13;

/// Seed used by [`Strategy::random`].
pub const DEFAULT_SEED: u64 = 0x5EED_ADD3_2021;

/// Amplitude a compiled circuit must place on the predicted output.
pub const AMPLITUDE_THRESHOLD: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every (a, b, z) with the ancilla at 0.
    Exhaustive,
    Random {
        samples: usize,
        seed: u64,
    },
}

impl Strategy {
    pub fn random(samples: usize) -> Strategy {
        Strategy::Random {
            samples,
            seed: DEFAULT_SEED,
        }
    }
}

fn registers(v: RegisterValues) -> Registers {
    Registers {
        a: v.a,
        b: v.b,
        z: v.z,
        ancilla: v.ancilla,
    }
}

/// What the family must produce on a clean input.
pub fn expected_output(family: Family, n: usize, input: RegisterValues) -> RegisterValues {
    if family.is_adder() {
        let carries = classical_ripple_add(input.a, input.b, n).expect("operands fit in n bits");
        RegisterValues {
            b: carries.sum() & ((1u128 << n) - 1),
            z: input.z ^ carries.carry_out(),
            ..input
        }
    } else {
        RegisterValues {
            z: input.z ^ compare_le(input.a, input.b),
            ..input
        }
    }
}

fn inputs(n: usize, strategy: Strategy) -> Vec<RegisterValues> {
    let clean = |a, b, z| RegisterValues {
        a,
        b,
        z,
        ancilla: false,
    };
    match strategy {
        Strategy::Exhaustive => {
            let mut all = Vec::with_capacity(1 << (2 * n + 1));
            for a in 0..1u128 << n {
                for b in 0..1u128 << n {
                    for z in [false, true] {
                        all.push(clean(a, b, z));
                    }
                }
            }
            all
        }
        Strategy::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mask = if n >= 128 {
                u128::MAX
            } else {
                (1u128 << n) - 1
            };
            (0..samples)
                .map(|_| {
                    clean(
                        rng.gen::<u128>() & mask,
                        rng.gen::<u128>() & mask,
                        rng.gen(),
                    )
                })
                .collect()
        }
    }
}

/// Checks a family against the integer oracle on basis inputs.
pub fn verify_functional(
    family: Family,
    n: usize,
    mode: VerifyMode,
    strategy: Strategy,
) -> Result<VerifyReport, VerifyError> {
    verify_functional_with(family, n, mode, strategy, TemplateSet::standard())
}

pub fn verify_functional_with(
    family: Family,
    n: usize,
    mode: VerifyMode,
    strategy: Strategy,
    templates: &TemplateSet,
) -> Result<VerifyReport, VerifyError> {
    let high = build(family, n)?;
    let circuit = match mode.compile_mode() {
        Some(m) => compile_with(&high, m, templates).circuit,
        None => high,
    };
    verify_circuit(&circuit, family, n, mode, strategy)
}

/// Checks an already built circuit against the oracle of `family` at
/// width `n`. High-level mode simulates permutations; compiled modes run
/// the sparse statevector simulator.
pub fn verify_circuit(
    circuit: &Circuit,
    family: Family,
    n: usize,
    mode: VerifyMode,
    strategy: Strategy,
) -> Result<VerifyReport, VerifyError> {
    if strategy == Strategy::Exhaustive && circuit.n_qubits() > MAX_EXHAUSTIVE_BITS {
        return Err(VerifyError::TooLargeForExhaustive {
            wires: circuit.n_qubits(),
            max: MAX_EXHAUSTIVE_BITS,
        });
    }
    let check = match strategy {
        Strategy::Exhaustive => "exhaustive",
        Strategy::Random { .. } => "random",
    };
    let mut report = VerifyReport::new(family, n, mode, check);
    if let Strategy::Random { seed, .. } = strategy {
        report.seed = Some(seed);
    }
    for input in inputs(n, strategy) {
        let expected = expected_output(family, n, input);
        report.checks_run += 1;
        if let Some(failure) = run_one(circuit, mode, input, expected)? {
            report.failures.push(failure);
        }
    }
    Ok(report.finish())
}

fn run_one(
    circuit: &Circuit,
    mode: VerifyMode,
    input: RegisterValues,
    expected: RegisterValues,
) -> Result<Option<Failure>, VerifyError> {
    let start = encode(circuit, input)?;
    let target = encode(circuit, expected)?;
    let (got, amplitude) = if mode == VerifyMode::HighLevel {
        let out = simulate_permutation(circuit, start)?;
        (out, if out == target { 1.0 } else { 0.0 })
    } else {
        let out = simulate_basis(circuit, start)?;
        let likely = out
            .support()
            .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
            .map_or(start, |(state, _)| state);
        (likely, out.amplitude(target).norm())
    };
    if amplitude > AMPLITUDE_THRESHOLD {
        return Ok(None);
    }
    Ok(Some(Failure {
        input: registers(input),
        expected: registers(expected),
        got: registers(decode(circuit, got)),
        amplitude,
    }))
}
