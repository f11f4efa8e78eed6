use circuit_core::{metrics, GateKind};
use cliffordt::{compile, CompileMode};
use semantics::{full_unitary, EQ_TOL};
use synthesis::{build, Family};

const MODES: [CompileMode; 2] = [CompileMode::Naive, CompileMode::Optimized];

#[test]
fn compilation_preserves_the_unitary() {
    for family in Family::ALL {
        for n in 1..=3 {
            let high = build(family, n).unwrap();
            let reference = full_unitary(&high).unwrap();
            assert!(reference.as_permutation(1e-12).is_some());
            for mode in MODES {
                let out = compile(&high, mode);
                assert!(!out.fell_back);
                let dev = full_unitary(&out.circuit).unwrap().max_abs_diff(&reference);
                assert!(dev <= EQ_TOL, "{family} n={n} {mode}: deviation {dev:e}");
            }
        }
    }
}

#[test]
fn output_alphabet_is_clifford_t() {
    for family in Family::ALL {
        for mode in MODES {
            let out = compile(&build(family, 5).unwrap(), mode).circuit;
            assert!(out.gates().iter().all(|g| matches!(
                g.kind(),
                GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg | GateKind::Cnot
            )));
        }
    }
}

#[test]
fn optimized_never_costs_more() {
    for family in Family::ALL {
        for n in 2..=16 {
            let high = build(family, n).unwrap();
            let naive = metrics(&compile(&high, CompileMode::Naive).circuit).unwrap();
            let opt = metrics(&compile(&high, CompileMode::Optimized).circuit).unwrap();
            assert!(opt.t_count <= naive.t_count, "{family} n={n}");
            assert!(opt.cnot_count <= naive.cnot_count, "{family} n={n}");
        }
    }
}

#[test]
fn shallow_adder_at_six_bits() {
    let n = 6;
    let m = metrics(
        &compile(
            &build(Family::CdkmShallow, n).unwrap(),
            CompileMode::Optimized,
        )
        .circuit,
    )
    .unwrap();
    assert_eq!(m.t_count, 12 * n - 5);
    assert_eq!(m.cnot_count, 16 * n - 10);
    assert!(m.t_depth <= 3 * n + 2);
    assert!(m.cnot_depth <= 8 * n + 2);
}

#[test]
fn segments_survive_compilation() {
    let high = build(Family::TtkAdder, 4).unwrap();
    let out = compile(&high, CompileMode::Optimized).circuit;
    let tags = |c: &circuit_core::Circuit| c.segments().iter().map(|s| s.tag).collect::<Vec<_>>();
    assert_eq!(tags(&out), tags(&high));
    let last = out.segments().last().unwrap();
    assert_eq!(last.to, out.len());
}
