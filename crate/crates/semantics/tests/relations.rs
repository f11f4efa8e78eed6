use circuit_core::{Circuit, Gate, GateKind};
use proptest::prelude::*;
use semantics::{
    check_claimed_mapping, circuit_permutation, classical_ripple_add, full_unitary,
    gate_permutation, simulate_permutation, simulate_statevector, PermutationTable, Statevector,
};

fn table_of(gates: Vec<Gate>) -> PermutationTable {
    circuit_permutation(&Circuit::from_gates(3, gates).unwrap()).unwrap()
}

#[test]
fn peres_then_cnot_is_toffoli() {
    let lhs = table_of(vec![Gate::peres(0, 1, 2), Gate::cnot(0, 1)]);
    assert_eq!(lhs, gate_permutation(GateKind::Toffoli).unwrap());
}

#[test]
fn cnot_then_tr_is_toffoli() {
    let lhs = table_of(vec![Gate::cnot(0, 1), Gate::tr(0, 1, 2)]);
    assert_eq!(lhs, gate_permutation(GateKind::Toffoli).unwrap());
}

#[test]
fn peres_and_tr_compose_to_identity() {
    let p = gate_permutation(GateKind::Peres).unwrap();
    let tr = gate_permutation(GateKind::Tr).unwrap();
    assert!(p.then(&tr).is_identity());
    assert!(tr.then(&p).is_identity());
}

#[test]
fn peres_table_follows_from_toffoli_and_cnot() {
    // Peres·CNOT(q1→q2) = Toffoli and CNOT is an involution, so
    // Peres = Toffoli followed by CNOT(q1→q2).
    let toffoli = gate_permutation(GateKind::Toffoli).unwrap();
    let cnot12 = PermutationTable::from_fn(3, |x| x ^ ((x & 1) << 1)).unwrap();
    let derived = toffoli.then(&cnot12);
    assert_eq!(derived, gate_permutation(GateKind::Peres).unwrap());
    // |a,b,c> = |1,1,0> (bit 0 = a) goes to |1,0,1>
    assert_eq!(derived.apply(0b011), 0b101);
}

#[test]
fn tr2_claim_fails_exactly_where_a_differs_from_b() {
    // States are |C,B,A>. The gate keeps B, sends A to A⊕B and C to C⊕ĀB:
    // that is TR with operands (q1, q2, q3) = (B, A, C).
    let local = |a: usize, b: usize, c: usize| b | (a << 1) | (c << 2);
    let claimed = PermutationTable::from_fn(3, |x| {
        let (b, a, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        local(a ^ b, b, c ^ (a & (1 - b)))
    })
    .unwrap();
    let bad = check_claimed_mapping(GateKind::Tr, &claimed).unwrap();
    assert_eq!(bad.len(), 4);
    for x in &bad {
        let (b, a) = (x & 1, (x >> 1) & 1);
        assert_ne!(a, b);
    }
    let c_values: Vec<usize> = bad.iter().map(|x| x >> 2).collect();
    assert_eq!(c_values.iter().filter(|&&c| c == 0).count(), 2);
}

#[test]
fn peres_differs_from_toffoli_whenever_first_operand_is_set() {
    let toffoli = gate_permutation(GateKind::Toffoli).unwrap();
    let bad = check_claimed_mapping(GateKind::Peres, &toffoli).unwrap();
    assert_eq!(bad, vec![0b001, 0b011, 0b101, 0b111]);
}

#[test]
fn toffoli_reached_from_basis_110() {
    let t = gate_permutation(GateKind::Toffoli).unwrap();
    assert_eq!(t.apply(0b011), 0b111);
}

fn classical_gate(n: usize) -> impl Strategy<Value = Gate> {
    let q = 0..n;
    prop_oneof![
        q.clone().prop_map(Gate::x),
        (q.clone(), 1..n).prop_map(move |(c, o)| Gate::cnot(c, (c + o) % n)),
        (q.clone(), 1..n, 1..n - 1).prop_map(move |(a, o1, o2)| {
            let b = (a + o1) % n;
            let rest: Vec<usize> = (0..n).filter(|&w| w != a && w != b).collect();
            let c = rest[(o2 - 1) % rest.len()];
            match (a + b + c) % 3 {
                0 => Gate::toffoli(a, b, c),
                1 => Gate::peres(a, b, c),
                _ => Gate::tr(a, b, c),
            }
        }),
    ]
}

fn clifford_t_gate(n: usize) -> impl Strategy<Value = Gate> {
    let q = 0..n;
    prop_oneof![
        q.clone().prop_map(Gate::h),
        q.clone().prop_map(Gate::t),
        q.clone().prop_map(Gate::tdg),
        classical_gate(n),
    ]
}

proptest! {
    #[test]
    fn ripple_add_matches_integer_addition(n in 1usize..=8, a in any::<u64>(), b in any::<u64>()) {
        let mask = (1u128 << n) - 1;
        let (a, b) = (a as u128 & mask, b as u128 & mask);
        let r = classical_ripple_add(a, b, n).unwrap();
        prop_assert_eq!(r.sum(), a + b);
        prop_assert!(!r.c[0]);
        prop_assert_eq!(r.c.len(), n + 1);
    }

    #[test]
    fn classical_unitary_is_the_permutation(
        gates in prop::collection::vec(classical_gate(5), 0..30),
    ) {
        let c = Circuit::from_gates(5, gates).unwrap();
        let u = full_unitary(&c).unwrap();
        let perm = u.as_permutation(1e-12).expect("0/1 permutation matrix");
        for (x, y) in perm.into_iter().enumerate() {
            prop_assert_eq!(simulate_permutation(&c, x as u128).unwrap(), y as u128);
        }
    }

    #[test]
    fn norm_is_preserved(
        gates in prop::collection::vec(clifford_t_gate(6), 0..400),
        input in 0usize..64,
    ) {
        let c = Circuit::from_gates(6, gates).unwrap();
        let out = simulate_statevector(&c, &Statevector::basis(6, input).unwrap()).unwrap();
        prop_assert!((out.norm_sqr() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn norm_survives_ten_thousand_gates() {
    let n = 6;
    let mut gates = Vec::with_capacity(10_000);
    for i in 0..10_000usize {
        let q = (i * 7 + i / 3) % n;
        gates.push(match i % 5 {
            0 => Gate::h(q),
            1 => Gate::t(q),
            2 => Gate::cnot(q, (q + 1 + i % (n - 1)) % n),
            3 => Gate::tdg(q),
            _ => Gate::toffoli(q, (q + 1) % n, (q + 2) % n),
        });
    }
    let c = Circuit::from_gates(n, gates).unwrap();
    let out = simulate_statevector(&c, &Statevector::basis(n, 5).unwrap()).unwrap();
    assert!((out.norm_sqr() - 1.0).abs() < 1e-9);
}
