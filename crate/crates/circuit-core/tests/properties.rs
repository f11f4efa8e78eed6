use circuit_core::{build_dag, concat, metrics, reverse, Circuit, Gate};
use proptest::prelude::*;

fn clifford_t_gate(n_qubits: usize) -> impl Strategy<Value = Gate> {
    let q = 0..n_qubits;
    prop_oneof![
        q.clone().prop_map(Gate::x),
        q.clone().prop_map(Gate::h),
        q.clone().prop_map(Gate::t),
        q.clone().prop_map(Gate::tdg),
        (q.clone(), 1..n_qubits).prop_map(move |(c, off)| Gate::cnot(c, (c + off) % n_qubits)),
    ]
}

fn circuit(max_qubits: usize, max_gates: usize) -> impl Strategy<Value = Circuit> {
    (2..=max_qubits).prop_flat_map(move |n| {
        prop::collection::vec(clifford_t_gate(n), 0..=max_gates)
            .prop_map(move |gates| Circuit::from_gates(n, gates).unwrap())
    })
}

fn pair(max_qubits: usize, max_gates: usize) -> impl Strategy<Value = (Circuit, Circuit)> {
    (2..=max_qubits).prop_flat_map(move |n| {
        let gates = || prop::collection::vec(clifford_t_gate(n), 0..=max_gates);
        (gates(), gates()).prop_map(move |(g1, g2)| {
            (
                Circuit::from_gates(n, g1).unwrap(),
                Circuit::from_gates(n, g2).unwrap(),
            )
        })
    })
}

/// Some topological order of the DAG, chosen by `picks`.
fn shuffled(c: &Circuit, picks: &[usize]) -> Circuit {
    let dag = build_dag(c);
    let mut indegree: Vec<usize> = (0..c.len()).map(|v| dag.preds(v).len()).collect();
    let mut ready: Vec<usize> = (0..c.len()).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::new();
    let mut step = 0;
    while !ready.is_empty() {
        let pick = picks.get(step).copied().unwrap_or(0) % ready.len();
        step += 1;
        let v = ready.swap_remove(pick);
        order.push(c.gates()[v].clone());
        for &w in dag.succs(v) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    Circuit::from_gates(c.n_qubits(), order).unwrap()
}

/// Minimum number of layers, each a set of disjoint-support gates, that
/// keeps the relative order of gates sharing a wire. Exhaustive search.
fn brute_force_layers(c: &Circuit) -> usize {
    fn fits(c: &Circuit, layer: &mut Vec<usize>, i: usize, limit: usize) -> bool {
        if i == c.len() {
            return true;
        }
        let floor = (0..i)
            .filter(|&j| {
                c.gates()[j]
                    .qubits()
                    .iter()
                    .any(|q| c.gates()[i].acts_on(*q))
            })
            .map(|j| layer[j] + 1)
            .max()
            .unwrap_or(1);
        for l in floor..=limit {
            layer[i] = l;
            if fits(c, layer, i + 1, limit) {
                return true;
            }
        }
        false
    }
    if c.is_empty() {
        return 0;
    }
    let mut layer = vec![0; c.len()];
    (1..=c.len())
        .find(|&limit| fits(c, &mut layer, 0, limit))
        .unwrap()
}

proptest! {
    #[test]
    fn counts_add_and_depths_are_bracketed((c1, c2) in pair(5, 25)) {
        let m1 = metrics(&c1).unwrap();
        let m2 = metrics(&c2).unwrap();
        let m = metrics(&concat(&c1, &c2).unwrap()).unwrap();
        prop_assert_eq!(m.t_count, m1.t_count + m2.t_count);
        prop_assert_eq!(m.cnot_count, m1.cnot_count + m2.cnot_count);
        prop_assert_eq!(m.total_gate_count, m1.total_gate_count + m2.total_gate_count);
        for (d, d1, d2) in [
            (m.t_depth, m1.t_depth, m2.t_depth),
            (m.cnot_depth, m1.cnot_depth, m2.cnot_depth),
            (m.total_depth, m1.total_depth, m2.total_depth),
        ] {
            prop_assert!(d1.max(d2) <= d && d <= d1 + d2);
        }
    }

    #[test]
    fn report_invariants_hold(c in circuit(6, 40)) {
        let m = metrics(&c).unwrap();
        prop_assert!(m.t_depth <= m.t_count);
        prop_assert!(m.cnot_depth <= m.cnot_count);
        prop_assert!(m.total_depth <= m.total_gate_count);
    }

    #[test]
    fn depths_survive_dag_preserving_reordering(
        c in circuit(5, 30),
        picks in prop::collection::vec(0usize..1000, 30),
    ) {
        let m = metrics(&c).unwrap();
        let s = metrics(&shuffled(&c, &picks)).unwrap();
        prop_assert_eq!(m, s);
    }

    #[test]
    fn reverse_preserves_metrics(c in circuit(6, 40)) {
        prop_assert_eq!(metrics(&reverse(&c).unwrap()).unwrap(), metrics(&c).unwrap());
    }

    #[test]
    fn reverse_is_an_involution(c in circuit(6, 40)) {
        prop_assert_eq!(reverse(&reverse(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn total_depth_is_minimal_layering(c in circuit(4, 12)) {
        prop_assert_eq!(metrics(&c).unwrap().total_depth, brute_force_layers(&c));
    }
}

#[test]
fn concat_with_empty_is_identity() {
    let c = Circuit::from_gates(2, vec![Gate::t(0), Gate::cnot(0, 1)]).unwrap();
    assert_eq!(concat(&c, &Circuit::empty(2)).unwrap(), c);
}

#[test]
fn t_then_tdg_on_one_wire_serializes() {
    let a = Circuit::from_gates(1, vec![Gate::t(0)]).unwrap();
    let b = Circuit::from_gates(1, vec![Gate::tdg(0)]).unwrap();
    let m = metrics(&concat(&a, &b).unwrap()).unwrap();
    assert_eq!((m.t_count, m.t_depth), (2, 2));
}
