//! Exit criteria. Each test prints one PASS/FAIL line on stderr (bypassing
//! output capture) and then asserts the same verdict.

use std::io::Write;
use std::time::{Duration, Instant};

use circuit_core::{metrics, Circuit, Gate, GateKind, MetricReport};
use cliffordt::{
    cancel_pairs, cascade_metrics_formula, cascade_reduced, cascade_unreduced,
    measure as cascade_cost, CascadeCost, CascadeShape,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semantics::{
    check_claimed_mapping, circuit_permutation, full_unitary, gate_permutation, PermutationTable,
};
use synthesis::Family;
use verify_bench::{
    compare_row, find_row, verify_functional, verify_unitary, Relation, Strategy, VerifyMode,
    VerifyReport,
};

const TABLE_NS: [usize; 4] = [4, 6, 8, 16];
const FUNCTIONAL_NS: [usize; 4] = [2, 3, 4, 5];
const UNITARY_NS: [usize; 2] = [2, 3];
const CASCADE_LAYERS: std::ops::RangeInclusive<usize> = 1..=10;
const COUNTS_BUDGET: Duration = Duration::from_secs(5);
const FUNCTIONAL_BUDGET: Duration = Duration::from_secs(120);
const CANCEL_TOL: f64 = 1e-10;
const CANCEL_CIRCUITS: u64 = 200;
const CANCEL_MAX_GATES: usize = 40;
const CANCEL_MAX_QUBITS: usize = 6;

const ADDER_ROWS: [&str; 5] = [
    "cdkm-shallow optimized",
    "cdkm-compact optimized",
    "ttk-adder optimized",
    "cdkm-shallow naive",
    "ttk-adder naive",
];
const COMPARATOR_ROWS: [&str; 4] = [
    "cdkm-comparator optimized",
    "ttk-comparator optimized",
    "cdkm-comparator naive",
    "ttk-comparator naive",
];

fn verdict(id: u32, title: &str, problems: &[String]) {
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    let detail = if problems.is_empty() {
        String::new()
    } else {
        format!(" | {}", problems.join("; "))
    };
    let _ = writeln!(
        std::io::stderr(),
        "acceptance {id} | {title} | {status}{detail}"
    );
    assert!(
        problems.is_empty(),
        "criterion {id} failed: {}",
        problems.join("; ")
    );
}

fn row_reports(labels: &[&str]) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for label in labels {
        let row = find_row(label).unwrap_or_else(|| panic!("no row {label}"));
        for n in TABLE_NS {
            out.push(compare_row(row, n).unwrap().expect("measured row"));
        }
    }
    out
}

fn count_problems(reports: &[VerifyReport]) -> Vec<String> {
    let mut problems = Vec::new();
    for r in reports {
        let m = r.metrics.as_ref().unwrap();
        if m.measured.t_count != m.formula.t_count {
            problems.push(format!(
                "{} n={}: T-count {} vs {}",
                m.label, r.n, m.measured.t_count, m.formula.t_count
            ));
        }
        if m.measured.cnot_count != m.formula.cnot_count {
            problems.push(format!(
                "{} n={}: CNOT-count {} vs {}",
                m.label, r.n, m.measured.cnot_count, m.formula.cnot_count
            ));
        }
    }
    problems
}

#[test]
fn adder_counts_match_formulas() {
    let start = Instant::now();
    let mut problems = count_problems(&row_reports(&ADDER_ROWS));
    if start.elapsed() > COUNTS_BUDGET {
        problems.push(format!("took {:?}", start.elapsed()));
    }
    verdict(1, "adder T-count and CNOT-count", &problems);
}

#[test]
fn comparator_counts_match_formulas() {
    verdict(
        2,
        "comparator T-count and CNOT-count",
        &count_problems(&row_reports(&COMPARATOR_ROWS)),
    );
}

#[test]
fn depths_stay_within_formulas() {
    let labels: Vec<&str> = ADDER_ROWS.iter().chain(&COMPARATOR_ROWS).copied().collect();
    let mut problems = Vec::new();
    let mut exact = Vec::new();
    for r in row_reports(&labels) {
        let m = r.metrics.unwrap();
        exact.push(format!(
            "{} n={} T-depth {} CNOT-depth {}",
            m.label, r.n, m.measured.t_depth, m.measured.cnot_depth
        ));
        if m.relation.t_depth == Relation::Greater {
            problems.push(format!(
                "{} n={}: T-depth {} > {}",
                m.label, r.n, m.measured.t_depth, m.formula.t_depth
            ));
        }
        if m.relation.cnot_depth == Relation::Greater {
            problems.push(format!(
                "{} n={}: CNOT-depth {} > {}",
                m.label, r.n, m.measured.cnot_depth, m.formula.cnot_depth
            ));
        }
    }
    let _ = writeln!(
        std::io::stderr(),
        "acceptance 3 | measured depths: {}",
        exact.join(", ")
    );
    verdict(3, "T-depth and CNOT-depth bounds", &problems);
}

#[test]
fn every_family_is_functionally_correct() {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut cases = 0;
    for family in Family::ALL {
        for n in FUNCTIONAL_NS {
            for mode in VerifyMode::ALL {
                let report = verify_functional(family, n, mode, Strategy::Exhaustive).unwrap();
                cases += report.checks_run;
                if report.checks_run != 1 << (2 * n + 1) || !report.pass {
                    problems.push(format!(
                        "{family} n={n} {mode}: {} failures",
                        report.failures.len()
                    ));
                }
            }
        }
    }
    if start.elapsed() > FUNCTIONAL_BUDGET {
        problems.push(format!("took {:?}", start.elapsed()));
    }
    verdict(
        4,
        &format!("exhaustive oracle sweep ({cases} cases)"),
        &problems,
    );
}

#[test]
fn compiled_unitaries_agree() {
    let mut problems = Vec::new();
    for family in Family::ALL {
        for n in UNITARY_NS {
            let report = verify_unitary(family, n).unwrap();
            if !report.pass {
                problems.push(format!(
                    "{family} n={n}: deviation {:e}",
                    report.max_deviation.unwrap()
                ));
            }
        }
    }
    verdict(5, "unitary equivalence of the three forms", &problems);
}

fn on_three(gates: Vec<Gate>) -> PermutationTable {
    circuit_permutation(&Circuit::from_gates(3, gates).unwrap()).unwrap()
}

#[test]
fn gate_relations_hold() {
    let mut problems = Vec::new();
    let toffoli = gate_permutation(GateKind::Toffoli).unwrap();
    if on_three(vec![Gate::peres(0, 1, 2), Gate::cnot(0, 1)]) != toffoli {
        problems.push("Peres then CNOT is not Toffoli".into());
    }
    if on_three(vec![Gate::cnot(0, 1), Gate::tr(0, 1, 2)]) != toffoli {
        problems.push("CNOT then TR is not Toffoli".into());
    }
    if !on_three(vec![Gate::peres(0, 1, 2), Gate::tr(0, 1, 2)]).is_identity() {
        problems.push("Peres then TR is not the identity".into());
    }
    // claimed |C,B,A> -> |A B̄ ⊕ C, B, A ⊕ B>, operands (q1, q2, q3) = (B, A, C)
    let claimed = PermutationTable::from_fn(3, |x| {
        let (b, a, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        b | ((a ^ b) << 1) | ((c ^ (a & (1 - b))) << 2)
    })
    .unwrap();
    let bad = check_claimed_mapping(GateKind::Tr, &claimed).unwrap();
    let a_ne_b = bad.iter().all(|x| (x & 1) != ((x >> 1) & 1));
    let both_c = bad.iter().any(|x| x >> 2 == 0) && bad.iter().any(|x| x >> 2 == 1);
    if bad.len() != 4 || !a_ne_b || !both_c {
        problems.push(format!("claimed TR mapping mismatches at {bad:?}"));
    }
    verdict(6, "gate relations", &problems);
}

#[test]
fn cascade_formulas_hold() {
    let mut problems = Vec::new();
    let left = cascade_cost(&cascade_reduced(CascadeShape::ToffoliLeft, 2));
    if left != CascadeCost::new(5, 14, 11, 14) {
        problems.push(format!("two-layer Toffoli cascade measured {left}"));
    }
    let right = cascade_cost(&cascade_reduced(CascadeShape::PeresRight, 2));
    if right != CascadeCost::new(5, 14, 9, 10) {
        problems.push(format!("two-layer Peres cascade measured {right}"));
    }
    for k in CASCADE_LAYERS {
        let tp = cascade_cost(&cascade_reduced(CascadeShape::VToffPeres, k));
        if tp.t_count != 12 * k
            || !tp.within(&cascade_metrics_formula(CascadeShape::VToffPeres, k).reduced)
        {
            problems.push(format!("Toffoli/Peres V k={k}: {tp}"));
        }
        let before = cascade_cost(&cascade_unreduced(CascadeShape::VToffToff, k));
        let after = cascade_cost(&cascade_reduced(CascadeShape::VToffToff, k));
        if before.t_count - after.t_count != 4 * k || before.cnot_count - after.cnot_count != 4 * k
        {
            problems.push(format!("Toffoli/Toffoli V k={k}: {before} -> {after}"));
        }
    }
    verdict(7, "cascade closed forms", &problems);
}

fn random_clifford_t(rng: &mut ChaCha8Rng) -> Circuit {
    let n = rng.gen_range(2..=CANCEL_MAX_QUBITS);
    let len = rng.gen_range(0..=CANCEL_MAX_GATES);
    let gates = (0..len)
        .map(|_| {
            let q = rng.gen_range(0..n);
            match rng.gen_range(0..5) {
                0 => Gate::h(q),
                1 => Gate::t(q),
                2 => Gate::tdg(q),
                3 => Gate::x(q),
                _ => Gate::cnot(q, (q + rng.gen_range(1..n)) % n),
            }
        })
        .collect();
    Circuit::from_gates(n, gates).unwrap()
}

fn grew(after: &MetricReport, before: &MetricReport) -> bool {
    after.t_count > before.t_count
        || after.t_depth > before.t_depth
        || after.cnot_count > before.cnot_count
        || after.cnot_depth > before.cnot_depth
        || after.total_gate_count > before.total_gate_count
        || after.total_depth > before.total_depth
}

#[test]
fn cancellation_is_sound() {
    let mut problems = Vec::new();
    for seed in 0..CANCEL_CIRCUITS {
        let c = random_clifford_t(&mut ChaCha8Rng::seed_from_u64(seed));
        let out = cancel_pairs(&c);
        let dev = full_unitary(&c)
            .unwrap()
            .max_abs_diff(&full_unitary(&out).unwrap());
        if dev > CANCEL_TOL {
            problems.push(format!("seed {seed}: deviation {dev:e}"));
        }
        if grew(&metrics(&out).unwrap(), &metrics(&c).unwrap()) {
            problems.push(format!("seed {seed}: a metric increased"));
        }
    }
    verdict(8, "pair cancellation soundness", &problems);
}
