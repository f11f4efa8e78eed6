use crate::circuit::Circuit;

/// Dependency DAG over gate indices. An edge u→v means v is the next gate
/// after u on at least one shared wire; gate order is a topological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
}

impl Dag {
    pub fn len(&self) -> usize {
        self.preds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preds.is_empty()
    }

    pub fn preds(&self, v: usize) -> &[usize] {
        &self.preds[v]
    }

    pub fn succs(&self, u: usize) -> &[usize] {
        &self.succs[u]
    }

    pub fn edge_count(&self) -> usize {
        self.preds.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.preds
            .iter()
            .enumerate()
            .flat_map(|(v, ps)| ps.iter().map(move |&u| (u, v)))
    }

    /// Longest path where each node on the path contributes `weight(node)`.
    pub fn longest_path(&self, weight: impl Fn(usize) -> usize) -> usize {
        let mut depth = vec![0usize; self.len()];
        let mut best = 0;
        for v in 0..self.len() {
            let start = self.preds[v].iter().map(|&u| depth[u]).max().unwrap_or(0);
            depth[v] = start + weight(v);
            best = best.max(depth[v]);
        }
        best
    }
}

pub fn build_dag(circuit: &Circuit) -> Dag {
    let n = circuit.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut last_on_wire: Vec<Option<usize>> = vec![None; circuit.n_qubits()];
    for (v, gate) in circuit.gates().iter().enumerate() {
        for &q in gate.qubits() {
            if let Some(u) = last_on_wire[q] {
                if !preds[v].contains(&u) {
                    preds[v].push(u);
                    succs[u].push(v);
                }
            }
            last_on_wire[q] = Some(v);
        }
    }
    Dag { preds, succs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::Gate;

    #[test]
    fn same_wire_gates_chain() {
        let c = Circuit::from_gates(2, vec![Gate::cnot(0, 1); 3]).unwrap();
        let dag = build_dag(&c);
        assert_eq!(dag.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn disjoint_gates_are_independent() {
        let c = Circuit::from_gates(4, vec![Gate::cnot(0, 1), Gate::cnot(2, 3)]).unwrap();
        assert_eq!(build_dag(&c).edge_count(), 0);
    }

    #[test]
    fn edges_skip_over_later_gates() {
        // gate 2 touches wire 0 after gate 1, so gate 0 only links to gate 1
        let c = Circuit::from_gates(2, vec![Gate::x(0), Gate::cnot(0, 1), Gate::x(0)]).unwrap();
        let dag = build_dag(&c);
        assert_eq!(dag.preds(2), &[1]);
        assert_eq!(dag.succs(0), &[1]);
    }
}
