use std::fmt;
use std::str::FromStr;

use cliffordt::CompileMode;
use serde::{Serialize, Serializer};
use synthesis::Family;

/// Which form of a circuit is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifyMode {
    /// The reversible circuit, simulated as a permutation.
    HighLevel,
    Naive,
    Optimized,
}

impl VerifyMode {
    pub const ALL: [VerifyMode; 3] = [
        VerifyMode::HighLevel,
        VerifyMode::Naive,
        VerifyMode::Optimized,
    ];

    pub fn compile_mode(self) -> Option<CompileMode> {
        match self {
            VerifyMode::HighLevel => None,
            VerifyMode::Naive => Some(CompileMode::Naive),
            VerifyMode::Optimized => Some(CompileMode::Optimized),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VerifyMode::HighLevel => "high-level",
            VerifyMode::Naive => "naive",
            VerifyMode::Optimized => "optimized",
        }
    }
}

impl From<CompileMode> for VerifyMode {
    fn from(mode: CompileMode) -> Self {
        match mode {
            CompileMode::Naive => VerifyMode::Naive,
            CompileMode::Optimized => VerifyMode::Optimized,
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VerifyMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode '{s}' (expected high-level, naive or optimized)"))
    }
}

impl Serialize for VerifyMode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

pub(crate) fn serialize_family<S: Serializer>(family: &Family, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(family.name())
}

/// Register contents of one basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Registers {
    pub a: u128,
    pub b: u128,
    pub z: bool,
    pub ancilla: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub input: Registers,
    pub expected: Registers,
    /// Most likely output basis state.
    pub got: Registers,
    /// Magnitude of the output amplitude on the expected state.
    pub amplitude: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn of(measured: i64, formula: i64) -> Relation {
        match measured.cmp(&formula) {
            std::cmp::Ordering::Less => Relation::Less,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Greater => Relation::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// The four table columns, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Costs {
    pub cnot_depth: i64,
    pub cnot_count: i64,
    pub t_depth: i64,
    pub t_count: i64,
}

impl Costs {
    pub fn from_report(m: &circuit_core::MetricReport) -> Costs {
        Costs {
            cnot_depth: m.cnot_depth as i64,
            cnot_count: m.cnot_count as i64,
            t_depth: m.t_depth as i64,
            t_count: m.t_count as i64,
        }
    }
}

impl fmt::Display for Costs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.cnot_depth, self.cnot_count, self.t_depth, self.t_count
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Relations {
    pub cnot_depth: Relation,
    pub cnot_count: Relation,
    pub t_depth: Relation,
    pub t_count: Relation,
}

impl Relations {
    pub fn between(measured: &Costs, formula: &Costs) -> Relations {
        Relations {
            cnot_depth: Relation::of(measured.cnot_depth, formula.cnot_depth),
            cnot_count: Relation::of(measured.cnot_count, formula.cnot_count),
            t_depth: Relation::of(measured.t_depth, formula.t_depth),
            t_count: Relation::of(measured.t_count, formula.t_count),
        }
    }

    /// Counts exact, depths at most the formula.
    pub fn acceptable(&self) -> bool {
        self.cnot_count == Relation::Equal
            && self.t_count == Relation::Equal
            && self.cnot_depth != Relation::Greater
            && self.t_depth != Relation::Greater
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricComparison {
    pub label: String,
    pub formula: Costs,
    pub measured: Costs,
    pub relation: Relations,
}

/// Outcome of one verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    #[serde(serialize_with = "serialize_family")]
    pub family: Family,
    pub n: usize,
    pub mode: VerifyMode,
    pub check: String,
    pub checks_run: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<MetricComparison>,
    pub pass: bool,
}

impl VerifyReport {
    pub(crate) fn new(family: Family, n: usize, mode: VerifyMode, check: &str) -> VerifyReport {
        VerifyReport {
            family,
            n,
            mode,
            check: check.to_string(),
            checks_run: 0,
            failures: Vec::new(),
            seed: None,
            max_deviation: None,
            metrics: None,
            pass: false,
        }
    }

    /// Recomputes `pass` from the collected evidence.
    pub(crate) fn finish(mut self) -> VerifyReport {
        self.pass = self.failures.is_empty()
            && self.max_deviation.is_none_or(|d| d <= semantics::EQ_TOL)
            && self
                .metrics
                .as_ref()
                .is_none_or(|m| m.relation.acceptable());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
