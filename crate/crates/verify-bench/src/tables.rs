use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use circuit_core::metrics;
use cliffordt::{compile, CompileMode};
use serde::Serialize;
use synthesis::{build, Family};

use crate::error::VerifyError;
use crate::report::{Costs, MetricComparison, Relations, VerifyMode, VerifyReport};

pub const MIN_TABLE_N: usize = 2;
pub const MAX_TABLE_N: usize = 64;

/// `coefficient * n + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub coefficient: i64,
    pub constant: i64,
}

impl Affine {
    pub const fn new(coefficient: i64, constant: i64) -> Affine {
        Affine {
            coefficient,
            constant,
        }
    }

    pub fn eval(&self, n: usize) -> i64 {
        self.coefficient * n as i64 + self.constant
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constant {
            0 => write!(f, "{}n", self.coefficient),
            c if c > 0 => write!(f, "{}n+{c}", self.coefficient),
            c => write!(f, "{}n-{}", self.coefficient, -c),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Adders,
    Comparators,
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adders" => Ok(Which::Adders),
            "comparators" => Ok(Which::Comparators),
            other => Err(format!(
                "unknown table '{other}' (expected adders or comparators)"
            )),
        }
    }
}

/// A row is either reproduced from a built circuit or shown for reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowSource {
    Measured { family: Family, mode: CompileMode },
    Reference,
}

/// Closed-form costs of one construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormulaRow {
    pub label: &'static str,
    pub source: RowSource,
    pub cnot_depth: Affine,
    pub cnot_count: Affine,
    pub t_depth: Affine,
    pub t_count: Affine,
    pub ancillas: usize,
}

impl FormulaRow {
    pub fn eval(&self, n: usize) -> Costs {
        Costs {
            cnot_depth: self.cnot_depth.eval(n),
            cnot_count: self.cnot_count.eval(n),
            t_depth: self.t_depth.eval(n),
            t_count: self.t_count.eval(n),
        }
    }
}

const fn row(
    label: &'static str,
    source: RowSource,
    [cd, cc, td, tc]: [(i64, i64); 4],
    ancillas: usize,
) -> FormulaRow {
    FormulaRow {
        label,
        source,
        cnot_depth: Affine::new(cd.0, cd.1),
        cnot_count: Affine::new(cc.0, cc.1),
        t_depth: Affine::new(td.0, td.1),
        t_count: Affine::new(tc.0, tc.1),
        ancillas,
    }
}

const fn measured(family: Family, mode: CompileMode) -> RowSource {
    RowSource::Measured { family, mode }
}

use CompileMode::{Naive, Optimized};
use RowSource::Reference;

/// Ripple-carry adders with at most one ancilla, by decreasing CNOT-depth.
pub const ADDER_ROWS: [FormulaRow; 10] = [
    row(
        "[TK05]",
        Reference,
        [(26, -42), (34, -41), (9, -9), (28, -35)],
        0,
    ),
    row("[SRV08]", Reference, [(16, 3), (18, 1), (6, 0), (14, 0)], 1),
    row(
        "cdkm-compact naive",
        measured(Family::CdkmCompact, Naive),
        [(16, -25), (18, -18), (6, -9), (14, -21)],
        1,
    ),
    // same construction, constants as given by its slice-by-slice count
    row(
        "cdkm-compact naive (alt)",
        measured(Family::CdkmCompact, Naive),
        [(16, -24), (18, -17), (6, -9), (14, -21)],
        1,
    ),
    row(
        "ttk-adder naive",
        measured(Family::TtkAdder, Naive),
        [(15, -8), (17, -12), (6, -3), (14, -7)],
        0,
    ),
    row(
        "[TR11]",
        Reference,
        [(14, -1), (18, -6), (6, -3), (14, -7)],
        1,
    ),
    row(
        "cdkm-shallow naive",
        measured(Family::CdkmShallow, Naive),
        [(13, -3), (17, -10), (6, -3), (14, -7)],
        1,
    ),
    row(
        "cdkm-compact optimized",
        measured(Family::CdkmCompact, Optimized),
        [(11, -8), (14, -10), (4, -2), (10, -3)],
        1,
    ),
    row(
        "ttk-adder optimized",
        measured(Family::TtkAdder, Optimized),
        [(10, -3), (16, -12), (3, 2), (12, -5)],
        0,
    ),
    row(
        "cdkm-shallow optimized",
        measured(Family::CdkmShallow, Optimized),
        [(8, 2), (16, -10), (3, 2), (12, -5)],
        1,
    ),
];

/// Comparators built the same way, by decreasing CNOT-depth.
pub const COMPARATOR_ROWS: [FormulaRow; 5] = [
    row("[TA09]", Reference, [(18, 3), (20, 1), (6, 0), (14, 0)], 1),
    row(
        "ttk-comparator naive",
        measured(Family::TtkComparator, Naive),
        [(16, -8), (18, -12), (6, -3), (14, -7)],
        0,
    ),
    row(
        "cdkm-comparator naive",
        measured(Family::CdkmComparator, Naive),
        [(14, -3), (18, -7), (6, -3), (14, -7)],
        1,
    ),
    row(
        "ttk-comparator optimized",
        measured(Family::TtkComparator, Optimized),
        [(10, -6), (14, -9), (4, -3), (10, -3)],
        0,
    ),
    row(
        "cdkm-comparator optimized",
        measured(Family::CdkmComparator, Optimized),
        [(8, 5), (14, -6), (4, -1), (10, -3)],
        1,
    ),
];

pub fn table_rows(which: Which) -> &'static [FormulaRow] {
    match which {
        Which::Adders => &ADDER_ROWS,
        Which::Comparators => &COMPARATOR_ROWS,
    }
}

pub fn find_row(label: &str) -> Option<&'static FormulaRow> {
    ADDER_ROWS
        .iter()
        .chain(&COMPARATOR_ROWS)
        .find(|r| r.label == label)
}

/// Measured (or formula-only) line of a reproduced table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableLine {
    pub label: String,
    pub n: usize,
    pub formula: Costs,
    pub measured: Option<Costs>,
    pub relation: Option<Relations>,
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub which: Which,
    /// One report per measured row and n.
    pub reports: Vec<VerifyReport>,
    pub lines: Vec<TableLine>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.lines).expect("table lines serialize")
    }

    /// Aligned text table: one block per n, columns in table order.
    pub fn render(&self) -> String {
        let width = self
            .lines
            .iter()
            .map(|l| l.label.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let title = match self.which {
            Which::Adders => "ripple-carry adders",
            Which::Comparators => "comparators",
        };
        let mut current = None;
        for line in &self.lines {
            if current != Some(line.n) {
                current = Some(line.n);
                let _ = writeln!(out, "{title}, n = {}", line.n);
                let _ = writeln!(
                    out,
                    "{:<width$}  {:>15}  {:>15}  {:>15}  {:>15}  status",
                    "row", "CNOT-depth", "CNOT-count", "T-depth", "T-count"
                );
            }
            let cell = |formula: i64, measured: Option<(i64, &str)>| match measured {
                Some((m, rel)) => format!("{m} {rel} {formula}"),
                None => formula.to_string(),
            };
            let (m, r) = (line.measured, line.relation);
            let status = match line.pass {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "reference",
            };
            let _ = writeln!(
                out,
                "{:<width$}  {:>15}  {:>15}  {:>15}  {:>15}  {status}",
                line.label,
                cell(
                    line.formula.cnot_depth,
                    m.zip(r).map(|(m, r)| (m.cnot_depth, r.cnot_depth.symbol()))
                ),
                cell(
                    line.formula.cnot_count,
                    m.zip(r).map(|(m, r)| (m.cnot_count, r.cnot_count.symbol()))
                ),
                cell(
                    line.formula.t_depth,
                    m.zip(r).map(|(m, r)| (m.t_depth, r.t_depth.symbol()))
                ),
                cell(
                    line.formula.t_count,
                    m.zip(r).map(|(m, r)| (m.t_count, r.t_count.symbol()))
                ),
            );
        }
        out
    }
}

/// Measured costs of a family in a compile mode.
pub fn measure(family: Family, n: usize, mode: CompileMode) -> Result<Costs, VerifyError> {
    let compiled = compile(&build(family, n)?, mode).circuit;
    Ok(Costs::from_report(&metrics(&compiled)?))
}

/// Compares one measured row at one n.
pub fn compare_row(row: &FormulaRow, n: usize) -> Result<Option<VerifyReport>, VerifyError> {
    let RowSource::Measured { family, mode } = row.source else {
        return Ok(None);
    };
    let formula = row.eval(n);
    let measured = measure(family, n, mode)?;
    let mut report = VerifyReport::new(family, n, VerifyMode::from(mode), "metrics");
    report.checks_run = 4;
    report.metrics = Some(MetricComparison {
        label: row.label.to_string(),
        formula,
        measured,
        relation: Relations::between(&measured, &formula),
    });
    Ok(Some(report.finish()))
}

/// Builds, compiles and measures every reproducible row for each n.
pub fn reproduce_table(which: Which, n_values: &[usize]) -> Result<TableReport, VerifyError> {
    if let Some(&n) = n_values
        .iter()
        .find(|&&n| !(MIN_TABLE_N..=MAX_TABLE_N).contains(&n))
    {
        return Err(VerifyError::OutOfRange {
            n,
            min: MIN_TABLE_N,
            max: MAX_TABLE_N,
        });
    }
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    for &n in n_values {
        for row in table_rows(which) {
            match compare_row(row, n)? {
                Some(report) => {
                    let m = report.metrics.as_ref().expect("metric report");
                    lines.push(TableLine {
                        label: row.label.to_string(),
                        n,
                        formula: m.formula,
                        measured: Some(m.measured),
                        relation: Some(m.relation),
                        pass: Some(report.pass),
                    });
                    reports.push(report);
                }
                None => lines.push(TableLine {
                    label: row.label.to_string(),
                    n,
                    formula: row.eval(n),
                    measured: None,
                    relation: None,
                    pass: None,
                }),
            }
        }
    }
    Ok(TableReport {
        which,
        reports,
        lines,
    })
}
