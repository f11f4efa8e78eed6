//! End-to-end checks for the adder and comparator families: integer-oracle
//! sweeps over basis inputs, full-unitary equivalence of the compiled forms,
//! and measured costs against closed-form table rows.

pub mod error;
pub mod functional;
pub mod report;
pub mod tables;
pub mod unitary;

pub use error::VerifyError;
pub use functional::{
    expected_output, verify_circuit, verify_functional, verify_functional_with, Strategy,
    AMPLITUDE_THRESHOLD, DEFAULT_SEED, MAX_EXHAUSTIVE_BITS,
};
pub use report::{
    Costs, Failure, MetricComparison, Registers, Relation, Relations, VerifyMode, VerifyReport,
};
pub use tables::{
    compare_row, find_row, measure, reproduce_table, table_rows, Affine, FormulaRow, RowSource,
    TableLine, TableReport, Which, ADDER_ROWS, COMPARATOR_ROWS, MAX_TABLE_N, MIN_TABLE_N,
};
pub use unitary::{
    verify_unitary, verify_unitary_circuit, verify_unitary_with, MAX_UNITARY_N, MAX_UNITARY_WIRES,
};
