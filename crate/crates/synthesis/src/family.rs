use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthesisError {
    #[error("operand width n={0} is too small (need n >= 1)")]
    NTooSmall(usize),

    #[error("unknown circuit family '{0}'")]
    UnknownFamily(String),
}

/// The five constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// CDKM adder: Toffoli left branch, Peres right branch.
    CdkmShallow,
    /// CDKM adder: Toffoli right branch interleaved with CNOT pairs.
    CdkmCompact,
    /// Ancilla-free TTK adder.
    TtkAdder,
    /// Comparator derived from the shallow CDKM adder.
    CdkmComparator,
    /// Ancilla-free comparator derived from the TTK adder.
    TtkComparator,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::CdkmShallow,
        Family::CdkmCompact,
        Family::TtkAdder,
        Family::CdkmComparator,
        Family::TtkComparator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CdkmShallow => "cdkm-shallow",
            Family::CdkmCompact => "cdkm-compact",
            Family::TtkAdder => "ttk-adder",
            Family::CdkmComparator => "cdkm-comparator",
            Family::TtkComparator => "ttk-comparator",
        }
    }

    pub fn is_adder(self) -> bool {
        matches!(
            self,
            Family::CdkmShallow | Family::CdkmCompact | Family::TtkAdder
        )
    }

    pub fn has_ancilla(self) -> bool {
        matches!(
            self,
            Family::CdkmShallow | Family::CdkmCompact | Family::CdkmComparator
        )
    }

    pub fn wire_count(self, n: usize) -> usize {
        if self.has_ancilla() {
            2 * n + 2
        } else {
            2 * n + 1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SynthesisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| SynthesisError::UnknownFamily(s.to_string()))
    }
}

/// A family at a given operand width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircuitFamily {
    pub family: Family,
    pub n: usize,
}

impl CircuitFamily {
    pub fn new(family: Family, n: usize) -> CircuitFamily {
        CircuitFamily { family, n }
    }

    pub fn wire_count(&self) -> usize {
        self.family.wire_count(self.n)
    }
}

impl fmt::Display for CircuitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.family, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!(
            "bogus".parse::<Family>(),
            Err(SynthesisError::UnknownFamily("bogus".into()))
        );
    }

    #[test]
    fn wire_counts() {
        assert_eq!(Family::CdkmShallow.wire_count(6), 14);
        assert_eq!(Family::TtkAdder.wire_count(4), 9);
        assert_eq!(Family::CdkmComparator.wire_count(4), 10);
        assert_eq!(Family::TtkComparator.wire_count(4), 9);
    }
}
