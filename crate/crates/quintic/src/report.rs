//! Verification outcomes shared by the registry, the dissection checks and
//! the differential systems.

use serde::Serialize;

use crate::qseries::{Comparison, Exponent, QSeries};

/// Result of one named verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub anchor: String,
    pub order: i64,
    pub passed: bool,
    /// Exponent of the first disagreeing coefficient, when a series check failed.
    pub first_failure: Option<String>,
    pub detail: String,
}

/// One sub-check contributing to a report.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Series(Comparison),
    Exact { ok: bool, note: String },
}

impl Check {
    pub fn series(label: impl Into<String>, lhs: &QSeries, rhs: &QSeries, order: Exponent) -> Self {
        Check { label: label.into(), outcome: Outcome::Series(lhs.compare(rhs, order)) }
    }

    pub fn series_int(label: impl Into<String>, lhs: &QSeries, rhs: &QSeries, order: i64) -> Self {
        Self::series(label, lhs, rhs, Exponent::from_integer(order))
    }

    pub fn exact(label: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        Check { label: label.into(), outcome: Outcome::Exact { ok, note: note.into() } }
    }

    pub fn passed(&self) -> bool {
        match &self.outcome {
            Outcome::Series(c) => c.is_equal(),
            Outcome::Exact { ok, .. } => *ok,
        }
    }
}

/// Fold sub-checks into a report; the first failing one is described.
pub fn summarize(name: &str, anchor: &str, order: i64, checks: &[Check]) -> IdentityReport {
    let failing = checks.iter().find(|c| !c.passed());
    let (first_failure, detail) = match failing {
        None => (None, format!("{} checks agree", checks.len())),
        Some(c) => match &c.outcome {
            Outcome::Series(Comparison::Differ { exponent }) => {
                (Some(exponent.to_string()), format!("{}: differs at q^{exponent}", c.label))
            }
            Outcome::Series(Comparison::Insufficient { known }) => {
                (None, format!("{}: only known below q^{known}", c.label))
            }
            Outcome::Series(Comparison::Equal) => unreachable!(),
            Outcome::Exact { note, .. } => (None, format!("{}: {note}", c.label)),
        },
    };
    IdentityReport {
        name: name.to_string(),
        anchor: anchor.to_string(),
        order,
        passed: failing.is_none() && !checks.is_empty(),
        first_failure,
        detail,
    }
}

/// A report for a computation that could not be carried out.
pub fn errored(name: &str, anchor: &str, order: i64, err: &crate::Error) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        anchor: anchor.to_string(),
        order,
        passed: false,
        first_failure: None,
        detail: format!("error: {err}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::exp;

    #[test]
    fn first_failure_is_reported() {
        let a = QSeries::from_ints(1, 0, &[1, 2, 3, 4]);
        let b = QSeries::from_ints(1, 0, &[1, 2, 5, 4]);
        let r = summarize("x", "y", 4, &[Check::series_int("ab", &a, &b, 4)]);
        assert!(!r.passed);
        assert_eq!(r.first_failure.as_deref(), Some("2"));
        let r = summarize("x", "y", 2, &[Check::series("ab", &a, &b, exp(2, 1))]);
        assert!(r.passed);
        let r = summarize("x", "y", 9, &[Check::series_int("ab", &a, &b, 9)]);
        assert!(!r.passed && r.first_failure.is_none());
        assert!(!summarize("x", "y", 1, &[]).passed);
    }
}
