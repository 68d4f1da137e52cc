use serde::Serialize;

use crate::poly::{bp_to_text, BiPoly};
use crate::rational::Rat;

/// Outcome of one identity check on one parameter cell.
///
/// `witness` is present exactly when the check failed; it holds the serialized
/// nonzero difference or remainder that demonstrates the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub params: Vec<(String, i64)>,
    pub passed: bool,
    pub witness: Option<String>,
    /// Exact quantities computed along the way (e.g. the Saito constant).
    pub values: Vec<(String, Rat)>,
}

pub(crate) fn params(pairs: &[(&str, i64)]) -> Vec<(String, i64)> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl CheckReport {
    pub fn pass(name: &str, params: Vec<(String, i64)>) -> CheckReport {
        CheckReport {
            check_name: name.to_string(),
            params,
            passed: true,
            witness: None,
            values: Vec::new(),
        }
    }

    pub fn fail(name: &str, params: Vec<(String, i64)>, witness: String) -> CheckReport {
        CheckReport {
            check_name: name.to_string(),
            params,
            passed: false,
            witness: Some(witness),
            values: Vec::new(),
        }
    }

    /// Passes iff `lhs == rhs`; otherwise the witness is `lhs - rhs`.
    pub fn compare(
        name: &str,
        params: Vec<(String, i64)>,
        lhs: &BiPoly,
        rhs: &BiPoly,
    ) -> CheckReport {
        let diff = lhs - rhs;
        if diff.is_zero() {
            CheckReport::pass(name, params)
        } else {
            CheckReport::fail(name, params, bp_to_text(&diff))
        }
    }

    pub fn with_value(mut self, name: &str, v: Rat) -> CheckReport {
        self.values.push((name.to_string(), v));
        self
    }

    pub fn value(&self, name: &str) -> Option<&Rat> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    /// Folds several sub-checks of the same cell into one report: it passes
    /// iff all parts pass, and carries the first failing witness.
    pub(crate) fn all(
        name: &str,
        params: Vec<(String, i64)>,
        parts: Vec<CheckReport>,
    ) -> CheckReport {
        let mut out = CheckReport::pass(name, params);
        for part in parts {
            out.values.extend(part.values);
            if out.passed && !part.passed {
                out.passed = false;
                out.witness = part.witness;
            }
        }
        out
    }
}
