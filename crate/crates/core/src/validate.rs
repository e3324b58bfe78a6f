//! Validation reports. Violations are data, not errors: a validator always
//! returns a [`Report`], and an empty report means the structure is valid.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short machine-readable name of the broken law, e.g. `"associativity"`.
    pub law: String,
    /// Basis indices (or level numbers) witnessing the failure.
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, indices: &[usize], detail: impl Into<String>) {
        self.violations.push(Violation {
            law: law.to_string(),
            indices: indices.to_vec(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    /// True if some violation of `law` names exactly these indices.
    pub fn names(&self, law: &str, indices: &[usize]) -> bool {
        self.violations
            .iter()
            .any(|v| v.law == law && v.indices == indices)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let shown: Vec<String> = self
            .violations
            .iter()
            .take(5)
            .map(|v| format!("{} at {:?}: {}", v.law, v.indices, v.detail))
            .collect();
        write!(f, "{}", shown.join("; "))?;
        if self.violations.len() > 5 {
            write!(f, " (and {} more)", self.violations.len() - 5)?;
        }
        Ok(())
    }
}
