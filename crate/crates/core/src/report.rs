use std::fmt;

use serde::Serialize;

/// One failed axiom instance, named by rule and witnessed by basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of an axiom check. Empty means every axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, rule: impl Into<String>, witness: &[usize], detail: impl Into<String>) {
        self.violations.push(Violation {
            rule: rule.into(),
            witness: witness.to_vec(),
            detail: detail.into(),
        });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mentions(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub(crate) fn into_result(self, what: &'static str) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::invalid(what, self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let shown = self.violations.iter().take(5);
        let parts: Vec<String> = shown
            .map(|v| format!("{} at {:?}: {}", v.rule, v.witness, v.detail))
            .collect();
        write!(f, "{}", parts.join("; "))?;
        if self.violations.len() > 5 {
            write!(f, "; ... ({} violations total)", self.violations.len())?;
        }
        Ok(())
    }
}
