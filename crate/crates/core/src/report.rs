use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed axiom instance.
///
/// `witness` holds the ids (morphisms, objects or basis indices, depending on
/// the structure being checked) that exhibit the failure; `axiom` is a short
/// stable tag naming the law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub message: String,
}

/// Machine-readable outcome of a validator. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, axiom: &str, witness: Vec<usize>, message: impl Into<String>) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// True if some violation carries the given axiom tag.
    pub fn cites(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }

    /// Converts an empty report into `Ok(())` and anything else into
    /// [`crate::Error::Invalid`].
    pub fn into_result(self) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {:?}: {}", v.axiom, v.witness, v.message)?;
        }
        Ok(())
    }
}
