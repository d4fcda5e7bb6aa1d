use serde::Serialize;

/// One failed identity: which law, and at which basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
}

impl Violation {
    pub fn new(identity: impl Into<String>, indices: impl Into<Vec<usize>>) -> Self {
        Violation { identity: identity.into(), indices: indices.into() }
    }
}

/// Result of an axiom check. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, identity: impl Into<String>, indices: impl Into<Vec<usize>>) {
        self.violations.push(Violation::new(identity, indices));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// Prefixes every identity name, for nested checks.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.identity = format!("{prefix}: {}", v.identity);
        }
        self
    }

    pub fn has(&self, identity_fragment: &str) -> bool {
        self.violations.iter().any(|v| v.identity.contains(identity_fragment))
    }
}
