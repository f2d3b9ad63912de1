//! Outcome of a verification suite: how many identities were checked and a
//! witness for every one that failed.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: 0, failures: Vec::new() }
    }

    /// Records one identity; the witness is only rendered when it fails.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.checks += 1;
        self.failures.push(witness.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another report into this one, prefixing its witnesses.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        let name = other.name;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{name}: {f}")));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failures)", self.name, self.checks, self.failures.len())?;
        for w in self.failures.iter().take(10) {
            write!(f, "\n  {w}")?;
        }
        if self.failures.len() > 10 {
            write!(f, "\n  ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}
