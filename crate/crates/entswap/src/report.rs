//! Pass/fail reports produced by the verification suites.

use std::fmt;

/// One named check with its worst observed deviation.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub max_deviation: f64,
}

/// A named bundle of checks plus free-form annotations.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, max_deviation: f64) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            max_deviation,
        });
    }

    /// Records a check that passes iff `max_deviation` is below `tol`.
    pub fn check_deviation(&mut self, name: impl Into<String>, max_deviation: f64, tol: f64) {
        self.check(name, max_deviation <= tol, max_deviation);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| c.name.as_str())
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.name)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {} (max deviation {:.3e})",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.max_deviation
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(
            f,
            "  {} checks, {} failed",
            self.checks.len(),
            self.checks.iter().filter(|c| !c.passed).count()
        )
    }
}
