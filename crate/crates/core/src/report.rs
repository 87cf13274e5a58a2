//! Check records shared by the matrix certificates and the lab suites.

use std::fmt;

use serde::Serialize;

/// One checked fact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub parameters: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Record {
    pub fn new(
        check: impl Into<String>,
        parameters: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        pass: bool,
    ) -> Self {
        Record {
            check: check.into(),
            parameters: parameters.into(),
            expected: expected.into(),
            got: got.into(),
            pass,
        }
    }

    /// A record whose verdict is equality of the rendered values.
    pub fn eq(
        check: impl Into<String>,
        parameters: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        let (e, g) = (expected.to_string(), got.to_string());
        let pass = e == g;
        Record::new(check, parameters, e, g, pass)
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        if !self.parameters.is_empty() {
            write!(f, " {}", self.parameters)?;
        }
        write!(
            f,
            " {} expected={} {}",
            self.got,
            self.expected,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// An ordered list of records.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
}

/// Totals over a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn summary(&self) -> Summary {
        let passed = self.records.iter().filter(|r| r.pass).count();
        Summary {
            checks: self.records.len(),
            passed,
            failed: self.records.len() - passed,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        let s = self.summary();
        write!(f, "{} checks, {} passed, {} failed", s.checks, s.passed, s.failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let r = Record::eq("pgroup", "p=2 r=2", 4, 4);
        assert_eq!(r.to_string(), "pgroup p=2 r=2 4 expected=4 pass");
        let mut rep = Report::new();
        rep.push(r);
        rep.push(Record::new("x", "", "a", "b", false));
        assert!(!rep.pass());
        assert_eq!(rep.summary().failed, 1);
        assert!(rep.to_string().ends_with("2 checks, 1 passed, 1 failed"));
    }
}
