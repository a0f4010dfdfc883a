//! Validation reports and certificates.
//!
//! Validators scan every tuple in index order and keep the first failing one,
//! so each failure carries the lexicographically least witness.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub axiom: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Set when a check ran on a sample instead of every tuple.
    #[serde(default)]
    pub sampled: bool,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            ..Default::default()
        }
    }

    /// Records a verdict; `witness` is `None` when the axiom holds.
    pub fn record(&mut self, axiom: impl Into<String>, witness: Option<Vec<String>>) {
        self.verdicts.push(Verdict {
            axiom: axiom.into(),
            pass: witness.is_none(),
            witness,
        });
    }

    pub fn pass(&mut self, axiom: impl Into<String>) {
        self.record(axiom, None);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn verdict(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// Witness of a failed axiom, if that axiom was checked and failed.
    pub fn witness(&self, axiom: &str) -> Option<&[String]> {
        self.verdict(axiom).and_then(|v| v.witness.as_deref())
    }

    /// Appends another report's verdicts, prefixing their axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut v in other.verdicts {
            if !prefix.is_empty() {
                v.axiom = format!("{prefix}.{}", v.axiom);
            }
            self.verdicts.push(v);
        }
        self.notes.extend(other.notes);
        self.sampled |= other.sampled;
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} ({} checks, {} failed{})",
            self.subject,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.verdicts.len(),
            failed,
            if self.sampled { ", sampled" } else { "" }
        )?;
        for v in &self.verdicts {
            match &v.witness {
                None => writeln!(f, "  ok    {}", v.axiom)?,
                Some(w) => writeln!(f, "  FAIL  {}  witness ({})", v.axiom, w.join(", "))?,
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// A checked structure map: the explicit table plus the report that
/// certifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub table: Vec<(String, String)>,
    pub report: ValidationReport,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.report)?;
        writeln!(f, "  {}:", self.name)?;
        for (a, b) in &self.table {
            writeln!(f, "    {a} -> {b}")?;
        }
        Ok(())
    }
}

/// Scans `items` in order and returns the first one for which `fails` holds.
pub(crate) fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut fails: impl FnMut(&T) -> bool,
) -> Option<T> {
    items.into_iter().find(|t| fails(t))
}
