//! Check reports: named identities with pass/fail status, witnesses and certificates.

use std::fmt;

use serde::Serialize;

use crate::linalg::{format_scalar, format_vector, LinearMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The first basis element on which two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Pass, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Fail, witness: None, detail: Some(detail.into()) }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Skipped, witness: None, detail: Some(reason.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self { name: name.into(), status: Status::Fail, witness: None, detail: None }
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Compares two maps column by column; on mismatch the witness names the
/// first domain basis element and both evaluated sides.
pub fn check_identity(name: impl Into<String>, lhs: &LinearMap, rhs: &LinearMap) -> CheckResult {
    let name = name.into();
    match lhs.first_difference(rhs) {
        None => CheckResult::pass(name),
        Some(j) => CheckResult {
            name,
            status: Status::Fail,
            witness: Some(Witness {
                basis: lhs.domain().label(j).split('⊗').map(str::to_string).collect(),
                lhs: format_vector(&lhs.column_dense(j), lhs.codomain()),
                rhs: format_vector(&rhs.column_dense(j), lhs.codomain()),
            }),
            detail: None,
        },
    }
}

/// A dense matrix embedded in a report so that external tools can re-verify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Certificate {
    pub fn from_map(name: impl Into<String>, map: &LinearMap) -> Self {
        Self {
            name: name.into(),
            domain: map.domain().labels().to_vec(),
            codomain: map.codomain().labels().to_vec(),
            rows: map.rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect(),
        }
    }
}

/// A decided proposition that is reported but is not itself a pass/fail
/// check, such as a theorem hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), facts: Vec::new(), checks: Vec::new(), certificates: Vec::new() }
    }

    pub fn fact(&mut self, name: impl Into<String>, holds: bool, detail: Option<String>) {
        self.facts.push(Fact { name: name.into(), holds, detail });
    }

    /// Value of the named fact; panics if absent.
    pub fn holds(&self, name: &str) -> bool {
        self.facts
            .iter()
            .find(|f| f.name == name)
            .unwrap_or_else(|| panic!("no fact named {name:?}"))
            .holds
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    /// Appends another report's checks, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
        for mut f in other.facts {
            f.name = format!("{prefix}: {}", f.name);
            self.facts.push(f);
        }
        self.certificates.extend(other.certificates);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures().next().map(|c| c.name.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Status of the named check; panics if absent.
    pub fn status(&self, name: &str) -> Status {
        self.get(name).unwrap_or_else(|| panic!("no check named {name:?}")).status
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        for fact in &self.facts {
            write!(f, "  [{}] {}", if fact.holds { "yes " } else { "no  " }, fact.name)?;
            if let Some(d) = &fact.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "  [{tag}] {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(f, "         at {}: {} ≠ {}", w.basis.join("⊗"), w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}
