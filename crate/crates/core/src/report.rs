//! Outcome of an executable law suite: pass, or a minimal counterexample
//! with the violated inequality spelled out on both sides.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Name of the violated law.
    pub law: String,
    /// Named inputs that reproduce the violation.
    pub inputs: Vec<(String, String)>,
    /// Left-hand side of the violated (in)equality, evaluated.
    pub lhs: String,
    /// Right-hand side, evaluated.
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail(Counterexample),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub suite: String,
    pub status: LawStatus,
    /// Number of instances checked.
    pub checked: usize,
    /// Free-form remarks (e.g. logged counterexample searches).
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn pass(suite: impl Into<String>, checked: usize) -> Self {
        LawReport {
            suite: suite.into(),
            status: LawStatus::Pass,
            checked,
            notes: Vec::new(),
        }
    }

    pub fn fail(suite: impl Into<String>, checked: usize, ce: Counterexample) -> Self {
        LawReport {
            suite: suite.into(),
            status: LawStatus::Fail(ce),
            checked,
            notes: Vec::new(),
        }
    }

    pub fn skipped(suite: impl Into<String>, reason: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            status: LawStatus::Skipped(reason.into()),
            checked: 0,
            notes: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.status, LawStatus::Pass)
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("suite".into(), self.suite.clone().into());
        match &self.status {
            LawStatus::Pass => {
                obj.insert("status".into(), "pass".into());
            }
            LawStatus::Fail(ce) => {
                obj.insert("status".into(), "fail".into());
                let mut c = serde_json::Map::new();
                c.insert("law".into(), ce.law.clone().into());
                c.insert(
                    "inputs".into(),
                    serde_json::Value::Object(
                        ce.inputs
                            .iter()
                            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                            .collect(),
                    ),
                );
                c.insert("lhs".into(), ce.lhs.clone().into());
                c.insert("rhs".into(), ce.rhs.clone().into());
                obj.insert("counterexample".into(), serde_json::Value::Object(c));
            }
            LawStatus::Skipped(reason) => {
                obj.insert("status".into(), "skipped".into());
                obj.insert("reason".into(), reason.clone().into());
            }
        }
        obj.insert("checked".into(), (self.checked as u64).into());
        if !self.notes.is_empty() {
            obj.insert(
                "notes".into(),
                serde_json::Value::Array(
                    self.notes.iter().map(|n| n.clone().into()).collect(),
                ),
            );
        }
        serde_json::Value::Object(obj)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            LawStatus::Pass => write!(f, "{}: pass ({} checked)", self.suite, self.checked)?,
            LawStatus::Fail(ce) => {
                write!(
                    f,
                    "{}: FAIL [{}] lhs = {}, rhs = {}",
                    self.suite, ce.law, ce.lhs, ce.rhs
                )?;
                for (k, v) in &ce.inputs {
                    write!(f, "\n  {} = {}", k, v)?;
                }
            }
            LawStatus::Skipped(reason) => write!(f, "{}: skipped ({})", self.suite, reason)?,
        }
        for n in &self.notes {
            write!(f, "\n  note: {}", n)?;
        }
        Ok(())
    }
}
