//! Corpus verification: per-group reports and the checks behind
//! `autorbit verify`.

pub mod corpus;
pub mod facts;
pub mod report;
pub mod targets;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

pub use corpus::{Corpus, CorpusEntry, Origin};
pub use facts::{Analyzer, Facts};
pub use report::{GroupReport, TargetReport};
pub use targets::{claim_verdicts, run_target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One checked statement about one group, with the evidence used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub check: String,
    pub subject: String,
    pub evidence: String,
}

impl Verdict {
    pub fn new(status: Status, check: &str, subject: &str, evidence: impl Into<String>) -> Verdict {
        Verdict {
            status,
            check: check.to_string(),
            subject: subject.to_string(),
            evidence: evidence.into(),
        }
    }

    pub fn pass(check: &str, subject: &str, evidence: impl Into<String>) -> Verdict {
        Verdict::new(Status::Pass, check, subject, evidence)
    }

    pub fn fail(check: &str, subject: &str, evidence: impl Into<String>) -> Verdict {
        Verdict::new(Status::Fail, check, subject, evidence)
    }

    pub fn skip(check: &str, subject: &str, evidence: impl Into<String>) -> Verdict {
        Verdict::new(Status::Skip, check, subject, evidence)
    }

    pub fn from_bool(ok: bool, check: &str, subject: &str, evidence: impl Into<String>) -> Verdict {
        let status = if ok { Status::Pass } else { Status::Fail };
        Verdict::new(status, check, subject, evidence)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}: {}", self.status, self.check, self.subject, self.evidence)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    TheoremA,
    TheoremB,
    StroppelIneq,
    Lemma23,
    Lemma24,
    Prop27,
    LmThree,
    AtConsistency,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::TheoremA,
        Target::TheoremB,
        Target::StroppelIneq,
        Target::Lemma23,
        Target::Lemma24,
        Target::Prop27,
        Target::LmThree,
        Target::AtConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::TheoremA => "theorem-a",
            Target::TheoremB => "theorem-b",
            Target::StroppelIneq => "stroppel-ineq",
            Target::Lemma23 => "lemma-2-3",
            Target::Lemma24 => "lemma-2-4",
            Target::Prop27 => "prop-2-7",
            Target::LmThree => "lm-three",
            Target::AtConsistency => "at-consistency",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Target, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Target::ALL.iter().map(|t| t.as_str()).collect();
                format!("unknown target {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Limits applied to every group a target touches.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Groups above this order are skipped.
    pub max_order: Option<u128>,
    /// Budget for each automorphism search.
    pub timeout: Option<Duration>,
}
