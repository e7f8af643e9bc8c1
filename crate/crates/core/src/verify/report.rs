//! Line-oriented and JSON renderings of group reports and target runs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::verify::facts::{Analyzer, Facts};
use crate::verify::targets::{check_at_consistency, check_lm_three, check_theorem_a, check_theorem_b, claim_verdicts};
use crate::verify::{Status, Verdict};
use crate::groupfile::Claim;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub order: u32,
    pub size: usize,
}

/// Invariants of one group plus the verdicts that apply to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub solvable: bool,
    pub simple: bool,
    pub spectrum: Vec<u32>,
    pub omega: usize,
    pub aut_order: u128,
    pub at: bool,
    pub cells: Vec<Cell>,
    /// Orders of the characteristic subgroups.
    pub characteristic: Vec<usize>,
    pub verdicts: Vec<Verdict>,
}

impl GroupReport {
    pub fn from_facts(an: &Analyzer, f: &Facts, claims: &[Claim]) -> Result<GroupReport> {
        let aut = f.aut()?;
        let mut verdicts = claim_verdicts(f, claims);
        verdicts.extend(
            [
                check_theorem_a(an, f),
                check_theorem_b(an, f),
                check_at_consistency(an, f),
                check_lm_three(f),
            ]
            .into_iter()
            .flatten(),
        );
        Ok(GroupReport {
            name: f.name.clone(),
            degree: f.group.degree(),
            order: f.order(),
            solvable: f.solvable,
            simple: f.is_simple(),
            spectrum: f.spectrum.iter().copied().collect(),
            omega: aut.omega(),
            aut_order: aut.aut_order(),
            at: aut.omega() == f.spectrum.len(),
            cells: aut
                .partition()
                .census()
                .into_iter()
                .map(|(order, size)| Cell { order, size })
                .collect(),
            characteristic: f.characteristic_subgroups()?.iter().map(|r| r.order()).collect(),
            verdicts,
        })
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let join = |v: &[String]| v.join(" ");
        let mut s = String::new();
        let _ = writeln!(s, "name: {}", self.name);
        let _ = writeln!(s, "degree: {}", self.degree);
        let _ = writeln!(s, "order: {}", self.order);
        let _ = writeln!(s, "solvable: {}", self.solvable);
        let _ = writeln!(s, "simple: {}", self.simple);
        let _ = writeln!(s, "spectrum: {}", join(&self.spectrum.iter().map(u32::to_string).collect::<Vec<_>>()));
        let _ = writeln!(s, "omega: {}", self.omega);
        let _ = writeln!(s, "aut_order: {}", self.aut_order);
        let _ = writeln!(s, "at: {}", self.at);
        let _ = writeln!(
            s,
            "cells: {}",
            join(&self.cells.iter().map(|c| format!("{}x{}", c.order, c.size)).collect::<Vec<_>>())
        );
        let _ = writeln!(
            s,
            "characteristic: {}",
            join(&self.characteristic.iter().map(usize::to_string).collect::<Vec<_>>())
        );
        for v in &self.verdicts {
            let _ = writeln!(s, "verdict: {v}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn status(&self) -> Status {
        self.verdicts.iter().map(|v| v.status).max().unwrap_or(Status::Pass)
    }
}

/// Verdicts of one target run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetReport {
    pub target: String,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

impl TargetReport {
    pub fn new(target: &str) -> TargetReport {
        TargetReport {
            target: target.to_string(),
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == s).count()
    }

    /// 1 on any failure, else 2 on any skip, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Skip) > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "target: {}", self.target);
        for v in &self.verdicts {
            let _ = writeln!(s, "{v}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(
            s,
            "summary: {} PASS, {} FAIL, {} SKIP",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        );
        s
    }
}
