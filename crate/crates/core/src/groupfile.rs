//! Plain-text group files.
//!
//! ```text
//! # comment
//! name: A5
//! degree: 5
//! gens:
//! (1 2 3 4 5)
//! [1,2,4,5,3]
//! claim: omega = 4
//! ```
//!
//! Generators are cycle notation or 1-based image lists. Several may share
//! a line when separated by commas outside brackets. `claim:` lines record
//! expected invariants; the verifier checks them and fails on a mismatch.

use std::fmt::Write as _;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Invariant a group file asserts about its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Omega(usize),
    Order(u128),
    AutOrder(u128),
    Solvable(bool),
    Simple(bool),
    At(bool),
}

impl Claim {
    pub fn key(&self) -> &'static str {
        match self {
            Claim::Omega(_) => "omega",
            Claim::Order(_) => "order",
            Claim::AutOrder(_) => "aut_order",
            Claim::Solvable(_) => "solvable",
            Claim::Simple(_) => "simple",
            Claim::At(_) => "at",
        }
    }

    pub fn value(&self) -> String {
        match self {
            Claim::Omega(v) => v.to_string(),
            Claim::Order(v) | Claim::AutOrder(v) => v.to_string(),
            Claim::Solvable(b) | Claim::Simple(b) | Claim::At(b) => b.to_string(),
        }
    }

    fn parse(text: &str) -> std::result::Result<Claim, String> {
        let (k, v) = text.split_once('=').ok_or("claim needs `key = value`")?;
        let (k, v) = (k.trim(), v.trim());
        let int = || v.parse::<u128>().map_err(|_| format!("bad integer {v:?}"));
        let boolean = || v.parse::<bool>().map_err(|_| format!("bad boolean {v:?}"));
        Ok(match k {
            "omega" => Claim::Omega(int()? as usize),
            "order" => Claim::Order(int()?),
            "aut_order" => Claim::AutOrder(int()?),
            "solvable" => Claim::Solvable(boolean()?),
            "simple" => Claim::Simple(boolean()?),
            "at" => Claim::At(boolean()?),
            other => return Err(format!("unknown claim {other:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub claims: Vec<Claim>,
}

/// Splits at commas outside `()` and `[]`.
fn split_top_level(line: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in line.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&line[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&line[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_generator(tok: &str, degree: usize) -> Result<Permutation> {
    if let Some(body) = tok.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| GroupError::MalformedCycle(format!("unclosed image list {tok:?}")))?;
        let images = body
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| GroupError::MalformedCycle(format!("bad image {:?}", s.trim())))
            })
            .collect::<Result<Vec<usize>>>()?;
        if images.len() != degree {
            return Err(GroupError::DegreeMismatch {
                left: degree,
                right: images.len(),
            });
        }
        Permutation::from_images(&images)
    } else {
        Permutation::parse_cycles(tok, degree)
    }
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut name = None;
        let mut degree: Option<usize> = None;
        // generator tokens with their line numbers; parsed once the degree
        // is known
        let mut pending: Vec<(usize, String)> = Vec::new();
        let mut claims = Vec::new();
        let mut in_gens = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| GroupError::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let field = line.split_once(':').filter(|(k, _)| {
                matches!(k.trim(), "name" | "degree" | "gens" | "claim")
            });
            match field {
                Some((k, v)) => {
                    let v = v.trim();
                    in_gens = false;
                    match k.trim() {
                        "name" => name = Some(v.to_string()),
                        "degree" => {
                            degree = Some(v.parse().map_err(|_| err(format!("bad degree {v:?}")))?)
                        }
                        "gens" => {
                            in_gens = true;
                            pending.extend(split_top_level(v).into_iter().map(|t| (line_no, t.to_string())));
                        }
                        _ => claims.push(Claim::parse(v).map_err(err)?),
                    }
                }
                None if in_gens => {
                    pending.extend(split_top_level(line).into_iter().map(|t| (line_no, t.to_string())));
                }
                None => return Err(err(format!("unexpected line {line:?}"))),
            }
        }
        let degree = degree.ok_or(GroupError::Parse {
            line: 0,
            msg: "missing `degree:`".into(),
        })?;
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if pending.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        let generators = pending
            .iter()
            .map(|(line, tok)| {
                parse_generator(tok, degree).map_err(|e| GroupError::Parse {
                    line: *line,
                    msg: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupFile {
            name,
            degree,
            generators,
            claims,
        })
    }

    pub fn from_group(g: &PermGroup) -> GroupFile {
        GroupFile {
            name: g.name().map(str::to_string),
            degree: g.degree(),
            generators: g.generators().to_vec(),
            claims: Vec::new(),
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let g = PermGroup::new(self.degree, self.generators.clone())?;
        Ok(match &self.name {
            Some(n) => g.with_name(n.clone()),
            None => g,
        })
    }

    /// One generator per line in cycle notation.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(s, "name: {n}");
        }
        let _ = writeln!(s, "degree: {}", self.degree);
        s.push_str("gens:\n");
        for g in &self.generators {
            let _ = writeln!(s, "{g}");
        }
        for c in &self.claims {
            let _ = writeln!(s, "claim: {} = {}", c.key(), c.value());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inline_and_multiline() {
        let a = GroupFile::parse("name: A5\ndegree: 5\ngens: (1 2 3 4 5), (3 4 5)\n").unwrap();
        assert_eq!(a.to_group().unwrap().order(), 60);
        let b = GroupFile::parse("# A5 again\ndegree: 5\ngens:\n(1 2 3 4 5)\n[1,2,4,5,3]  # (3 4 5)\n").unwrap();
        assert_eq!(b.generators, a.generators);
        let t = GroupFile::parse("degree: 1\ngens: ()").unwrap();
        assert_eq!(t.to_group().unwrap().order(), 1);
    }

    #[test]
    fn errors_carry_lines() {
        let e = GroupFile::parse("degree: 4\ngens: [2,1,1,4]").unwrap_err();
        assert!(matches!(e, GroupError::Parse { line: 2, .. }), "{e}");
        let e = GroupFile::parse("degree: 3\ngens:\n(1 2)\n(1 4)").unwrap_err();
        assert!(matches!(e, GroupError::Parse { line: 4, .. }), "{e}");
        assert!(GroupFile::parse("gens: (1 2)").is_err());
        assert!(GroupFile::parse("degree: 3\nname: x").is_err());
        assert!(GroupFile::parse("degree: 3\nbogus").is_err());
        assert!(GroupFile::parse("degree: 3\ngens: (1 2)\nclaim: omega 3").is_err());
    }

    #[test]
    fn round_trip() {
        let text = "name: S3\ndegree: 3\ngens: (1 2 3), [2,1,3]\nclaim: omega = 3\nclaim: solvable = true\n";
        let f = GroupFile::parse(text).unwrap();
        let again = GroupFile::parse(&f.serialize()).unwrap();
        assert_eq!(f, again);
        assert_eq!(again.serialize(), f.serialize());
    }
}
