//! The groups a verification run looks at.

use std::fs;
use std::path::{Path, PathBuf};

use crate::catalog::{build, extension_family};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::groupfile::{Claim, GroupFile};

/// File extension of group files picked up from a directory.
pub const GROUP_FILE_EXTENSION: &str = "group";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Catalog,
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
    pub claims: Vec<Claim>,
    pub origin: Origin,
}

/// Catalog names in the default corpus, besides the extension families.
const DEFAULT_NAMES: &[&str] = &[
    "trivial", "C2", "C3", "C4", "C5", "C6", "C7", "E2^2", "E2^3", "E2^4", "E3^2", "E3^3", "E5^2",
    "S3", "D4", "D5", "Q8", "A4", "S4", "AGL1(5)", "AGL1(7)", "AGL1(8)", "AGL1(9)",
    "A5", "S5", "A6", "S6", "A7", "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)", "PSL2(9)",
    "PGL2(5)", "PGL2(7)", "PGL2(9)", "PGammaL2(4)", "PGammaL2(8)", "PGammaL2(9)", "PSigmaL2(9)",
    "M10", "PSL3(4)", "ASL24A", "ASL24B",
    "DP(A5,C7)", "DP(A6,C7)", "DP(PSL2(7),C11)", "DP(PSL2(8),C11)",
    "POW(A5,2)", "POW(PSL2(7),2)", "POW(A6,2)",
];

/// Simple groups whose extension families join the default corpus.
pub const FAMILY_BASES: &[&str] = &["A5", "A6", "PSL2(7)", "PSL2(8)"];

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Catalog groups, then extension-family members not already present.
    pub fn default_corpus() -> Result<Corpus> {
        let mut entries: Vec<CorpusEntry> = Vec::new();
        for name in DEFAULT_NAMES {
            entries.push(CorpusEntry {
                name: name.to_string(),
                group: build(name)?,
                claims: Vec::new(),
                origin: Origin::Catalog,
            });
        }
        for base in FAMILY_BASES {
            for m in extension_family(base)? {
                let name = m.group.label();
                if entries.iter().any(|e| e.name == name) {
                    continue;
                }
                entries.push(CorpusEntry {
                    name,
                    group: m.group,
                    claims: Vec::new(),
                    origin: Origin::Catalog,
                });
            }
        }
        Ok(Corpus { entries })
    }

    /// Group files in `dir`, by file name. Files that fail to parse come
    /// back separately with their error.
    pub fn load_dir(dir: &Path) -> Result<(Corpus, Vec<(PathBuf, GroupError)>)> {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| GroupError::Unsupported(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == GROUP_FILE_EXTENSION))
            .collect();
        paths.sort();
        let mut entries = Vec::new();
        let mut errors = Vec::new();
        for path in paths {
            match load_file(&path) {
                Ok(e) => entries.push(e),
                Err(e) => errors.push((path, e)),
            }
        }
        Ok((Corpus { entries }, errors))
    }

    pub fn extend(&mut self, other: Corpus) {
        self.entries.extend(other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_file(path: &Path) -> Result<CorpusEntry> {
    let text = fs::read_to_string(path)
        .map_err(|e| GroupError::Unsupported(format!("{}: {e}", path.display())))?;
    let file = GroupFile::parse(&text)?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = file.name.clone().unwrap_or(stem);
    Ok(CorpusEntry {
        group: file.to_group()?.with_name(name.clone()),
        name,
        claims: file.claims,
        origin: Origin::File(path.to_path_buf()),
    })
}
