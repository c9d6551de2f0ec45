//! Directories of group files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use subform_core::{FiniteGroup, Limits};

use crate::error::{Error, Result};
use crate::format::{parse_group_file, GroupFile};

/// A group loaded from a catalog directory.
pub struct Entry {
    pub label: String,
    pub path: PathBuf,
    pub file: GroupFile,
    pub group: FiniteGroup,
}

/// Every `*.pgrp` file directly inside `dir`, sorted by path.
pub fn list(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| Error::Io { path: dir.display().to_string(), message: e.to_string() };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.extension().is_some_and(|x| x == "pgrp") {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// Loads every group file in `dir`, ordered by (order, label).
pub fn load(dir: &Path, limits: &Limits) -> Result<Vec<Entry>> {
    let paths = list(dir)?;
    let mut out = paths
        .par_iter()
        .map(|p| {
            let (file, group) = parse_group_file(p, limits.clone())?;
            let label = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(Entry { label, path: p.clone(), file, group })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.group.order(), &a.label).cmp(&(b.group.order(), &b.label)));
    Ok(out)
}
