use std::collections::BTreeSet;
use std::path::PathBuf;

/// Non-fatal problems collected while building a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Files that contributed nothing, with the reason.
    pub skipped_files: Vec<(PathBuf, String)>,
    /// Files with syntax errors; declarations outside the broken regions
    /// were still used.
    pub partial_files: Vec<(PathBuf, usize)>,
    /// Classes declared more than once; the first occurrence in path order wins.
    pub duplicate_classes: Vec<(String, PathBuf)>,
    /// Distinct `(file, spelled type name)` pairs that did not resolve to a
    /// parsed class and were dropped.
    pub unresolved: BTreeSet<(PathBuf, String)>,
}

impl Diagnostics {
    pub fn unresolved_count(&self) -> usize {
        self.unresolved.len()
    }

    pub fn merge(&mut self, other: Diagnostics) {
        self.skipped_files.extend(other.skipped_files);
        self.partial_files.extend(other.partial_files);
        self.duplicate_classes.extend(other.duplicate_classes);
        self.unresolved.extend(other.unresolved);
    }

    pub(crate) fn normalize(&mut self) {
        self.skipped_files.sort();
        self.skipped_files.dedup();
        self.partial_files.sort();
        self.partial_files.dedup();
        self.duplicate_classes.sort();
        self.duplicate_classes.dedup();
    }

    /// One human-readable line per event, in a stable order.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (path, why) in &self.skipped_files {
            out.push(format!("skipped {}: {why}", path.display()));
        }
        for (path, errors) in &self.partial_files {
            out.push(format!("partial parse {}: {errors} syntax error region(s) ignored", path.display()));
        }
        for (name, path) in &self.duplicate_classes {
            out.push(format!("duplicate class {name} in {} ignored", path.display()));
        }
        for (path, name) in &self.unresolved {
            out.push(format!("unresolved {name} in {}", path.display()));
        }
        out
    }
}
