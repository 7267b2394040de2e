use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use dpscan_core::Language;
use rayon::prelude::*;
use thiserror::Error;
use walkdir::WalkDir;

use crate::Diagnostics;

#[derive(Debug, Error)]
pub enum FrontendError {
    #[error("source root {} does not exist", .0.display())]
    MissingRoot(PathBuf),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: PathBuf,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<PathBuf>, text: impl Into<String>) -> Self {
        SourceFile {
            path: path.into(),
            text: text.into(),
        }
    }
}

pub const JAVA_EXTENSIONS: &[&str] = &["java"];
pub const CPP_EXTENSIONS: &[&str] = &["h", "hpp", "hh", "cpp", "cc", "cxx"];

/// Language implied by a file extension, if supported.
pub fn language_of(path: &Path) -> Option<Language> {
    let ext = path.extension()?.to_str()?;
    if JAVA_EXTENSIONS.contains(&ext) {
        Some(Language::Java)
    } else if CPP_EXTENSIONS.contains(&ext) {
        Some(Language::Cpp)
    } else {
        None
    }
}

/// Every file below `roots` (files or directories) whose language is one of
/// `languages`, sorted and deduplicated.
pub fn discover_sources(roots: &[PathBuf], languages: &[Language]) -> Result<Vec<PathBuf>, FrontendError> {
    let mut files = Vec::new();
    for root in roots {
        if !root.exists() {
            return Err(FrontendError::MissingRoot(root.clone()));
        }
        for entry in WalkDir::new(root).follow_links(true) {
            let entry = entry.map_err(|e| FrontendError::Io {
                path: e.path().unwrap_or(root).to_path_buf(),
                source: e
                    .into_io_error()
                    .unwrap_or_else(|| io::Error::other("filesystem loop")),
            })?;
            if entry.file_type().is_file()
                && language_of(entry.path()).is_some_and(|l| languages.contains(&l))
            {
                files.push(entry.into_path());
            }
        }
    }
    files.sort();
    files.dedup();
    Ok(files)
}

/// Reads files in parallel. Unreadable or non-UTF-8 files become diagnostics.
pub fn read_sources(paths: &[PathBuf]) -> (Vec<SourceFile>, Diagnostics) {
    let results: Vec<Result<SourceFile, (PathBuf, String)>> = paths
        .par_iter()
        .map(|p| match fs::read(p) {
            Ok(bytes) => String::from_utf8(bytes)
                .map(|text| SourceFile::new(p.clone(), text))
                .map_err(|_| (p.clone(), "not valid UTF-8".to_string())),
            Err(e) => Err((p.clone(), e.to_string())),
        })
        .collect();
    let mut diagnostics = Diagnostics::default();
    let mut sources = Vec::new();
    for r in results {
        match r {
            Ok(s) => sources.push(s),
            Err(skip) => diagnostics.skipped_files.push(skip),
        }
    }
    (sources, diagnostics)
}
