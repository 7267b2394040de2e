//! Source frontends: each one parses a source tree without compiling it and
//! lowers the classes it finds into a sealed [`CodeGraph`].
//!
//! Both frontends run the same two passes. The first collects declarations
//! (classes, supertypes, fields, method signatures) from every file into a
//! symbol table; the second walks method bodies with that table available to
//! resolve receivers of calls and constructor invocations. Files are parsed
//! in parallel and merged in sorted path order, so the result never depends
//! on discovery order.

pub mod cpp;
mod diagnostics;
mod discover;
mod members;
pub mod java;
mod symbols;
mod ts;


use dpscan_core::CodeGraph;

pub use diagnostics::Diagnostics;
pub use discover::{discover_sources, language_of, read_sources, FrontendError, SourceFile};
pub use symbols::SymbolTable;

/// A sealed graph plus everything that was skipped or dropped on the way.
#[derive(Debug, Clone, Default)]
pub struct ParseOutcome {
    pub graph: CodeGraph,
    pub diagnostics: Diagnostics,
}

pub use cpp::{analyze_cpp, parse_cpp_files, parse_cpp_project};
pub use java::{analyze_java, parse_java_files, parse_java_project};

pub(crate) fn sorted_unique(mut sources: Vec<SourceFile>) -> Vec<SourceFile> {
    sources.sort_by(|a, b| a.path.cmp(&b.path));
    sources.dedup_by(|a, b| a.path == b.path);
    sources
}

