//! The detection pipeline behind the `dpscan` binary: pick a frontend, build
//! the class graph, load pattern definitions, match, merge and report.

mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use dpscan_core::{
    detect_all_with, load_patterns, validate_candidate, CodeGraph, Language, MergeMode,
};
use dpscan_frontends::{
    discover_sources, language_of, parse_cpp_files, parse_java_files, FrontendError,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

pub use report::{render_json, render_text, PatternReport, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LanguageChoice {
    Java,
    Cpp,
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub sources: Vec<PathBuf>,
    pub patterns: PathBuf,
    pub language: LanguageChoice,
    pub format: OutputFormat,
    pub merge: bool,
    pub verbose: bool,
    pub dump_graph: Option<PathBuf>,
    /// Shuffles the discovered file list before parsing. Only useful for
    /// checking that output does not depend on discovery order.
    pub discovery_seed: Option<u64>,
}

impl RunConfig {
    pub fn new(sources: Vec<PathBuf>, patterns: PathBuf) -> Self {
        RunConfig {
            sources,
            patterns,
            language: LanguageChoice::Auto,
            format: OutputFormat::Text,
            merge: true,
            verbose: false,
            dump_graph: None,
            discovery_seed: None,
        }
    }
}

/// Why a run failed, mapped onto the process exit status.
#[derive(Debug)]
pub enum RunError {
    /// Bad flags or an unusable configuration (exit 1).
    Usage(String),
    /// Unreadable inputs or invalid pattern files (exit 2).
    Input(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 1,
            RunError::Input(_) => 2,
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Usage(m) | RunError::Input(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for RunError {}

/// Everything a run produced, before rendering.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: Report,
    pub graph: CodeGraph,
}

pub fn execute(config: &RunConfig) -> Result<RunOutput, RunError> {
    if config.sources.is_empty() {
        return Err(RunError::Usage("at least one source root is required".into()));
    }
    let patterns = load_patterns(&config.patterns).map_err(|e| {
        if config.patterns.exists() {
            RunError::Input(format!("invalid pattern definitions:\n{e}"))
        } else {
            RunError::Input(format!("pattern path {} does not exist", config.patterns.display()))
        }
    })?;

    let wanted: &[Language] = match config.language {
        LanguageChoice::Java => &[Language::Java],
        LanguageChoice::Cpp => &[Language::Cpp],
        LanguageChoice::Auto => &[Language::Java, Language::Cpp],
    };
    let mut files = discover_sources(&config.sources, wanted).map_err(|e| match e {
        FrontendError::MissingRoot(_) | FrontendError::Io { .. } => RunError::Input(e.to_string()),
    })?;
    let language = match config.language {
        LanguageChoice::Java => Some(Language::Java),
        LanguageChoice::Cpp => Some(Language::Cpp),
        LanguageChoice::Auto => {
            let has = |l| files.iter().any(|f| language_of(f) == Some(l));
            match (has(Language::Java), has(Language::Cpp)) {
                (true, true) => {
                    return Err(RunError::Usage(
                        "source roots mix Java and C++ files; pass --lang java or --lang cpp".into(),
                    ))
                }
                (true, false) => Some(Language::Java),
                (false, true) => Some(Language::Cpp),
                (false, false) => None,
            }
        }
    };
    if let Some(seed) = config.discovery_seed {
        files.shuffle(&mut StdRng::seed_from_u64(seed));
    }
    let outcome = match language {
        Some(Language::Java) => parse_java_files(&files),
        Some(Language::Cpp) => parse_cpp_files(&files),
        None => Default::default(),
    };
    let graph = outcome.graph;

    let mode = if config.merge { MergeMode::Merge } else { MergeMode::Raw };
    let mut found = detect_all_with(&graph, &patterns, mode);
    let mut report = Report {
        language,
        patterns: Vec::new(),
        diagnostics: outcome.diagnostics,
    };
    for definition in patterns {
        let instances = found.remove(definition.name()).unwrap_or_default();
        for candidate in instances.iter().flat_map(|g| g.members()) {
            assert!(
                validate_candidate(&graph, &definition, candidate),
                "matcher reported an invalid candidate: {candidate:?}"
            );
        }
        report.patterns.push(PatternReport { definition, instances });
    }
    Ok(RunOutput { report, graph })
}

/// Runs the whole pipeline, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let output = match execute(config) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "dpscan: {e}");
            return e.exit_code();
        }
    };
    if let Some(path) = &config.dump_graph {
        if let Err(e) = fs::write(path, output.graph.canonical_text()) {
            let _ = writeln!(err, "dpscan: cannot write graph to {}: {e}", path.display());
            return 2;
        }
    }
    if config.verbose {
        for line in output.report.diagnostics.lines() {
            let _ = writeln!(err, "{line}");
        }
    }
    let rendered = match config.format {
        OutputFormat::Text => render_text(&output.report),
        OutputFormat::Json => render_json(&output.report),
    };
    if out.write_all(rendered.as_bytes()).is_err() {
        return 2;
    }
    0
}
