//! Language-agnostic design-pattern detection: the class graph model, the
//! pattern definition format and the role-assignment matcher.

pub mod matcher;
pub mod model;
pub mod pattern;
pub mod union_find;

pub use matcher::{
    detect, detect_all, detect_all_with, merge, validate_candidate, Binding, CandidateInstance,
    MergeMode, MergedInstance,
};
pub use model::{
    satisfies, AbstractionKind, ClassId, ClassNode, CodeGraph, Connection, ConnectionKind,
    ConstraintKind, DuplicatePolicy, GraphBuilder, Language, ModelError, QualifiedName,
    SourceInfo,
};
pub use pattern::{
    load_pattern_dir, load_patterns, parse_pattern, serialize_pattern, ConnectionDecl, FileError,
    MemberDecl, PatternDefinition, PatternError, PatternLoadError, RoleId,
};
