//! Pattern definition files.
//!
//! A definition names a set of roles, each with an abstraction constraint and
//! a free-text label, followed by the role-to-role connections an instance
//! must exhibit:
//!
//! ```text
//! Observer
//! A Normal Concrete Observer
//! B Abstracted Observer
//! C Any Subject
//! End_Members
//! A inherits B
//! A calls C
//! C references B
//! End_Connections
//! ```
//!
//! Constraint kinds are capitalized and connection keywords lowercase; there
//! is no case folding. Blank lines are ignored anywhere.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::model::{ConnectionKind, ConstraintKind};

pub const END_MEMBERS: &str = "End_Members";
pub const END_CONNECTIONS: &str = "End_Connections";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid pattern: {message}")]
    Validation { line: usize, message: String },
}

impl PatternError {
    pub fn line(&self) -> usize {
        match self {
            PatternError::Syntax { line, .. } | PatternError::Validation { line, .. } => *line,
        }
    }

    fn syntax(line: usize, message: impl Into<String>) -> Self {
        PatternError::Syntax {
            line,
            message: message.into(),
        }
    }

    fn validation(line: usize, message: impl Into<String>) -> Self {
        PatternError::Validation {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum PatternLoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}", render_file_errors(.0))]
    Parse(Vec<FileError>),
    #[error("pattern `{name}` defined in both {} and {}", first.display(), second.display())]
    DuplicatePattern {
        name: String,
        first: PathBuf,
        second: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError {
    pub path: PathBuf,
    pub error: PatternError,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path.display(), self.error)
    }
}

fn render_file_errors(errors: &[FileError]) -> String {
    errors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

/// Role token, e.g. `A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoleId(String);

impl RoleId {
    pub fn new(token: &str) -> Option<RoleId> {
        let mut chars = token.chars();
        let head_ok = matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_');
        let valid = head_ok
            && chars.all(|c| c.is_alphanumeric() || c == '_')
            && token != END_MEMBERS
            && token != END_CONNECTIONS;
        valid.then(|| RoleId(token.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RoleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberDecl {
    pub role: RoleId,
    pub constraint: ConstraintKind,
    /// Label printed in reports, e.g. "Concrete Observer".
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionDecl {
    pub from: RoleId,
    pub kind: ConnectionKind,
    pub to: RoleId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternDefinition {
    name: String,
    members: Vec<MemberDecl>,
    connections: Vec<ConnectionDecl>,
}

impl PatternDefinition {
    /// Builds a validated definition. Errors carry line 0 since there is no
    /// source text.
    pub fn new(
        name: impl Into<String>,
        members: Vec<MemberDecl>,
        connections: Vec<ConnectionDecl>,
    ) -> Result<Self, PatternError> {
        let name = name.into();
        if name.trim().is_empty() || name.trim() != name || name.contains(['\n', '\r']) {
            return Err(PatternError::validation(0, "pattern name must be a non-empty single trimmed line"));
        }
        for m in &members {
            if m.description.trim() != m.description || m.description.contains(['\n', '\r']) {
                return Err(PatternError::validation(
                    0,
                    format!("description of role {} must be a single trimmed line", m.role),
                ));
            }
        }
        let member_lines = vec![0; members.len()];
        let connection_lines = vec![0; connections.len()];
        validate(&members, &member_lines, &connections, &connection_lines, 0)?;
        Ok(PatternDefinition {
            name,
            members,
            connections,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[MemberDecl] {
        &self.members
    }

    pub fn connections(&self) -> &[ConnectionDecl] {
        &self.connections
    }

    pub fn member(&self, role: &RoleId) -> Option<&MemberDecl> {
        self.members.iter().find(|m| &m.role == role)
    }

    pub fn role_index(&self, role: &RoleId) -> Option<usize> {
        self.members.iter().position(|m| &m.role == role)
    }

    pub fn descriptions(&self) -> BTreeMap<RoleId, String> {
        self.members
            .iter()
            .map(|m| (m.role.clone(), m.description.clone()))
            .collect()
    }
}

fn validate(
    members: &[MemberDecl],
    member_lines: &[usize],
    connections: &[ConnectionDecl],
    connection_lines: &[usize],
    end_members_line: usize,
) -> Result<(), PatternError> {
    if members.is_empty() {
        return Err(PatternError::validation(end_members_line, "pattern declares no members"));
    }
    let mut seen = HashSet::new();
    for (m, &line) in members.iter().zip(member_lines) {
        if !seen.insert(&m.role) {
            return Err(PatternError::validation(line, format!("duplicate role {}", m.role)));
        }
    }
    for (c, &line) in connections.iter().zip(connection_lines) {
        for role in [&c.from, &c.to] {
            if !seen.contains(role) {
                return Err(PatternError::validation(line, format!("undeclared role {role}")));
            }
        }
        if c.from == c.to {
            return Err(PatternError::validation(
                line,
                format!("self-connection {} {} {}", c.from, c.kind, c.to),
            ));
        }
    }
    Ok(())
}

#[derive(PartialEq)]
enum Section {
    Name,
    Members,
    Connections,
    Done,
}

/// Parses and validates one pattern file.
pub fn parse_pattern(text: &str) -> Result<PatternDefinition, PatternError> {
    let mut section = Section::Name;
    let mut name = String::new();
    let mut members = Vec::new();
    let mut member_lines = Vec::new();
    let mut connections = Vec::new();
    let mut connection_lines = Vec::new();
    let mut end_members_line = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match section {
            Section::Name => {
                if line == END_MEMBERS || line == END_CONNECTIONS {
                    return Err(PatternError::syntax(line_no, "missing pattern name"));
                }
                name = line.to_string();
                section = Section::Members;
            }
            Section::Members => {
                if line == END_MEMBERS {
                    end_members_line = line_no;
                    section = Section::Connections;
                    continue;
                }
                if line == END_CONNECTIONS {
                    return Err(PatternError::syntax(line_no, format!("missing {END_MEMBERS}")));
                }
                members.push(parse_member(line, line_no)?);
                member_lines.push(line_no);
            }
            Section::Connections => {
                if line == END_CONNECTIONS {
                    section = Section::Done;
                    continue;
                }
                if line == END_MEMBERS {
                    return Err(PatternError::syntax(line_no, format!("repeated {END_MEMBERS}")));
                }
                connections.push(parse_connection(line, line_no)?);
                connection_lines.push(line_no);
            }
            Section::Done => {
                return Err(PatternError::syntax(
                    line_no,
                    format!("unexpected content after {END_CONNECTIONS}"),
                ));
            }
        }
    }

    match section {
        Section::Name => return Err(PatternError::syntax(last_line.max(1), "empty pattern file")),
        Section::Members => {
            return Err(PatternError::syntax(last_line.max(1), format!("missing {END_MEMBERS}")))
        }
        Section::Connections => {
            return Err(PatternError::syntax(
                last_line.max(1),
                format!("missing {END_CONNECTIONS}"),
            ))
        }
        Section::Done => {}
    }

    validate(
        &members,
        &member_lines,
        &connections,
        &connection_lines,
        end_members_line,
    )?;
    Ok(PatternDefinition {
        name,
        members,
        connections,
    })
}

fn split_token(s: &str) -> Option<(&str, &str)> {
    let s = s.trim_start();
    if s.is_empty() {
        return None;
    }
    let end = s.find(char::is_whitespace).unwrap_or(s.len());
    Some((&s[..end], &s[end..]))
}

fn parse_role(token: &str, line: usize) -> Result<RoleId, PatternError> {
    RoleId::new(token).ok_or_else(|| PatternError::syntax(line, format!("invalid role `{token}`")))
}

fn parse_member(line: &str, line_no: usize) -> Result<MemberDecl, PatternError> {
    let (role, rest) = split_token(line).expect("line is non-blank");
    let (kind, rest) = split_token(rest).ok_or_else(|| {
        PatternError::syntax(line_no, "member line needs `<role> <abstraction type> <description>`")
    })?;
    let constraint = kind
        .parse::<ConstraintKind>()
        .map_err(|_| PatternError::syntax(line_no, format!("unknown abstraction type `{kind}`")))?;
    Ok(MemberDecl {
        role: parse_role(role, line_no)?,
        constraint,
        description: rest.trim().to_string(),
    })
}

fn parse_connection(line: &str, line_no: usize) -> Result<ConnectionDecl, PatternError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [from, keyword, to] = tokens[..] else {
        return Err(PatternError::syntax(
            line_no,
            "connection line needs `<role> <connection> <role>`",
        ));
    };
    let kind = ConnectionKind::from_keyword(keyword)
        .ok_or_else(|| PatternError::syntax(line_no, format!("unknown connection `{keyword}`")))?;
    Ok(ConnectionDecl {
        from: parse_role(from, line_no)?,
        kind,
        to: parse_role(to, line_no)?,
    })
}

/// Renders a definition in the file format accepted by [`parse_pattern`].
pub fn serialize_pattern(pattern: &PatternDefinition) -> String {
    let mut out = String::new();
    out.push_str(&pattern.name);
    out.push('\n');
    for m in &pattern.members {
        let line = format!("{} {} {}", m.role, m.constraint, m.description);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(END_MEMBERS);
    out.push('\n');
    for c in &pattern.connections {
        out.push_str(&format!("{} {} {}\n", c.from, c.kind, c.to));
    }
    out.push_str(END_CONNECTIONS);
    out.push('\n');
    out
}

/// Loads every regular, non-hidden file of `dir` as a pattern definition.
/// The result is sorted by pattern name.
pub fn load_pattern_dir(dir: &Path) -> Result<Vec<PatternDefinition>, PatternLoadError> {
    let io_err = |source| PatternLoadError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        let path = entry.path();
        if !hidden && path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    load_pattern_files(&files)
}

/// Loads a single pattern file or a directory of them.
pub fn load_patterns(path: &Path) -> Result<Vec<PatternDefinition>, PatternLoadError> {
    if path.is_dir() {
        load_pattern_dir(path)
    } else {
        load_pattern_files(&[path.to_path_buf()])
    }
}

fn load_pattern_files(files: &[PathBuf]) -> Result<Vec<PatternDefinition>, PatternLoadError> {
    let mut errors = Vec::new();
    let mut loaded: Vec<(PatternDefinition, PathBuf)> = Vec::new();
    for path in files {
        let text = fs::read_to_string(path).map_err(|source| PatternLoadError::Io {
            path: path.clone(),
            source,
        })?;
        match parse_pattern(&text) {
            Ok(p) => loaded.push((p, path.clone())),
            Err(error) => errors.push(FileError {
                path: path.clone(),
                error,
            }),
        }
    }
    if !errors.is_empty() {
        return Err(PatternLoadError::Parse(errors));
    }
    loaded.sort_by(|a, b| a.0.name.cmp(&b.0.name).then_with(|| a.1.cmp(&b.1)));
    for pair in loaded.windows(2) {
        if pair[0].0.name == pair[1].0.name {
            return Err(PatternLoadError::DuplicatePattern {
                name: pair[0].0.name.clone(),
                first: pair[0].1.clone(),
                second: pair[1].1.clone(),
            });
        }
    }
    Ok(loaded.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const OBSERVER: &str = "Observer\nA Normal Concrete Observer\nB Abstracted Observer\nC Any Subject\nEnd_Members\nA inherits B\nA calls C\nC references B\nEnd_Connections\n";

    const COMMAND: &str = "Command\nA Normal Concrete Command\nB Abstracted Command\nC Normal Receiver\nD Normal Invoker\nEnd_Members\nA inherits B\nA has C\nA calls C\nD has B\nD calls B\nEnd_Connections\n";

    fn role(s: &str) -> RoleId {
        RoleId::new(s).unwrap()
    }

    #[test]
    fn parses_observer() {
        let p = parse_pattern(OBSERVER).unwrap();
        assert_eq!(p.name(), "Observer");
        let kinds: Vec<_> = p.members().iter().map(|m| (m.role.as_str(), m.constraint)).collect();
        assert_eq!(
            kinds,
            [
                ("A", ConstraintKind::Normal),
                ("B", ConstraintKind::Abstracted),
                ("C", ConstraintKind::Any)
            ]
        );
        assert_eq!(p.members()[0].description, "Concrete Observer");
        let conns: Vec<_> = p
            .connections()
            .iter()
            .map(|c| (c.from.as_str(), c.kind, c.to.as_str()))
            .collect();
        assert_eq!(
            conns,
            [
                ("A", ConnectionKind::Inherits, "B"),
                ("A", ConnectionKind::Calls, "C"),
                ("C", ConnectionKind::References, "B")
            ]
        );
    }

    #[test]
    fn parses_command() {
        let p = parse_pattern(COMMAND).unwrap();
        assert_eq!(p.members().len(), 4);
        assert_eq!(p.connections().len(), 5);
        assert_eq!(p.member(&role("D")).unwrap().description, "Invoker");
        assert_eq!(p.connections()[4].kind, ConnectionKind::Calls);
    }

    #[test]
    fn serialize_round_trips_byte_identical() {
        let p = parse_pattern(OBSERVER).unwrap();
        assert_eq!(serialize_pattern(&p), OBSERVER);
        let p = parse_pattern(COMMAND).unwrap();
        assert_eq!(serialize_pattern(&p), COMMAND);
    }

    #[test]
    fn single_member_pattern_has_adjacent_terminators() {
        let p = PatternDefinition::new(
            "Lone",
            vec![MemberDecl {
                role: role("A"),
                constraint: ConstraintKind::Any,
                description: "Thing".into(),
            }],
            vec![],
        )
        .unwrap();
        let text = serialize_pattern(&p);
        assert_eq!(text, "Lone\nA Any Thing\nEnd_Members\nEnd_Connections\n");
        assert_eq!(parse_pattern(&text).unwrap(), p);
    }

    #[test]
    fn blank_lines_and_padding_are_ignored() {
        let padded = "\n  Observer  \n\nA   Normal   Concrete  Observer\nB Abstracted Observer\nC Any Subject\n\nEnd_Members\n A  inherits  B \nA calls C\nC references B\nEnd_Connections\n\n";
        let p = parse_pattern(padded).unwrap();
        assert_eq!(p.name(), "Observer");
        // Descriptions keep their inner spacing verbatim.
        assert_eq!(p.members()[0].description, "Concrete  Observer");
    }

    #[test]
    fn syntax_errors() {
        let missing_members = "Observer\nA Normal X\nA inherits B\n";
        assert!(matches!(
            parse_pattern(missing_members),
            Err(PatternError::Syntax { .. })
        ));
        let no_end = "Observer\nA Normal X\nEnd_Members\n";
        assert!(matches!(parse_pattern(no_end), Err(PatternError::Syntax { line: 3, .. })));
        let flies = "P\nA Normal X\nB Normal Y\nEnd_Members\nA flies B\nEnd_Connections\n";
        let err = parse_pattern(flies).unwrap_err();
        assert_eq!(err, PatternError::syntax(5, "unknown connection `flies`"));
        let upper = "P\nA Normal X\nB Normal Y\nEnd_Members\nA Calls B\nEnd_Connections\n";
        assert!(matches!(parse_pattern(upper), Err(PatternError::Syntax { line: 5, .. })));
        let lower_kind = "P\nA normal X\nEnd_Members\nEnd_Connections\n";
        assert!(matches!(parse_pattern(lower_kind), Err(PatternError::Syntax { line: 2, .. })));
        let trailing = "P\nA Normal X\nEnd_Members\nEnd_Connections\nmore\n";
        assert!(matches!(parse_pattern(trailing), Err(PatternError::Syntax { line: 5, .. })));
        assert!(matches!(parse_pattern(""), Err(PatternError::Syntax { .. })));
        let short = "P\nA\nEnd_Members\nEnd_Connections\n";
        assert!(matches!(parse_pattern(short), Err(PatternError::Syntax { line: 2, .. })));
        let four = "P\nA Normal X\nB Normal Y\nEnd_Members\nA calls B C\nEnd_Connections\n";
        assert!(matches!(parse_pattern(four), Err(PatternError::Syntax { line: 5, .. })));
    }

    #[test]
    fn validation_errors() {
        let undeclared = "P\nA Normal X\nEnd_Members\nA calls B\nEnd_Connections\n";
        assert_eq!(
            parse_pattern(undeclared),
            Err(PatternError::validation(4, "undeclared role B"))
        );
        let dup = "P\nA Normal X\nA Any Y\nEnd_Members\nEnd_Connections\n";
        assert_eq!(parse_pattern(dup), Err(PatternError::validation(3, "duplicate role A")));
        let selfc = "P\nA Normal X\nEnd_Members\nA calls A\nEnd_Connections\n";
        assert!(matches!(parse_pattern(selfc), Err(PatternError::Validation { line: 4, .. })));
        let empty = "P\nEnd_Members\nEnd_Connections\n";
        assert_eq!(
            parse_pattern(empty),
            Err(PatternError::validation(2, "pattern declares no members"))
        );
    }

    #[test]
    fn longer_role_tokens_are_accepted() {
        let text = "Wide\nObserver Normal Concrete\nSubject_2 Any S\nEnd_Members\nObserver calls Subject_2\nEnd_Connections\n";
        let p = parse_pattern(text).unwrap();
        assert_eq!(p.members()[1].role.as_str(), "Subject_2");
        assert_eq!(serialize_pattern(&p), text);
    }

    #[test]
    fn load_dir_sorts_and_rejects_duplicates() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_pattern_dir(dir.path()).unwrap().is_empty());
        fs::write(dir.path().join("observer.txt"), OBSERVER).unwrap();
        fs::write(dir.path().join("command.txt"), COMMAND).unwrap();
        fs::write(dir.path().join(".hidden"), "junk").unwrap();
        let names: Vec<String> = load_pattern_dir(dir.path())
            .unwrap()
            .iter()
            .map(|p| p.name().to_string())
            .collect();
        assert_eq!(names, ["Command", "Observer"]);

        fs::write(dir.path().join("observer2.txt"), OBSERVER).unwrap();
        let err = load_pattern_dir(dir.path()).unwrap_err();
        assert!(matches!(err, PatternLoadError::DuplicatePattern { ref name, .. } if name == "Observer"));
    }

    #[test]
    fn load_dir_aggregates_parse_errors() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("a"), "P\nA Normal X\n").unwrap();
        fs::write(dir.path().join("b"), "Q\nA Weird X\nEnd_Members\nEnd_Connections\n").unwrap();
        match load_pattern_dir(dir.path()).unwrap_err() {
            PatternLoadError::Parse(errors) => {
                assert_eq!(errors.len(), 2);
                assert_eq!(errors[1].error.line(), 2);
                assert!(errors[1].to_string().contains("line 2"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            load_pattern_dir(&dir.path().join("missing")),
            Err(PatternLoadError::Io { .. })
        ));
    }
}
