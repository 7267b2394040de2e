//! Language-agnostic class graph.
//!
//! Every frontend lowers its sources into a [`CodeGraph`]: one [`ClassNode`]
//! per analyzed class and a set of typed, directed [`Connection`]s between
//! them. Graphs are built through a [`GraphBuilder`] and then sealed; a sealed
//! graph is immutable and can be shared freely between readers.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid qualified name `{0}`")]
    InvalidName(String),
    #[error("duplicate class `{0}`")]
    DuplicateClass(QualifiedName),
    #[error("connection {from} {kind} {to} references unknown class `{missing}`")]
    DanglingEndpoint {
        from: QualifiedName,
        to: QualifiedName,
        kind: ConnectionKind,
        missing: QualifiedName,
    },
    #[error("unknown {what} `{value}`")]
    UnknownKeyword { what: &'static str, value: String },
}

/// Fully-qualified class identity: package or namespace path, enclosing
/// classes, then the simple name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QualifiedName {
    segments: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' || c == '$' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '$')
}

impl QualifiedName {
    pub fn new<I, S>(segments: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let segments: Vec<String> = segments.into_iter().map(Into::into).collect();
        if segments.is_empty() || !segments.iter().all(|s| is_identifier(s)) {
            return Err(ModelError::InvalidName(segments.join(".")));
        }
        Ok(QualifiedName { segments })
    }

    /// Parses a dotted (`a.b.C`) or C++-style (`a::b::C`) name.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let text = text.trim();
        let text = text.strip_prefix("::").unwrap_or(text);
        if text.contains("::") {
            Self::new(text.split("::"))
        } else {
            Self::new(text.split('.'))
        }
    }

    pub fn segments(&self) -> &[String] {
        &self.segments
    }

    pub fn simple_name(&self) -> &str {
        self.segments.last().expect("qualified names are never empty")
    }

    pub fn parent(&self) -> Option<QualifiedName> {
        if self.segments.len() < 2 {
            return None;
        }
        Some(QualifiedName {
            segments: self.segments[..self.segments.len() - 1].to_vec(),
        })
    }

    /// Returns `self` extended by `segment`.
    pub fn child(&self, segment: &str) -> Result<QualifiedName, ModelError> {
        let mut segments = self.segments.clone();
        segments.push(segment.to_string());
        QualifiedName::new(segments)
    }

    /// True when the trailing segments of `self` equal `suffix`.
    pub fn ends_with(&self, suffix: &[String]) -> bool {
        !suffix.is_empty()
            && suffix.len() <= self.segments.len()
            && self.segments[self.segments.len() - suffix.len()..] == *suffix
    }
}

impl fmt::Display for QualifiedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.segments.join("."))
    }
}

impl FromStr for QualifiedName {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        QualifiedName::parse(s)
    }
}

/// Instantiability of a concrete class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AbstractionKind {
    Normal,
    Interface,
    Abstract,
}

impl AbstractionKind {
    pub const ALL: [AbstractionKind; 3] = [
        AbstractionKind::Normal,
        AbstractionKind::Interface,
        AbstractionKind::Abstract,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AbstractionKind::Normal => "Normal",
            AbstractionKind::Interface => "Interface",
            AbstractionKind::Abstract => "Abstract",
        }
    }
}

impl fmt::Display for AbstractionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a pattern role demands of the class bound to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintKind {
    Normal,
    Interface,
    Abstract,
    /// Interface or Abstract.
    Abstracted,
    Any,
}

impl ConstraintKind {
    pub const ALL: [ConstraintKind; 5] = [
        ConstraintKind::Normal,
        ConstraintKind::Interface,
        ConstraintKind::Abstract,
        ConstraintKind::Abstracted,
        ConstraintKind::Any,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintKind::Normal => "Normal",
            ConstraintKind::Interface => "Interface",
            ConstraintKind::Abstract => "Abstract",
            ConstraintKind::Abstracted => "Abstracted",
            ConstraintKind::Any => "Any",
        }
    }
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstraintKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstraintKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| ModelError::UnknownKeyword {
                what: "abstraction type",
                value: s.to_string(),
            })
    }
}

/// Whether a class of kind `actual` may be bound to a role constrained by
/// `constraint`.
pub fn satisfies(actual: AbstractionKind, constraint: ConstraintKind) -> bool {
    match constraint {
        ConstraintKind::Any => true,
        ConstraintKind::Abstracted => actual != AbstractionKind::Normal,
        ConstraintKind::Normal => actual == AbstractionKind::Normal,
        ConstraintKind::Interface => actual == AbstractionKind::Interface,
        ConstraintKind::Abstract => actual == AbstractionKind::Abstract,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnectionKind {
    Inherits,
    Has,
    References,
    Creates,
    Uses,
    Calls,
}

impl ConnectionKind {
    pub const ALL: [ConnectionKind; 6] = [
        ConnectionKind::Inherits,
        ConnectionKind::Has,
        ConnectionKind::References,
        ConnectionKind::Creates,
        ConnectionKind::Uses,
        ConnectionKind::Calls,
    ];

    /// Lowercase keyword used by pattern files and graph dumps.
    pub fn keyword(self) -> &'static str {
        match self {
            ConnectionKind::Inherits => "inherits",
            ConnectionKind::Has => "has",
            ConnectionKind::References => "references",
            ConnectionKind::Creates => "creates",
            ConnectionKind::Uses => "uses",
            ConnectionKind::Calls => "calls",
        }
    }

    pub fn from_keyword(keyword: &str) -> Option<ConnectionKind> {
        ConnectionKind::ALL.into_iter().find(|k| k.keyword() == keyword)
    }
}

impl fmt::Display for ConnectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    Java,
    Cpp,
}

impl Language {
    pub fn as_str(self) -> &'static str {
        match self {
            Language::Java => "java",
            Language::Cpp => "cpp",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a class was found. Informational only; never part of identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceInfo {
    pub path: PathBuf,
    pub language: Language,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNode {
    pub name: QualifiedName,
    pub kind: AbstractionKind,
    pub source: SourceInfo,
}

impl ClassNode {
    pub fn new(name: QualifiedName, kind: AbstractionKind, source: SourceInfo) -> Self {
        ClassNode { name, kind, source }
    }
}

/// Directed, typed relationship `from kind to`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Connection {
    pub from: QualifiedName,
    pub to: QualifiedName,
    pub kind: ConnectionKind,
}

impl Connection {
    pub fn new(from: QualifiedName, kind: ConnectionKind, to: QualifiedName) -> Self {
        Connection { from, to, kind }
    }
}

/// How [`GraphBuilder::insert_class`] treats a name that is already present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuplicatePolicy {
    Reject,
    KeepExisting,
    Replace,
}

/// Mutable construction phase of a [`CodeGraph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    classes: BTreeMap<QualifiedName, ClassNode>,
    connections: BTreeSet<Connection>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a class; a second class with the same name is a [`ModelError::DuplicateClass`].
    pub fn add_class(&mut self, node: ClassNode) -> Result<(), ModelError> {
        self.insert_class(node, DuplicatePolicy::Reject).map(|_| ())
    }

    /// Adds a class under an explicit duplicate policy. Returns whether the
    /// stored node is now `node`.
    pub fn insert_class(
        &mut self,
        node: ClassNode,
        policy: DuplicatePolicy,
    ) -> Result<bool, ModelError> {
        if self.classes.contains_key(&node.name) {
            return match policy {
                DuplicatePolicy::Reject => Err(ModelError::DuplicateClass(node.name)),
                DuplicatePolicy::KeepExisting => Ok(false),
                DuplicatePolicy::Replace => {
                    self.classes.insert(node.name.clone(), node);
                    Ok(true)
                }
            };
        }
        self.classes.insert(node.name.clone(), node);
        Ok(true)
    }

    pub fn contains_class(&self, name: &QualifiedName) -> bool {
        self.classes.contains_key(name)
    }

    /// Inserts an edge (idempotent). Returns `true` if it was not present yet.
    pub fn add_connection(&mut self, edge: Connection) -> Result<bool, ModelError> {
        for end in [&edge.from, &edge.to] {
            if !self.classes.contains_key(end) {
                return Err(ModelError::DanglingEndpoint {
                    missing: end.clone(),
                    from: edge.from.clone(),
                    to: edge.to.clone(),
                    kind: edge.kind,
                });
            }
        }
        Ok(self.connections.insert(edge))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn seal(self) -> CodeGraph {
        CodeGraph::from_parts(self.classes, self.connections)
    }
}

/// Dense index of a class inside a sealed [`CodeGraph`]. Ids follow the
/// canonical (sorted) order of qualified names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(pub u32);

impl ClassId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Sealed, immutable class graph.
#[derive(Debug, Clone)]
pub struct CodeGraph {
    classes: Vec<ClassNode>,
    ids: HashMap<QualifiedName, ClassId>,
    connections: BTreeSet<Connection>,
    edges: HashSet<(ClassId, ClassId, ConnectionKind)>,
    outgoing: Vec<Vec<(ConnectionKind, ClassId)>>,
    incoming: Vec<Vec<(ConnectionKind, ClassId)>>,
}

impl PartialEq for CodeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.classes == other.classes && self.connections == other.connections
    }
}

impl Eq for CodeGraph {}

impl Default for CodeGraph {
    fn default() -> Self {
        GraphBuilder::new().seal()
    }
}

impl CodeGraph {
    fn from_parts(
        classes: BTreeMap<QualifiedName, ClassNode>,
        connections: BTreeSet<Connection>,
    ) -> Self {
        let classes: Vec<ClassNode> = classes.into_values().collect();
        let ids: HashMap<QualifiedName, ClassId> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.clone(), ClassId(i as u32)))
            .collect();
        let mut edges = HashSet::with_capacity(connections.len());
        let mut outgoing = vec![Vec::new(); classes.len()];
        let mut incoming = vec![Vec::new(); classes.len()];
        for c in &connections {
            let from = ids[&c.from];
            let to = ids[&c.to];
            edges.insert((from, to, c.kind));
            outgoing[from.index()].push((c.kind, to));
            incoming[to.index()].push((c.kind, from));
        }
        CodeGraph {
            classes,
            ids,
            connections,
            edges,
            outgoing,
            incoming,
        }
    }

    pub fn classes(&self) -> &[ClassNode] {
        &self.classes
    }

    pub fn connections(&self) -> impl Iterator<Item = &Connection> {
        self.connections.iter()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn connection_count(&self) -> usize {
        self.connections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn id_of(&self, name: &QualifiedName) -> Option<ClassId> {
        self.ids.get(name).copied()
    }

    pub fn class(&self, id: ClassId) -> &ClassNode {
        &self.classes[id.index()]
    }

    pub fn get(&self, name: &QualifiedName) -> Option<&ClassNode> {
        self.id_of(name).map(|id| self.class(id))
    }

    pub fn has_connection(
        &self,
        from: &QualifiedName,
        to: &QualifiedName,
        kind: ConnectionKind,
    ) -> bool {
        match (self.id_of(from), self.id_of(to)) {
            (Some(f), Some(t)) => self.has_edge(f, t, kind),
            _ => false,
        }
    }

    pub fn has_edge(&self, from: ClassId, to: ClassId, kind: ConnectionKind) -> bool {
        self.edges.contains(&(from, to, kind))
    }

    pub fn outgoing(&self, id: ClassId) -> &[(ConnectionKind, ClassId)] {
        &self.outgoing[id.index()]
    }

    pub fn incoming(&self, id: ClassId) -> &[(ConnectionKind, ClassId)] {
        &self.incoming[id.index()]
    }

    /// Line-oriented canonical form: `CLASS <name> <kind>` and
    /// `EDGE <from> <kind> <to>`, sorted lexicographically, newline-terminated.
    pub fn canonical_text(&self) -> String {
        let mut lines: Vec<String> = self
            .classes
            .iter()
            .map(|c| format!("CLASS {} {}", c.name, c.kind))
            .chain(
                self.connections
                    .iter()
                    .map(|e| format!("EDGE {} {} {}", e.from, e.kind, e.to)),
            )
            .collect();
        lines.sort();
        let mut out = String::new();
        for line in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}
