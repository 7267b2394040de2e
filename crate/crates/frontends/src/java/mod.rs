//! Java frontend built on the tree-sitter Java grammar.
//!
//! Every named class, interface, enum and record becomes a node, including
//! member and local classes (named `Outer.Inner`). Anonymous classes are not
//! nodes; whatever their bodies create or call is credited to the enclosing
//! named class.

mod body;

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use dpscan_core::{
    AbstractionKind, ClassNode, Connection, ConnectionKind, DuplicatePolicy, GraphBuilder,
    Language, QualifiedName, SourceInfo,
};
use rayon::prelude::*;
use tree_sitter::{Node, Tree};

use crate::discover::{discover_sources, read_sources};
use crate::members::{ClassMembers, FieldInfo, MethodInfo, Project};
use crate::symbols::SymbolTable;
use crate::ts;
use crate::{sorted_unique, Diagnostics, FrontendError, ParseOutcome, SourceFile};

/// Everything in scope when a type name is spelled inside a class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JavaContext {
    pub package: Vec<String>,
    /// `import a.b.C;` maps `C` to `[a, b, C]`.
    pub single_imports: HashMap<String, Vec<String>>,
    /// `import a.b.*;` contributes `[a, b]`.
    pub on_demand_imports: Vec<Vec<String>>,
    /// Lexically enclosing named classes, outermost first, ending with the
    /// class the name appears in.
    pub enclosing: Vec<QualifiedName>,
    pub type_params: HashSet<String>,
}

/// Resolves a (possibly dotted) type name as spelled in source. Type
/// parameters and names outside the parsed project resolve to `None`.
pub fn resolve_name_java(spelled: &str, ctx: &JavaContext, table: &SymbolTable) -> Option<QualifiedName> {
    let segs: Vec<String> = spelled.split('.').map(|s| s.trim().to_string()).collect();
    resolve_segments(&segs, ctx, &[], table)
}

fn resolve_segments(
    spelled: &[String],
    ctx: &JavaContext,
    extra_type_params: &[String],
    table: &SymbolTable,
) -> Option<QualifiedName> {
    let first = spelled.first()?;
    if spelled.len() == 1 && (ctx.type_params.contains(first) || extra_type_params.contains(first)) {
        return None;
    }
    let join = |prefix: &[String], rest: &[String]| -> Vec<String> {
        prefix.iter().chain(rest).cloned().collect()
    };
    if spelled.len() > 1 {
        if let Some(q) = table.lookup(spelled) {
            return Some(q);
        }
    }
    for outer in ctx.enclosing.iter().rev() {
        if let Some(q) = table.lookup(&join(outer.segments(), spelled)) {
            return Some(q);
        }
        if outer.simple_name() == first {
            if let Some(q) = table.lookup(&join(outer.segments(), &spelled[1..])) {
                return Some(q);
            }
        }
    }
    if let Some(q) = table.lookup(&join(&ctx.package, spelled)) {
        return Some(q);
    }
    if let Some(target) = ctx.single_imports.get(first) {
        if let Some(q) = table.lookup(&join(target, &spelled[1..])) {
            return Some(q);
        }
    }
    let mut on_demand = ctx
        .on_demand_imports
        .iter()
        .filter_map(|pkg| table.lookup(&join(pkg, spelled)));
    if let Some(q) = on_demand.next() {
        if on_demand.all(|other| other == q) {
            return Some(q);
        }
    }
    table.unique_suffix_match(spelled)
}

pub fn parse_java_project(roots: &[PathBuf]) -> Result<ParseOutcome, FrontendError> {
    let files = discover_sources(roots, &[Language::Java])?;
    Ok(parse_java_files(&files))
}

pub fn parse_java_files(paths: &[PathBuf]) -> ParseOutcome {
    let (sources, diagnostics) = read_sources(paths);
    let mut outcome = analyze_java(sources);
    outcome.diagnostics.merge(diagnostics);
    outcome.diagnostics.normalize();
    outcome
}

/// Builds the graph for a set of in-memory Java sources.
pub fn analyze_java(sources: Vec<SourceFile>) -> ParseOutcome {
    let sources = sorted_unique(sources);
    let mut diagnostics = Diagnostics::default();

    let parsed: Vec<Option<ParsedFile>> = sources.par_iter().map(ParsedFile::parse).collect();
    let mut files = Vec::new();
    for (src, p) in sources.iter().zip(parsed) {
        match p {
            Some(p) => {
                if p.errors > 0 {
                    diagnostics.partial_files.push((src.path.clone(), p.errors));
                }
                files.push(p);
            }
            None => diagnostics
                .skipped_files
                .push((src.path.clone(), "parser produced no tree".into())),
        }
    }

    // First declaration in path order wins.
    let mut table = SymbolTable::new();
    let mut builder = GraphBuilder::new();
    let mut winners: HashSet<(usize, usize)> = HashSet::new();
    for (fi, file) in files.iter().enumerate() {
        for (ti, raw) in file.types.iter().enumerate() {
            let node = ClassNode::new(
                raw.name.clone(),
                raw.kind,
                SourceInfo {
                    path: file.path.clone(),
                    language: Language::Java,
                },
            );
            match builder.insert_class(node, DuplicatePolicy::KeepExisting) {
                Ok(true) => {
                    table.insert(raw.name.clone());
                    winners.insert((fi, ti));
                }
                _ => diagnostics
                    .duplicate_classes
                    .push((raw.name.to_string(), file.path.clone())),
            }
        }
    }

    let mut classes = HashMap::new();
    let mut edges = Vec::new();
    for (fi, file) in files.iter().enumerate() {
        for (ti, raw) in file.types.iter().enumerate() {
            if winners.contains(&(fi, ti)) {
                let resolved = raw.resolve(&table, &file.path, &mut edges, &mut diagnostics);
                classes.insert(raw.name.clone(), resolved);
            }
        }
    }
    let project = Project { table, classes };

    let body_results: Vec<(Vec<Connection>, Diagnostics)> = files
        .par_iter()
        .enumerate()
        .map(|(fi, file)| body::analyze_file(&project, file, |ti| winners.contains(&(fi, ti))))
        .collect();
    for (found, diag) in body_results {
        edges.extend(found);
        diagnostics.merge(diag);
    }
    for edge in edges {
        builder
            .add_connection(edge)
            .expect("edge endpoints come from the symbol table");
    }
    diagnostics.normalize();
    ParseOutcome {
        graph: builder.seal(),
        diagnostics,
    }
}

pub(crate) struct ParsedFile {
    pub path: PathBuf,
    pub text: String,
    pub tree: Tree,
    pub types: Vec<RawType>,
    pub errors: usize,
}

impl ParsedFile {
    fn parse(src: &SourceFile) -> Option<ParsedFile> {
        let tree = ts::parse(tree_sitter_java::LANGUAGE.into(), &src.text)?;
        let root = tree.root_node();
        let errors = ts::error_count(root);
        let mut types = Vec::new();
        for site in type_sites(root, &src.text) {
            types.push(RawType::collect(&site, &src.text));
        }
        Some(ParsedFile {
            path: src.path.clone(),
            text: src.text.clone(),
            tree,
            types,
            errors,
        })
    }
}

/// A named type declaration together with its resolution context.
pub(crate) struct TypeSite<'t> {
    pub node: Node<'t>,
    pub name: QualifiedName,
    pub ctx: Arc<JavaContext>,
}

const TYPE_DECLS: &[&str] = &[
    "class_declaration",
    "interface_declaration",
    "enum_declaration",
    "record_declaration",
];

/// All named type declarations in a file, in source order. Body analysis
/// walks the same list, so indices line up between the passes.
pub(crate) fn type_sites<'t>(root: Node<'t>, src: &str) -> Vec<TypeSite<'t>> {
    let mut base = JavaContext::default();
    for child in ts::named_children(root) {
        match child.kind() {
            "package_declaration" => {
                if let Some(name) = ts::named_children(child)
                    .into_iter()
                    .find(|n| matches!(n.kind(), "scoped_identifier" | "identifier"))
                {
                    base.package = dotted(ts::text(name, src));
                }
            }
            "import_declaration" => {
                let parts = ts::children(child);
                if parts.iter().any(|p| p.kind() == "static") {
                    continue;
                }
                let Some(name) = parts
                    .iter()
                    .find(|n| matches!(n.kind(), "scoped_identifier" | "identifier"))
                else {
                    continue;
                };
                let segs = dotted(ts::text(*name, src));
                if parts.iter().any(|p| p.kind() == "asterisk") {
                    base.on_demand_imports.push(segs);
                } else if let Some(last) = segs.last() {
                    base.single_imports.insert(last.clone(), segs.clone());
                }
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    collect_sites(root, src, &base, None, &mut out);
    out
}

fn dotted(text: &str) -> Vec<String> {
    text.split('.')
        .map(|s| s.chars().filter(|c| !c.is_whitespace()).collect())
        .collect()
}

fn collect_sites<'t>(
    node: Node<'t>,
    src: &str,
    ctx: &JavaContext,
    owner: Option<&QualifiedName>,
    out: &mut Vec<TypeSite<'t>>,
) {
    for child in ts::named_children(node) {
        if TYPE_DECLS.contains(&child.kind()) {
            let Some(name_node) = ts::field(child, "name") else { continue };
            let simple = ts::text(name_node, src);
            let name = match owner {
                Some(o) => o.child(simple),
                None => QualifiedName::new(ctx.package.iter().map(String::as_str).chain([simple])),
            };
            let Ok(name) = name else { continue };
            let mut inner = ctx.clone();
            inner.enclosing.push(name.clone());
            if let Some(tp) = ts::field(child, "type_parameters") {
                for p in ts::named_children(tp) {
                    if let Some(id) = ts::named_children(p).into_iter().find(|n| n.kind() == "type_identifier") {
                        inner.type_params.insert(ts::text(id, src).to_string());
                    }
                }
            }
            let index = out.len();
            out.push(TypeSite {
                node: child,
                name: name.clone(),
                ctx: Arc::new(inner.clone()),
            });
            debug_assert_eq!(out[index].name, name);
            if let Some(body) = ts::field(child, "body") {
                collect_sites(body, src, &inner, Some(&name), out);
            }
        } else if child.kind() == "annotation_type_declaration" {
            continue;
        } else {
            collect_sites(child, src, ctx, owner, out);
        }
    }
}

pub(crate) fn has_modifier(decl: Node<'_>, keyword: &str) -> bool {
    ts::named_children(decl)
        .into_iter()
        .filter(|c| c.kind() == "modifiers")
        .any(|m| ts::children(m).iter().any(|t| t.kind() == keyword))
}

/// The class-like name a type node refers to, or `None` for primitives,
/// arrays and `void`. Generic arguments are erased to the head type.
pub(crate) fn spell_type(node: Node<'_>, src: &str) -> Option<Vec<String>> {
    match node.kind() {
        "type_identifier" => Some(vec![ts::text(node, src).to_string()]),
        "scoped_type_identifier" => {
            let mut segs = Vec::new();
            for part in ts::named_children(node) {
                match part.kind() {
                    "annotation" | "marker_annotation" => {}
                    _ => segs.extend(spell_type(part, src)?),
                }
            }
            Some(segs)
        }
        "generic_type" => ts::named_children(node)
            .into_iter()
            .find(|c| matches!(c.kind(), "type_identifier" | "scoped_type_identifier"))
            .and_then(|head| spell_type(head, src)),
        "annotated_type" => ts::named_children(node)
            .into_iter()
            .last()
            .and_then(|t| spell_type(t, src)),
        _ => None,
    }
}

pub(crate) struct RawMember {
    pub name: String,
    pub ty: Option<Vec<String>>,
    pub is_static: bool,
}

pub(crate) struct RawMethod {
    pub name: String,
    pub ret: Option<Vec<String>>,
    pub params: Vec<Option<Vec<String>>>,
    pub varargs: bool,
    pub is_static: bool,
    pub is_constructor: bool,
    pub type_params: Vec<String>,
}

pub(crate) struct RawType {
    pub name: QualifiedName,
    pub kind: AbstractionKind,
    pub ctx: Arc<JavaContext>,
    pub superclass: Option<Vec<String>>,
    pub interfaces: Vec<Vec<String>>,
    pub fields: Vec<RawMember>,
    pub methods: Vec<RawMethod>,
}

impl RawType {
    fn collect(site: &TypeSite<'_>, src: &str) -> RawType {
        let node = site.node;
        let kind = match node.kind() {
            "interface_declaration" => AbstractionKind::Interface,
            "class_declaration" if has_modifier(node, "abstract") => AbstractionKind::Abstract,
            _ => AbstractionKind::Normal,
        };
        let mut raw = RawType {
            name: site.name.clone(),
            kind,
            ctx: site.ctx.clone(),
            superclass: None,
            interfaces: Vec::new(),
            fields: Vec::new(),
            methods: Vec::new(),
        };
        if let Some(sc) = ts::field(node, "superclass") {
            raw.superclass = ts::named_children(sc).into_iter().find_map(|t| spell_type(t, src));
        }
        let super_lists = ts::named_children(node)
            .into_iter()
            .filter(|c| matches!(c.kind(), "super_interfaces" | "extends_interfaces"));
        for list in super_lists {
            for tl in ts::named_children(list) {
                for t in ts::named_children(tl) {
                    raw.interfaces.extend(spell_type(t, src));
                }
            }
        }
        if node.kind() == "record_declaration" {
            if let Some(params) = ts::field(node, "parameters") {
                for p in ts::named_children(params) {
                    if let (Some(t), Some(n)) = (ts::field(p, "type"), ts::field(p, "name")) {
                        raw.fields.push(RawMember {
                            name: ts::text(n, src).to_string(),
                            ty: spell_type(t, src),
                            is_static: false,
                        });
                    }
                }
            }
        }
        if let Some(body) = ts::field(node, "body") {
            raw.collect_members(body, src, node.kind() == "interface_declaration");
        }
        raw
    }

    fn collect_members(&mut self, body: Node<'_>, src: &str, in_interface: bool) {
        for member in ts::named_children(body) {
            match member.kind() {
                "enum_body_declarations" => self.collect_members(member, src, in_interface),
                "field_declaration" | "constant_declaration" => {
                    let is_static = in_interface
                        || member.kind() == "constant_declaration"
                        || has_modifier(member, "static");
                    let ty = ts::field(member, "type").and_then(|t| spell_type(t, src));
                    for decl in ts::fields(member, "declarator") {
                        let Some(name) = ts::field(decl, "name") else { continue };
                        let is_array = ts::field(decl, "dimensions").is_some();
                        self.fields.push(RawMember {
                            name: ts::text(name, src).to_string(),
                            ty: if is_array { None } else { ty.clone() },
                            is_static,
                        });
                    }
                }
                "method_declaration" | "constructor_declaration" | "compact_constructor_declaration" => {
                    let is_constructor = member.kind() != "method_declaration";
                    let Some(name) = ts::field(member, "name") else { continue };
                    let mut method = RawMethod {
                        name: ts::text(name, src).to_string(),
                        ret: None,
                        params: Vec::new(),
                        varargs: false,
                        is_static: has_modifier(member, "static"),
                        is_constructor,
                        type_params: Vec::new(),
                    };
                    if !is_constructor {
                        let array_return = ts::field(member, "dimensions").is_some();
                        method.ret = ts::field(member, "type")
                            .and_then(|t| spell_type(t, src))
                            .filter(|_| !array_return);
                    }
                    if let Some(tp) = ts::field(member, "type_parameters") {
                        for p in ts::named_children(tp) {
                            if let Some(id) = ts::named_children(p)
                                .into_iter()
                                .find(|n| n.kind() == "type_identifier")
                            {
                                method.type_params.push(ts::text(id, src).to_string());
                            }
                        }
                    }
                    if let Some(params) = ts::field(member, "parameters") {
                        for p in ts::named_children(params) {
                            match p.kind() {
                                "formal_parameter" => {
                                    let is_array = ts::field(p, "dimensions").is_some();
                                    method.params.push(
                                        ts::field(p, "type")
                                            .and_then(|t| spell_type(t, src))
                                            .filter(|_| !is_array),
                                    );
                                }
                                "spread_parameter" => {
                                    method.varargs = true;
                                    method.params.push(None);
                                }
                                _ => {}
                            }
                        }
                    }
                    self.methods.push(method);
                }
                _ => {}
            }
        }
    }

    /// Resolves the collected declarations, emitting the declaration-level
    /// edges (inherits, has, references, uses).
    fn resolve(
        &self,
        table: &SymbolTable,
        path: &Path,
        edges: &mut Vec<Connection>,
        diagnostics: &mut Diagnostics,
    ) -> (ClassMembers, JavaClassContext) {
        let mut resolve = |spelled: &Option<Vec<String>>, tparams: &[String]| -> Option<QualifiedName> {
            let spelled = spelled.as_ref()?;
            let hit = resolve_segments(spelled, &self.ctx, tparams, table);
            let is_tparam = spelled.len() == 1
                && (self.ctx.type_params.contains(&spelled[0]) || tparams.contains(&spelled[0]));
            if hit.is_none() && !is_tparam && spelled[0] != "var" {
                diagnostics
                    .unresolved
                    .insert((path.to_path_buf(), spelled.join(".")));
            }
            hit
        };
        let edge = |kind, to: &QualifiedName| Connection::new(self.name.clone(), kind, to.clone());

        let superclass = resolve(&self.superclass, &[]);
        let mut supers: Vec<QualifiedName> = superclass.iter().cloned().collect();
        for i in &self.interfaces {
            if let Some(q) = resolve(&Some(i.clone()), &[]) {
                if !supers.contains(&q) {
                    supers.push(q);
                }
            }
        }
        for s in &supers {
            edges.push(edge(ConnectionKind::Inherits, s));
        }

        let mut fields = HashMap::new();
        for f in &self.fields {
            let ty = resolve(&f.ty, &[]);
            if let (Some(t), false) = (&ty, f.is_static) {
                edges.push(edge(ConnectionKind::Has, t));
            }
            fields.entry(f.name.clone()).or_insert(FieldInfo {
                ty,
                is_static: f.is_static,
            });
        }

        let mut methods = Vec::new();
        for m in &self.methods {
            let ret = resolve(&m.ret, &m.type_params);
            let params: Vec<_> = m.params.iter().map(|p| resolve(p, &m.type_params)).collect();
            if !m.is_static && !m.is_constructor {
                if let Some(r) = &ret {
                    edges.push(edge(ConnectionKind::Uses, r));
                }
                for p in params.iter().flatten() {
                    edges.push(edge(ConnectionKind::References, p));
                }
            }
            let arity = m.params.len();
            methods.push(MethodInfo {
                name: m.name.clone(),
                min_arity: if m.varargs { arity - 1 } else { arity },
                max_arity: (!m.varargs).then_some(arity),
                ret,
                is_static: m.is_static,
                is_constructor: m.is_constructor,
            });
        }

        let members = ClassMembers {
            name: self.name.clone(),
            supers,
            fields,
            methods,
        };
        let ctx = JavaClassContext {
            ctx: self.ctx.clone(),
            superclass,
        };
        (members, ctx)
    }
}

/// Java-specific data kept next to the shared member signatures.
pub(crate) struct JavaClassContext {
    pub ctx: Arc<JavaContext>,
    pub superclass: Option<QualifiedName>,
}

pub(crate) type JavaProject = Project<JavaClassContext>;
