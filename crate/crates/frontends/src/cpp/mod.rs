//! C++ frontend built on the tree-sitter C++ grammar.
//!
//! Files are parsed one at a time with no preprocessing: includes are not
//! followed and macros are not expanded. The symbol table unifies classes
//! across headers and sources by qualified name, member functions defined
//! out of class (`void A::m() {}`) are credited to `A`, and free functions
//! are ignored.

mod body;

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};

use dpscan_core::{
    AbstractionKind, ClassNode, Connection, ConnectionKind, DuplicatePolicy, GraphBuilder,
    Language, QualifiedName, SourceInfo,
};
use rayon::prelude::*;
use regex::Regex;
use tree_sitter::{Node, Tree};

use crate::discover::{discover_sources, read_sources};
use crate::members::{ClassMembers, FieldInfo, MethodInfo, Project};
use crate::symbols::SymbolTable;
use crate::ts;
use crate::{sorted_unique, Diagnostics, FrontendError, ParseOutcome, SourceFile};

/// Names visible where a C++ type is spelled.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CppContext {
    /// Enclosing namespaces, outermost first.
    pub namespaces: Vec<String>,
    /// Enclosing classes, outermost first.
    pub enclosing: Vec<QualifiedName>,
    /// `using a::B;` maps `B` to `[a, B]`.
    pub using_declarations: HashMap<String, Vec<String>>,
    /// `using namespace a::b;` contributes `[a, b]`.
    pub using_directives: Vec<Vec<String>>,
    pub type_params: HashSet<String>,
}

/// A type name as written: its `::`-separated segments and whether it was
/// anchored at the global namespace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spelled {
    pub segs: Vec<String>,
    pub rooted: bool,
}

impl Spelled {
    fn display(&self) -> String {
        let joined = self.segs.join("::");
        if self.rooted {
            format!("::{joined}")
        } else {
            joined
        }
    }
}

/// Resolves a `::`-separated type name. Template parameters and classes
/// outside the parsed files resolve to `None`.
pub fn resolve_name_cpp(spelled: &str, ctx: &CppContext, table: &SymbolTable) -> Option<QualifiedName> {
    let trimmed = spelled.trim();
    let rooted = trimmed.starts_with("::");
    let segs = trimmed
        .trim_start_matches("::")
        .split("::")
        .map(|s| s.trim().to_string())
        .collect();
    resolve_spelled(&Spelled { segs, rooted }, ctx, table)
}

pub(crate) fn resolve_spelled(spelled: &Spelled, ctx: &CppContext, table: &SymbolTable) -> Option<QualifiedName> {
    let segs = &spelled.segs;
    let first = segs.first()?;
    if spelled.rooted {
        return table.lookup(segs);
    }
    if segs.len() == 1 && ctx.type_params.contains(first) {
        return None;
    }
    let join = |prefix: &[String], rest: &[String]| -> Vec<String> {
        prefix.iter().chain(rest).cloned().collect()
    };
    for outer in ctx.enclosing.iter().rev() {
        if let Some(q) = table.lookup(&join(outer.segments(), segs)) {
            return Some(q);
        }
        if outer.simple_name() == first {
            if let Some(q) = table.lookup(&join(outer.segments(), &segs[1..])) {
                return Some(q);
            }
        }
    }
    for depth in (0..=ctx.namespaces.len()).rev() {
        if let Some(q) = table.lookup(&join(&ctx.namespaces[..depth], segs)) {
            return Some(q);
        }
    }
    if let Some(target) = ctx.using_declarations.get(first) {
        if let Some(q) = table.lookup(&join(target, &segs[1..])) {
            return Some(q);
        }
    }
    let mut via_directives = ctx
        .using_directives
        .iter()
        .filter_map(|ns| table.lookup(&join(ns, segs)));
    if let Some(q) = via_directives.next() {
        if via_directives.all(|other| other == q) {
            return Some(q);
        }
    }
    table.unique_suffix_match(segs)
}

pub fn parse_cpp_project(roots: &[PathBuf]) -> Result<ParseOutcome, FrontendError> {
    let files = discover_sources(roots, &[Language::Cpp])?;
    Ok(parse_cpp_files(&files))
}

pub fn parse_cpp_files(paths: &[PathBuf]) -> ParseOutcome {
    let (sources, diagnostics) = read_sources(paths);
    let mut outcome = analyze_cpp(sources);
    outcome.diagnostics.merge(diagnostics);
    outcome.diagnostics.normalize();
    outcome
}

/// Builds the graph for a set of in-memory C++ sources.
pub fn analyze_cpp(sources: Vec<SourceFile>) -> ParseOutcome {
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

    // Only definitions become nodes; among several, the first path wins.
    let mut table = SymbolTable::new();
    let mut builder = GraphBuilder::new();
    let mut winners: HashSet<(usize, usize)> = HashSet::new();
    for (fi, file) in files.iter().enumerate() {
        for (ci, raw) in file.classes.iter().enumerate() {
            let node = ClassNode::new(
                raw.name.clone(),
                raw.kind,
                SourceInfo {
                    path: file.path.clone(),
                    language: Language::Cpp,
                },
            );
            match builder.insert_class(node, DuplicatePolicy::KeepExisting) {
                Ok(true) => {
                    table.insert(raw.name.clone());
                    winners.insert((fi, ci));
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
        for (ci, raw) in file.classes.iter().enumerate() {
            if winners.contains(&(fi, ci)) {
                let resolved = raw.resolve(&table, &file.path, &mut edges, &mut diagnostics);
                classes.insert(raw.name.clone(), resolved);
            }
        }
    }
    let project = Project { table, classes };

    let body_results: Vec<(Vec<Connection>, Diagnostics)> = files
        .par_iter()
        .enumerate()
        .map(|(fi, file)| body::analyze_file(&project, file, |ci| winners.contains(&(fi, ci))))
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

pub(crate) type CppProject = Project<Arc<CppContext>>;

/// Blanks all-caps export macros written between `class`/`struct` and the
/// class name (`class DLL_API Foo`), which the grammar cannot parse. The
/// macro is overwritten with spaces so byte offsets stay valid.
pub(crate) fn blank_export_macros(text: &str) -> String {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| {
        Regex::new(r"\b(?:class|struct)\s+([A-Z][A-Z0-9_]*[A-Z0-9])\s+([A-Za-z_]\w*)").unwrap()
    });
    let mut out = text.to_string();
    for caps in re.captures_iter(text) {
        if &caps[2] == "final" {
            continue;
        }
        let m = caps.get(1).unwrap();
        out.replace_range(m.range(), &" ".repeat(m.len()));
    }
    out
}

pub(crate) struct ParsedFile {
    pub path: PathBuf,
    pub text: String,
    pub tree: Tree,
    pub classes: Vec<RawClass>,
    pub errors: usize,
}

impl ParsedFile {
    fn parse(src: &SourceFile) -> Option<ParsedFile> {
        let text = blank_export_macros(&src.text);
        let tree = ts::parse(tree_sitter_cpp::LANGUAGE.into(), &text)?;
        let root = tree.root_node();
        let errors = ts::error_count(root);
        let (sites, _) = collect_sites(root, &text);
        let classes = sites.iter().map(|s| RawClass::collect(s, &text)).collect();
        Some(ParsedFile {
            path: src.path.clone(),
            text,
            tree,
            classes,
            errors,
        })
    }
}

pub(crate) struct ClassSite<'t> {
    pub node: Node<'t>,
    pub name: QualifiedName,
    pub ctx: Arc<CppContext>,
}

/// A member function defined outside its class, such as `void A::m() {}`.
pub(crate) struct OutOfClassSite<'t> {
    pub node: Node<'t>,
    pub owner: Spelled,
    pub method: String,
    pub ctx: Arc<CppContext>,
}

/// Class definitions and out-of-class member definitions, in source order.
/// Both passes call this, so indices line up.
pub(crate) fn collect_sites<'t>(root: Node<'t>, src: &str) -> (Vec<ClassSite<'t>>, Vec<OutOfClassSite<'t>>) {
    let mut base = CppContext::default();
    collect_usings(root, src, &mut base);
    let mut classes = Vec::new();
    let mut functions = Vec::new();
    walk_sites(root, src, &base, false, &mut classes, &mut functions);
    (classes, functions)
}

fn collect_usings(node: Node<'_>, src: &str, ctx: &mut CppContext) {
    for child in ts::named_children(node) {
        if child.kind() == "using_declaration" {
            let is_directive = ts::children(child).iter().any(|c| c.kind() == "namespace");
            let Some(target) = ts::named_children(child)
                .into_iter()
                .find(|c| matches!(c.kind(), "identifier" | "qualified_identifier"))
            else {
                continue;
            };
            let segs = qualified_segments(target, src).segs;
            if is_directive {
                ctx.using_directives.push(segs);
            } else if let Some(last) = segs.last() {
                ctx.using_declarations.insert(last.clone(), segs.clone());
            }
        } else {
            collect_usings(child, src, ctx);
        }
    }
}

fn walk_sites<'t>(
    node: Node<'t>,
    src: &str,
    ctx: &CppContext,
    in_class: bool,
    classes: &mut Vec<ClassSite<'t>>,
    functions: &mut Vec<OutOfClassSite<'t>>,
) {
    for child in ts::named_children(node) {
        match child.kind() {
            "namespace_definition" => {
                let mut inner = ctx.clone();
                if let Some(name) = ts::field(child, "name") {
                    inner
                        .namespaces
                        .extend(ts::text(name, src).split("::").map(|s| s.trim().to_string()));
                }
                if let Some(body) = ts::field(child, "body") {
                    walk_sites(body, src, &inner, false, classes, functions);
                }
            }
            "template_declaration" => {
                let mut inner = ctx.clone();
                if let Some(params) = ts::field(child, "parameters") {
                    for p in ts::named_children(params) {
                        if let Some(id) = ts::named_children(p)
                            .into_iter()
                            .find(|n| n.kind() == "type_identifier")
                        {
                            inner.type_params.insert(ts::text(id, src).to_string());
                        }
                    }
                }
                walk_sites(child, src, &inner, in_class, classes, functions);
            }
            "class_specifier" | "struct_specifier" => {
                let (Some(name), Some(body)) = (ts::field(child, "name"), ts::field(child, "body")) else {
                    continue;
                };
                if name.kind() == "template_type" {
                    // Explicit or partial specialization.
                    continue;
                }
                let spelled = qualified_segments(name, src).segs;
                let qn = match ctx.enclosing.last() {
                    Some(outer) => QualifiedName::new(outer.segments().iter().chain(&spelled).cloned()),
                    None => QualifiedName::new(ctx.namespaces.iter().chain(&spelled).cloned()),
                };
                let Ok(qn) = qn else { continue };
                let mut inner = ctx.clone();
                inner.enclosing.push(qn.clone());
                classes.push(ClassSite {
                    node: child,
                    name: qn,
                    ctx: Arc::new(inner.clone()),
                });
                walk_sites(body, src, &inner, true, classes, functions);
            }
            "function_definition" => {
                if in_class {
                    continue;
                }
                let Some(declarator) = function_declarator(child) else { continue };
                let Some(name) = ts::field(declarator, "declarator") else { continue };
                if name.kind() != "qualified_identifier" {
                    continue;
                }
                let mut segs = qualified_segments(name, src);
                let Some(method) = segs.segs.pop() else { continue };
                if segs.segs.is_empty() {
                    continue;
                }
                functions.push(OutOfClassSite {
                    node: child,
                    owner: segs,
                    method,
                    ctx: Arc::new(ctx.clone()),
                });
            }
            "compound_statement" => {}
            _ => walk_sites(child, src, ctx, in_class, classes, functions),
        }
    }
}

/// The `function_declarator` under a definition or declaration, looking
/// through pointer, reference and init declarators.
pub(crate) fn function_declarator(decl: Node<'_>) -> Option<Node<'_>> {
    let mut cur = ts::field(decl, "declarator")?;
    loop {
        match cur.kind() {
            "function_declarator" => return Some(cur),
            "pointer_declarator" | "reference_declarator" | "init_declarator" | "attributed_declarator"
            | "parenthesized_declarator" => {
                cur = ts::field(cur, "declarator").or_else(|| ts::named_children(cur).into_iter().last())?;
            }
            _ => return None,
        }
    }
}

/// Segments of an identifier, qualified identifier, or similar name node.
/// Template arguments are dropped.
pub(crate) fn qualified_segments(node: Node<'_>, src: &str) -> Spelled {
    fn push(node: Node<'_>, src: &str, out: &mut Vec<String>) {
        match node.kind() {
            "qualified_identifier" => {
                if let Some(scope) = ts::field(node, "scope") {
                    push(scope, src, out);
                }
                if let Some(name) = ts::field(node, "name") {
                    push(name, src, out);
                }
            }
            "template_type" | "template_function" | "template_method" => {
                if let Some(name) = ts::field(node, "name") {
                    push(name, src, out);
                }
            }
            _ => out.push(ts::text(node, src).chars().filter(|c| !c.is_whitespace()).collect()),
        }
    }
    let mut segs = Vec::new();
    push(node, src, &mut segs);
    let rooted = node.kind() == "qualified_identifier" && ts::field(node, "scope").is_none();
    Spelled { segs, rooted }
}

const SMART_POINTERS: &[&str] = &["shared_ptr", "unique_ptr", "weak_ptr", "auto_ptr"];

/// The class-like name a type node denotes, with one level of smart
/// pointer unwrapped. `None` for builtins, `auto` and similar.
pub(crate) fn spell_type(node: Node<'_>, src: &str) -> Option<Spelled> {
    match node.kind() {
        "type_identifier" => Some(Spelled {
            segs: vec![ts::text(node, src).to_string()],
            rooted: false,
        }),
        "template_type" => {
            let head = ts::field(node, "name")?;
            if SMART_POINTERS.contains(&ts::text(head, src)) {
                return smart_pointee(node, src);
            }
            spell_type(head, src)
        }
        "qualified_identifier" => {
            let name = ts::field(node, "name")?;
            if name.kind() == "template_type" {
                if let Some(head) = ts::field(name, "name") {
                    if SMART_POINTERS.contains(&ts::text(head, src)) {
                        return smart_pointee(name, src);
                    }
                }
            }
            Some(qualified_segments(node, src))
        }
        "class_specifier" | "struct_specifier" => ts::field(node, "name").and_then(|n| spell_type(n, src)),
        _ => None,
    }
}

fn smart_pointee(template: Node<'_>, src: &str) -> Option<Spelled> {
    let args = ts::field(template, "arguments")?;
    let first = ts::named_children(args).into_iter().next()?;
    if first.kind() != "type_descriptor" {
        return None;
    }
    spell_type(ts::field(first, "type")?, src)
}

/// Looks through pointer and reference declarators. Returns the innermost
/// declarator and whether an array declarator was crossed.
pub(crate) fn unwrap_declarator(mut node: Node<'_>) -> (Node<'_>, bool, bool) {
    let mut array = false;
    let mut indirect = false;
    loop {
        match node.kind() {
            "pointer_declarator" | "reference_declarator" => {
                indirect = true;
                match ts::field(node, "declarator").or_else(|| ts::named_children(node).into_iter().last()) {
                    Some(inner) => node = inner,
                    None => return (node, array, indirect),
                }
            }
            "array_declarator" => {
                array = true;
                match ts::field(node, "declarator") {
                    Some(inner) => node = inner,
                    None => return (node, array, indirect),
                }
            }
            "parenthesized_declarator" | "attributed_declarator" => {
                match ts::named_children(node).into_iter().next() {
                    Some(inner) => node = inner,
                    None => return (node, array, indirect),
                }
            }
            _ => return (node, array, indirect),
        }
    }
}

pub(crate) fn is_static(decl: Node<'_>, src: &str) -> bool {
    ts::named_children(decl)
        .into_iter()
        .any(|c| c.kind() == "storage_class_specifier" && ts::text(c, src) == "static")
}

pub(crate) struct RawMethod {
    pub name: String,
    pub ret: Option<Spelled>,
    pub params: Vec<Option<Spelled>>,
    pub required: usize,
    pub variadic: bool,
    pub is_static: bool,
    pub is_pure: bool,
    pub is_constructor: bool,
}

pub(crate) struct RawField {
    pub name: String,
    pub ty: Option<Spelled>,
    pub is_static: bool,
}

pub(crate) struct RawClass {
    pub name: QualifiedName,
    pub kind: AbstractionKind,
    pub ctx: Arc<CppContext>,
    pub bases: Vec<Spelled>,
    pub fields: Vec<RawField>,
    pub methods: Vec<RawMethod>,
}

/// Interface when every member function is pure virtual and there is no
/// instance state, Abstract when some but not all of that holds, Normal
/// when nothing is pure virtual.
pub(crate) fn classify(methods: &[RawMethod], fields: &[RawField]) -> AbstractionKind {
    let pure = methods.iter().filter(|m| m.is_pure).count();
    if pure == 0 {
        AbstractionKind::Normal
    } else if pure == methods.len() && fields.iter().all(|f| f.is_static) {
        AbstractionKind::Interface
    } else {
        AbstractionKind::Abstract
    }
}

impl RawClass {
    fn collect(site: &ClassSite<'_>, src: &str) -> RawClass {
        let mut raw = RawClass {
            name: site.name.clone(),
            kind: AbstractionKind::Normal,
            ctx: site.ctx.clone(),
            bases: Vec::new(),
            fields: Vec::new(),
            methods: Vec::new(),
        };
        for clause in ts::named_children(site.node).into_iter().filter(|c| c.kind() == "base_class_clause") {
            for base in ts::named_children(clause) {
                if let Some(s) = spell_type(base, src) {
                    raw.bases.push(s);
                }
            }
        }
        if let Some(body) = ts::field(site.node, "body") {
            raw.collect_members(body, src);
        }
        raw.kind = classify(&raw.methods, &raw.fields);
        raw
    }

    fn collect_members(&mut self, body: Node<'_>, src: &str) {
        for member in ts::named_children(body) {
            match member.kind() {
                "field_declaration" | "declaration" => {
                    let is_static = is_static(member, src);
                    let ty = ts::field(member, "type");
                    let pure_default = ts::field(member, "default_value").is_some_and(|v| ts::text(v, src) == "0");
                    for declarator in ts::fields(member, "declarator") {
                        let (core, array, _) = unwrap_declarator(declarator);
                        let pure = pure_default
                            || (core.kind() == "init_declarator"
                                && ts::field(core, "value").is_some_and(|v| ts::text(v, src) == "0"));
                        let core = if core.kind() == "init_declarator" {
                            ts::field(core, "declarator").map_or(core, |d| unwrap_declarator(d).0)
                        } else {
                            core
                        };
                        if core.kind() == "function_declarator" {
                            self.push_method(core, ty, is_static, pure, src);
                        } else if let Some(name) = field_name(core, src) {
                            self.fields.push(RawField {
                                name,
                                ty: if array { None } else { ty.and_then(|t| spell_type(t, src)) },
                                is_static,
                            });
                        }
                    }
                }
                "function_definition" => {
                    if let Some(decl) = function_declarator(member) {
                        self.push_method(decl, ts::field(member, "type"), is_static(member, src), false, src);
                    }
                }
                "template_declaration" | "preproc_if" | "preproc_ifdef" | "preproc_else" | "preproc_elif" => {
                    self.collect_members(member, src)
                }
                _ => {}
            }
        }
    }

    fn push_method(&mut self, declarator: Node<'_>, ret: Option<Node<'_>>, is_static: bool, is_pure: bool, src: &str) {
        let Some(name_node) = ts::field(declarator, "declarator") else { return };
        let name = qualified_segments(name_node, src).segs.pop().unwrap_or_default();
        let is_constructor = ret.is_none() && name == self.name.simple_name();
        let mut method = RawMethod {
            name,
            ret: ret.and_then(|t| spell_type(t, src)),
            params: Vec::new(),
            required: 0,
            variadic: false,
            is_static,
            is_pure,
            is_constructor,
        };
        if let Some(params) = ts::field(declarator, "parameters") {
            for p in ts::children(params) {
                match p.kind() {
                    "parameter_declaration" | "optional_parameter_declaration" => {
                        let ty = ts::field(p, "type");
                        let decl = ts::field(p, "declarator");
                        if decl.is_none() && ty.is_some_and(|t| ts::text(t, src) == "void") {
                            continue;
                        }
                        let array = decl.is_some_and(|d| unwrap_declarator(d).1);
                        method.params.push(ty.and_then(|t| spell_type(t, src)).filter(|_| !array));
                        if p.kind() == "parameter_declaration" {
                            method.required += 1;
                        }
                    }
                    "variadic_parameter_declaration" | "..." | "variadic_parameter" => method.variadic = true,
                    _ => {}
                }
            }
        }
        self.methods.push(method);
    }

    fn resolve(
        &self,
        table: &SymbolTable,
        path: &Path,
        edges: &mut Vec<Connection>,
        diagnostics: &mut Diagnostics,
    ) -> (ClassMembers, Arc<CppContext>) {
        let mut resolve = |spelled: &Option<Spelled>| -> Option<QualifiedName> {
            let spelled = spelled.as_ref()?;
            let hit = resolve_spelled(spelled, &self.ctx, table);
            let is_tparam = spelled.segs.len() == 1 && self.ctx.type_params.contains(&spelled.segs[0]);
            if hit.is_none() && !is_tparam {
                diagnostics.unresolved.insert((path.to_path_buf(), spelled.display()));
            }
            hit
        };
        let edge = |kind, to: &QualifiedName| Connection::new(self.name.clone(), kind, to.clone());

        let mut supers = Vec::new();
        for b in &self.bases {
            if let Some(q) = resolve(&Some(b.clone())) {
                if !supers.contains(&q) {
                    edges.push(edge(ConnectionKind::Inherits, &q));
                    supers.push(q);
                }
            }
        }
        let mut fields = HashMap::new();
        for f in &self.fields {
            let ty = resolve(&f.ty);
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
            let ret = resolve(&m.ret);
            let params: Vec<_> = m.params.iter().map(&mut resolve).collect();
            if !m.is_static && !m.is_constructor {
                if let Some(r) = &ret {
                    edges.push(edge(ConnectionKind::Uses, r));
                }
                for p in params.iter().flatten() {
                    edges.push(edge(ConnectionKind::References, p));
                }
            }
            methods.push(MethodInfo {
                name: m.name.clone(),
                min_arity: m.required,
                max_arity: (!m.variadic).then_some(m.params.len()),
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
        (members, self.ctx.clone())
    }
}

fn field_name(core: Node<'_>, src: &str) -> Option<String> {
    matches!(core.kind(), "field_identifier" | "identifier").then(|| ts::text(core, src).to_string())
}
