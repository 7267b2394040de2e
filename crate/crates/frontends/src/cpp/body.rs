//! Second pass over member function bodies: `new`, stack and temporary
//! construction give `creates`; member function invocations give `calls`.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use dpscan_core::{Connection, ConnectionKind, QualifiedName};
use tree_sitter::Node;

use super::{
    collect_sites, function_declarator, is_static, qualified_segments, resolve_spelled, spell_type,
    unwrap_declarator, CppContext, CppProject, ParsedFile, Spelled,
};
use crate::members::ClassMembers;
use crate::ts;
use crate::Diagnostics;

const FACTORIES: &[&str] = &["make_shared", "make_unique"];
const CASTS: &[&str] = &["static_cast", "dynamic_cast", "reinterpret_cast", "const_cast"];

pub(crate) fn analyze_file(
    project: &CppProject,
    file: &ParsedFile,
    is_winner: impl Fn(usize) -> bool,
) -> (Vec<Connection>, Diagnostics) {
    let mut edges = Vec::new();
    let mut diag = Diagnostics::default();
    let (classes, functions) = collect_sites(file.tree.root_node(), &file.text);

    for (ci, site) in classes.iter().enumerate() {
        if !is_winner(ci) {
            continue;
        }
        let Some((info, ctx)) = project.classes.get(&site.name) else { continue };
        let Some(body) = ts::field(site.node, "body") else { continue };
        let mut walker = Walker::new(project, info, ctx.clone(), file);
        walker.inline_members(body);
        edges.extend(walker.edges);
        diag.merge(walker.diag);
    }

    for site in &functions {
        let Some(owner) = resolve_spelled(&site.owner, &site.ctx, &project.table) else { continue };
        let Some((info, owner_ctx)) = project.classes.get(&owner) else { continue };
        let declared: Vec<_> = info.methods.iter().filter(|m| m.name == site.method).collect();
        if !declared.is_empty() && declared.iter().all(|m| m.is_static) {
            continue;
        }
        let mut ctx = (**owner_ctx).clone();
        ctx.using_declarations.extend(site.ctx.using_declarations.clone());
        ctx.using_directives.extend(site.ctx.using_directives.iter().cloned());
        ctx.type_params.extend(site.ctx.type_params.iter().cloned());
        let mut walker = Walker::new(project, info, Arc::new(ctx), file);
        walker.function(site.node);
        edges.extend(walker.edges);
        diag.merge(walker.diag);
    }
    (edges, diag)
}

#[derive(Debug, Clone, PartialEq)]
enum Ty {
    Unknown,
    Obj(QualifiedName),
}

struct Walker<'a> {
    project: &'a CppProject,
    info: &'a ClassMembers,
    ctx: Arc<CppContext>,
    src: &'a str,
    path: &'a Path,
    edges: Vec<Connection>,
    diag: Diagnostics,
    scopes: Vec<HashMap<String, Ty>>,
}

impl<'a> Walker<'a> {
    fn new(project: &'a CppProject, info: &'a ClassMembers, ctx: Arc<CppContext>, file: &'a ParsedFile) -> Self {
        Walker {
            project,
            info,
            ctx,
            src: &file.text,
            path: &file.path,
            edges: Vec::new(),
            diag: Diagnostics::default(),
            scopes: Vec::new(),
        }
    }

    fn text(&self, n: Node<'_>) -> &'a str {
        ts::text(n, self.src)
    }

    fn resolve(&self, s: &Spelled) -> Option<QualifiedName> {
        resolve_spelled(s, &self.ctx, &self.project.table)
    }

    fn resolve_type(&self, t: Node<'_>) -> Option<QualifiedName> {
        spell_type(t, self.src).and_then(|s| self.resolve(&s))
    }

    fn edge(&mut self, kind: ConnectionKind, to: QualifiedName) {
        self.edges.push(Connection::new(self.info.name.clone(), kind, to));
    }

    fn creates(&mut self, t: Node<'_>) -> Ty {
        let Some(spelled) = spell_type(t, self.src) else { return Ty::Unknown };
        match self.resolve(&spelled) {
            Some(q) => {
                self.edge(ConnectionKind::Creates, q.clone());
                Ty::Obj(q)
            }
            None => {
                if !(spelled.segs.len() == 1 && self.ctx.type_params.contains(&spelled.segs[0])) {
                    self.diag.unresolved.insert((self.path.to_path_buf(), spelled.display()));
                }
                Ty::Unknown
            }
        }
    }

    fn declare(&mut self, name: &str, ty: Ty) {
        if let Some(s) = self.scopes.last_mut() {
            s.insert(name.to_string(), ty);
        }
    }

    fn scoped<R>(&mut self, f: impl FnOnce(&mut Self) -> R) -> R {
        self.scopes.push(HashMap::new());
        let r = f(self);
        self.scopes.pop();
        r
    }

    /// Bodies of member functions defined inside the class body.
    fn inline_members(&mut self, body: Node<'_>) {
        for m in ts::named_children(body) {
            match m.kind() {
                "function_definition" if !is_static(m, self.src) => self.function(m),
                "template_declaration" | "preproc_if" | "preproc_ifdef" | "preproc_else" | "preproc_elif" => {
                    self.inline_members(m)
                }
                "field_declaration" => {
                    // Default member initializers.
                    if !is_static(m, self.src) {
                        if let Some(v) = ts::field(m, "default_value") {
                            self.scoped(|w| w.visit(v));
                        }
                    }
                }
                _ => {}
            }
        }
    }

    fn function(&mut self, def: Node<'_>) {
        self.scoped(|w| {
            if let Some(params) = function_declarator(def).and_then(|d| ts::field(d, "parameters")) {
                w.declare_params(params);
            }
            for c in ts::named_children(def) {
                if c.kind() == "field_initializer_list" {
                    w.visit(c);
                }
            }
            if let Some(body) = ts::field(def, "body") {
                w.visit(body);
            }
        });
    }

    fn declare_params(&mut self, params: Node<'_>) {
        for p in ts::named_children(params) {
            let (Some(t), Some(d)) = (ts::field(p, "type"), ts::field(p, "declarator")) else { continue };
            let (core, array, _) = unwrap_declarator(d);
            if core.kind() == "identifier" {
                let ty = if array { Ty::Unknown } else { self.resolve_type(t).map_or(Ty::Unknown, Ty::Obj) };
                self.declare(self.text(core), ty);
            }
        }
    }

    fn lookup_local(&self, name: &str) -> Option<Ty> {
        self.scopes.iter().rev().find_map(|s| s.get(name).cloned())
    }

    /// Classes searched for unqualified member names: the class itself,
    /// then lexically enclosing classes.
    fn implicit_receivers(&self) -> Vec<QualifiedName> {
        let mut out = vec![self.info.name.clone()];
        out.extend(self.ctx.enclosing.iter().rev().filter(|c| **c != self.info.name).cloned());
        out
    }

    fn visit_children(&mut self, n: Node<'_>) {
        for c in ts::named_children(n) {
            self.visit(c);
        }
    }

    fn visit(&mut self, n: Node<'_>) -> Ty {
        match n.kind() {
            "compound_statement" | "for_statement" | "while_statement" | "if_statement" | "switch_statement" => {
                self.scoped(|w| w.visit_children(n));
                Ty::Unknown
            }
            "declaration" => {
                self.local_declaration(n);
                Ty::Unknown
            }
            "for_range_loop" => {
                if let Some(r) = ts::field(n, "right") {
                    self.visit(r);
                }
                self.scoped(|w| {
                    if let (Some(t), Some(d)) = (ts::field(n, "type"), ts::field(n, "declarator")) {
                        let (core, array, _) = unwrap_declarator(d);
                        if core.kind() == "identifier" {
                            let ty = if array { Ty::Unknown } else { w.resolve_type(t).map_or(Ty::Unknown, Ty::Obj) };
                            w.declare(w.text(core), ty);
                        }
                    }
                    if let Some(b) = ts::field(n, "body") {
                        w.visit(b);
                    }
                });
                Ty::Unknown
            }
            "catch_clause" => {
                self.scoped(|w| {
                    if let Some(p) = ts::field(n, "parameters") {
                        w.declare_params(p);
                    }
                    if let Some(b) = ts::field(n, "body") {
                        w.visit(b);
                    }
                });
                Ty::Unknown
            }
            "lambda_expression" => {
                self.scoped(|w| {
                    if let Some(params) = ts::field(n, "declarator").and_then(|d| ts::field(d, "parameters")) {
                        w.declare_params(params);
                    }
                    if let Some(b) = ts::field(n, "body") {
                        w.visit(b);
                    }
                });
                Ty::Unknown
            }
            "new_expression" => {
                for c in ["placement", "arguments"] {
                    if let Some(a) = ts::field(n, c) {
                        self.visit(a);
                    }
                }
                let Some(t) = ts::field(n, "type") else { return Ty::Unknown };
                if ts::field(n, "declarator").is_some() {
                    // Array new.
                    return Ty::Unknown;
                }
                self.creates(t)
            }
            "compound_literal_expression" => {
                if let Some(v) = ts::field(n, "value") {
                    self.visit(v);
                }
                ts::field(n, "type").map_or(Ty::Unknown, |t| self.creates(t))
            }
            "call_expression" => self.call(n),
            "field_expression" => {
                let recv = ts::field(n, "argument").map_or(Ty::Unknown, |a| self.visit(a));
                let (Ty::Obj(t), Some(f)) = (recv, ts::field(n, "field")) else { return Ty::Unknown };
                self.project
                    .find_field(&t, self.text(f))
                    .and_then(|f| f.ty.clone())
                    .map_or(Ty::Unknown, Ty::Obj)
            }
            "identifier" => {
                let name = self.text(n);
                if let Some(t) = self.lookup_local(name) {
                    return t;
                }
                for r in self.implicit_receivers() {
                    if let Some(f) = self.project.find_field(&r, name) {
                        return f.ty.clone().map_or(Ty::Unknown, Ty::Obj);
                    }
                }
                Ty::Unknown
            }
            "this" => Ty::Obj(self.info.name.clone()),
            "pointer_expression" | "parenthesized_expression" => ts::named_children(n)
                .into_iter()
                .map(|c| self.visit(c))
                .last()
                .unwrap_or(Ty::Unknown),
            "cast_expression" => {
                if let Some(v) = ts::field(n, "value") {
                    self.visit(v);
                }
                ts::field(n, "type")
                    .and_then(|d| ts::field(d, "type"))
                    .and_then(|t| self.resolve_type(t))
                    .map_or(Ty::Unknown, Ty::Obj)
            }
            "assignment_expression" => {
                let left = ts::field(n, "left").map(|l| self.visit(l));
                if let Some(r) = ts::field(n, "right") {
                    self.visit(r);
                }
                left.unwrap_or(Ty::Unknown)
            }
            "conditional_expression" => {
                if let Some(c) = ts::field(n, "condition") {
                    self.visit(c);
                }
                let a = ts::field(n, "consequence").map(|c| self.visit(c));
                let b = ts::field(n, "alternative").map(|c| self.visit(c));
                match (a, b) {
                    (Some(Ty::Obj(x)), _) | (_, Some(Ty::Obj(x))) => Ty::Obj(x),
                    _ => Ty::Unknown,
                }
            }
            "class_specifier" | "struct_specifier" | "template_argument_list" | "type_descriptor" => Ty::Unknown,
            _ => {
                self.visit_children(n);
                Ty::Unknown
            }
        }
    }

    fn local_declaration(&mut self, n: Node<'_>) {
        let ty_node = ts::field(n, "type");
        let is_auto = ty_node.is_some_and(|t| t.kind() == "placeholder_type_specifier");
        let declared = ty_node.and_then(|t| self.resolve_type(t));
        for d in ts::fields(n, "declarator") {
            let (outer, value) = if d.kind() == "init_declarator" {
                (ts::field(d, "declarator").unwrap_or(d), ts::field(d, "value"))
            } else {
                (d, None)
            };
            let (core, array, indirect) = unwrap_declarator(outer);
            if core.kind() == "function_declarator" {
                // `T x(a, b);` parses like a function declaration.
                let has_args = ts::field(core, "parameters").is_some_and(|p| !ts::named_children(p).is_empty());
                let Some(name) = ts::field(core, "declarator").filter(|d| d.kind() == "identifier") else {
                    continue;
                };
                if has_args && !indirect {
                    if let Some(t) = ty_node {
                        self.creates(t);
                    }
                }
                self.declare(self.text(name), declared.clone().map_or(Ty::Unknown, Ty::Obj));
                continue;
            }
            let value_ty = value.map(|v| match v.kind() {
                "argument_list" | "initializer_list" => {
                    self.visit_children(v);
                    Ty::Unknown
                }
                _ => self.visit(v),
            });
            let constructs = value.is_some_and(|v| matches!(v.kind(), "argument_list" | "initializer_list"));
            if constructs && !indirect && !array {
                if let Some(t) = ty_node {
                    self.creates(t);
                }
            }
            let ty = if array {
                Ty::Unknown
            } else if is_auto {
                value_ty.unwrap_or(Ty::Unknown)
            } else {
                declared.clone().map_or(Ty::Unknown, Ty::Obj)
            };
            if core.kind() == "identifier" {
                self.declare(self.text(core), ty);
            }
        }
    }

    fn arity(&mut self, call: Node<'_>) -> usize {
        match ts::field(call, "arguments") {
            Some(args) => {
                self.visit(args);
                ts::named_children(args).len()
            }
            None => 0,
        }
    }

    fn template_call(&mut self, f: Node<'_>) -> Option<Ty> {
        let name = ts::field(f, "name").map(|n| self.text(n))?;
        let target = ts::field(f, "arguments")
            .and_then(|a| ts::named_children(a).into_iter().next())
            .filter(|d| d.kind() == "type_descriptor")
            .and_then(|d| ts::field(d, "type"));
        if FACTORIES.contains(&name) {
            return Some(target.map_or(Ty::Unknown, |t| self.creates(t)));
        }
        if CASTS.contains(&name) {
            return Some(target.and_then(|t| self.resolve_type(t)).map_or(Ty::Unknown, Ty::Obj));
        }
        None
    }

    fn call_on(&mut self, start: &QualifiedName, name: &str, arity: usize, record: bool) -> Ty {
        let Some((owner, method)) = self.project.find_method(start, name, arity) else {
            return Ty::Unknown;
        };
        let (owner, is_static, ret) = (owner.clone(), method.is_static, method.ret.clone());
        if record && !is_static {
            self.edge(ConnectionKind::Calls, owner);
        }
        ret.map_or(Ty::Unknown, Ty::Obj)
    }

    fn call(&mut self, n: Node<'_>) -> Ty {
        let Some(f) = ts::field(n, "function") else {
            self.visit_children(n);
            return Ty::Unknown;
        };
        match f.kind() {
            "field_expression" => {
                let recv = ts::field(f, "argument").map_or(Ty::Unknown, |a| self.visit(a));
                let arity = self.arity(n);
                let Some(field) = ts::field(f, "field") else { return Ty::Unknown };
                let mut segs = qualified_segments(field, self.src);
                let name = segs.segs.pop().unwrap_or_default();
                let start = if segs.segs.is_empty() {
                    match recv {
                        Ty::Obj(t) => Some(t),
                        Ty::Unknown => None,
                    }
                } else {
                    self.resolve(&segs)
                };
                start.map_or(Ty::Unknown, |s| self.call_on(&s, &name, arity, true))
            }
            "identifier" => {
                let arity = self.arity(n);
                let name = self.text(f);
                if self.lookup_local(name).is_some() {
                    return Ty::Unknown;
                }
                for r in self.implicit_receivers() {
                    if self.project.find_method(&r, name, arity).is_some() {
                        return self.call_on(&r, name, arity, true);
                    }
                }
                let spelled = Spelled {
                    segs: vec![name.to_string()],
                    rooted: false,
                };
                match self.resolve(&spelled) {
                    Some(q) => {
                        self.edge(ConnectionKind::Creates, q.clone());
                        Ty::Obj(q)
                    }
                    None => Ty::Unknown,
                }
            }
            "template_function" => {
                self.arity(n);
                self.template_call(f).unwrap_or(Ty::Unknown)
            }
            "qualified_identifier" => {
                let arity = self.arity(n);
                if let Some(name) = ts::field(f, "name").filter(|n| n.kind() == "template_function") {
                    if let Some(t) = self.template_call(name) {
                        return t;
                    }
                }
                let whole = qualified_segments(f, self.src);
                if let Some(q) = self.resolve(&whole) {
                    // `ns::T(args)`: a temporary.
                    self.edge(ConnectionKind::Creates, q.clone());
                    return Ty::Obj(q);
                }
                let mut scope = whole;
                let name = scope.segs.pop().unwrap_or_default();
                let Some(target) = self.resolve(&scope) else { return Ty::Unknown };
                let instance_context = self.project.is_ancestor_or_self(&target, &self.info.name);
                self.call_on(&target, &name, arity, instance_context)
            }
            _ => {
                self.visit(f);
                self.arity(n);
                Ty::Unknown
            }
        }
    }
}
