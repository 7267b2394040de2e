//! Second pass: walks method, constructor and initializer bodies to find
//! instantiations (`creates`) and method invocations (`calls`).

use std::collections::{HashMap, HashSet};
use std::path::Path;

use dpscan_core::{Connection, ConnectionKind, QualifiedName};
use tree_sitter::Node;

use super::{has_modifier, resolve_segments, spell_type, type_sites, JavaClassContext, JavaProject, ParsedFile, TYPE_DECLS};
use crate::members::ClassMembers;
use crate::ts;
use crate::Diagnostics;

pub(crate) fn analyze_file(
    project: &JavaProject,
    file: &ParsedFile,
    is_winner: impl Fn(usize) -> bool,
) -> (Vec<Connection>, Diagnostics) {
    let mut edges = Vec::new();
    let mut diag = Diagnostics::default();
    for (ti, site) in type_sites(file.tree.root_node(), &file.text).into_iter().enumerate() {
        if !is_winner(ti) {
            continue;
        }
        let Some((info, jctx)) = project.classes.get(&site.name) else { continue };
        let mut walker = Walker {
            project,
            info,
            jctx,
            src: &file.text,
            path: &file.path,
            edges: Vec::new(),
            diag: Diagnostics::default(),
            scopes: Vec::new(),
            anon: Vec::new(),
            tparams: Vec::new(),
        };
        if site.node.kind() == "record_declaration" {
            if let Some(params) = ts::field(site.node, "parameters") {
                walker.scopes.push(HashMap::new());
                walker.declare_params(params);
            }
        }
        if let Some(body) = ts::field(site.node, "body") {
            walker.members(body);
        }
        edges.extend(walker.edges);
        diag.merge(walker.diag);
    }
    (edges, diag)
}

#[derive(Debug, Clone, PartialEq)]
enum Ty {
    Unknown,
    /// A value whose static type is the class.
    Obj(QualifiedName),
    /// The class itself used as an expression, as in `Foo.bar()`.
    Type(QualifiedName),
}

struct Anon {
    base: Option<QualifiedName>,
    own_methods: HashSet<String>,
}

struct Walker<'a> {
    project: &'a JavaProject,
    info: &'a ClassMembers,
    jctx: &'a JavaClassContext,
    src: &'a str,
    path: &'a Path,
    edges: Vec<Connection>,
    diag: Diagnostics,
    scopes: Vec<HashMap<String, Ty>>,
    anon: Vec<Anon>,
    tparams: Vec<String>,
}

impl<'a> Walker<'a> {
    fn text(&self, n: Node<'_>) -> &'a str {
        ts::text(n, self.src)
    }

    fn resolve(&self, spelled: &[String]) -> Option<QualifiedName> {
        resolve_segments(spelled, &self.jctx.ctx, &self.tparams, &self.project.table)
    }

    fn type_of_node(&self, t: Node<'_>) -> Ty {
        spell_type(t, self.src)
            .and_then(|s| self.resolve(&s))
            .map_or(Ty::Unknown, Ty::Obj)
    }

    fn edge(&mut self, kind: ConnectionKind, to: QualifiedName) {
        self.edges.push(Connection::new(self.info.name.clone(), kind, to));
    }

    fn declare(&mut self, name: &str, ty: Ty) {
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name.to_string(), ty);
        }
    }

    fn scoped<R>(&mut self, f: impl FnOnce(&mut Self) -> R) -> R {
        self.scopes.push(HashMap::new());
        let r = f(self);
        self.scopes.pop();
        r
    }

    /// Members of a class body (or an anonymous class body while inside an
    /// anonymous frame). Static members are not part of any instance.
    fn members(&mut self, body: Node<'_>) {
        for m in ts::named_children(body) {
            match m.kind() {
                "enum_body_declarations" => self.members(m),
                "field_declaration" if !has_modifier(m, "static") => {
                    for decl in ts::fields(m, "declarator") {
                        if let Some(v) = ts::field(decl, "value") {
                            self.scoped(|w| w.visit(v));
                        }
                    }
                }
                "method_declaration" | "constructor_declaration" | "compact_constructor_declaration"
                    if !has_modifier(m, "static") =>
                {
                    let saved = std::mem::take(&mut self.tparams);
                    if let Some(tp) = ts::field(m, "type_parameters") {
                        for p in ts::named_children(tp) {
                            if let Some(id) = ts::named_children(p).into_iter().find(|n| n.kind() == "type_identifier") {
                                self.tparams.push(self.text(id).to_string());
                            }
                        }
                    }
                    self.scoped(|w| {
                        if let Some(params) = ts::field(m, "parameters") {
                            w.declare_params(params);
                        }
                        if let Some(body) = ts::field(m, "body") {
                            w.visit(body);
                        }
                    });
                    self.tparams = saved;
                }
                "block" => {
                    self.scoped(|w| w.visit(m));
                }
                "enum_constant" => {
                    if let Some(args) = ts::field(m, "arguments") {
                        self.visit(args);
                    }
                    if let Some(body) = ts::field(m, "body") {
                        let base = Some(self.info.name.clone());
                        self.anonymous(base, body);
                    }
                }
                _ => {}
            }
        }
    }

    fn anonymous(&mut self, base: Option<QualifiedName>, body: Node<'_>) {
        let own_methods = ts::named_children(body)
            .into_iter()
            .filter(|m| m.kind() == "method_declaration")
            .filter_map(|m| ts::field(m, "name"))
            .map(|n| self.text(n).to_string())
            .collect();
        self.anon.push(Anon { base, own_methods });
        let saved = std::mem::take(&mut self.scopes);
        // Locals of the enclosing method stay visible (captured variables).
        let mut flat = HashMap::new();
        for s in &saved {
            flat.extend(s.iter().map(|(k, v)| (k.clone(), v.clone())));
        }
        self.scopes.push(flat);
        self.members(body);
        self.scopes = saved;
        self.anon.pop();
    }

    fn declare_params(&mut self, params: Node<'_>) {
        for p in ts::named_children(params) {
            match p.kind() {
                "formal_parameter" => {
                    let (Some(t), Some(n)) = (ts::field(p, "type"), ts::field(p, "name")) else { continue };
                    let ty = if ts::field(p, "dimensions").is_some() { Ty::Unknown } else { self.type_of_node(t) };
                    self.declare(self.text(n), ty);
                }
                "spread_parameter" => {
                    for d in ts::named_children(p).into_iter().filter(|d| d.kind() == "variable_declarator") {
                        if let Some(n) = ts::field(d, "name") {
                            self.declare(self.text(n), Ty::Unknown);
                        }
                    }
                }
                "identifier" => self.declare(self.text(p), Ty::Unknown),
                _ => {}
            }
        }
    }

    fn lookup_local(&self, name: &str) -> Option<Ty> {
        self.scopes.iter().rev().find_map(|s| s.get(name).cloned())
    }

    /// Classes searched for unqualified member names, innermost first.
    fn implicit_receivers(&self) -> Vec<QualifiedName> {
        let mut out: Vec<QualifiedName> = self.anon.iter().rev().filter_map(|a| a.base.clone()).collect();
        out.extend(self.jctx.ctx.enclosing.iter().rev().cloned());
        out
    }

    fn this_type(&self) -> Ty {
        match self.anon.last() {
            Some(a) => a.base.clone().map_or(Ty::Unknown, Ty::Obj),
            None => Ty::Obj(self.info.name.clone()),
        }
    }

    fn field_type(&self, owner: &QualifiedName, name: &str, want_static: bool) -> Option<Ty> {
        let f = self.project.find_field(owner, name)?;
        if want_static && !f.is_static {
            return None;
        }
        Some(f.ty.clone().map_or(Ty::Unknown, Ty::Obj))
    }

    fn visit_children(&mut self, n: Node<'_>) {
        for c in ts::named_children(n) {
            self.visit(c);
        }
    }

    fn visit(&mut self, n: Node<'_>) -> Ty {
        match n.kind() {
            k if TYPE_DECLS.contains(&k) || k == "annotation_type_declaration" => Ty::Unknown,
            "block" | "switch_block" | "for_statement" | "try_with_resources_statement" => {
                self.scoped(|w| w.visit_children(n));
                Ty::Unknown
            }
            "local_variable_declaration" => {
                let declared = ts::field(n, "type");
                let is_var = declared.is_some_and(|t| self.text(t) == "var");
                for d in ts::fields(n, "declarator") {
                    let value = ts::field(d, "value").map(|v| self.visit(v));
                    let Some(name) = ts::field(d, "name") else { continue };
                    let ty = match (declared, is_var) {
                        _ if ts::field(d, "dimensions").is_some() => Ty::Unknown,
                        (_, true) => match value {
                            Some(Ty::Obj(q)) => Ty::Obj(q),
                            _ => Ty::Unknown,
                        },
                        (Some(t), false) => self.type_of_node(t),
                        (None, false) => Ty::Unknown,
                    };
                    self.declare(self.text(name), ty);
                }
                Ty::Unknown
            }
            "enhanced_for_statement" => {
                if let Some(v) = ts::field(n, "value") {
                    self.visit(v);
                }
                self.scoped(|w| {
                    if let (Some(t), Some(name)) = (ts::field(n, "type"), ts::field(n, "name")) {
                        let ty = if w.text(t) == "var" { Ty::Unknown } else { w.type_of_node(t) };
                        w.declare(w.text(name), ty);
                    }
                    if let Some(b) = ts::field(n, "body") {
                        w.visit(b);
                    }
                });
                Ty::Unknown
            }
            "catch_clause" => {
                self.scoped(|w| {
                    for c in ts::named_children(n) {
                        if c.kind() == "catch_formal_parameter" {
                            let ty = ts::named_children(c)
                                .into_iter()
                                .find(|t| t.kind() == "catch_type")
                                .and_then(|ct| ts::named_children(ct).into_iter().next())
                                .map_or(Ty::Unknown, |t| w.type_of_node(t));
                            if let Some(name) = ts::field(c, "name") {
                                w.declare(w.text(name), ty);
                            }
                        } else {
                            w.visit(c);
                        }
                    }
                });
                Ty::Unknown
            }
            "resource" => {
                let value = ts::field(n, "value").map(|v| self.visit(v));
                if let (Some(t), Some(name)) = (ts::field(n, "type"), ts::field(n, "name")) {
                    let ty = if self.text(t) == "var" { value.unwrap_or(Ty::Unknown) } else { self.type_of_node(t) };
                    self.declare(self.text(name), ty);
                } else if value.is_none() {
                    self.visit_children(n);
                }
                Ty::Unknown
            }
            "lambda_expression" => {
                self.scoped(|w| {
                    if let Some(p) = ts::field(n, "parameters") {
                        if p.kind() == "identifier" {
                            w.declare(w.text(p), Ty::Unknown);
                        } else {
                            w.declare_params(p);
                        }
                    }
                    if let Some(b) = ts::field(n, "body") {
                        w.visit(b);
                    }
                });
                Ty::Unknown
            }
            "instanceof_expression" => {
                if let Some(l) = ts::field(n, "left") {
                    self.visit(l);
                }
                if let (Some(t), Some(name)) = (ts::field(n, "right"), ts::field(n, "name")) {
                    let ty = self.type_of_node(t);
                    self.declare(self.text(name), ty);
                }
                Ty::Unknown
            }
            "object_creation_expression" => self.creation(n),
            "method_invocation" => self.invocation(n),
            "field_access" => self.field_access(n),
            "identifier" => self.identifier(n),
            "this" => self.this_type(),
            "super" => self.super_type(),
            "parenthesized_expression" => ts::named_children(n)
                .into_iter()
                .map(|c| self.visit(c))
                .last()
                .unwrap_or(Ty::Unknown),
            "cast_expression" => {
                if let Some(v) = ts::field(n, "value") {
                    self.visit(v);
                }
                ts::field(n, "type").map_or(Ty::Unknown, |t| self.type_of_node(t))
            }
            "assignment_expression" => {
                let left = ts::field(n, "left").map(|l| self.visit(l));
                if let Some(r) = ts::field(n, "right") {
                    self.visit(r);
                }
                left.unwrap_or(Ty::Unknown)
            }
            "ternary_expression" => {
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
            "method_reference" | "class_literal" => Ty::Unknown,
            "array_creation_expression" => {
                for c in ts::named_children(n) {
                    if matches!(c.kind(), "dimensions_expr" | "array_initializer") {
                        self.visit(c);
                    }
                }
                Ty::Unknown
            }
            "explicit_constructor_invocation" => {
                if let Some(a) = ts::field(n, "arguments") {
                    self.visit(a);
                }
                Ty::Unknown
            }
            _ => {
                self.visit_children(n);
                Ty::Unknown
            }
        }
    }

    fn super_type(&self) -> Ty {
        if let Some(a) = self.anon.last() {
            return a.base.clone().map_or(Ty::Unknown, Ty::Obj);
        }
        self.jctx.superclass.clone().map_or(Ty::Unknown, Ty::Obj)
    }

    fn creation(&mut self, n: Node<'_>) -> Ty {
        if let Some(o) = ts::field(n, "object") {
            self.visit(o);
        }
        if let Some(args) = ts::field(n, "arguments") {
            self.visit(args);
        }
        let spelled = ts::field(n, "type").and_then(|t| spell_type(t, self.src));
        let target = spelled.as_ref().and_then(|s| self.resolve(s));
        match (&target, &spelled) {
            (Some(t), _) => self.edge(ConnectionKind::Creates, t.clone()),
            (None, Some(s)) if !(s.len() == 1 && self.tparams.contains(&s[0])) => {
                self.diag.unresolved.insert((self.path.to_path_buf(), s.join(".")));
            }
            _ => {}
        }
        if let Some(body) = ts::field(n, "body").or_else(|| {
            ts::named_children(n).into_iter().find(|c| c.kind() == "class_body")
        }) {
            self.anonymous(target.clone(), body);
        }
        target.map_or(Ty::Unknown, Ty::Obj)
    }

    fn identifier(&mut self, n: Node<'_>) -> Ty {
        let name = self.text(n);
        if let Some(t) = self.lookup_local(name) {
            return t;
        }
        for r in self.implicit_receivers() {
            if let Some(t) = self.field_type(&r, name, false) {
                return t;
            }
        }
        self.resolve(&[name.to_string()]).map_or(Ty::Unknown, Ty::Type)
    }

    fn field_access(&mut self, n: Node<'_>) -> Ty {
        let (Some(obj), Some(field)) = (ts::field(n, "object"), ts::field(n, "field")) else {
            self.visit_children(n);
            return Ty::Unknown;
        };
        let fname = self.text(field);
        if field.kind() == "this" {
            // Outer.this
            return self
                .resolve(&[self.text(obj).to_string()])
                .map_or(Ty::Unknown, Ty::Obj);
        }
        match self.visit(obj) {
            Ty::Obj(t) => self.field_type(&t, fname, false).unwrap_or(Ty::Unknown),
            Ty::Type(t) => {
                if let Some(ty) = self.field_type(&t, fname, true) {
                    return ty;
                }
                t.child(fname)
                    .ok()
                    .filter(|nested| self.project.table.contains(nested))
                    .map_or(Ty::Unknown, Ty::Type)
            }
            Ty::Unknown => {
                let spelled: Vec<String> = self.text(n).split('.').map(|s| s.trim().to_string()).collect();
                self.project
                    .table
                    .lookup(&spelled)
                    .map_or(Ty::Unknown, Ty::Type)
            }
        }
    }

    fn invocation(&mut self, n: Node<'_>) -> Ty {
        let receiver = ts::field(n, "object").map(|o| self.visit(o));
        let arity = match ts::field(n, "arguments") {
            Some(args) => {
                self.visit(args);
                ts::named_children(args).len()
            }
            None => 0,
        };
        let Some(name) = ts::field(n, "name").map(|m| self.text(m)) else {
            return Ty::Unknown;
        };
        let found = match receiver {
            None => {
                if self.anon.last().is_some_and(|a| a.own_methods.contains(name)) {
                    return Ty::Unknown;
                }
                self.implicit_receivers()
                    .iter()
                    .find_map(|r| self.project.find_method(r, name, arity))
                    .map(|(owner, m)| (owner.clone(), m, false))
            }
            Some(Ty::Obj(t)) => self
                .project
                .find_method(&t, name, arity)
                .map(|(owner, m)| (owner.clone(), m, false)),
            Some(Ty::Type(t)) => self
                .project
                .find_method(&t, name, arity)
                .map(|(owner, m)| (owner.clone(), m, true)),
            Some(Ty::Unknown) => None,
        };
        let Some((owner, method, via_type_name)) = found else {
            return Ty::Unknown;
        };
        if !method.is_static && !via_type_name {
            self.edge(ConnectionKind::Calls, owner);
        }
        method.ret.clone().map_or(Ty::Unknown, Ty::Obj)
    }
}
