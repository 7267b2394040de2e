//! Per-class member signatures and the lookups both frontends share.

use std::collections::{HashMap, HashSet, VecDeque};

use dpscan_core::QualifiedName;

use crate::symbols::SymbolTable;

#[derive(Debug, Clone)]
pub(crate) struct FieldInfo {
    pub ty: Option<QualifiedName>,
    pub is_static: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct MethodInfo {
    pub name: String,
    pub min_arity: usize,
    /// `None` for variadic methods.
    pub max_arity: Option<usize>,
    pub ret: Option<QualifiedName>,
    pub is_static: bool,
    pub is_constructor: bool,
}

impl MethodInfo {
    fn accepts(&self, arity: usize) -> bool {
        arity >= self.min_arity && self.max_arity.is_none_or(|max| arity <= max)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ClassMembers {
    pub name: QualifiedName,
    pub supers: Vec<QualifiedName>,
    pub fields: HashMap<String, FieldInfo>,
    pub methods: Vec<MethodInfo>,
}

/// Resolved view of the whole project, shared read-only by body analysis.
/// `C` is the frontend's per-class name resolution context.
pub(crate) struct Project<C> {
    pub table: SymbolTable,
    pub classes: HashMap<QualifiedName, (ClassMembers, C)>,
}

impl<C> Project<C> {
    pub fn members(&self, name: &QualifiedName) -> Option<&ClassMembers> {
        self.classes.get(name).map(|(m, _)| m)
    }

    /// `start` followed by its supertypes, breadth first, each once.
    pub fn ancestry(&self, start: &QualifiedName) -> Vec<&ClassMembers> {
        let Some(first) = self.members(start) else { return Vec::new() };
        let mut seen = HashSet::from([&first.name]);
        let mut order = Vec::new();
        let mut queue = VecDeque::from([first]);
        while let Some(info) = queue.pop_front() {
            order.push(info);
            for s in &info.supers {
                if let Some(next) = self.members(s) {
                    if seen.insert(&next.name) {
                        queue.push_back(next);
                    }
                }
            }
        }
        order
    }

    pub fn is_ancestor_or_self(&self, ancestor: &QualifiedName, of: &QualifiedName) -> bool {
        self.ancestry(of).iter().any(|c| &c.name == ancestor)
    }

    /// The class that declares the method a call on `start` reaches: the
    /// nearest one with a matching name and arity, or failing that the
    /// nearest one with a matching name.
    pub fn find_method(&self, start: &QualifiedName, name: &str, arity: usize) -> Option<(&QualifiedName, &MethodInfo)> {
        let chain = self.ancestry(start);
        let pick = |exact: bool| {
            chain.iter().find_map(|t| {
                t.methods
                    .iter()
                    .find(|m| !m.is_constructor && m.name == name && (!exact || m.accepts(arity)))
                    .map(|m| (&t.name, m))
            })
        };
        pick(true).or_else(|| pick(false))
    }

    pub fn find_field(&self, start: &QualifiedName, name: &str) -> Option<&FieldInfo> {
        self.ancestry(start).into_iter().find_map(|t| t.fields.get(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QualifiedName {
        QualifiedName::parse(s).unwrap()
    }

    fn method(name: &str, arity: usize) -> MethodInfo {
        MethodInfo {
            name: name.into(),
            min_arity: arity,
            max_arity: Some(arity),
            ret: None,
            is_static: false,
            is_constructor: false,
        }
    }

    fn class(name: &str, supers: &[&str], methods: Vec<MethodInfo>) -> (QualifiedName, (ClassMembers, ())) {
        (
            q(name),
            (
                ClassMembers {
                    name: q(name),
                    supers: supers.iter().map(|s| q(s)).collect(),
                    fields: HashMap::new(),
                    methods,
                },
                (),
            ),
        )
    }

    #[test]
    fn method_lookup_prefers_arity_then_nearest() {
        let project = Project {
            table: SymbolTable::new(),
            classes: HashMap::from([
                class("Top", &[], vec![method("m", 2), method("n", 0)]),
                class("Mid", &["Top"], vec![method("m", 1)]),
                class("Low", &["Mid", "Side"], vec![]),
                class("Side", &[], vec![method("n", 0), method("s", 0)]),
            ]),
        };
        let owner = |n, a| project.find_method(&q("Low"), n, a).map(|(o, _)| o.to_string());
        assert_eq!(owner("m", 1).as_deref(), Some("Mid"));
        assert_eq!(owner("m", 2).as_deref(), Some("Top"));
        assert_eq!(owner("m", 5).as_deref(), Some("Mid"));
        assert_eq!(owner("n", 0).as_deref(), Some("Side"));
        assert_eq!(owner("zz", 0), None);
        assert!(project.is_ancestor_or_self(&q("Top"), &q("Low")));
        assert!(!project.is_ancestor_or_self(&q("Low"), &q("Top")));
    }

    #[test]
    fn cyclic_supertypes_terminate() {
        let project = Project {
            table: SymbolTable::new(),
            classes: HashMap::from([class("A", &["B"], vec![]), class("B", &["A"], vec![])]),
        };
        assert_eq!(project.ancestry(&q("A")).len(), 2);
        assert!(project.find_method(&q("A"), "x", 0).is_none());
    }
}
