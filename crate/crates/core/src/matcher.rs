//! Role assignment and candidate merging.
//!
//! [`detect`] enumerates every total, injective binding of pattern roles to
//! classes such that each class satisfies its role's constraint and each
//! declared connection exists in the graph. [`merge`] then groups candidates
//! that differ in exactly one role, transitively, so one design decision is
//! reported once.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::model::{satisfies, ClassId, CodeGraph, ConnectionKind, QualifiedName};
use crate::pattern::{PatternDefinition, RoleId};
use crate::union_find::UnionFind;

pub type Binding = BTreeMap<RoleId, QualifiedName>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateInstance {
    pub pattern: String,
    pub binding: Binding,
}

/// A group of near-duplicate candidates counted as one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedInstance {
    pub pattern: String,
    /// Sorted ascending; the first member is the representative.
    members: Vec<CandidateInstance>,
}

impl MergedInstance {
    /// Wraps a single candidate as its own group.
    pub fn singleton(candidate: CandidateInstance) -> Self {
        MergedInstance {
            pattern: candidate.pattern.clone(),
            members: vec![candidate],
        }
    }

    pub fn representative(&self) -> &CandidateInstance {
        &self.members[0]
    }

    pub fn members(&self) -> &[CandidateInstance] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// For each role, the classes bound by other members that differ from the
    /// representative's class. Roles without alternatives are omitted.
    pub fn alternatives(&self) -> BTreeMap<RoleId, BTreeSet<QualifiedName>> {
        let rep = &self.representative().binding;
        let mut out: BTreeMap<RoleId, BTreeSet<QualifiedName>> = BTreeMap::new();
        for m in &self.members[1..] {
            for (role, class) in &m.binding {
                if rep.get(role) != Some(class) {
                    out.entry(role.clone()).or_default().insert(class.clone());
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergeMode {
    #[default]
    Merge,
    /// Every candidate is reported as its own group.
    Raw,
}

struct Edge {
    from: usize,
    to: usize,
    kind: ConnectionKind,
}

struct Search<'a> {
    graph: &'a CodeGraph,
    pattern: &'a PatternDefinition,
    candidates: Vec<Vec<ClassId>>,
    edges: Vec<Edge>,
    order: Vec<usize>,
    assigned: Vec<Option<ClassId>>,
    used: Vec<bool>,
    found: Vec<Vec<ClassId>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.found
                .push(self.assigned.iter().map(|c| c.expect("complete")).collect());
            return;
        }
        let role = self.order[depth];
        for class in self.options(role) {
            if self.used[class.index()] || !self.admissible(role, class) {
                continue;
            }
            self.assigned[role] = Some(class);
            if self.connections_hold(role) {
                self.used[class.index()] = true;
                self.run(depth + 1);
                self.used[class.index()] = false;
            }
            self.assigned[role] = None;
        }
    }

    /// Classes worth trying for `role`: neighbours of an already bound role
    /// when a declared connection links them, otherwise the static candidates.
    fn options(&self, role: usize) -> Vec<ClassId> {
        for e in &self.edges {
            if e.to == role {
                if let Some(src) = self.assigned[e.from] {
                    return self
                        .graph
                        .outgoing(src)
                        .iter()
                        .filter(|(k, _)| *k == e.kind)
                        .map(|&(_, c)| c)
                        .collect();
                }
            }
            if e.from == role {
                if let Some(dst) = self.assigned[e.to] {
                    return self
                        .graph
                        .incoming(dst)
                        .iter()
                        .filter(|(k, _)| *k == e.kind)
                        .map(|&(_, c)| c)
                        .collect();
                }
            }
        }
        self.candidates[role].clone()
    }

    fn admissible(&self, role: usize, class: ClassId) -> bool {
        satisfies(
            self.graph.class(class).kind,
            self.pattern.members()[role].constraint,
        )
    }

    fn connections_hold(&self, role: usize) -> bool {
        self.edges
            .iter()
            .filter(|e| e.from == role || e.to == role)
            .all(|e| match (self.assigned[e.from], self.assigned[e.to]) {
                (Some(f), Some(t)) => self.graph.has_edge(f, t, e.kind),
                _ => true,
            })
    }
}

/// All candidate instances of `pattern` in `graph`, sorted by binding.
pub fn detect(graph: &CodeGraph, pattern: &PatternDefinition) -> Vec<CandidateInstance> {
    let members = pattern.members();
    let candidates: Vec<Vec<ClassId>> = members
        .iter()
        .map(|m| {
            (0..graph.class_count() as u32)
                .map(ClassId)
                .filter(|&id| satisfies(graph.class(id).kind, m.constraint))
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let edges = pattern
        .connections()
        .iter()
        .map(|c| Edge {
            from: pattern.role_index(&c.from).expect("validated pattern"),
            to: pattern.role_index(&c.to).expect("validated pattern"),
            kind: c.kind,
        })
        .collect();
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));

    let mut search = Search {
        graph,
        pattern,
        candidates,
        edges,
        order,
        assigned: vec![None; members.len()],
        used: vec![false; graph.class_count()],
        found: Vec::new(),
    };
    search.run(0);

    let mut out: Vec<CandidateInstance> = search
        .found
        .into_iter()
        .map(|ids| CandidateInstance {
            pattern: pattern.name().to_string(),
            binding: members
                .iter()
                .zip(ids)
                .map(|(m, id)| (m.role.clone(), graph.class(id).name.clone()))
                .collect(),
        })
        .collect();
    out.sort();
    out
}

/// Partitions candidates into groups connected by "differs in exactly one
/// role". Single-role candidates always stay alone. Groups are sorted by
/// representative.
pub fn merge(instances: Vec<CandidateInstance>) -> Vec<MergedInstance> {
    let unique: Vec<CandidateInstance> = instances
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut uf = UnionFind::new(unique.len());

    // Candidates sharing every binding except one role's land in the same
    // bucket; being distinct, they differ in exactly that role.
    let mut buckets: HashMap<(&str, &RoleId, Vec<(&RoleId, &QualifiedName)>), usize> =
        HashMap::new();
    for (idx, cand) in unique.iter().enumerate() {
        if cand.binding.len() < 2 {
            continue;
        }
        for masked in cand.binding.keys() {
            let rest: Vec<(&RoleId, &QualifiedName)> =
                cand.binding.iter().filter(|(r, _)| *r != masked).collect();
            match buckets.entry((cand.pattern.as_str(), masked, rest)) {
                std::collections::hash_map::Entry::Occupied(e) => {
                    uf.union(*e.get(), idx);
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(idx);
                }
            }
        }
    }

    let groups = uf.groups();
    let mut merged: Vec<MergedInstance> = groups
        .into_iter()
        .map(|idxs| {
            let members: Vec<CandidateInstance> =
                idxs.into_iter().map(|i| unique[i].clone()).collect();
            MergedInstance {
                pattern: members[0].pattern.clone(),
                members,
            }
        })
        .collect();
    merged.sort_by(|a, b| a.representative().cmp(b.representative()));
    merged
}

/// Runs [`detect`] and [`merge`] for every pattern, keyed by pattern name.
pub fn detect_all(
    graph: &CodeGraph,
    patterns: &[PatternDefinition],
) -> BTreeMap<String, Vec<MergedInstance>> {
    detect_all_with(graph, patterns, MergeMode::Merge)
}

pub fn detect_all_with(
    graph: &CodeGraph,
    patterns: &[PatternDefinition],
    mode: MergeMode,
) -> BTreeMap<String, Vec<MergedInstance>> {
    patterns
        .iter()
        .map(|p| {
            let found = detect(graph, p);
            let groups = match mode {
                MergeMode::Merge => merge(found),
                MergeMode::Raw => found.into_iter().map(MergedInstance::singleton).collect(),
            };
            (p.name().to_string(), groups)
        })
        .collect()
}

/// Re-checks a candidate directly against the graph: totality, injectivity,
/// constraints and every declared connection.
pub fn validate_candidate(
    graph: &CodeGraph,
    pattern: &PatternDefinition,
    candidate: &CandidateInstance,
) -> bool {
    if candidate.pattern != pattern.name() || candidate.binding.len() != pattern.members().len() {
        return false;
    }
    let distinct: BTreeSet<&QualifiedName> = candidate.binding.values().collect();
    if distinct.len() != candidate.binding.len() {
        return false;
    }
    let members_ok = pattern.members().iter().all(|m| {
        candidate
            .binding
            .get(&m.role)
            .and_then(|name| graph.get(name))
            .is_some_and(|node| satisfies(node.kind, m.constraint))
    });
    members_ok
        && pattern.connections().iter().all(|c| {
            match (candidate.binding.get(&c.from), candidate.binding.get(&c.to)) {
                (Some(f), Some(t)) => graph.has_connection(f, t, c.kind),
                _ => false,
            }
        })
}
