//! Independent reference implementations and random generators shared by the
//! property tests and the acceptance suite. Nothing here calls into the
//! matcher's search or merge code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dpscan_core::{
    satisfies, AbstractionKind, CandidateInstance, ClassNode, CodeGraph, Connection,
    ConnectionKind, ConstraintKind, ConnectionDecl, GraphBuilder, Language, MemberDecl,
    PatternDefinition, QualifiedName, RoleId, SourceInfo,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn qn(s: &str) -> QualifiedName {
    QualifiedName::parse(s).unwrap()
}

pub fn source() -> SourceInfo {
    SourceInfo {
        path: "synthetic".into(),
        language: Language::Java,
    }
}

/// Random graph with up to `max_classes` classes; self-edges included.
pub fn random_graph<R: Rng>(rng: &mut R, max_classes: usize) -> CodeGraph {
    let n = rng.gen_range(0..=max_classes);
    let mut b = GraphBuilder::new();
    let names: Vec<QualifiedName> = (0..n).map(|i| qn(&format!("p.C{i}"))).collect();
    for name in &names {
        let kind = *AbstractionKind::ALL.choose(rng).unwrap();
        b.add_class(ClassNode::new(name.clone(), kind, source())).unwrap();
    }
    if n > 0 {
        let density: f64 = rng.gen_range(0.05..0.35);
        for from in &names {
            for to in &names {
                for kind in ConnectionKind::ALL {
                    if rng.gen_bool(density / 2.0) {
                        b.add_connection(Connection::new(from.clone(), kind, to.clone()))
                            .unwrap();
                    }
                }
            }
        }
    }
    b.seal()
}

pub fn random_pattern<R: Rng>(rng: &mut R, max_roles: usize) -> PatternDefinition {
    let n = rng.gen_range(1..=max_roles);
    let roles: Vec<RoleId> = (0..n)
        .map(|i| RoleId::new(&((b'A' + i as u8) as char).to_string()).unwrap())
        .collect();
    let members = roles
        .iter()
        .map(|r| MemberDecl {
            role: r.clone(),
            constraint: *ConstraintKind::ALL.choose(rng).unwrap(),
            description: format!("Role {r}"),
        })
        .collect();
    let mut connections = Vec::new();
    if n > 1 {
        for _ in 0..rng.gen_range(0..=n + 1) {
            let from = rng.gen_range(0..n);
            let mut to = rng.gen_range(0..n - 1);
            if to >= from {
                to += 1;
            }
            connections.push(ConnectionDecl {
                from: roles[from].clone(),
                kind: *ConnectionKind::ALL.choose(rng).unwrap(),
                to: roles[to].clone(),
            });
        }
    }
    PatternDefinition::new("Synthetic", members, connections).unwrap()
}

/// Exhaustive enumeration of injective role assignments.
pub fn brute_force_detect(graph: &CodeGraph, pattern: &PatternDefinition) -> Vec<CandidateInstance> {
    let names: Vec<&ClassNode> = graph.classes().iter().collect();
    let k = pattern.members().len();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        k: usize,
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if current.len() == k {
            visit(current);
            return;
        }
        for i in 0..n {
            if !current.contains(&i) {
                current.push(i);
                rec(n, k, current, visit);
                current.pop();
            }
        }
    }
    rec(names.len(), k, &mut current, &mut |assign: &[usize]| {
        let bind = |role: &RoleId| {
            let idx = pattern.members().iter().position(|m| &m.role == role).unwrap();
            names[assign[idx]]
        };
        let constraints_ok = pattern
            .members()
            .iter()
            .zip(assign)
            .all(|(m, &i)| satisfies(names[i].kind, m.constraint));
        let connections_ok = pattern.connections().iter().all(|c| {
            graph
                .connections()
                .any(|e| e.from == bind(&c.from).name && e.to == bind(&c.to).name && e.kind == c.kind)
        });
        if constraints_ok && connections_ok {
            out.push(CandidateInstance {
                pattern: pattern.name().to_string(),
                binding: pattern
                    .members()
                    .iter()
                    .zip(assign)
                    .map(|(m, &i)| (m.role.clone(), names[i].name.clone()))
                    .collect(),
            });
        }
    });
    out.sort();
    out
}

fn differ_in_one(a: &CandidateInstance, b: &CandidateInstance) -> bool {
    a.binding.len() > 1
        && a.pattern == b.pattern
        && a.binding.len() == b.binding.len()
        && a.binding
            .iter()
            .filter(|(r, c)| b.binding.get(*r) != Some(*c))
            .count()
            == 1
}

/// Groups by explicit transitive closure of the pairwise adjacency matrix.
pub fn pairwise_closure_groups(cands: &[CandidateInstance]) -> BTreeSet<BTreeSet<CandidateInstance>> {
    let uniq: Vec<CandidateInstance> = cands.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let n = uniq.len();
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
        for j in 0..n {
            if differ_in_one(&uniq[i], &uniq[j]) {
                reach[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n)
        .map(|i| (0..n).filter(|&j| reach[i][j]).map(|j| uniq[j].clone()).collect())
        .collect()
}

/// Random candidate set over a small alphabet so that near-duplicates occur.
pub fn random_candidates<R: Rng>(rng: &mut R) -> Vec<CandidateInstance> {
    let roles = rng.gen_range(1..=4);
    let alphabet = rng.gen_range(2..=4);
    let count = rng.gen_range(0..=12);
    (0..count)
        .map(|_| CandidateInstance {
            pattern: "P".into(),
            binding: (0..roles)
                .map(|r| {
                    (
                        RoleId::new(&((b'A' + r as u8) as char).to_string()).unwrap(),
                        qn(&format!("x.K{}", rng.gen_range(0..alphabet))),
                    )
                })
                .collect::<BTreeMap<_, _>>(),
        })
        .collect()
}

const WORDS: &[&str] = &["Concrete", "Abstract", "Observer", "Subject", "Invoker", "Receiver", "Product", "Factory", "x1", "Role_2"];

/// Random valid pattern definition exercising multi-character role tokens,
/// every constraint and keyword, and multi-word or empty descriptions.
pub fn random_definition<R: Rng>(rng: &mut R) -> PatternDefinition {
    let n = rng.gen_range(1..=6);
    let mut roles: Vec<RoleId> = Vec::new();
    while roles.len() < n {
        let len = rng.gen_range(1..=3);
        let mut token: String = (0..len)
            .map(|i| {
                let pool: &[u8] = if i == 0 { b"ABCDEFGHXYZabc_" } else { b"ABCxyz019_" };
                *pool.choose(rng).unwrap() as char
            })
            .collect();
        if token == "_" {
            token.push('r');
        }
        let role = RoleId::new(&token).unwrap();
        if !roles.contains(&role) {
            roles.push(role);
        }
    }
    let members = roles
        .iter()
        .map(|r| {
            let words = rng.gen_range(0..=3);
            MemberDecl {
                role: r.clone(),
                constraint: *ConstraintKind::ALL.choose(rng).unwrap(),
                description: (0..words).map(|_| *WORDS.choose(rng).unwrap()).collect::<Vec<_>>().join(" "),
            }
        })
        .collect();
    let mut connections = Vec::new();
    if n > 1 {
        for _ in 0..rng.gen_range(0..8) {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            connections.push(ConnectionDecl {
                from: roles[a].clone(),
                kind: *ConnectionKind::ALL.choose(rng).unwrap(),
                to: roles[b].clone(),
            });
        }
    }
    let name_words = rng.gen_range(1..=3);
    let name = (0..name_words).map(|_| *WORDS.choose(rng).unwrap()).collect::<Vec<_>>().join(" ");
    PatternDefinition::new(name, members, connections).unwrap()
}
