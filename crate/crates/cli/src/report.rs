use std::collections::BTreeMap;

use dpscan_core::{Language, MergedInstance, PatternDefinition};
use dpscan_frontends::Diagnostics;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub struct PatternReport {
    pub definition: PatternDefinition,
    pub instances: Vec<MergedInstance>,
}

impl PatternReport {
    pub fn count(&self) -> usize {
        self.instances.len()
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    /// `None` when no source files were found.
    pub language: Option<Language>,
    /// In pattern-name order.
    pub patterns: Vec<PatternReport>,
    pub diagnostics: Diagnostics,
}

impl Report {
    pub fn counts(&self) -> BTreeMap<String, usize> {
        self.patterns
            .iter()
            .map(|p| (p.definition.name().to_string(), p.count()))
            .collect()
    }
}

/// Human-readable report: one block per instance listing each role with its
/// description and the representative's class (simple name), alternatives
/// from other group members indented under their role, then a summary.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for p in &report.patterns {
        for instance in &p.instances {
            out.push_str(&format!("{} Design Pattern\n", p.definition.name()));
            let binding = &instance.representative().binding;
            let alternatives = instance.alternatives();
            for member in p.definition.members() {
                let class = binding
                    .get(&member.role)
                    .map_or("?", |q| q.simple_name());
                out.push_str(&format!("{} ({}): {}\n", member.role, member.description, class));
                for alt in alternatives.get(&member.role).into_iter().flatten() {
                    out.push_str(&format!("    also {}: {}\n", member.role, alt.simple_name()));
                }
            }
            out.push('\n');
        }
    }
    out.push_str("Summary\n");
    for p in &report.patterns {
        out.push_str(&format!("{}: {}\n", p.definition.name(), p.count()));
    }
    out
}

/// Machine-readable report with sorted keys and fully qualified names.
pub fn render_json(report: &Report) -> String {
    let patterns: Vec<Value> = report
        .patterns
        .iter()
        .map(|p| {
            let instances: Vec<Value> = p
                .instances
                .iter()
                .map(|inst| {
                    let representative: Map<String, Value> = inst
                        .representative()
                        .binding
                        .iter()
                        .map(|(r, q)| (r.to_string(), Value::String(q.to_string())))
                        .collect();
                    let alternatives: Map<String, Value> = inst
                        .alternatives()
                        .into_iter()
                        .map(|(r, names)| {
                            (r.to_string(), names.iter().map(|q| Value::String(q.to_string())).collect())
                        })
                        .collect();
                    json!({
                        "representative": representative,
                        "members": inst.len(),
                        "alternatives": alternatives,
                    })
                })
                .collect();
            json!({
                "name": p.definition.name(),
                "count": p.count(),
                "instances": instances,
            })
        })
        .collect();
    let d = &report.diagnostics;
    let diagnostics = json!({
        "skipped-files": d.skipped_files.iter()
            .map(|(path, why)| json!({"path": path.display().to_string(), "reason": why}))
            .collect::<Vec<_>>(),
        "partial-files": d.partial_files.iter()
            .map(|(path, n)| json!({"path": path.display().to_string(), "error-regions": n}))
            .collect::<Vec<_>>(),
        "duplicate-classes": d.duplicate_classes.iter()
            .map(|(name, path)| json!({"name": name, "path": path.display().to_string()}))
            .collect::<Vec<_>>(),
        "unresolved-references": d.unresolved_count(),
    });
    let doc = json!({
        "tool-version": env!("CARGO_PKG_VERSION"),
        "language": report.language.map_or("none", |l| l.as_str()),
        "patterns": patterns,
        "diagnostics": diagnostics,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}
