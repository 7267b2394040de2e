use std::collections::{BTreeSet, HashMap};

use dpscan_core::QualifiedName;

/// Every parsed class, keyed by qualified name, with an index by simple name.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    names: BTreeSet<QualifiedName>,
    by_simple: HashMap<String, BTreeSet<QualifiedName>>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: QualifiedName) {
        self.by_simple
            .entry(name.simple_name().to_string())
            .or_default()
            .insert(name.clone());
        self.names.insert(name);
    }

    pub fn contains(&self, name: &QualifiedName) -> bool {
        self.names.contains(name)
    }

    /// Looks up a name given as raw segments.
    pub fn lookup(&self, segments: &[String]) -> Option<QualifiedName> {
        let name = QualifiedName::new(segments.iter().cloned()).ok()?;
        self.names.contains(&name).then_some(name)
    }

    /// The single class whose trailing segments equal `spelled`, if exactly
    /// one exists.
    pub fn unique_suffix_match(&self, spelled: &[String]) -> Option<QualifiedName> {
        let last = spelled.last()?;
        let mut hits = self
            .by_simple
            .get(last)?
            .iter()
            .filter(|n| n.ends_with(spelled));
        let first = hits.next()?;
        hits.next().is_none().then(|| first.clone())
    }

    pub fn with_simple_name(&self, simple: &str) -> impl Iterator<Item = &QualifiedName> {
        self.by_simple.get(simple).into_iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &QualifiedName> {
        self.names.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segs(s: &str) -> Vec<String> {
        s.split('.').map(String::from).collect()
    }

    #[test]
    fn suffix_matching_requires_uniqueness() {
        let mut t = SymbolTable::new();
        for n in ["a.X", "b.X", "a.Outer.Inner", "c.Y"] {
            t.insert(QualifiedName::parse(n).unwrap());
        }
        assert_eq!(t.unique_suffix_match(&segs("X")), None);
        assert_eq!(t.unique_suffix_match(&segs("Y")), Some(QualifiedName::parse("c.Y").unwrap()));
        assert_eq!(
            t.unique_suffix_match(&segs("Outer.Inner")),
            Some(QualifiedName::parse("a.Outer.Inner").unwrap())
        );
        assert_eq!(t.unique_suffix_match(&segs("Z.Inner")), None);
        assert_eq!(t.lookup(&segs("a.X")), Some(QualifiedName::parse("a.X").unwrap()));
        assert_eq!(t.lookup(&segs("a")), None);
        assert_eq!(t.with_simple_name("X").count(), 2);
    }
}
