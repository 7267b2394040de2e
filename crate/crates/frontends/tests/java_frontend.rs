use dpscan_core::{AbstractionKind, CodeGraph, ConnectionKind, QualifiedName};
use dpscan_frontends::{analyze_java, SourceFile};

fn graph(files: &[(&str, &str)]) -> CodeGraph {
    let sources = files.iter().map(|(p, t)| SourceFile::new(*p, *t)).collect();
    analyze_java(sources).graph
}

fn q(s: &str) -> QualifiedName {
    QualifiedName::parse(s).unwrap()
}

fn edges(g: &CodeGraph) -> Vec<String> {
    g.connections()
        .map(|c| format!("{} {} {}", c.from, c.kind, c.to))
        .collect()
}

fn has(g: &CodeGraph, from: &str, kind: ConnectionKind, to: &str) -> bool {
    g.has_connection(&q(from), &q(to), kind)
}

const OBSERVER: &str = r#"
package obs;

import java.util.ArrayList;
import java.util.List;

interface Observer {
    void update(Subject s);
}

class Subject {
    private List<Observer> observers = new ArrayList<>();
    private Observer primary;
    private int state;

    public void attach(Observer o) { observers.add(o); }

    public void notifyAll() {
        for (Observer o : observers) {
            o.update(this);
        }
        primary.update(this);
    }

    public int getState() { return state; }
}

class ConcreteObserver implements Observer {
    private Subject subject;
    public ConcreteObserver(Subject s) { subject = s; s.attach(this); }
    public void update(Subject s) { System.out.println(s.getState()); }
}
"#;

#[test]
fn observer_sample_produces_expected_graph() {
    let g = graph(&[("Observer.java", OBSERVER)]);
    assert_eq!(
        g.classes().iter().map(|c| (c.name.to_string(), c.kind)).collect::<Vec<_>>(),
        vec![
            ("obs.ConcreteObserver".to_string(), AbstractionKind::Normal),
            ("obs.Observer".to_string(), AbstractionKind::Interface),
            ("obs.Subject".to_string(), AbstractionKind::Normal),
        ]
    );
    let mut expected = vec![
        "obs.ConcreteObserver inherits obs.Observer",
        "obs.ConcreteObserver has obs.Subject",
        "obs.ConcreteObserver references obs.Subject",
        "obs.ConcreteObserver calls obs.Subject",
        "obs.Observer references obs.Subject",
        "obs.Subject has obs.Observer",
        "obs.Subject references obs.Observer",
        "obs.Subject calls obs.Observer",
    ];
    expected.sort();
    let mut got = edges(&g);
    got.sort();
    assert_eq!(got, expected);
}

#[test]
fn static_members_contribute_nothing() {
    let g = graph(&[(
        "S.java",
        r#"
        package s;
        class Target { void go() {} static Target make() { return new Target(); } }
        class User {
            static Target shared;
            static Target helper(Target t) { t.go(); return new Target(); }
            static { new Target().go(); }
            void work() { Target.make(); }
        }
        "#,
    )]);
    assert!(!g.connections().any(|c| c.from == q("s.User")), "{:?}", edges(&g));
}

#[test]
fn calls_target_the_declaring_ancestor() {
    let g = graph(&[(
        "C.java",
        r#"
        package c;
        abstract class Base { void run() {} abstract void step(); }
        class Mid extends Base { void step() {} }
        class Leaf extends Mid {}
        class Driver {
            private Leaf leaf;
            void go() { leaf.run(); leaf.step(); leaf.missing(); }
        }
        "#,
    )]);
    assert!(has(&g, "c.Driver", ConnectionKind::Calls, "c.Base"));
    assert!(has(&g, "c.Driver", ConnectionKind::Calls, "c.Mid"));
    assert!(!has(&g, "c.Driver", ConnectionKind::Calls, "c.Leaf"));
    assert_eq!(g.get(&q("c.Base")).unwrap().kind, AbstractionKind::Abstract);
}

#[test]
fn receivers_are_inferred_through_expressions() {
    let g = graph(&[(
        "R.java",
        r#"
        package r;
        class A { B next() { return new B(); } }
        class B { void act() {} }
        class C { void act() {} }
        class User {
            A a;
            void m(Object o) {
                a.next().act();
                ((C) o).act();
                var c = new C();
                c.act();
            }
        }
        "#,
    )]);
    assert!(has(&g, "r.User", ConnectionKind::Calls, "r.A"));
    assert!(has(&g, "r.User", ConnectionKind::Calls, "r.B"));
    assert!(has(&g, "r.User", ConnectionKind::Calls, "r.C"));
    assert!(has(&g, "r.User", ConnectionKind::Creates, "r.C"));
    assert!(has(&g, "r.A", ConnectionKind::Creates, "r.B"));
    assert!(has(&g, "r.A", ConnectionKind::Uses, "r.B"));
}

#[test]
fn anonymous_classes_are_credited_to_the_enclosing_class() {
    let g = graph(&[(
        "An.java",
        r#"
        package an;
        abstract class Task { abstract void run(); void helper() {} }
        class Worker { void work() {} }
        class Scheduler {
            Worker w;
            Task make() {
                return new Task() {
                    void run() { helper(); w.work(); new Worker(); }
                };
            }
        }
        "#,
    )]);
    assert!(has(&g, "an.Scheduler", ConnectionKind::Creates, "an.Task"));
    assert!(has(&g, "an.Scheduler", ConnectionKind::Calls, "an.Task"));
    assert!(has(&g, "an.Scheduler", ConnectionKind::Calls, "an.Worker"));
    assert!(has(&g, "an.Scheduler", ConnectionKind::Creates, "an.Worker"));
    assert_eq!(g.class_count(), 3);
}

#[test]
fn generics_erase_to_head_and_arrays_give_no_edge() {
    let g = graph(&[(
        "G.java",
        r#"
        package g;
        class Box<T> { T item; T get() { return item; } }
        class Item {}
        class Holder {
            Box<Item> box;
            Item[] items;
            Item[] all() { return items; }
        }
        "#,
    )]);
    assert!(has(&g, "g.Holder", ConnectionKind::Has, "g.Box"));
    assert!(!has(&g, "g.Holder", ConnectionKind::Has, "g.Item"));
    assert!(!has(&g, "g.Holder", ConnectionKind::Uses, "g.Item"));
    assert!(!g.connections().any(|c| c.from == q("g.Box")));
}

#[test]
fn nested_classes_are_separate_nodes() {
    let g = graph(&[(
        "N.java",
        r#"
        package n;
        public class Outer {
            private Inner inner;
            static class Inner { Outer back; }
            void m() { class Local {} new Local(); }
        }
        "#,
    )]);
    assert!(g.get(&q("n.Outer.Inner")).is_some());
    assert!(g.get(&q("n.Outer.Local")).is_some());
    assert!(has(&g, "n.Outer", ConnectionKind::Has, "n.Outer.Inner"));
    assert!(has(&g, "n.Outer.Inner", ConnectionKind::Has, "n.Outer"));
    assert!(has(&g, "n.Outer", ConnectionKind::Creates, "n.Outer.Local"));
}

#[test]
fn cross_package_resolution_uses_imports() {
    let g = graph(&[
        ("a/Thing.java", "package a; public class Thing { public void f() {} }"),
        ("b/Thing.java", "package b; public class Thing { public void f() {} }"),
        (
            "c/User.java",
            "package c; import b.Thing; import a.*; class User { Thing t; void m() { t.f(); } }",
        ),
    ]);
    assert!(has(&g, "c.User", ConnectionKind::Has, "b.Thing"));
    assert!(has(&g, "c.User", ConnectionKind::Calls, "b.Thing"));
    assert!(!has(&g, "c.User", ConnectionKind::Has, "a.Thing"));
}

#[test]
fn duplicates_keep_the_first_path_and_are_reported() {
    let out = analyze_java(vec![
        SourceFile::new("z/B.java", "package p; class A { B b; } class B {}"),
        SourceFile::new("a/A.java", "package p; abstract class A {}"),
    ]);
    assert_eq!(out.graph.get(&q("p.A")).unwrap().kind, AbstractionKind::Abstract);
    assert!(!out.graph.has_connection(&q("p.A"), &q("p.B"), ConnectionKind::Has));
    assert_eq!(out.diagnostics.duplicate_classes.len(), 1);
}

#[test]
fn syntax_errors_keep_the_rest_of_the_file() {
    let out = analyze_java(vec![SourceFile::new(
        "E.java",
        "package e; class Good { Other o; } class Broken { void m( { } } class Other {}",
    )]);
    assert!(out.graph.get(&q("e.Good")).is_some());
    assert!(!out.diagnostics.partial_files.is_empty());
}

#[test]
fn result_is_independent_of_input_order() {
    let files = [
        ("x/A.java", "package x; class A extends B { C c; void m() { c.go(); } }"),
        ("x/B.java", "package x; abstract class B { abstract void m(); }"),
        ("x/C.java", "package x; class C { void go() { new A(); } }"),
    ];
    let forward = graph(&files);
    let mut rev = files;
    rev.reverse();
    assert_eq!(forward, graph(&rev));
    assert_eq!(forward.canonical_text(), graph(&rev).canonical_text());
}
