use dpscan_core::{AbstractionKind, CodeGraph, ConnectionKind, QualifiedName};
use dpscan_frontends::{analyze_cpp, SourceFile};

fn graph(files: &[(&str, &str)]) -> CodeGraph {
    let sources = files.iter().map(|(p, t)| SourceFile::new(*p, *t)).collect();
    analyze_cpp(sources).graph
}

fn q(s: &str) -> QualifiedName {
    QualifiedName::parse(s).unwrap()
}

fn kind(g: &CodeGraph, name: &str) -> AbstractionKind {
    g.get(&q(name)).unwrap_or_else(|| panic!("{name} missing")).kind
}

fn has(g: &CodeGraph, from: &str, kind: ConnectionKind, to: &str) -> bool {
    g.has_connection(&q(from), &q(to), kind)
}

fn edges(g: &CodeGraph) -> Vec<String> {
    let mut v: Vec<String> = g
        .connections()
        .map(|c| format!("{} {} {}", c.from, c.kind, c.to))
        .collect();
    v.sort();
    v
}

#[test]
fn classification_follows_pure_virtual_rule() {
    let g = graph(&[(
        "k.h",
        r#"
        class I { public: virtual void f() = 0; };
        class WithDtor { public: virtual void f() = 0; virtual ~WithDtor() {} };
        class WithState { int x; public: virtual void f() = 0; };
        class StaticOnly { static int count; public: virtual void f() = 0; virtual int g() const = 0; };
        class C { int x; void g(); };
        struct S { virtual void f() = 0; };
        class Empty {};
        "#,
    )]);
    assert_eq!(kind(&g, "I"), AbstractionKind::Interface);
    assert_eq!(kind(&g, "WithDtor"), AbstractionKind::Abstract);
    assert_eq!(kind(&g, "WithState"), AbstractionKind::Abstract);
    assert_eq!(kind(&g, "StaticOnly"), AbstractionKind::Interface);
    assert_eq!(kind(&g, "C"), AbstractionKind::Normal);
    assert_eq!(kind(&g, "S"), AbstractionKind::Interface);
    assert_eq!(kind(&g, "Empty"), AbstractionKind::Normal);
}

#[test]
fn forward_declaration_and_definition_give_one_node() {
    let files = [
        ("a.h", "class A; class B { A* a; };"),
        ("b.h", "class A { public: void act(); };"),
    ];
    let g = graph(&files);
    assert_eq!(g.class_count(), 2);
    assert!(has(&g, "B", ConnectionKind::Has, "A"));
    let mut rev = files;
    rev.reverse();
    assert_eq!(graph(&rev).canonical_text(), g.canonical_text());
}

#[test]
fn split_header_and_source_attribute_out_of_class_bodies() {
    let g = graph(&[
        ("r.h", "#ifndef R_H\n#define R_H\nclass R { public: void act(); };\n#endif\n"),
        (
            "a.h",
            "#ifndef A_H\n#define A_H\n#include \"r.h\"\nclass A { R* r; public: void run(); static void util(); };\n#endif\n",
        ),
        (
            "a.cpp",
            "#include \"a.h\"\nvoid A::run() { r->act(); }\nvoid A::util() { R x(1); x.act(); }\nvoid free_fn() { new R(); }\n",
        ),
    ]);
    assert_eq!(
        edges(&g),
        vec!["A calls R".to_string(), "A has R".to_string()]
    );
}

#[test]
fn bases_members_and_stripping() {
    let g = graph(&[(
        "m.h",
        r#"
        #include <memory>
        #include <vector>
        namespace n {
        class B {};
        class I { public: virtual void f() = 0; };
        class W {};
        class P {};
        class R {};
        class D : public B, public I {
            std::shared_ptr<W> w;
            std::vector<W> ws;
            P& p;
            R* rs[4];
            static W shared;
          public:
            void f() override;
            R* get(const P& p, W* w);
            static P* make(R r);
        };
        }
        "#,
    )]);
    assert_eq!(
        edges(&g),
        vec![
            "n.D has n.P",
            "n.D has n.W",
            "n.D inherits n.B",
            "n.D inherits n.I",
            "n.D references n.P",
            "n.D references n.W",
            "n.D uses n.R",
        ]
    );
}

#[test]
fn creations_in_all_forms() {
    let g = graph(&[(
        "c.cpp",
        r#"
        #include <memory>
        class T1 {}; class T2 {}; class T3 {}; class T4 {}; class T5 {}; class T6 {};
        class A {
          public:
            void m() {
                T1* a = new T1();
                T2 b(1, 2);
                T3 c{1};
                T4(7);
                auto e = std::make_shared<T5>();
                T6* arr = new T6[3];
                T6 plain;
            }
        };
        "#,
    )]);
    for t in ["T1", "T2", "T3", "T4", "T5"] {
        assert!(has(&g, "A", ConnectionKind::Creates, t), "{t}: {:?}", edges(&g));
    }
    assert!(!has(&g, "A", ConnectionKind::Creates, "T6"));
}

#[test]
fn calls_follow_receiver_types_and_inheritance() {
    let g = graph(&[(
        "k.cpp",
        r#"
        class Base { public: virtual void hook(); void tmpl(); };
        class Mid : public Base { public: void hook() override; };
        class Helper { public: Mid* next(); static void util(); };
        class Client : public Base {
            Helper helper;
          public:
            void go(Mid& m) {
                m.tmpl();
                helper.next()->hook();
                Helper::util();
                Base::tmpl();
                static_cast<Mid*>(this)->hook();
            }
        };
        "#,
    )]);
    assert!(has(&g, "Client", ConnectionKind::Calls, "Base"));
    assert!(has(&g, "Client", ConnectionKind::Calls, "Helper"));
    assert!(has(&g, "Client", ConnectionKind::Calls, "Mid"));
    assert!(has(&g, "Client", ConnectionKind::References, "Mid"));
}

#[test]
fn export_macros_and_namespaces_resolve() {
    let g = graph(&[
        (
            "TestResult.h",
            "namespace CppUnit {\nclass CPPUNIT_API TestResult { public: void addError(); };\n}\n",
        ),
        (
            "Runner.h",
            "namespace CppUnit {\nclass CPPUNIT_API Runner { CppUnit::TestResult* m_result; public: void run(); };\n}\n",
        ),
        (
            "Runner.cpp",
            "namespace CppUnit {\nvoid Runner::run() { m_result->addError(); }\n}\n",
        ),
    ]);
    assert!(has(&g, "CppUnit.Runner", ConnectionKind::Has, "CppUnit.TestResult"));
    assert!(has(&g, "CppUnit.Runner", ConnectionKind::Calls, "CppUnit.TestResult"));
}

#[test]
fn templates_are_single_nodes_and_specializations_ignored() {
    let g = graph(&[(
        "t.h",
        r#"
        class Fixture { public: void setUp(); };
        template <class F> class Caller { F* fixture; Fixture* real; public: void run() { fixture->setUp(); real->setUp(); } };
        template <> class Caller<int> { };
        "#,
    )]);
    assert_eq!(g.class_count(), 2);
    assert_eq!(
        edges(&g),
        vec!["Caller calls Fixture".to_string(), "Caller has Fixture".to_string()]
    );
}

#[test]
fn nested_classes_are_named_through_their_outer_class() {
    let g = graph(&[(
        "n.h",
        "namespace ns { class Outer { class Inner { Outer* o; }; Inner* i; }; }",
    )]);
    assert!(has(&g, "ns.Outer", ConnectionKind::Has, "ns.Outer.Inner"));
    assert!(has(&g, "ns.Outer.Inner", ConnectionKind::Has, "ns.Outer"));
}
