use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn patterns() -> String {
    root().join("patterns").display().to_string()
}

fn corpus(rel: &str) -> String {
    root().join("corpus").join(rel).display().to_string()
}

fn dpscan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpscan")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary(text: &str) -> Vec<(String, usize)> {
    let tail = text.split("Summary\n").nth(1).expect("summary section");
    tail.lines()
        .map(|l| {
            let (name, n) = l.rsplit_once(": ").unwrap();
            (name.to_string(), n.parse().unwrap())
        })
        .collect()
}

fn json_counts(o: &Output) -> Vec<(String, usize)> {
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    doc["patterns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["name"].as_str().unwrap().to_string(), p["count"].as_u64().unwrap() as usize))
        .collect()
}

#[test]
fn successful_run_exits_zero_and_prints_summary() {
    let out = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &patterns()]);
    assert_eq!(out.status.code(), Some(0));
    let counts = summary(&stdout(&out));
    assert_eq!(
        counts,
        [("Abstract Factory", 0), ("Bridge", 0), ("Builder", 0), ("Command", 0), ("Observer", 1), ("Visitor", 0)]
            .map(|(n, c)| (n.to_string(), c))
    );
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(dpscan(&["--patterns", &patterns()]).status.code(), Some(1));
    assert_eq!(dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &patterns(), "--lang", "cobol"]).status.code(), Some(1));
    assert_eq!(dpscan(&["--bogus"]).status.code(), Some(1));
    assert_eq!(dpscan(&["--help"]).status.code(), Some(0));
}

#[test]
fn mixed_languages_under_auto_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("A.java"), "class A {}\n").unwrap();
    fs::write(dir.path().join("b.cpp"), "class B {};\n").unwrap();
    let src = dir.path().display().to_string();
    let out = dpscan(&["--src", &src, "--patterns", &patterns()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--lang"));
    // An explicit language picks one side and succeeds.
    let out = dpscan(&["--src", &src, "--patterns", &patterns(), "--lang", "cpp", "--dump-graph", &dir.path().join("g.txt").display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(dir.path().join("g.txt")).unwrap(), "CLASS B Normal\n");
}

#[test]
fn input_errors_exit_two() {
    let missing = root().join("no-such-patterns").display().to_string();
    let out = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &missing]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("Broken.txt"), "Broken\nA Sometimes Thing\nEnd_Members\nEnd_Connections\n").unwrap();
    let out = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &dir.path().display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Broken.txt"), "{err}");
    assert!(err.contains("line 2"), "{err}");

    let out = dpscan(&["--src", &root().join("no-such-src").display().to_string(), "--patterns", &patterns()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_source_tree_reports_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().display().to_string();
    let out = dpscan(&["--src", &src, "--patterns", &patterns(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["language"], "none");
    assert!(json_counts(&out).iter().all(|(_, c)| *c == 0));
    assert_eq!(json_counts(&out).len(), 6);

    let text = stdout(&dpscan(&["--src", &src, "--patterns", &patterns()]));
    assert!(text.starts_with("Summary\n"), "{text}");
}

#[test]
fn merged_alternatives_render_as_also_lines() {
    let text = stdout(&dpscan(&["--src", &corpus("cppunit-1.9"), "--patterns", &patterns()]));
    let expected = "Observer Design Pattern\n\
                    A (Concrete Observer): TestCase\n    also A: TestSuite\n\
                    B (Observer): Test\n\
                    C (Subject): TestResult\n\n";
    assert!(text.contains(expected), "{text}");
}

#[test]
fn json_counts_agree_with_text_summary() {
    for (src, lang) in [("cppunit-1.12", "cpp"), ("junit-3.4", "java"), ("snippets/java/visitor", "java")] {
        let text = dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--lang", lang]);
        let json = dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--lang", lang, "--format", "json"]);
        assert_eq!(json_counts(&json), summary(&stdout(&text)), "{src}");

        let doc: Value = serde_json::from_slice(&json.stdout).unwrap();
        assert_eq!(doc["language"], lang);
        for p in doc["patterns"].as_array().unwrap() {
            let instances = p["instances"].as_array().unwrap();
            assert_eq!(instances.len() as u64, p["count"].as_u64().unwrap());
            for inst in instances {
                assert!(inst["members"].as_u64().unwrap() >= 1);
            }
        }
    }
}

#[test]
fn json_uses_fully_qualified_names() {
    let out = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &patterns(), "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let observer = doc["patterns"].as_array().unwrap().iter().find(|p| p["name"] == "Observer").unwrap();
    let rep = &observer["instances"][0]["representative"];
    assert_eq!(rep["A"], "junit.framework.TestSuite");
    assert_eq!(rep["B"], "junit.framework.Test");
    assert_eq!(rep["C"], "junit.framework.TestResult");
    assert_eq!(observer["instances"][0]["members"], 1);
    assert_eq!(observer["instances"][0]["alternatives"], serde_json::json!({}));
}

#[test]
fn raw_mode_never_reports_fewer_instances() {
    for src in ["cppunit-1.9", "cppunit-1.12", "snippets/cpp/abstract_factory"] {
        let merged = json_counts(&dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--format", "json"]));
        let raw = json_counts(&dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--format", "json", "--no-merge"]));
        for ((name, m), (_, r)) in merged.iter().zip(&raw) {
            assert!(r >= m, "{src} {name}: raw {r} < merged {m}");
        }
    }
    let merged = json_counts(&dpscan(&["--src", &corpus("cppunit-1.9"), "--patterns", &patterns(), "--format", "json"]));
    let raw = json_counts(&dpscan(&["--src", &corpus("cppunit-1.9"), "--patterns", &patterns(), "--format", "json", "--no-merge"]));
    assert_eq!(merged.iter().find(|(n, _)| n == "Observer").unwrap().1, 1);
    assert_eq!(raw.iter().find(|(n, _)| n == "Observer").unwrap().1, 2);
}

#[test]
fn auto_detection_matches_explicit_language() {
    for (src, lang) in [("junit-3.4", "java"), ("cppunit-1.12", "cpp"), ("snippets/cpp/observer", "cpp")] {
        let auto = dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--format", "json"]);
        let explicit = dpscan(&["--src", &corpus(src), "--patterns", &patterns(), "--format", "json", "--lang", lang]);
        assert_eq!(auto.stdout, explicit.stdout, "{src}");
    }
}

#[test]
fn junit_37_sample_reports_the_money_command() {
    let text = stdout(&dpscan(&["--src", &corpus("junit-3.7-sample"), "--patterns", &patterns()]));
    let block = "Command Design Pattern\n\
                 A (Concrete Command): MoneyTest\n\
                 B (Command): TestCase\n\
                 C (Receiver): Money\n\
                 D (Invoker): DoubleTestCase\n";
    assert!(text.contains(block), "{text}");
}

#[test]
fn several_source_roots_are_combined() {
    let out = dpscan(&[
        "--src", &corpus("cppunit-1.12/include"),
        "--src", &corpus("cppunit-1.12/src"),
        "--src", &corpus("cppunit-1.12/examples"),
        "--patterns", &patterns(),
        "--format", "json",
    ]);
    let whole = dpscan(&["--src", &corpus("cppunit-1.12"), "--patterns", &patterns(), "--format", "json"]);
    assert_eq!(json_counts(&out), json_counts(&whole));
}

#[test]
fn verbose_mode_reports_diagnostics_on_stderr() {
    let out = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &patterns(), "--verbose"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("partial parse"), "{err}");
    assert!(err.contains("Assert.java"), "{err}");
    let quiet = dpscan(&["--src", &corpus("junit-3.4"), "--patterns", &patterns()]);
    assert!(quiet.stderr.is_empty());
    assert_eq!(quiet.stdout, out.stdout);
}
