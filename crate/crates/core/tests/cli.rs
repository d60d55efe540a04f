use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn fltl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fltl")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compile_dot() {
    let out = fltl(&["compile", "a U b", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("shape=circle").count() + dot.matches("shape=doublecircle").count(), 2);
    assert!(dot.contains("0 -> 1 [label=\"b\"]"));
}

#[test]
fn compile_json_to_file() {
    let dir = std::env::temp_dir().join(format!("fltl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.json");
    let out = fltl(&["compile", "a", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let nfa = fltl::export::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(nfa.state_count(), 2);
    assert!(nfa.states[1].accepting);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn compile_options() {
    let strict = stdout(&fltl(&["compile", "a | b", "--mode", "strict", "--raw", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&strict).unwrap();
    // `a` and `b` into the empty state, plus its `true` loop.
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    let merged = stdout(&fltl(&["compile", "a | b", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&merged).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"][0]["guard"], "a | b");

    let pruned = stdout(&fltl(&["compile", "G a", "--prune", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&pruned).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 1);

    let ap = stdout(&fltl(&["compile", "a", "--ap", "a,b", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&ap).unwrap();
    assert_eq!(v["alphabet"], serde_json::json!(["a", "b"]));
    assert_eq!(fltl(&["compile", "a & c", "--ap", "a,b"]).status.code(), Some(1));
}

#[test]
fn compile_from_file() {
    let out = fltl(&["compile", "--file", data("regression.ltl").to_str().unwrap()]);
    // The regression list is not a single formula.
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_empty_sequence_formula() {
    let out = fltl(&["check", "!(X true)", data("eps_and_a.txt").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ACCEPT\nREJECT\n");
}

#[test]
fn check_with_oracle() {
    let out = fltl(&["check", "a U b", data("eps_and_a.txt").to_str().unwrap(), "--oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "REJECT oracle=REJECT\nREJECT oracle=REJECT\n");
}

#[test]
fn regression_corpus_has_no_mismatch() {
    let traces = data("traces_ab.txt");
    let text = std::fs::read_to_string(data("regression.ltl")).unwrap();
    for formula in text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        for mode in ["relaxed", "strict"] {
            let out = fltl(&["check", formula, traces.to_str().unwrap(), "--oracle", "--mode", mode]);
            let text = stdout(&out);
            assert_eq!(out.status.code(), Some(0), "{formula} ({mode}): {text}");
            assert_eq!(text.lines().count(), 85);
            assert!(!text.contains("MISMATCH"));
        }
    }
}

#[test]
fn sat_command() {
    let out = fltl(&["sat", "G a"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "UNSAT\n");
    assert_eq!(stdout(&fltl(&["sat", "F a"])), "SAT\na\n");
    assert_eq!(stdout(&fltl(&["sat", "F !a"])), "SAT\n<eps>\n");
    assert_eq!(stdout(&fltl(&["sat", "a & X (b & X a)"])), "SAT\na; b; a\n");
}

#[test]
fn translate_command() {
    assert_eq!(stdout(&fltl(&["translate-ltlf", "!a"])), "!a & X true\n");
    assert_eq!(stdout(&fltl(&["translate_ltlf", "a U b"])), "a U b\n");
}

#[test]
fn anf_command() {
    let out = stdout(&fltl(&["anf", "a U (b R c)"]));
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["a | X | a U (b R c)", "b & c | W | true", "c | W | b R c"]);
    let relaxed = stdout(&fltl(&["anf", "--relaxed", "(a | b) & X c"]));
    assert_eq!(relaxed, "a | b | X | c\n");
    // Negations are pushed to atoms first.
    assert_eq!(stdout(&fltl(&["anf", "!(X a)"])), "true | W | !a\n");
}

#[test]
fn bench_command() {
    let first = stdout(&fltl(&["bench", "--generate", "2016"]));
    let second = stdout(&fltl(&["bench", "--corpus", concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.ltl")]));
    let counts = |csv: &str| -> Vec<String> {
        csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_owned()).collect()
    };
    assert_eq!(first.lines().next(), Some("id,formula,size,states,edges,time_s"));
    assert_eq!(first.lines().count(), 185);
    assert_eq!(counts(&first), counts(&second));
    assert!(first.lines().nth(1).unwrap().starts_with("1,\"a\",1,2,2,"));

    let concrete = stdout(&fltl(&["bench", "--generate", "2016", "--edges", "concrete"]));
    assert!(concrete.lines().nth(1).unwrap().starts_with("1,\"a\",1,2,3,"));
}

#[test]
fn exit_codes() {
    assert_eq!(fltl(&["compile", "a U"]).status.code(), Some(1));
    assert_eq!(fltl(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fltl(&["bench"]).status.code(), Some(1));
    assert_eq!(fltl(&["check", "a", "/nonexistent/traces"]).status.code(), Some(1));
    assert_eq!(fltl(&["--help"]).status.code(), Some(0));
    let err = fltl(&["sat", "a &"]);
    assert!(String::from_utf8(err.stderr).unwrap().starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    for args in [["compile", "G (a -> F b)"], ["anf", "a U (b R c)"], ["sat", "(a U b) & G !b | X a"]] {
        assert_eq!(fltl(&args).stdout, fltl(&args).stdout);
    }
}
