use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use argmon::{extensions, parse_graph, ArgumentationGraph, GraphFormat, Semantics};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("argmon").chain(args.iter().copied());
    let code = argmon::cli::run(argv, &mut std::io::empty(), &mut stdout, &mut stderr);
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn solve_preferred_f3() {
    let out = run(&["solve", "--semantics", "preferred", &fixture("f3.tgf")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{\"semantics\":\"preferred\",\"extensions\":[[\"a\"],[\"b\"]]}\n");
}

#[test]
fn solve_all_semantics_f3() {
    let expected = [
        ("complete", "[[],[\"a\"],[\"b\"]]"),
        ("stable", "[[\"a\"],[\"b\"]]"),
        ("grounded", "[[]]"),
    ];
    for (sem, exts) in expected {
        let out = run(&["solve", "--semantics", sem, &fixture("f3.tgf")]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, format!("{{\"semantics\":\"{sem}\",\"extensions\":{exts}}}\n"));
    }
    let out = run(&["solve", "--semantics", "stable", &fixture("loop.tgf")]);
    assert_eq!(out.stdout, "{\"semantics\":\"stable\",\"extensions\":[]}\n");
}

#[test]
fn solve_output_rechecks() {
    let path = fixture("f6.tgf");
    let graph = parse_graph(&std::fs::read(&path).unwrap(), GraphFormat::Tgf).unwrap();
    for sem in Semantics::ALL {
        let out = run(&["solve", "--semantics", sem.name(), &path]);
        let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let reported: Vec<Vec<String>> = serde_json::from_value(json["extensions"].clone()).unwrap();
        let expected: Vec<Vec<String>> = extensions(&graph, sem)
            .iter()
            .map(|e| e.names(&graph).iter().map(|n| n.to_string()).collect())
            .collect();
        assert_eq!(reported, expected);
        for ext in reported {
            let ids: Vec<_> = ext.iter().map(|s| s.parse().unwrap()).collect();
            let set = graph.index_set(&ids).unwrap();
            assert!(graph.conflict_free(&set));
            let defended = argmon::characteristic(&graph, &set);
            match sem {
                Semantics::Stable => {
                    assert_eq!(set.union(&graph.attacked_by(&set)).len(), graph.len())
                }
                _ => assert_eq!(defended, set),
            }
        }
    }
}

#[test]
fn degrees_alternative_self_loop() {
    let out = run(&["degrees", "--semantics", "stable", "--convention", "alternative", &fixture("loop.tgf")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{\"a\":0}\n");
    let out = run(&["degrees", "--semantics", "stable", "--convention", "standard", &fixture("loop.tgf")]);
    assert_eq!(out.stdout, "{\"a\":1}\n");
}

#[test]
fn degrees_from_apx() {
    let out = run(&["degrees", "--semantics", "complete", &fixture("chain.apx")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "{\"a\":1,\"b\":0,\"c\":1}\n");
    let out = run(&["degrees", "--semantics", "preferred", &fixture("f3.tgf")]);
    assert_eq!(out.stdout, "{\"a\":0.5,\"b\":0.5}\n");
}

#[test]
fn remove_attack_from_f3() {
    let out = run(&["remove", "--attacks", "b>a", &fixture("f3.tgf")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "a\nb\n#\na b\n");
    let out = run(&["remove", "--attacks", " b > a ; a>b ", "--format-out", "apx", &fixture("f3.tgf")]);
    assert_eq!(out.stdout, "arg(a).\narg(b).\n");
    let out = run(&["remove", "--attacks", "a>b", &fixture("chain.apx")]);
    assert_eq!(out.stdout, "arg(a).\narg(b).\narg(c).\natt(b,c).\n");
}

#[test]
fn remove_absent_attack_fails() {
    let out = run(&["remove", "--attacks", "a>a", &fixture("f3.tgf")]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("a>a"));
    assert_eq!(run(&["remove", "--attacks", "ab", &fixture("f3.tgf")]).code, 2);
}

#[test]
fn verify_max_n_three() {
    let out = run(&["verify", "--max-n", "3", "--json"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["graphs_checked"], 530);
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);
    assert!(json["checks_performed"].as_u64().unwrap() > 0);
    assert!(json["elapsed_ms"].is_u64());

    let text = run(&["verify", "--max-n", "2", "--semantics", "stable,grounded"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains("graphs checked:   18"));
    assert!(text.stdout.contains("violations:       0"));
}

#[test]
fn verify_output_is_deterministic() {
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["verify", "--max-n", "2", "--random-n", "5", "--samples", "50", "--seed", "9", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
    assert_eq!(strip(&a.stdout)["graphs_checked"], 68);
}

#[test]
fn byte_identical_solve_output() {
    let args = ["solve", "--semantics", "complete", &fixture("f6.tgf")];
    let args: Vec<&str> = args.to_vec();
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_code_contract_on_fixture_corpus() {
    let well_formed = ["f3.tgf", "loop.tgf", "chain.apx", "f6.tgf", "empty.tgf"];
    for name in well_formed {
        let out = run(&["solve", "--semantics", "grounded", &fixture(name)]);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
    }
    let malformed = ["undeclared.tgf", "duplicate.tgf", "bad_line.tgf", "bad_syntax.apx"];
    for name in malformed {
        let out = run(&["solve", "--semantics", "grounded", &fixture(name)]);
        assert_eq!(out.code, 2, "{name}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("line"), "{name}: {}", out.stderr);
    }
    // reading a TGF file as APX is a syntax error
    let out = run(&["solve", "--semantics", "grounded", "--format", "apx", &fixture("f3.tgf")]);
    assert_eq!(out.code, 2);
    assert_eq!(run(&["solve", "--semantics", "grounded", "/no/such/file.tgf"]).code, 2);
}

#[test]
fn empty_graph_solves_to_one_empty_extension() {
    let out = run(&["solve", "--semantics", "stable", &fixture("empty.tgf")]);
    assert_eq!(out.stdout, "{\"semantics\":\"stable\",\"extensions\":[[]]}\n");
    let out = run(&["degrees", "--semantics", "stable", &fixture("empty.tgf")]);
    assert_eq!(out.stdout, "{}\n");
}

#[test]
fn malformed_flags_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["solve", &fixture("f3.tgf")],
        &["solve", "--semantics", "ideal", "x.tgf"],
        &["degrees", "--semantics", "stable", "--convention", "odd", "x.tgf"],
        &["verify", "--random-n", "6"],
        &["verify", "--samples", "10"],
        &["verify", "--seed", "3"],
        &["verify", "--max-n", "0"],
        &["verify", "--max-n", "9"],
        &["verify", "--semantics", "complete,semistable"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_argmon"))
        .args(["solve", "--semantics", "preferred", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a\nb\n#\na b\nb a\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"semantics\":\"preferred\",\"extensions\":[[\"a\"],[\"b\"]]}\n"
    );
}

#[test]
fn binary_respects_thread_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_argmon"))
        .args(["verify", "--max-n", "2"])
        .env("ARGMON_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_argmon"))
        .args(["verify", "--max-n", "2"])
        .env("ARGMON_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ARGMON_THREADS"));
}

#[test]
fn stdin_apx_with_explicit_format() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_argmon"))
        .args(["remove", "--attacks", "b>a", "--format", "apx", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"arg(a).\narg(b).\natt(b,a).\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "arg(a).\narg(b).\n");
    let g = ArgumentationGraph::from_names(&["a", "b"], &[]).unwrap();
    assert_eq!(argmon::serialize_graph(&g, GraphFormat::Apx), "arg(a).\narg(b).\n");
}
