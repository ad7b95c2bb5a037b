use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_islabel");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn islabel")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "islabel {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn field<'a>(stdout: &'a str, key: &str) -> &'a str {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {stdout}"))
}

fn p(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn write(path: &str, body: &str) {
    fs::write(Path::new(path), body).unwrap();
}

fn generated(dir: &TempDir, n: &str, directed: bool) -> String {
    let graph = p(dir, "graph.txt");
    let mut args = vec!["generate", "--model", "uniform", "--n", n, "--degree", "3", "--seed", "7", "--output", &graph];
    if directed {
        args.push("--directed");
    }
    ok(&args);
    graph
}

fn answers(stdout: &str) -> Vec<String> {
    stdout
        .lines()
        .map(|l| l.split_whitespace().take(3).collect::<Vec<_>>().join(" "))
        .collect()
}

#[test]
fn path_graph_build_reports_hierarchy() {
    let dir = TempDir::new().unwrap();
    let (graph, index) = (p(&dir, "g.txt"), p(&dir, "g.idx"));
    write(&graph, "0 1 1\n1 2 1\n");
    let out = ok(&["build", "--input", &graph, "--output", &index, "--sigma", "0.5"]);
    assert_eq!(field(&out, "k"), "2");
    assert_eq!(field(&out, "top_vertices"), "1");
    assert_eq!(field(&out, "top_edges"), "0");
}

#[test]
fn empty_graph_builds() {
    let dir = TempDir::new().unwrap();
    let (graph, index) = (p(&dir, "g.txt"), p(&dir, "g.idx"));
    write(&graph, "");
    let out = ok(&["build", "--input", &graph, "--output", &index]);
    assert_eq!(field(&out, "k"), "1");
    assert_eq!(field(&out, "top_vertices"), "0");
}

#[test]
fn builds_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let graph = generated(&dir, "300", false);
    let (a, b) = (p(&dir, "a.idx"), p(&dir, "b.idx"));
    ok(&["build", "--input", &graph, "--output", &a]);
    ok(&["build", "--input", &graph, "--output", &b]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn query_matches_oracle() {
    for directed in [false, true] {
        let dir = TempDir::new().unwrap();
        let graph = generated(&dir, "400", directed);
        let (index, pairs) = (p(&dir, "g.idx"), p(&dir, "pairs.txt"));
        let text = fs::read_to_string(&graph).unwrap();
        let mut ids: Vec<&str> = text.lines().flat_map(|l| l.split_whitespace().take(2)).collect();
        ids.sort_unstable();
        ids.dedup();
        let body: String = (0..200)
            .map(|i| format!("{} {}\n", ids[(i * 7) % ids.len()], ids[(i * 13 + 5) % ids.len()]))
            .collect();
        write(&pairs, &body);
        let flag = if directed { vec!["--directed"] } else { vec![] };
        let mut build = vec!["build", "--input", &graph, "--output", &index];
        build.extend(&flag);
        ok(&build);
        let mut query = vec!["query", "--index", &index, "--pairs", &pairs];
        query.extend(&flag);
        let mut oracle = vec!["oracle", "--input", &graph, "--pairs", &pairs];
        oracle.extend(&flag);
        let got = ok(&query);
        let want = ok(&oracle);
        assert_eq!(answers(&got), answers(&want));
        assert_eq!(got.lines().count(), 200);
    }
}

#[test]
fn query_paths_are_walks_of_the_reported_length() {
    let dir = TempDir::new().unwrap();
    let (graph, index, pairs) = (p(&dir, "g.txt"), p(&dir, "g.idx"), p(&dir, "pairs.txt"));
    write(&graph, "1 2 1\n2 3 2\n3 4 1\n4 1 5\n2 5 3\n7 8 1\n");
    write(&pairs, "1 3\n1 5\n5 4\n4 4\n1 7\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    let out = ok(&["query", "--index", &index, "--pairs", &pairs, "--path"]);
    let weight = |a: u64, b: u64| -> u64 {
        let (a, b) = (a.min(b), a.max(b));
        match (a, b) {
            (1, 2) | (3, 4) | (7, 8) => 1,
            (2, 3) => 2,
            (1, 4) => 5,
            (2, 5) => 3,
            _ => panic!("{a}-{b} is not an edge"),
        }
    };
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[4], "1 7 INF");
    for line in &lines[..4] {
        let cols: Vec<&str> = line.split_whitespace().collect();
        let path: Vec<u64> = cols[3].split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(path[0].to_string(), cols[0]);
        assert_eq!(path.last().unwrap().to_string(), cols[1]);
        let len: u64 = path.windows(2).map(|w| weight(w[0], w[1])).sum();
        assert_eq!(len.to_string(), cols[2], "{line}");
    }
}

#[test]
fn bench_accepts_zero_queries() {
    let dir = TempDir::new().unwrap();
    let graph = generated(&dir, "100", false);
    let index = p(&dir, "g.idx");
    ok(&["build", "--input", &graph, "--output", &index]);
    let out = ok(&["bench", "--index", &index, "--queries", "0"]);
    assert_eq!(field(&out, "queries"), "0");
    let out = ok(&["bench", "--index", &index, "--queries", "20", "--seed", "3"]);
    let type1: usize = field(&out, "type1").parse().unwrap();
    let type2: usize = field(&out, "type2").parse().unwrap();
    assert_eq!(type1 + type2, 20);
}

#[test]
fn updates_persist_and_stay_exact() {
    let dir = TempDir::new().unwrap();
    let (graph, index, pairs) = (p(&dir, "g.txt"), p(&dir, "g.idx"), p(&dir, "pairs.txt"));
    write(&graph, "1 2 1\n2 3 2\n3 4 1\n4 1 5\n2 5 3\n");
    write(&pairs, "1 3\n9 3\n1 5\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    let out = ok(&["update", "--index", &index, "--insert", "9: 1 1, 4 2"]);
    assert_eq!(field(&out, "stale"), "false");
    assert_eq!(ok(&["query", "--index", &index, "--pairs", &pairs]), "1 3 3\n9 3 3\n1 5 4\n");
    let out = ok(&["update", "--index", &index, "--delete", "2"]);
    let stale = field(&out, "stale") == "true";
    assert_eq!(field(&out, "rebuild_required"), field(&out, "stale"));
    let stats = ok(&["stats", "--index", &index]);
    assert_eq!(field(&stats, "inserted"), "1");
    assert_eq!(field(&stats, "deleted"), "1");
    if !stale {
        assert_eq!(ok(&["query", "--index", &index, "--pairs", &pairs]), "1 3 4\n9 3 3\n1 5 INF\n");
    }
}

#[test]
fn update_needs_an_operation() {
    let dir = TempDir::new().unwrap();
    let (graph, index) = (p(&dir, "g.txt"), p(&dir, "g.idx"));
    write(&graph, "1 2 1\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    assert!(!run(&["update", "--index", &index]).status.success());
    assert!(!run(&["update", "--index", &index, "--delete", "42"]).status.success());
}

#[test]
fn directedness_mismatch_is_rejected() {
    let dir = TempDir::new().unwrap();
    let (graph, index, pairs) = (p(&dir, "g.txt"), p(&dir, "g.idx"), p(&dir, "pairs.txt"));
    write(&graph, "1 2 1\n2 3 1\n");
    write(&pairs, "1 3\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    let out = run(&["query", "--index", &index, "--pairs", &pairs, "--directed"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("directed"));
}

#[test]
fn corrupt_index_is_rejected() {
    let dir = TempDir::new().unwrap();
    let (graph, index, pairs) = (p(&dir, "g.txt"), p(&dir, "g.idx"), p(&dir, "pairs.txt"));
    write(&graph, "1 2 1\n2 3 1\n");
    write(&pairs, "1 3\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    let mut bytes = fs::read(&index).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    fs::write(&index, bytes).unwrap();
    assert!(!run(&["query", "--index", &index, "--pairs", &pairs]).status.success());
    assert!(!run(&["stats", "--index", &index]).status.success());
}

#[test]
fn unknown_query_vertex_fails() {
    let dir = TempDir::new().unwrap();
    let (graph, index, pairs) = (p(&dir, "g.txt"), p(&dir, "g.idx"), p(&dir, "pairs.txt"));
    write(&graph, "1 2 1\n");
    write(&pairs, "1 99\n");
    ok(&["build", "--input", &graph, "--output", &index]);
    assert!(!run(&["query", "--index", &index, "--pairs", &pairs]).status.success());
    assert!(!run(&["oracle", "--input", &graph, "--pairs", &pairs]).status.success());
}
