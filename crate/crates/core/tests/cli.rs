use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use antimagic::format::ResultFile;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_antimagic"));
    cmd.env_remove("ANTIMAGIC_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const K5: &str = "5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn orient_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let result = dir.path().join("k5.result");
    let o = run(&["orient", s(&input), "--seed", "0", "--output", s(&result)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let parsed = ResultFile::parse(&std::fs::read_to_string(&result).unwrap()).unwrap();
    assert_eq!(parsed.arcs.len(), 10);
    let mut labels: Vec<_> = parsed.arcs.iter().map(|a| a.label).collect();
    labels.sort_unstable();
    assert_eq!(labels, (1..=10).collect::<Vec<_>>());
    assert!(parsed.antimagic);

    let o = run(&["verify", s(&result), s(&input)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn json_output_verifies_too() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let result = dir.path().join("k5.json");
    let o = run(&["orient", s(&input), "--format", "json", "-o", s(&result)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(code(&run(&["verify", s(&result), s(&input)])), 0);
}

#[test]
fn dot_output_goes_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let o = run(&["orient", s(&input), "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 10);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let a = run(&["orient", s(&input), "--seed", "9"]).stdout;
    let b = bin()
        .args(["orient", s(&input)])
        .env("ANTIMAGIC_SEED", "9")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    assert!(a.starts_with(b"d: 2\n"));
}

#[test]
fn swapped_labels_collide() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let o = run(&["orient", s(&input)]);
    let mut parsed = ResultFile::parse(&String::from_utf8(o.stdout).unwrap()).unwrap();

    // Find a swap of two labels that produces equal sums.
    let g = antimagic::format::read_instance(K5).unwrap();
    let m = parsed.arcs.len();
    let swap = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let mut r = parsed.clone();
            let (a, b) = (r.arcs[i].label, r.arcs[j].label);
            r.arcs[i].label = b;
            r.arcs[j].label = a;
            !r.check_against(&g).unwrap().antimagic_ok
        })
        .expect("some swap collides on K_5");
    let (a, b) = (parsed.arcs[swap.0].label, parsed.arcs[swap.1].label);
    parsed.arcs[swap.0].label = b;
    parsed.arcs[swap.1].label = a;

    let bad = write(dir.path(), "bad.result", &parsed.to_text());
    let o = run(&["verify", s(&bad), s(&input)]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    assert!(stderr(&o).contains("collide"));
}

#[test]
fn label_zero_is_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k5.txt", K5);
    let o = run(&["orient", s(&input)]);
    let mut parsed = ResultFile::parse(&String::from_utf8(o.stdout).unwrap()).unwrap();
    parsed.arcs[0].label = 0;
    let bad = write(dir.path(), "bad.result", &parsed.to_text());
    let o = run(&["verify", s(&bad), s(&input)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("outside [1, 10]"));
}

#[test]
fn non_regular_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "path.txt", "3\n0 1\n1 2\n");
    let out = dir.path().join("never.result");
    let o = run(&["orient", s(&input), "-o", s(&out)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("not regular"));
    assert!(!out.exists());
}

#[test]
fn missing_input_is_an_input_error() {
    assert_eq!(code(&run(&["orient", "/nonexistent/instance.txt"])), 1);
}

#[test]
fn undersized_instance_never_claims_success_falsely() {
    let dir = tempfile::tempdir().unwrap();
    let instance = dir.path().join("small.txt");
    let orders = vec!["5"; 15].join(",");
    let o = run(&["gen", "--d", "2", "--orders", &orders, "-o", s(&instance)]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("violated"));

    let out = dir.path().join("small.result");
    let o = run(&["orient", s(&instance), "--seed", "0", "-o", s(&out)]);
    // Circuit 1 would need 12 arcs on a 10-arc circuit.
    assert_eq!(code(&o), 2, "{}", stderr(&o));
    assert!(!out.exists());
}

#[test]
fn gen_writes_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let o = run(&["gen", "--d", "2", "--orders", "5,6", "--output", s(&out)]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let (n, edges) = antimagic::format::parse_instance(&text).unwrap();
    assert_eq!((n, edges.len()), (11, 22));
    assert_eq!(code(&run(&["gen", "--d", "1", "--orders", "5"])), 1);
    assert_eq!(code(&run(&["gen", "--d", "2", "--orders", "3"])), 1);
}

#[test]
fn x0_command() {
    let o = run(&["x0", "--k", "15", "--d", "2"]);
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "x0=1 min_first_order=7\n"
    );
    let o = run(&["x0", "--k", "14", "--d", "2"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "none (k <= 5d+4)\n");
    assert_eq!(code(&run(&["x0", "--k", "15"])), 1);
}
