use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

/// Axiom `ax`, chain `p → q → r` with a shortcut `r → p` cited twice.
const SMALL: &str = "\
node ax kind=axiom group=1
node p kind=theorem group=1
node q kind=theorem group=2
node r kind=theorem group=2
edge p ax
edge q p
edge r q
edge r p mult=2
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_theoremnet"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        let f = Fixture { dir: tempfile::tempdir().unwrap() };
        f.write("small.deps", SMALL);
        f
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn small(&self) -> String {
        self.path("small.deps").to_str().unwrap().to_string()
    }
}

fn mm_fixture() -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../metamath/tests/fixtures/mini.mm")
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn sat_lists_three_assignments() {
    let o = run(&["logic", "sat", "a=(a&b)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("instances: 3"));
    let rows: Vec<&str> = out.lines().skip_while(|l| !l.starts_with("a ")).skip(1).collect();
    assert_eq!(rows, ["T  T", "F  T", "F  F"]);
}

#[test]
fn reduce_reports_edge_counts() {
    let f = Fixture::new();
    let o = run(&["reduce", &f.small()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("4 → 3 edges\n"), "{out}");
    assert!(out.contains("closure: 6"));
}

#[test]
fn json_output_is_structured() {
    let f = Fixture::new();
    let o = run(&["stats", "degrees", &f.small(), "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mean"], 1.0);
    assert_eq!(v["max"], 2);
    assert_eq!(v["argmax"], serde_json::json!(["r"]));
    assert_eq!(v["max_weighted"], 3);
    assert_eq!(v["rows"][2]["nodes"], 1);
}

#[test]
fn csv_output_has_header() {
    let f = Fixture::new();
    let o = run(&["--format", "csv", "stats", "popularity", &f.small(), "--mode", "weighted"]);
    assert_eq!(stdout(&o), "rank,node,count\n1,p,3\n2,ax,1\n3,q,1\n4,r,0\n");
}

#[test]
fn exit_codes() {
    let f = Fixture::new();
    // Usage errors.
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["reduce"]).status.code(), Some(1));
    assert_eq!(run(&["reduce", &f.small(), "--nope"]).status.code(), Some(1));
    assert_eq!(run(&["cone", "past", &f.small(), "r", "--reduce", "--closure"]).status.code(), Some(1));
    assert_eq!(run(&["stats", "degrees", &f.small(), "--format", "dot"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    // Data errors.
    let missing = f.path("absent.deps");
    let o = run(&["reduce", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("absent.deps"));
    let bad = f.write("bad.deps", "node a kind=axiom\nedge a b\n");
    assert_eq!(run(&["reduce", &bad]).status.code(), Some(2));
    assert_eq!(run(&["chains", &f.small(), "zz"]).status.code(), Some(2));
    assert_eq!(run(&["logic", "sat", "a=b=c"]).status.code(), Some(2));
    assert_eq!(run(&["branchial", &f.small(), "--slice", "9"]).status.code(), Some(2));
    let mm = f.write("broken.mm", "$c |- $. x $p |- $= ");
    assert_eq!(run(&["metamath", "extract", &mm]).status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let f = Fixture::new();
    let target = f.path("out.txt");
    let o = run(&["chains", &f.small(), "r", "--output", target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(target).unwrap();
    assert!(text.contains("max_depth: 3"));
    assert!(text.contains("ax → p → q → r"));
}

#[test]
fn cone_variants() {
    let f = Fixture::new();
    let small = f.small();
    let v = |extra: &[&str]| -> Value {
        let mut args = vec!["cone", "past", small.as_str(), "r", "--format", "json"];
        args.extend_from_slice(extra);
        serde_json::from_slice(&run(&args).stdout).unwrap()
    };
    assert_eq!(v(&[])["members"], 3);
    assert_eq!(v(&[])["induced_edges"], 4);
    assert_eq!(v(&["--reduce"])["induced_edges"], 3);
    assert_eq!(v(&["--closure"])["induced_edges"], 6);
    let fut = run(&["cone", "future", &f.small(), "ax", "--format", "csv"]);
    assert_eq!(stdout(&fut), "ordinal,node,kind\n1,p,theorem\n2,q,theorem\n3,r,theorem\n");
    let dot = stdout(&run(&["cone", "past", &f.small(), "q", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert!(!dot.contains("\"r\""));
}

#[test]
fn foliation_and_branchial() {
    let f = Fixture::new();
    let out = stdout(&run(&["foliate", &f.small(), "--layers", "--format", "csv"]));
    assert_eq!(out, "node,layer\nax,0\np,1\nq,2\nr,3\n");
    let custom = f.write("layers.csv", "node,layer\nax,0\np,1\nq,1\nr,2\n");
    let o = run(&["foliate", &f.small(), "--custom", &custom]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`q` (slice 1) cites `p` (slice 1)"));
    let ok = f.write("ok.csv", "node,layer\nax,0\np,2\nq,5\nr,6\n");
    let o = run(&["foliate", &f.small(), "--custom", &ok, "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["slices"], 7);
    let b = run(&["branchial", &f.small(), "--slice", "2", "--dt", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(v["vertices"], serde_json::json!(["q"]));
    assert_eq!(v["edges"], 0);
}

#[test]
fn growth_and_compile() {
    let f = Fixture::new();
    let g = stdout(&run(&["growth", &f.small(), "--reduced"]));
    assert!(g.starts_with("{1, 2, 3, 4}\n"), "{g}");
    let raw = stdout(&run(&["growth", &f.small()]));
    assert!(raw.starts_with("{1, 2, 4}\n"), "{raw}");
    // r = q + 2p, q = p, p = ax: three axiom leaves, tree 1 + (3) + 2·2 = 8.
    let v: Value =
        serde_json::from_slice(&run(&["compile", &f.small(), "r", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["leaf_total"], 3);
    assert_eq!(v["tree_nodes"], 8);
    assert_eq!(v["memo_steps"], 3);
    let rank = stdout(&run(&["--format", "csv", "compile", &f.small(), "rank"]));
    assert_eq!(rank, "rank,node,count\n1,r,3\n2,p,1\n3,q,1\n");
}

#[test]
fn superaxiom_apply_on_target() {
    let f = Fixture::new();
    let o = run(&["superaxiom", "apply", &f.small(), "q", "--target", "r", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    // Promoting q leaves p reachable through the shortcut, so nothing is saved.
    assert_eq!(v["nodes_saved"], 0);
    let o = run(&["superaxiom", "apply", &f.small(), "p", "--target", "q", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nodes_saved"], 1);
    assert_eq!(run(&["superaxiom", "apply", &f.small(), "p", "q"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let f = Fixture::new();
    let synth = run(&["corpus", "synth", "--nodes", "400", "--axioms", "5", "--degree", "3", "--seed", "4"]);
    assert_eq!(synth.status.code(), Some(0));
    let again = run(&["corpus", "synth", "--nodes", "400", "--axioms", "5", "--degree", "3", "--seed", "4"]);
    assert_eq!(synth.stdout, again.stdout);
    let other = run(&["corpus", "synth", "--nodes", "400", "--axioms", "5", "--degree", "3", "--seed", "5"]);
    assert_ne!(synth.stdout, other.stdout);
    let p = f.write("synth.deps", &stdout(&synth));
    for args in [
        vec!["superaxiom", "scan", p.as_str(), "--format", "csv"],
        vec!["stats", "popularity", p.as_str(), "--mode", "indirect"],
        vec!["growth", p.as_str(), "--from", "all"],
        vec!["books", p.as_str(), "--format", "dot"],
    ] {
        let a = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn export_round_trips() {
    let f = Fixture::new();
    let json = run(&["corpus", "export", &f.small(), "--format", "json"]);
    let p = f.write("small.json", &stdout(&json));
    let back = stdout(&run(&["corpus", "export", &p]));
    assert_eq!(back, stdout(&run(&["corpus", "export", &f.small()])));
    let v = stdout(&run(&["corpus", "validate", &p]));
    assert!(v.contains("edges: 4") && v.contains("diagnostics: 0"));
}

#[test]
fn metamath_extract_feeds_the_analyses() {
    let f = Fixture::new();
    let summary = stdout(&run(&["metamath", "extract", &mm_fixture(), "--summary"]));
    assert!(summary.contains("edges: 14"), "{summary}");
    let corpus = run(&["metamath", "extract", &mm_fixture()]);
    assert_eq!(corpus.status.code(), Some(0));
    let p = f.write("mini.deps", &stdout(&corpus));
    let deps = stdout(&run(&["--format", "csv", "deps", &p, "a1iz"]));
    assert_eq!(deps, "node,multiplicity\nax-mp,1\na1i,3\n");
}

#[test]
fn logic_commands() {
    let head = stdout(&run(&["--format", "csv", "logic", "enum", "--limit", "3"]));
    assert_eq!(head, "index,equation\n1,a=b\n2,a=(!a)\n3,a=(!b)\n");
    let uni = stdout(&run(&["logic", "enum", "--limit", "4", "--unicode", "--format", "csv"]));
    assert!(uni.ends_with("4,(¬a) = (¬b)\n"), "{uni}");
    let v: Value =
        serde_json::from_slice(&run(&["logic", "implications", "--count", "2", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(v["rows"][0]["implied"], serde_json::json!(["a=b"]));
    assert_eq!(v["rows"][1]["implied"], serde_json::json!([]));
    let c: Value = serde_json::from_slice(&run(&["logic", "census", "--format", "json"]).stdout).unwrap();
    assert!(c["tautologies"].as_u64().unwrap() > 0);
    let m: Value = serde_json::from_slice(
        &run(&["logic", "multiway", "x&y", "--depth", "1", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(m["truncated"], false);
    assert_eq!(m["depth"], 1);
    let capped: Value = serde_json::from_slice(
        &run(&["logic", "multiway", "--depth", "3", "--max-vertices", "5", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(capped["truncated"], true);
    assert_eq!(capped["vertices"], 5);
}
