use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crystal-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn built(dir: &TempDir, rank: &str, hw: &str) -> PathBuf {
    let path = dir.path().join(format!("a{rank}_{hw}.json"));
    stdout(&["build", "A", rank, hw, "-o", path.to_str().unwrap()]);
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_writes_the_tableau_crystal() {
    let dir = TempDir::new().unwrap();
    let g: Value = serde_json::from_str(&std::fs::read_to_string(built(&dir, "2", "2,1")).unwrap()).unwrap();
    assert_eq!(g["elements"].as_array().unwrap().len(), 8);
    assert_eq!(g["edges"].as_array().unwrap().len(), 8);
    let g: Value = serde_json::from_str(&stdout(&["build", "A", "1", "1"])).unwrap();
    assert_eq!(g["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_arguments_are_usage_errors() {
    assert_eq!(run(&["build", "A", "2", "2,x"]).status.code(), Some(2));
    let out = run(&["build", "B", "2", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

#[test]
fn load_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = built(&dir, "2", "2,1");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&["load", s(&path)]), text);
}

#[test]
fn subsets_and_selectors() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "2", "2,1");
    let x1 = json(&["subset", s(&g), "hw; f1 @hw; f2 @hw"]);
    assert_eq!(x1["members"].as_array().unwrap().len(), 3);
    assert_eq!(x1["provenance"]["kind"], "selector");
    let out = run(&["subset", s(&g), "f1 f1 @hw"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("step 2 (f1) is undefined"));
    let d = json(&["demazure", s(&g), "2,1"]);
    assert_eq!(d["members"].as_array().unwrap().len(), 5);
    let i = json(&["ideal", s(&g), "[[1],[2]]"]);
    assert_eq!(i["members"], x1["members"]);
    let meet = json(&["intersect", s(&g), "[[1,2]]", "[[2,1]]"]);
    assert_eq!(meet["members"], x1["members"]);
}

#[test]
fn classify_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "2", "2,1");
    let x1 = json(&["classify", s(&g), "hw; f1 @hw; f2 @hw"]);
    assert_eq!(
        (x1["ideal"].as_bool(), x1["principal"].as_bool()),
        (Some(true), Some(false))
    );
    assert_eq!(x1["witness"]["condition"], "principal");
    let x2 = json(&["classify", s(&g), "hw; f1 @hw; f2 f1 @hw; f2 f2 f1 @hw"]);
    assert_eq!(
        (x2["ideal"].as_bool(), x2["principal"].as_bool()),
        (Some(false), Some(true))
    );
    assert_eq!(x2["witness"]["escaped"], "[[1,1],[3]]");
    let all = json(&["classify", s(&g), "all"]);
    assert_eq!(all["demazure"], true);
    assert_eq!(all["w"], serde_json::json!([1, 2, 1]));

    let file = dir.path().join("x1.json");
    std::fs::write(&file, stdout(&["subset", s(&g), "hw; f1 @hw; f2 @hw"])).unwrap();
    assert_eq!(json(&["classify", s(&g), s(&file)]), x1);
}

#[test]
fn classify_flags_a_non_demazure_subset_passing_the_local_tests() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "2", "2,2");
    let r = json(&["classify", s(&g), "demazure [2]; f1 f2 @hw"]);
    assert_eq!(r["principal"], true);
    assert_eq!(r["ideal"], true);
    assert_eq!(r["demazure"], false);
    assert_eq!(r["witness"]["extra"], serde_json::json!(["[[1,2],[2,3]]"]));
}

#[test]
fn characters_and_atoms() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "2", "2,1");
    assert_eq!(
        stdout(&["character", s(&g), "atom [1,2,1]", "--monomials"]).trim(),
        "x2*x3^2"
    );
    let c = json(&["character", s(&g), "all"]);
    let total: u64 = c["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["mult"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 8);
    let atoms = json(&["atoms", s(&g)]);
    let sizes: usize = atoms
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(atoms.as_array().unwrap().len(), 6);
    assert_eq!(sizes, 8);
}

#[test]
fn verify_prints_suite_summaries() {
    let out = stdout(&["verify", "ideal-characterization", "--type", "A", "--rank", "2", "--hw", "2,1"]);
    assert!(
        out.starts_with("PASS ideal-characterization: 8 ideal subsets = 8 distinct B_I"),
        "{out}"
    );
    let out = stdout(&["verify", "demazure-characterization", "--type", "A", "--rank", "2", "--hw", "2,1"]);
    assert!(out.contains("6 Demazure subsets = 6 distinct B_w (|W| = 6)"), "{out}");
    let out = stdout(&["verify", "all", "--type", "A", "--rank", "2", "--hw", "2,1"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 18);
}

#[test]
fn verify_exits_nonzero_on_counterexamples_and_caps() {
    let out = run(&["verify", "ideal-characterization", "--type", "A", "--rank", "2", "--hw", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("local true, global false"));
    let out = run(&[
        "verify", "ideal-characterization", "--type", "A", "--rank", "2", "--hw", "2,1", "--cap", "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    assert!(
        run(&["verify", "nonsense", "--type", "A", "--rank", "2", "--hw", "2,1"])
            .status
            .code()
            == Some(1)
    );
}

#[test]
fn export_dot_marks_extremal_and_selected_nodes() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "2", "2,1");
    let plain = stdout(&["export-dot", s(&g)]);
    assert_eq!(plain.matches("doublecircle").count(), 6);
    assert_eq!(plain.matches(" -> ").count(), 8);
    let overlay = stdout(&["export-dot", s(&g), "--subset", "hw; f1 @hw; f2 @hw"]);
    assert_eq!(overlay.matches("style=filled").count(), 3);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = built(&dir, "3", "2,1,0");
    let args = ["atoms", s(&g)];
    assert_eq!(stdout(&args), stdout(&args));
    assert_eq!(
        stdout(&["build", "A", "3", "2,1,0"]),
        stdout(&["build", "A", "3", "2,1,0"])
    );
}
