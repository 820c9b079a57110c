use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use castillon::output::{recheck, SolutionFile};
use castillon::problem::ProblemFile;
use castillon_core::centers::center;
use castillon_core::geom::bary_to_cartesian;

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_castillon")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn attr(tag: &str, name: &str) -> Option<String> {
    let key = format!(" {name}=\"");
    let start = tag.find(&key)? + key.len();
    Some(tag[start..].split('"').next()?.to_string())
}

/// Opening tags of one element kind.
fn tags<'a>(svg: &'a str, kind: &str) -> Vec<&'a str> {
    let open = format!("<{kind} ");
    svg.match_indices(&open).map(|(i, _)| &svg[i..i + svg[i..].find('>').unwrap()]).collect()
}

const TRI: &str = r#"{"triangle": {"a": 6, "b": 9, "c": 13}, "circle": "incircle"}"#;

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let ok = write(d, "ok.json", TRI);
    let bad = write(d, "bad.json", "{\"triangle\": ");
    let unknown = write(d, "unknown.json", r#"{"triangle": {"a": 6, "b": 9, "c": 13}, "circle": "nine-point"}"#);
    let none = write(d, "none.json", r#"{"circle": {"center": [0,0], "radius": 1}, "points": [[0.01,0],[0,0.01],[-0.01,0.005]]}"#);
    let flat = write(d, "flat.json", r#"{"triangle": {"a": 1, "b": 1, "c": 1.9999999}, "circle": "incircle"}"#);
    let s = |p: &PathBuf| p.to_str().unwrap().to_string();
    assert_eq!(code(&["solve", &s(&ok)]), 0);
    assert_eq!(code(&["verify", &s(&ok)]), 0);
    assert_eq!(code(&["solve", &s(&bad)]), 2);
    assert_eq!(code(&["solve", &s(&unknown)]), 2);
    assert_eq!(code(&["solve", d.join("missing.json").to_str().unwrap()]), 2);
    assert_eq!(code(&["solve", &s(&none)]), 3);
    assert_eq!(code(&["verify", &s(&flat)]), 4);
}

#[test]
fn solution_files_recheck_without_drift() {
    let dir = tempfile::tempdir().unwrap();
    let problems = [
        TRI,
        r#"{"triangle": {"a": 4, "b": 5, "c": 6}, "circle": "excircle-B"}"#,
        r#"{"triangle": {"vertices": [[0,0],[4,0],[1,3]]}, "inconic_perspector": [1,2,3]}"#,
        r#"{"circle": {"center": [0,0], "radius": 1}, "points": [[5,0],[0,4],[-3,-3]]}"#,
    ];
    for (i, body) in problems.iter().enumerate() {
        let input = write(dir.path(), &format!("p{i}.json"), body);
        let out = dir.path().join(format!("s{i}.json"));
        assert_eq!(code(&["solve", input.to_str().unwrap(), "--out", out.to_str().unwrap()]), 0, "{body}");
        let file = SolutionFile::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        let again = SolutionFile::from_json(&file.to_json()).unwrap();
        assert_eq!(file.to_json(), again.to_json());
        assert!(recheck(&file).unwrap() <= 1e-12, "{body}");
    }
}

#[test]
fn equilateral_solvers_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "eq.json", r#"{"triangle": {"a": 1, "b": 1, "c": 1}, "circle": "incircle"}"#);
    let out = run(&["solve", input.to_str().unwrap(), "--solver", "all"]);
    assert!(out.status.success());
    let file = SolutionFile::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(file.solutions.len(), 2);
    let dev: serde_json::Value = serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(dev["cross_deviation"]["max"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn incircle_figure_draws_two_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "t.json", TRI);
    let svg_path = dir.path().join("inc.svg");
    assert_eq!(code(&["render", input.to_str().unwrap(), "--figure", "inc", "--out", svg_path.to_str().unwrap()]), 0);
    let svg = std::fs::read_to_string(svg_path).unwrap();
    assert_eq!(tags(&svg, "polygon").len(), 3);
    assert_eq!(tags(&svg, "circle").len(), 1);
}

#[test]
fn excircle_figure_marks_de_longchamps() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "t.json", TRI);
    let svg_path = dir.path().join("excs.svg");
    assert_eq!(code(&["render", input.to_str().unwrap(), "--figure", "excs", "--out", svg_path.to_str().unwrap()]), 0);
    let svg = std::fs::read_to_string(svg_path).unwrap();
    assert_eq!(tags(&svg, "circle").len(), 4);
    let axes = tags(&svg, "line").into_iter().filter(|t| attr(t, "class").as_deref() == Some("axis")).count();
    assert_eq!(axes, 4);

    let marker = tags(&svg, "path").into_iter().find(|t| attr(t, "data-name").as_deref() == Some("X20")).unwrap();
    let x: f64 = attr(marker, "data-x").unwrap().parse().unwrap();
    let y: f64 = attr(marker, "data-y").unwrap().parse().unwrap();
    let t = ProblemFile::from_json(TRI).unwrap().triangle_data().unwrap().unwrap();
    let want = bary_to_cartesian(&center(20, &t).unwrap(), &t).unwrap();
    assert!((x - want.x).abs() <= 1e-6 && (y + want.y).abs() <= 1e-6, "({x}, {y}) vs {want:?}");
}

#[test]
fn centers_lists_the_registry() {
    let out = run(&["centers"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("X(516) ")));
}
