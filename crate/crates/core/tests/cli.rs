//! Runs the `gerbe` binary end to end.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use gerbe::cli::{ClassesOutput, GroupOutput, RepresentOutput};
use gerbe::fixtures::DemoReport;
use gerbe::report::{AnalysisReport, PolyOutput};

const TRIANGLE: &str = "# triangle\n3\n1 2\n2 3\n1 3\n";
const SQUARE: &str = "4\n1 2\n2 3\n3 4\n4 1\n";
const POINTED_HEXAGON: &str = "6\n1 2\n2 3\n3 4\n4 5\n5 1\n";

fn gerbe(args: &[&str], stdin: &str) -> Output {
    gerbe_env(args, stdin, &[])
}

fn gerbe_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gerbe"))
        .args(args)
        .env_remove("GERBE_MAX_N")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn gerbe");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn analyze_triangle_lists_roots() {
    let o = gerbe(&["analyze"], TRIANGLE);
    assert_eq!(code(&o), 0);
    let r: AnalysisReport =
        serde_json::from_str(&stdout(&gerbe(&["analyze", "--json"], TRIANGLE))).unwrap();
    let roots: Vec<(String, u32)> = r
        .roots
        .iter()
        .map(|x| (x.value.to_string(), x.multiplicity))
        .collect();
    assert_eq!(roots, [("-1".to_string(), 2), ("1/2".to_string(), 1)]);
    assert_eq!(r.char_poly.factored, "-(2*x - 1)*(x + 1)^2");
}

#[test]
fn analyze_square_reports_48() {
    let r: AnalysisReport =
        serde_json::from_str(&stdout(&gerbe(&["analyze", "--json", "-"], SQUARE))).unwrap();
    let at = r
        .roots
        .iter()
        .find(|x| x.value.to_string() == "-1/3")
        .unwrap();
    assert_eq!(at.group.order, 48);
    assert_eq!(at.rank, 3);
    assert_eq!(r.automorphism_group_order, 8);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["analyze"],
        vec!["analyze", "--json"],
        vec!["group", "--c", "-1/3", "--realize"],
        vec!["demo"],
    ] {
        let a = gerbe(&args, SQUARE);
        let b = gerbe(&args, SQUARE);
        assert_eq!(code(&a), 0, "{:?}", args);
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
    }
}

#[test]
fn json_round_trips() {
    let text = stdout(&gerbe(&["analyze", "--json"], POINTED_HEXAGON));
    let r: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);

    let text = stdout(&gerbe(&["poly", "--json"], POINTED_HEXAGON));
    let p: PolyOutput = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&p).unwrap() + "\n", text);

    let text = stdout(&gerbe(&["demo", "--json"], ""));
    let d: DemoReport = serde_json::from_str(&text).unwrap();
    assert!(d.all_passed());
    assert_eq!(serde_json::to_string_pretty(&d).unwrap() + "\n", text);
}

#[test]
fn poly_text() {
    let o = gerbe(&["poly"], SQUARE);
    assert_eq!(
        stdout(&o),
        "chi(x)   = -3*x^4 + 8*x^3 - 6*x^2 + 1\n\
         factored = -(3*x + 1)*(x - 1)^3\n\
         root 1: -1/3 (mult 1, factor 3*x + 1)\n\
         root 2: 1 (mult 3, factor x - 1)\n"
    );
}

#[test]
fn represent_writes_csv_and_json() {
    let dir = std::env::temp_dir().join(format!("gerbe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("square.csv");
    let o = gerbe(
        &[
            "represent",
            "--c",
            "-1/3",
            "--json",
            "--csv",
            csv.to_str().unwrap(),
        ],
        SQUARE,
    );
    assert_eq!(code(&o), 0);
    let r: RepresentOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.dim, 3);
    assert_eq!(r.representation.signs, [1, 1, 1]);
    let rows: Vec<Vec<f64>> = std::fs::read_to_string(&csv)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows, r.representation.vectors);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn root_index_and_omega() {
    let o = gerbe(&["represent", "--root-index", "2", "--json"], TRIANGLE);
    let r: RepresentOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.c, 0.5);
    assert_eq!(r.dim, 2);
    let o = gerbe(
        &["represent", "--root-index", "2", "--omega", "2", "--json"],
        TRIANGLE,
    );
    let r: RepresentOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.c, 1.0);
    assert_eq!(r.representation.omega, 2.0);
    assert_eq!(r.dim, 2);
}

#[test]
fn classes_at_coincident_point() {
    let o = gerbe(&["classes", "--c", "1", "--json"], SQUARE);
    let r: ClassesOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.classes.len(), 1);
    assert_eq!(
        (r.classes[0].plus.clone(), r.classes[0].minus.clone()),
        (vec![1, 3], vec![2, 4])
    );
    assert!(r.linking.unwrap().passed());
}

#[test]
fn group_realize_emits_matrices() {
    let o = gerbe(&["group", "--c", "-1/3", "--realize", "--json"], SQUARE);
    let r: GroupOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.group.order, 48);
    assert_eq!(r.isometries.unwrap().len(), 48);
    let text = stdout(&gerbe(&["group", "--root-index", "2"], POINTED_HEXAGON));
    assert!(text.contains("|G|              120\n"));
    assert!(text.contains("2-transitive     true\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&gerbe(&["poly"], "3\n1 1\n")), 2);
    assert_eq!(code(&gerbe(&["poly"], "3\n1 4\n")), 2);
    assert_eq!(code(&gerbe(&["poly"], "3\n1 2\n2 1\n")), 2);
    assert_eq!(code(&gerbe(&["poly"], "# nothing\n")), 2);
    assert_eq!(code(&gerbe(&["poly", "/no/such/file"], "")), 2);
    assert_eq!(code(&gerbe(&["classes", "--c", "1/0"], SQUARE)), 2);
    assert_eq!(code(&gerbe(&["classes", "--c", "0.5"], SQUARE)), 2);
    assert_eq!(
        code(&gerbe(&["classes", "--c", "0.5", "--approx"], SQUARE)),
        0
    );
    assert_eq!(code(&gerbe(&["represent", "--root-index", "9"], SQUARE)), 2);
    assert_eq!(code(&gerbe(&["bogus"], "")), 2);
    assert_eq!(
        code(&gerbe_env(&["analyze"], SQUARE, &[("GERBE_MAX_N", "3")])),
        3
    );
    assert_eq!(
        code(&gerbe_env(&["analyze"], SQUARE, &[("GERBE_MAX_N", "4")])),
        0
    );
}

#[test]
fn demo_passes_and_negative_control_fails() {
    let o = gerbe(&["demo"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("4/4 fixtures pass\n"));
    let o = gerbe(&["demo", "--corrupt-fixture", "square"], "");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("MISMATCH"));
}
