use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn webworld(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_webworld"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let o = webworld(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn falkirk_mixing_csv() {
    let o = webworld(&[
        "matrix",
        "--kind",
        "mixing",
        "--input",
        &data("falkirk.json"),
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1/3,-1/3,-1/3,1/3\n-1/6,1/6,1/6,-1/6\n-1/6,1/6,1/6,-1/6\n1/3,-1/3,-1/3,1/3\n"
    );
}

#[test]
fn single_edge_world() {
    let v = json_out(&["world", "--input", &data("single-edge.json")]);
    assert_eq!(v["size"], 1);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "matrix",
        "--kind",
        "colouring",
        "--input",
        &data("falkirk.json"),
    ];
    let a = webworld(&args);
    let b = webworld(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn validate_reports_pegs_and_size() {
    let v = json_out(&[
        "validate",
        "--input",
        r#"{"represent": [[0,2,0],[0,0,1],[0,0,0]]}"#,
    ]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["pegs"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["world_size"], "6");
}

#[test]
fn traces_both_ways() {
    for method in ["brute", "posets"] {
        let v = json_out(&[
            "trace",
            "--input",
            &data("falkirk.json"),
            "--method",
            method,
            "--rank",
        ]);
        assert_eq!(v["trace_r"], "1");
        assert_eq!(v["trace_m"], serde_json::json!(["0", "4", "10", "6"]));
        assert_eq!(v["rank"], 1);
    }
}

#[test]
fn posets_of_falkirk() {
    let v = json_out(&["posets", "--input", &data("falkirk.json")]);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
    let counts: Vec<u64> = v["world"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts.iter().sum::<u64>(), 4);
}

#[test]
fn verify_case1() {
    let o = webworld(&["verify", "--suite", "case1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(n-1)! = 2 matches brute trace"));
}

#[test]
fn case_commands() {
    let v = json_out(&["case2", "--n", "1", "--trace"]);
    assert_eq!(v["trace_m"], serde_json::json!(["0", "2", "2"]));
    let v = json_out(&["case3", "--n", "3", "--trace", "--brute"]);
    assert_eq!(v["trace_r"], "4");
    let v = json_out(&["case1", "--n", "3", "--matrix", "mixing"]);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["entries"][0][0], "1/3");
    let o = webworld(&["case3", "--n", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn transitive_listing() {
    let v = json_out(&["transitive", "--edges", "3", "--list"]);
    assert_eq!(v.as_array().unwrap().len(), 5);
    let o = webworld(&["transitive", "--edges", "3"]);
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn enumerate_counts_table() {
    let o = webworld(&["enumerate", "--pegs", "3", "--edges", "2", "--counts"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("m,t,n,nww,nwwnip,npww\n"));
    assert!(text.contains("3,2,2,3,3,3\n"));
    let v = json_out(&[
        "enumerate",
        "--pegs",
        "3",
        "--edges",
        "3",
        "--filter",
        "transitive",
    ]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(webworld(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        webworld(&["world", "--input", "{\"edges\": [[2,1,1,1]]}"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        webworld(&["world", "--input", "/no/such/file.json"])
            .status
            .code(),
        Some(2)
    );
    let big = r#"{"represent": [[0,5,5],[0,0,5],[0,0,0]]}"#;
    assert_eq!(
        webworld(&["world", "--input", big, "--max-world", "1000"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        webworld(&["transitive", "--edges", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(
        webworld(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
}
