use std::path::Path;
use std::process::{Command, Output};

fn bergex(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergex"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn detect_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("h.txt"), "HG 4 3 2\n0 1 2\n1 2 3\n").unwrap();
    std::fs::write(dir.path().join("c2.txt"), "GR 2 2\n0 1\n0 1\n").unwrap();
    std::fs::write(dir.path().join("k3.json"), r#"{"kind":"graph","n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
    let hit = bergex(&["detect", "--hypergraph", "h.txt", "--pattern", "c2.txt"], dir.path());
    assert_eq!(code(&hit), 0);
    assert!(String::from_utf8_lossy(&hit.stdout).starts_with("contained"));
    assert_eq!(code(&bergex(&["detect", "--hypergraph", "h.txt", "--pattern", "k3.json"], dir.path())), 1);
    assert_eq!(code(&bergex(&["detect", "--oracle", "--hypergraph", "h.txt", "--pattern", "c2.txt"], dir.path())), 0);
    assert_eq!(code(&bergex(&["detect", "--hypergraph", "missing.txt", "--pattern", "c2.txt"], dir.path())), 2);
    std::fs::write(dir.path().join("bad.txt"), "HG 4 3 2\n0 1 2\n").unwrap();
    assert_eq!(code(&bergex(&["detect", "--hypergraph", "bad.txt", "--pattern", "c2.txt"], dir.path())), 2);
}

#[test]
fn verify_all_rejects_corrupted_suite() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("suite.json"), "{ not json").unwrap();
    assert_eq!(code(&bergex(&["verify-all", "suite.json"], dir.path())), 2);
    std::fs::write(dir.path().join("odd.json"), r#"{"schema_version":1,"criteria":["nope"]}"#).unwrap();
    assert_eq!(code(&bergex(&["verify-all", "odd.json"], dir.path())), 2);
}

#[test]
fn verify_all_runs_single_groups() {
    let dir = tempfile::tempdir().unwrap();
    let out = bergex(&["verify-all", "--only", "sandwich"], dir.path());
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS criterion  3"));
    assert!(text.contains("1/1 criteria passed"));
    std::fs::write(dir.path().join("s.json"), r#"{"schema_version":1,"name":"quick","criteria":["bounds",2]}"#).unwrap();
    let out = bergex(&["verify-all", "s.json", "--json"], dir.path());
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["criteria"].as_array().unwrap().len(), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = bergex(&["exact", "--n", "7", "--r", "3", "--family", "builtin:C2", "--budget", "5"], dir.path());
    assert_eq!(code(&out), 3);
    let out = bergex(&["exact", "--n", "5", "--r", "3", "--family", "builtin:C2,builtin:K2x3", "--json"], dir.path());
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["value"], 2);
    assert_eq!(doc["schema_version"], 1);
}

#[test]
fn construct_writes_file_and_manifest_replays() {
    let dir = tempfile::tempdir().unwrap();
    let out = bergex(
        &["construct", "blowup", "--graph", "builtin:fano-incidence", "--r", "3", "--t", "2", "-o", "h.txt", "--manifest", "m.json", "--json"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["certificate"]["edge_count"], 21);
    assert_eq!(doc["result"]["certificate"]["free"], true);
    assert!(std::fs::read_to_string(dir.path().join("h.txt")).unwrap().starts_with("HG 21 3 21"));
    let detect = bergex(&["detect", "--hypergraph", "h.txt", "--pattern", "builtin:C4"], dir.path());
    assert_eq!(code(&detect), 1);
    // clones of one vertex share every edge through it
    assert_eq!(code(&bergex(&["audit", "--hypergraph", "h.txt", "-t", "2"], dir.path())), 2);
    let replay = bergex(&["replay", "m.json"], dir.path());
    assert_eq!(code(&replay), 0, "{}", String::from_utf8_lossy(&replay.stdout));
    // a tampered output hash is detected
    let text = std::fs::read_to_string(dir.path().join("m.json")).unwrap();
    let mut m: serde_json::Value = serde_json::from_str(&text).unwrap();
    m["outputs"][0]["sha256"] = "00".into();
    std::fs::write(dir.path().join("m.json"), m.to_string()).unwrap();
    assert_eq!(code(&bergex(&["replay", "m.json"], dir.path())), 1);
}

#[test]
fn bound_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = bergex(&["bound", "thm_main_b", "--param", "r=3", "--param", "ex_value=10", "--json"], dir.path());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["bound"]["value"]["decimal"], "20");
    assert_eq!(doc["result"]["bound"]["side"], "upper");
    let over = bergex(&["bound", "thm_main_b", "--param", "r=3", "--param", "ex_value=10", "--observed", "21"], dir.path());
    assert_eq!(code(&over), 1);
    assert_eq!(code(&bergex(&["bound", "luo", "--param", "n=6"], dir.path())), 2);
    assert_eq!(code(&bergex(&["bound", "list"], dir.path())), 0);
}

#[test]
fn engine_and_reduce() {
    let dir = tempfile::tempdir().unwrap();
    let out = bergex(&["engine", "--hypergraph", "builtin:fano", "--pattern", "builtin:C4", "--json"], dir.path());
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["status"], "berge_found");
    let out = bergex(&["reduce", "--hypergraph", "builtin:fano", "--pattern", "builtin:K2x3", "--shuffle", "3", "--json"], dir.path());
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"]["report"]["check_identity"], true);
    let out = bergex(&["engine", "--hypergraph", "builtin:fano", "--pattern", "builtin:K3"], dir.path());
    assert_eq!(code(&out), 2);
}

#[test]
fn binary_manifests_replay() {
    let dir = tempfile::tempdir().unwrap();
    for (i, cmd) in bergex_cli::criteria::replay_commands().iter().enumerate() {
        let manifest = format!("m{}.json", i);
        let mut args = cmd.clone();
        args.extend(["--json", "--manifest", &manifest]);
        let first = bergex(&args, dir.path());
        let again = bergex(&args[..args.len() - 2], dir.path());
        assert_eq!(first.stdout, again.stdout, "{}", cmd.join(" "));
        let replay = bergex(&["replay", &manifest], dir.path());
        assert_eq!(code(&replay), 0, "{}", cmd.join(" "));
    }
}
