use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const U23: &str = "2 2 3\n1 0 1\n0 1 1\n";
const SIX_NODE_TREE: &str = "0 -\n1 0 R\n2 1 R\n3 1 C,0:0,1:1\n4 2 C,0:0,1:0,2:1\n5 2 C,0:0,1:1,2:1\n";

fn mdepth(args: &[&str], stdin: &str) -> Output {
    mdepth_env(args, stdin, &[])
}

fn mdepth_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mdepth"));
    cmd.args(args)
        .env_remove("MDEPTH_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn depth_of_u23() {
    let o = mdepth(&["depth", "--param", "csd", "-"], U23);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "csd = 2\n");
    for (p, v) in [("cd", 3), ("dd", 2), ("dsd", 1), ("cbd", 2), ("dbd", 1), ("tdd", 2)] {
        let o = mdepth(&["depth", "--param", p, "-"], U23);
        assert_eq!(stdout(&o), format!("{p} = {v}\n"));
    }
}

#[test]
fn certificates_roundtrip_through_certify() {
    let o = mdepth(&["depth", "--param", "csd", "--certificate", "-"], U23);
    let text = stdout(&o);
    let cert = text.split_once('\n').unwrap().1;
    let m = temp_file("u23.gfm", U23);
    let c = temp_file("u23.csd.json", cert);
    let ok = mdepth(&["certify", "--param", "csd", m.to_str().unwrap(), c.to_str().unwrap()], "");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "valid: csd <= 2\n");

    let bogus = temp_file("bogus.json", r#"{"value":0,"node":{"base":"rank-zero"}}"#);
    let bad = mdepth(&["certify", "--param", "csd", m.to_str().unwrap(), bogus.to_str().unwrap()], "");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn tree_codec_commands() {
    let o = mdepth(&["decode-tree", "-"], SIX_NODE_TREE);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), U23);
    let o = mdepth(&["encode-tree", "-"], U23);
    assert_eq!(stdout(&o), SIX_NODE_TREE);
}

#[test]
fn structural_commands() {
    assert_eq!(stdout(&mdepth(&["rank", "-"], U23)), "rank = 2\n");
    assert_eq!(stdout(&mdepth(&["circuits", "-"], U23)), "{c1,c2,c3}\n");
    assert_eq!(stdout(&mdepth(&["components", "-"], "2 2 2\n1 0\n0 1\n")), "{c1}\n{c2}\n");
    assert_eq!(stdout(&mdepth(&["dual", "-"], U23)), "2 1 3\n1 1 1\n");
    let o = mdepth(&["--format", "json", "rank", "-"], U23);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 2);
}

#[test]
fn progressive_vectors_of_u23() {
    let o = mdepth(&["progressive", "-"], U23);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("count = 3\n"), "{text}");
}

#[test]
fn exit_codes() {
    let o = mdepth(&["rank", "-"], "4 1 1\n1\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E-PRIME"));
    let o = mdepth(&["rank", "-"], "3 1 2\n1 5\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E-RANGE"));
    assert_eq!(mdepth(&["rank", "/no/such/file"], "").status.code(), Some(1));
    assert_eq!(mdepth(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(mdepth(&["check", "--suite", "nope"], "").status.code(), Some(1));
    let o = mdepth(&["--max-elements", "2", "depth", "--param", "cd", "-"], U23);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(mdepth(&["--help"], "").status.code(), Some(0));
}

#[test]
fn check_passes_and_is_worker_independent() {
    let args = ["check", "--suite", "duality", "--field", "2", "--max-rows", "3", "--max-cols", "4"];
    let one = mdepth_env(&args, "", &[("MDEPTH_WORKERS", "1")]);
    let three = mdepth_env(&args, "", &[("MDEPTH_WORKERS", "3")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    assert!(stdout(&one).ends_with("pass: 29 instances, 0 counterexamples\n"));
}

#[test]
fn obstructions_command() {
    let o = mdepth(
        &["obstructions", "--param", "csd", "--depth", "2", "--max-rows", "2", "--max-cols", "3"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness [[1,0,1],[1,1,0]] csd = 2 minors [1,1,1]"));
}

#[test]
fn enumerate_command() {
    let o = mdepth(&["enumerate", "--max-rows", "1", "--max-cols", "2"], "");
    assert_eq!(stdout(&o), "[[0]]\n[[1]]\n[[0,0]]\n[[1,0]]\n[[1,1]]\n");
}
