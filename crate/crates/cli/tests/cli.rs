use std::io::Write;
use std::process::{Command, Output, Stdio};

const H_WEB: &str = "web n=4
b 1 B 3
b 2 W 10
b 3 W 8
b 4 B 6
i 5 W 1 4 5
i 6 B 2 7 9
e 1 2
e 3 4
e 5 6
e 7 8
e 9 10
";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sl3web"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn leading_with_check() {
    let o = run(&["leading", "--check", "-"], H_WEB);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "+1 x[1,1]*y[2,-1]*y[3,1]*x[-1,4]\ncheck: ok\n");
}

#[test]
fn enumerate_two() {
    let o = run(&["enumerate", "--max-len", "2"], "");
    assert_eq!(stdout(&o), "+1,--1\n-1,+-1\n");
    let o = run(&["--json", "enumerate", "--max-len", "4"], "");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 16);
}

#[test]
fn grow_then_label_and_invariant() {
    let nine = "+1,+1,+0,-1,+0,+-1,-0,+-1,--1";
    let o = run(&["grow", nine], "");
    assert!(o.status.success());
    let web = stdout(&o);
    assert!(web.starts_with("web n=9\n"));
    assert_eq!(stdout(&run(&["label", "-"], &web)), format!("{nine}\n"));

    let o = run(&["grow", "--seed", "3", nine], "");
    assert_eq!(stdout(&run(&["label", "-"], &stdout(&o))), format!("{nine}\n"));

    let inv = stdout(&run(&["invariant", "-"], H_WEB));
    assert!(inv.starts_with("x[1,1]*y[2,-1]*y[3,1]*x[-1,4] + "));
    assert_eq!(inv.matches(" + ").count() + inv.matches(" - ").count(), 11);
}

#[test]
fn colorings_listing() {
    let o = run(&["colorings", "-"], H_WEB);
    assert_eq!(stdout(&o).lines().count(), 12);
    let o = run(&["colorings", "--minimal", "-"], H_WEB);
    assert!(stdout(&o).starts_with("(1B,-1W,1W,-1B)"));
}

#[test]
fn expand_round_trip() {
    let inv = stdout(&run(&["invariant", "-"], H_WEB));
    let o = run(&["expand", "--signature", "BWWB", "-"], &inv);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("1 web n=4\n"));
    assert!(out.contains("\ndigest sha256:"));
    assert!(out.ends_with("check: ok\n"));
    // deterministic
    assert_eq!(stdout(&run(&["expand", "--signature", "BWWB", "-"], &inv)), out);
}

#[test]
fn trim_and_unclasp() {
    let o = run(&["trim", "-"], H_WEB);
    let out = stdout(&o);
    assert!(out.starts_with("# labeling +1,+0,+-1\nweb n=3\n"), "{out}");
    let clasped = "web n=2\nb 1 B 1 2\nb 2 W 3 4\ne 2 3\ne 1 4\n";
    let out = stdout(&run(&["unclasp", "-"], clasped));
    assert!(out.starts_with("web n=4\nb 1 B 1\nb 2 B 2\nb 3 W 3\nb 4 W 4\n"), "{out}");
}

#[test]
fn verify_small() {
    let o = run(&["verify", "--max-len", "4", "--orders", "2"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["grow", "+1,+1"], "").status.code(), Some(1));
    assert_eq!(run(&["label", "-"], "web n=2\nb 1 B 1\n").status.code(), Some(1));
    assert_eq!(run(&["expand", "--signature", "BW", "-"], "x[1,1]*y[2,-1]").status.code(), Some(1));
    assert_eq!(run(&["invariant", "/nonexistent/web"], "").status.code(), Some(1));
    let o = run(&["grow", "x"], "");
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
