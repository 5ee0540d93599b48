use std::io::Write;
use std::process::{Command, Output, Stdio};

fn syzygy(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_syzygy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn syzygy");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

const LINK: &str = "ring ZZ/32003[x,y,u,v] order grevlex;
ideal I = x*u, x*v, y*u, y*v;
colon(ideal(x*u, y*v), I);
pd(I);
";

#[test]
fn runs_from_stdin() {
    let out = syzygy(&["run", "-"], LINK);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let stdout = text(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, ["colon = (x*y, x*u, y*v, u*v)", "pd = 3"]);
}

#[test]
fn runs_from_a_file() {
    let path = std::env::temp_dir().join(format!("syzygy-cli-{}.syz", std::process::id()));
    std::fs::write(&path, "ring QQ[x,y,u]; ideal I = x*y, y*u, u*x; pd(I); mult(I);").unwrap();
    let out = syzygy(&["run", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "pd = 2\nmult = 3\n");
}

#[test]
fn json_lines_follow_the_schema() {
    let out = syzygy(&["run", "-", "--json"], LINK);
    assert_eq!(out.status.code(), Some(0));
    let objs: Vec<serde_json::Value> = text(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(objs.len(), 2);
    assert_eq!(objs[0]["command"], "colon");
    assert_eq!(objs[0]["inputs"][0], "ideal(x*u, y*v)");
    assert_eq!(objs[0]["result_kind"], "ideal");
    assert_eq!(objs[0]["generators"].as_array().unwrap().len(), 4);
    assert_eq!(objs[1]["result_kind"], "value");
    assert_eq!(objs[1]["value"], 3);
}

#[test]
fn field_and_order_flags_override_the_ring() {
    let src = "ring ZZ/32003[x,y]; ideal I = x + y, y^2; gb(I);";
    let out = syzygy(&["run", "-", "--field", "QQ", "--order", "lex"], src);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout).trim(), "gb = (x + y, y^2)");
    let bad = syzygy(&["run", "-", "--field", "ZZ/4"], src);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn syntax_errors_exit_with_two() {
    let out = syzygy(&["run", "-"], "ideal I = x;");
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("1:1"), "{}", text(&out.stderr));
}

#[test]
fn runtime_errors_exit_with_two() {
    let out = syzygy(&["run", "-"], "ring QQ[x,y]; pd(ideal(x)); colon(ideal(x), ideal(0));");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(text(&out.stdout), "pd = 1\n");
    assert!(text(&out.stderr).contains("item 2"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(syzygy(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(syzygy(&["run", "-", "--order", "revlex"], LINK).status.code(), Some(2));
    assert_eq!(syzygy(&["run", "/nonexistent/script.syz"], "").status.code(), Some(2));
}

#[test]
fn timeouts_exit_with_two() {
    let out = syzygy(&["verify-paper", "--timeout-secs", "0"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stdout).contains("skipped/timeout"));
}

#[test]
fn verify_paper_passes() {
    let out = syzygy(&["verify-paper", "--seed", "2"], "");
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));
    assert!(text(&out.stdout).contains("0 failed, 0 skipped"));

    let out = syzygy(&["run", "-", "--json"], "ring ZZ/32003[x]; verify_paper(1);");
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(text(&out.stdout).trim()).unwrap();
    assert_eq!(v["result_kind"], "report");
    assert!(v["anchors"].as_array().unwrap().len() > 10);
    assert!(v["value"]["entries"].as_array().unwrap().len() >= 25);
}
