use std::io::Write;
use std::process::{Command, Output, Stdio};

fn twodom(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_twodom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn check_on_k2_file() {
    let f = write_temp("2 1\n0 1\n");
    let o = twodom(&["check", f.path().to_str().unwrap()], None);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["gamma2"], 2);
    assert_eq!(v["a"], 1);
    assert_eq!(v["holds"], true);
}

#[test]
fn generated_family_member_fails_the_bound() {
    let g = twodom(&["gen-family", "4", "1", "2", "3", "4"], None);
    assert!(g.status.success());
    let o = twodom(&["check"], Some(&stdout(&g)));
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["gap"], 2);
    assert_eq!((v["gamma2"].as_u64(), v["a"].as_u64()), (Some(44), Some(42)));
}

#[test]
fn gen_family_json_carries_closed_forms() {
    let o = twodom(&["gen-family", "4", "1", "1", "1", "1", "--format", "json"], None);
    let v = json(&o);
    assert_eq!(v["name"], "G(4;1,1,1,1)");
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(29), Some(32)));
    assert_eq!(v["closed_gap"], 2);
}

#[test]
fn gen_family_rejects_bad_parameters() {
    let o = twodom(&["gen-family", "3", "1", "1", "1"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = twodom(&["gen-family", "4", "1", "1"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn scan_is_byte_identical_across_runs() {
    let args = ["scan", "--class", "tree", "--count", "100", "--seed", "7"];
    let a = twodom(&args, None);
    let b = twodom(&args, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["summary"]["count"], 100);
    assert_eq!(v["summary"]["violations"].as_array().unwrap().len(), 0);
    let c = twodom(&["scan", "--class", "tree", "--count", "100", "--seed", "8"], None);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn scan_with_injection_reports_violations() {
    let o = twodom(&["scan", "--class", "cactus", "--count", "3", "--inject", "7:1,1,1,1,1,1,1", "--format", "csv"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.contains("G(7;1,1,1,1,1,1,1)"));
    assert!(last.contains(",3,false,"), "{last}");
}

#[test]
fn scan_rejects_unknown_class() {
    let o = twodom(&["scan", "--class", "planar"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reduce_text_trace() {
    let o = twodom(&["reduce", "--verify"], Some("4 3\n0 1\n1 2\n2 3\n"));
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "tree_trim leaf=0 15->11");
    assert_eq!(lines[1], "tree_trim leaf=1 11->7");
    assert_eq!(lines[2], "terminal base_case_k2 n=2 m=1");
    assert_eq!(lines[3], "verified 2/2");
}

#[test]
fn reduce_json_trace() {
    let o = twodom(&["reduce", "--format", "json", "--stop-at-base"], Some("4 4\n0 1\n1 2\n2 3\n0 3\n"));
    let v = json(&o);
    assert_eq!(v["trace"]["terminal_reason"], "cycle");
    assert_eq!(v["trace"]["steps"].as_array().unwrap().len(), 0);
}

#[test]
fn gamma2_backends_agree() {
    let petersen = "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n";
    let bf = json(&twodom(&["gamma2", "--backend", "bruteforce"], Some(petersen)));
    let bb = json(&twodom(&["gamma2", "--backend", "branch-and-bound"], Some(petersen)));
    assert_eq!(bf["gamma2"], bb["gamma2"]);
    assert_eq!(bf["backend"], "bruteforce");
    let o = twodom(&["gamma2", "--backend", "cactus-dp"], Some(petersen));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_with_two() {
    let mut text = String::from("40 40\n");
    for i in 0..40 {
        text.push_str(&format!("{} {}\n", i, (i + 1) % 40));
    }
    let o = twodom(&["gamma2", "--backend", "branch-and-bound", "--budget", "0"], Some(&text));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(twodom(&["check", "/no/such/file"], None).status.code(), Some(1));
    assert_eq!(twodom(&["check"], Some("2 1\n0 0\n")).status.code(), Some(1));
    let o = twodom(&["check", "--no-such-flag"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(twodom(&["check"], Some("3 1\n0 1\n")).status.code(), Some(1));
}

#[test]
fn structure_report() {
    // C4 with a leaf on every cycle vertex: an exit-free sun
    let g = "8 8\n0 1\n1 2\n2 3\n0 3\n0 4\n1 5\n2 6\n3 7\n";
    let v = json(&twodom(&["structure"], Some(g)));
    assert_eq!(v["cactus"], true);
    assert_eq!(v["cycles"][0]["has_sun"], true);
    assert_eq!(v["hypotheses"]["no_sun_at_outer"], false);
    let text = stdout(&twodom(&["structure", "--format", "text"], Some(g)));
    assert!(text.contains("cycle 0-1-2-3 length 4 exits - outer true sun true"));
}

#[test]
fn annihilation_formats() {
    let p5 = "5 4\n0 1\n1 2\n2 3\n3 4\n";
    let v = json(&twodom(&["annihilation"], Some(p5)));
    assert_eq!(v["a"], 3);
    assert_eq!(v["d_star"], 2);
    let text = stdout(&twodom(&["annihilation", "--format", "text"], Some(p5)));
    assert_eq!(text, "a 3 degree_sum 4 m 4 d_star 2 set 0 1 4\n");
}
