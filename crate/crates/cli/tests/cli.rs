use std::collections::HashMap;
use std::io::Write;
use std::process::{Command, Output, Stdio};

const SAMPLE: &str = "5(1(7),3(8,2,6,4))";

fn ptree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptree"))
        .args(args)
        .output()
        .expect("run ptree")
}

fn ptree_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ptree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ptree");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Runs successfully and returns stdout, which must end in exactly one newline.
fn ok(args: &[&str]) -> String {
    let out = ptree(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(
        text.ends_with('\n') && !text.ends_with("\n\n"),
        "{args:?}: {text:?}"
    );
    text
}

fn code(args: &[&str]) -> Option<i32> {
    ptree(args).status.code()
}

#[test]
fn classify_lists_edges() {
    let text = ok(&["classify", SAMPLE]);
    let improper: Vec<_> = text.lines().filter(|l| l.ends_with(": improper")).collect();
    assert_eq!(
        improper,
        vec!["(5,1): improper", "(5,3): improper", "(3,2): improper"]
    );
    assert!(text.ends_with("impr=3 prop=4\n"));
    assert_eq!(ok(&["classify", "1"]), "impr=0 prop=0\n");
    assert_eq!(
        ok(&["classify", "3(2,1)"]),
        "(3,2): proper\n(3,1): improper\nimpr=1 prop=1\n"
    );
}

#[test]
fn phi_command() {
    assert_eq!(ok(&["phi", SAMPLE, "5,1"]), "1(5(3(8,2,6,4)),7)\n");
    assert_eq!(
        ok(&["phi", "1(5(3(8,2,6,4)),7)", "1,5"]),
        format!("{SAMPLE}\n")
    );
    assert_eq!(ok(&["phi", "2(1)", "2,1"]), "1(2)\n");
    assert_eq!(code(&["phi", "2(1)", "1,2"]), Some(2));
    assert_eq!(code(&["phi", "2(1)", "2-1"]), Some(2));
}

#[test]
fn bij_command() {
    let fwd = ok(&["bij", "forward", SAMPLE]);
    assert_eq!(fwd, "1(2:x(5:x,8:y,3:x(6:y,4:y)),7:y)\n");
    assert_eq!(ok(&["bij", "inverse", fwd.trim()]), format!("{SAMPLE}\n"));
    assert_eq!(
        ok(&["bij", "forward", "--rooted", "1(3(2))"]),
        "1(2:t(3:x))\n"
    );
    assert_eq!(code(&["bij", "forward", "--rooted", "2(1)"]), Some(2));
    assert_eq!(code(&["bij", "inverse", "1(2)"]), Some(2));
    assert_eq!(code(&["bij", "forward", "1(3)"]), Some(2));
}

#[test]
fn stirling_command() {
    assert_eq!(
        ok(&["stirling", "to", "1(2(5,8,3(6,4)),7)"]),
        "1 4 4 7 7 2 5 5 3 3 2 1 6 6\n"
    );
    assert_eq!(ok(&["stirling", "from", "1 1"]), "1(2)\n");
    let tree = ok(&["stirling", "from", "6 6 3 4 5 5 4 3 1 1 2 7 7 2"]);
    let t: plane_trees::PlaneTree = tree.trim().parse().unwrap();
    assert_eq!(t.degree(t.root()), 4);
    assert_eq!(code(&["stirling", "from", "1 2 1 2"]), Some(2));
    assert_eq!(code(&["stirling", "to", "2(1)"]), Some(2));
}

#[test]
fn enum_command() {
    assert_eq!(ok(&["enum", "I", "--n", "2"]), "1(2(3))\n1(2,3)\n1(3,2)\n");
    assert_eq!(ok(&["enum", "P", "--n", "1", "--count-only"]), "2\n");
    assert_eq!(ok(&["enum", "P", "--n", "0"]), "1\n");
    assert_eq!(ok(&["enum", "O", "--n", "3", "--count-only"]), "30\n");
    assert_eq!(ok(&["enum", "stirling", "--n", "2"]).lines().count(), 3);
    assert_eq!(code(&["enum", "P", "--n", "7"]), Some(2));
    assert_eq!(code(&["enum", "I", "--n", "8", "--count-only"]), Some(2));
    assert_eq!(
        ok(&["enum", "I", "--n", "8", "--count-only", "--force"]),
        "2027025\n"
    );
}

#[test]
fn enum_output_feeds_other_commands() {
    let trees = ok(&["enum", "P", "--n", "3"]);
    for cmd in [&["classify", "-"][..], &["bij", "forward", "-"]] {
        let out = ptree_stdin(cmd, &trees);
        assert_eq!(out.status.code(), Some(0), "{cmd:?}");
    }
    let tagged = stdout(&ptree_stdin(&["bij", "forward", "-"], &trees));
    assert_eq!(tagged.lines().count(), 120);
    let back = stdout(&ptree_stdin(&["bij", "inverse", "-"], &tagged));
    assert_eq!(back, trees);

    let increasing = ok(&["enum", "I", "--n", "4"]);
    let perms = stdout(&ptree_stdin(&["stirling", "to", "-"], &increasing));
    assert_eq!(
        stdout(&ptree_stdin(&["stirling", "from", "-"], &perms)),
        increasing
    );
}

#[test]
fn blank_stdin_lines_are_skipped() {
    let out = ptree_stdin(&["phi", "-", "2,1"], "\n2(1)\n\n  \n2(1,3)\n");
    assert_eq!(stdout(&out), "1(2)\n1(2(3))\n");
}

#[test]
fn sampling_is_deterministic() {
    assert_eq!(ok(&["sample", "P", "--n", "0", "--seed", "7"]), "1\n");
    let a = ok(&["sample", "P", "--n", "12", "--seed", "42", "--count", "20"]);
    let b = ok(&["sample", "P", "--n", "12", "--seed", "42", "--count", "20"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 20);
    let c = ok(&["sample", "P", "--n", "12", "--seed", "43", "--count", "20"]);
    assert_ne!(a, c);
}

#[test]
fn sampled_increasing_trees_are_uniform() {
    let text = ok(&[
        "sample", "I", "--n", "2", "--seed", "11", "--count", "100000",
    ]);
    let mut hist: HashMap<&str, usize> = HashMap::new();
    for line in text.lines() {
        *hist.entry(line).or_default() += 1;
    }
    assert_eq!(hist.len(), 3);
    for (tree, c) in hist {
        let f = c as f64 / 100_000.0;
        assert!((f - 1.0 / 3.0).abs() <= 0.01, "{tree}: {f}");
    }
}

#[test]
fn verify_command() {
    let text = ok(&["verify", "thm1", "--n", "3"]);
    assert!(text.contains("PASS P_3 = 15x^3 + 45x^2y + 45xy^2 + 15y^3\n"));
    assert!(!text.contains("FAIL"));
    let text = ok(&["verify", "counts", "--n", "6"]);
    assert!(text.contains("PASS counts n=6: 665280 = 665280\n"));
    assert!(ok(&["verify", "thm2", "--order", "0"])
        .lines()
        .all(|l| l.starts_with("PASS")));
    let text = ok(&["verify", "thm2", "--order", "8", "--source", "enumerated"]);
    assert_eq!(text.lines().count(), 3);
    assert_eq!(
        ok(&["verify", "all", "--n", "3", "--order", "4", "--jobs", "2"])
            .matches("FAIL")
            .count(),
        0
    );
    assert_eq!(code(&["verify", "thm1", "--n", "7"]), Some(2));
    assert_eq!(code(&["verify", "thm1", "--jobs", "0"]), Some(2));
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let one = ok(&["verify", "thm1", "--n", "4"]);
    let four = ok(&["verify", "thm1", "--n", "4", "--jobs", "4"]);
    assert_eq!(one, four);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&[]), Some(2));
    assert_eq!(code(&["classify"]), Some(2));
    assert_eq!(code(&["classify", "1(2"]), Some(2));
    assert_eq!(code(&["classify", "1(2,2)"]), Some(2));
    assert_eq!(code(&["enum", "Q", "--n", "1"]), Some(2));
    let err = String::from_utf8(ptree(&["classify", "1(2"]).stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
}
