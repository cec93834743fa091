use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn rackkit(args: &[&str]) -> Output {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => fixture(name),
            None => a.to_string(),
        })
        .collect();
    Command::new(env!("CARGO_BIN_EXE_rackkit"))
        .args(&args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = rackkit(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["poly", "@ex3.rack", "-m", "1", "-n", "1"]),
        "2*t + s^3*t\n"
    );
    assert_eq!(
        stdout(&["invariant", "@trefoil.link", "@T5.rack", "--mode", "pr"]),
        "11 + 9*q1\n"
    );
    assert_eq!(stdout(&["iso", "@Q6.rack", "@R6.rack"]), "not isomorphic\n");
}

#[test]
fn conventions() {
    assert_eq!(
        stdout(&["poly", "@ex3.rack", "--convention", "def"]),
        "2*s + s*t^3\n"
    );
    assert_eq!(
        stdout(&["poly", "@ex3.rack", "--convention", "prop3"]),
        "2*t + s^3*t\n"
    );
    assert_eq!(
        rackkit(&["poly", "@ex3.rack", "--convention", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn invariant_modes() {
    let run = |mode: &str| stdout(&["invariant", "@trefoil.link", "@T5.rack", "--mode", mode]);
    assert_eq!(run("sr"), "20\n");
    assert_eq!(
        run("srpp"),
        "2*z^{2*s^3*t^3} + 12*z^{3*s^3*t^3} + 6*z^{s^3*t^3}\n"
    );
    assert_eq!(
        run("rpp"),
        "2*z^{2*s^3*t^3} + 6*z^{3*s^3*t^3} + 3*z^{s^3*t^3} + 6*q1*z^{3*s^3*t^3} + 3*q1*z^{s^3*t^3}\n"
    );
}

#[test]
fn table_commands() {
    assert_eq!(
        stdout(&["dual", "@ex2.rack"]),
        stdout(&["gen", "constant", "2,3,1"])
    );
    assert_eq!(
        stdout(&["gen", "alexander", "3", "2"]),
        stdout(&["gen", "ts", "3", "2", "2"])
    );
    assert_eq!(
        stdout(&["quotient", "@T5.rack", "{1},{2},{3},{4,5}"]),
        "4\n1 3 2 1\n3 2 1 2\n2 1 3 3\n4 4 4 4\n"
    );
    assert!(
        stdout(&["opquot", "@T5.rack"]).starts_with("classes: {1},{2},{3},{4,5}\nquandle: true\n")
    );
    let props = stdout(&["props", "@Q6.rack"]);
    assert!(props.contains("crossed_set: true") && props.contains("abelian: false"));
    assert_eq!(
        stdout(&["profile", "@T5.rack"]).lines().next(),
        Some("1: 3 3")
    );
    assert!(!stdout(&["subracks", "@T5.rack"])
        .lines()
        .any(|l| l == "{1,2}"));
    assert_eq!(stdout(&["srp", "@T5.rack", "{1}"]), "s^3*t^3\n");
    assert_eq!(stdout(&["check", "@T5.rack"]), "rack of order 5\n");
    assert_eq!(
        stdout(&["check", "@trefoil.link"]),
        "diagram: 3 crossings, 3 arcs, 1 components\n"
    );
}

#[test]
fn comparison_commands() {
    let scan = stdout(&["scan", "@X6.rack", "@Y6.rack", "--bound", "2"]);
    assert!(scan.starts_with("bound: 2\n"));
    assert!(scan.contains("(2,1): 6*s^6 != 6\n"));
    assert!(!scan.contains("(1,1)"));
    assert_eq!(
        stdout(&["scan", "@Q6.rack", "@R6.rack", "--bound", "12"]),
        "bound: 12\nno differences\n"
    );
    assert!(stdout(&["iso", "@X6.rack", "@X6.rack"]).starts_with("isomorphic\nwitness: "));
    assert!(stdout(&["classify-ca", "4"]).ends_with("confirmed: true\n"));
}

#[test]
fn exit_codes() {
    let bad = rackkit(&["check", "@bad.rack"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("violation: distributivity"));
    assert_eq!(rackkit(&["poly", "@trefoil.link"]).status.code(), Some(1));
    assert_eq!(
        rackkit(&["quotient", "@T5.rack", "{1,2},{3},{4},{5}"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rackkit(&["gen", "alexander", "4", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(rackkit(&["poly", "missing.rack"]).status.code(), Some(2));
    assert_eq!(
        rackkit(&["poly", "@ex3.rack", "-m", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rackkit(&["poly", "@ex3.rack", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(rackkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["invariant", "@hopf.link", "@T5.rack", "--mode", "rpp"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn book_transcript_is_current() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let chapter = std::fs::read_to_string(root.join("book/src/cli.md")).unwrap();
    let mut lines = chapter.lines().peekable();
    let mut checked = 0;
    while let Some(l) = lines.next() {
        let Some(cmd) = l.strip_prefix("$ rackkit ") else {
            continue;
        };
        let mut expected = String::new();
        while let Some(next) = lines.peek() {
            if next.starts_with("$ ") || next.starts_with("```") {
                break;
            }
            expected.push_str(lines.next().unwrap());
            expected.push('\n');
        }
        let out = Command::new(env!("CARGO_BIN_EXE_rackkit"))
            .args(cmd.split_whitespace())
            .current_dir(&root)
            .output()
            .unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{cmd}");
        checked += 1;
    }
    assert!(checked >= 4);
}
