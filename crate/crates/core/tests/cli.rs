use std::path::PathBuf;
use std::process::Command;

use corequot::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use corequot::Partition;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn corequot(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("corequot").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn decompose_json_goldens() {
    for (partition, file) in [
        ("8,7,7,4,4,2", "decompose_t3_8-7-7-4-4-2.json"),
        ("8,5,5,4,3,1,1,1", "decompose_t3_8-5-5-4-3-1-1-1.json"),
        ("9,6,6,5,3,1,1,1", "decompose_t3_9-6-6-5-3-1-1-1.json"),
    ] {
        let (code, out, _) = corequot(&["--json", "decompose", "--t", "3", partition]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, golden(file), "{partition}");
    }
}

#[test]
fn render_golden() {
    let (code, out, _) = corequot(&["render", "--hooks", "(8,7,7,4,4,2)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("render_hooks_8-7-7-4-4-2.txt"));
    assert_eq!(corequot(&["render", "--hooks", "2,1"]).1, "3 1\n1\n");
    assert_eq!(corequot(&["render", ""]).1, "(empty)\n");
}

#[test]
fn text_outputs() {
    assert_eq!(
        corequot(&["decompose", "--t", "3", "8,7,7,4,4,2"]).1,
        "core: 3,1,1\nquotient: 2 | 3,3 | 1\ncharvec: -1,0,1\n"
    );
    assert_eq!(
        corequot(&["decompose", "--t", "1", "8,7,7,4,4,2"]).1,
        "core: ()\nquotient: 8,7,7,4,4,2\ncharvec: 0\n"
    );
    assert_eq!(corequot(&["count", "--class", "tcore", "--t", "2", "10"]).1, "1\n");
    assert_eq!(corequot(&["count", "--class", "colored-frobenius", "--t", "2", "2"]).1, "9\n");
    assert_eq!(corequot(&["frobenius", "8,7,7,4,4,2"]).1, "7 5 4 0 / 5 4 2 1\n");
    assert_eq!(corequot(&["colored", "--t", "3", "8,7,7,4,4,2"]).1, "2:1 1:2 1:1 0:0 / 1:1 1:0 0:1 0:0\n");
    assert_eq!(corequot(&["wright", "6 5 3 2 0 / 4 2 1"]).1, "offset: 2\nmu: 5,5,4,4,3,3,1\n");
    assert_eq!(corequot(&["wright", "--offset", "-2", "--mu", "7,6,6,4,2"]).1, "4 2 1 / 6 5 3 2 0\n");
    assert_eq!(corequot(&["compose", "--t", "3", "--core", "3,1,1", "2", "3,3", "1"]).1, "8,7,7,4,4,2\n");
    assert_eq!(corequot(&["charvec", "--t", "3", "8,7,7,4,4,2"]).1, "-1,0,1\n");
    assert_eq!(corequot(&["quotient", "--t", "3", "8,7,7,4,4,2"]).1, "2\n3,3\n1\n");
    assert_eq!(corequot(&["core", "--t", "3", "8,7,7,4,4,2"]).1, "3,1,1\n");
    assert_eq!(corequot(&["is-core", "--t", "3", "--method", "all", "3,1,1"]).1, "true\n");
    assert_eq!(corequot(&["is-core", "--t", "2", "--method", "colored", "2"]).1, "false\n");
    assert_eq!(corequot(&["double", "8,4,3,1"]).1, "9,6,6,5,3,1,1,1\n");
    assert_eq!(corequot(&["hooks", "--length", "3", "8,7,7,4,4,2"]).1, "count: 3\nboxes: (2,6) (3,5) (4,3)\n");
    assert_eq!(corequot(&["hooks", "2,1"]).1, "3 1\n1\n");
    assert_eq!(corequot(&["list", "4", "--class", "sc"]).1, "2,2\n");
    assert_eq!(corequot(&["--json", "list", "3"]).1, "[[3],[2,1],[1,1,1]]\n");
}

#[test]
fn usage_errors() {
    let (code, _, err) = corequot(&["core", "--t", "3", "8,x,2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("\"x\""), "{err}");
    assert_eq!(corequot(&["compose", "--t", "3", "--core", "3", "", "", ""]).0, EXIT_USAGE);
    assert_eq!(corequot(&["double", "2,2"]).0, EXIT_USAGE);
    assert_eq!(corequot(&["verify", "nothing"]).0, EXIT_USAGE);
    assert_eq!(corequot(&["frobenius"]).0, EXIT_USAGE);
    assert_eq!(corequot(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_targets() {
    let (code, out, _) = corequot(&["verify", "sc", "--t", "3", "--order", "20"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("PASS sc t=3 order=20"));
    let (code, out, _) = corequot(&["--json", "verify", "special-classes", "--max-n", "8", "--max-t", "3"]);
    assert_eq!(code, EXIT_OK);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["sweeps"][0]["sweep"], "special-classes");
    let (code, out, _) = corequot(&["verify", "jtp", "--order", "15"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(EXIT_MISMATCH, 2);
}

#[test]
fn seeded_compose_of_decompose_roundtrip() {
    let mut rng = StdRng::seed_from_u64(20240601);
    for _ in 0..200 {
        let len = rng.gen_range(0..10);
        let lambda = Partition::from_unsorted((0..len).map(|_| rng.gen_range(1..14)).collect());
        let t = rng.gen_range(1..7).to_string();
        let input = lambda.to_string();
        let (code, json, _) = corequot(&["--json", "decompose", "--t", &t, &input]);
        assert_eq!(code, EXIT_OK);
        let (code, out, err) = corequot(&["compose", "--payload", json.trim()]);
        assert_eq!(code, EXIT_OK, "{err}");
        let expected = if lambda.is_empty() { "()".to_string() } else { input };
        assert_eq!(out.trim(), expected);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_corequot");
    let ok = Command::new(bin).args(["decompose", "--t", "3", "8,7,7,4,4,2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("core: 3,1,1"));
    let bad = Command::new(bin).args(["decompose", "--t", "3", "4,5"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
