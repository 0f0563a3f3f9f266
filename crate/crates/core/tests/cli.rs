use std::io::Write;
use std::process::Command;

fn xxz(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_xxz")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn data_rows(out: &str) -> Vec<Vec<String>> {
    out.lines().filter(|l| !l.starts_with('#')).skip(1).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

#[test]
fn verify_preset() {
    let (code, out, _) = xxz(&["verify", "haah-a", "--size", "3"]);
    assert_eq!(code, 0);
    let header = out.lines().nth(1).unwrap();
    assert!(header.starts_with("generators\tpairs_checked"));
    assert!(header.ends_with("violations"));
    assert_eq!(data_rows(&out)[0].last().unwrap(), "0");
}

#[test]
fn sweep_haah_a() {
    let (code, out, _) = xxz(&["sweep", "haah-a", "--sizes", "2,4,8"]);
    assert_eq!(code, 0);
    let ks: Vec<String> = data_rows(&out).iter().map(|r| r[4].clone()).collect();
    assert_eq!(ks, ["6", "14", "30"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["sweep", "lr-gcd", "--params", "6:2:4,7:2:4,12:4:6"],
        vec!["stabilizers", "haah-b", "--size", "2"],
        vec!["--format", "json", "locality", "haah-a", "--size", "3"],
    ] {
        let a = xxz(&args);
        let b = xxz(&args);
        assert_eq!(a, b);
        assert_eq!(a.0, 0, "{args:?}: {}", a.2);
    }
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const BROKEN: &str = "q = 2\nA = [[\"1\"], [\"x\"]]\nB = [[\"1\"], [\"1\"]]\nmatrices = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]\n\n[group]\nkind = \"torus\"\ndims = [4, 1, 1]\n";

#[test]
fn non_commuting_spec() {
    let f = spec_file(BROKEN);
    let path = f.path().to_str().unwrap();
    let (code, _, err) = xxz(&["degeneracy", path]);
    assert_eq!(code, 2);
    assert!(err.contains("matrices 0 and 1 do not commute"), "{err}");
    assert!(err.contains(":4:"), "{err}");

    let (code, out, err) = xxz(&["degeneracy", path, "--unchecked"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("do not commute") && err.contains("Z[") && err.contains("X["), "{err}");

    let (code, out, err) = xxz(&["verify", path, "--unchecked"]);
    assert_eq!(code, 1);
    assert_ne!(data_rows(&out)[0].last().unwrap(), "0");
    assert!(err.contains("violations"));
}

#[test]
fn usage_errors() {
    assert_eq!(xxz(&["verify"]).0, 2);
    assert_eq!(xxz(&["verify", "/no/such/file.toml"]).0, 2);
    assert_eq!(xxz(&["metric", "haah-a", "--from", "q", "--to", "1"]).0, 2);
    assert_eq!(xxz(&["sweep", "haah-a"]).0, 2);
    assert_eq!(xxz(&["--format", "xml", "verify", "haah-a"]).0, 2);
}

#[test]
fn oracle_command() {
    let (code, out, _) = xxz(&["oracle", "haah-a", "--size", "2"]);
    assert_eq!(code, 0);
    let row = &data_rows(&out)[0];
    assert_eq!(row[2], "64");
    assert_eq!(row[4], "true");
    let (code, _, err) = xxz(&["oracle", "haah-b", "--size", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn oracle_cap_override_is_bounded() {
    let out = Command::new(env!("CARGO_BIN_EXE_xxz"))
        .args(["oracle", "haah-b", "--size", "2"])
        .env("XXZ_MAX_ORACLE_QUBITS", "40")
        .output()
        .unwrap();
    // 32 qubits stays above the hard limit of 24.
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2^24"));
}

#[test]
fn show_round_trips_through_files() {
    for preset in ["haah-a", "haah-b", "lr-gcd", "trivial"] {
        let mut args = vec![preset];
        if preset != "lr-gcd" {
            args.extend(["--size", "3"]);
        }
        let (code, text, _) = xxz(&[&["show"], args.as_slice()].concat());
        assert_eq!(code, 0);
        let f = spec_file(&text);
        let from_file = xxz(&["stabilizers", f.path().to_str().unwrap()]);
        let direct = xxz(&[&["stabilizers"], args.as_slice()].concat());
        assert_eq!(from_file.0, 0);
        assert_eq!(data_rows(&from_file.1), data_rows(&direct.1), "{preset}");
    }
}

#[test]
fn metric_and_ball_commands() {
    let (code, out, _) = xxz(&["metric", "haah-a", "--size", "4", "--from", "xyz", "--to", "1"]);
    assert_eq!(code, 0);
    assert_eq!(data_rows(&out)[0], ["xyz", "1", "2"]);
    let (code, out, _) = xxz(&["ball", "haah-a", "--size", "4", "--center", "1", "--radius", "1"]);
    assert_eq!(code, 0);
    let members: Vec<String> = data_rows(&out).iter().map(|r| r[0].clone()).collect();
    for corner in ["1", "x", "y", "z", "xy", "xz", "yz"] {
        assert!(members.contains(&corner.to_string()), "{corner} missing");
    }
    assert!(!members.contains(&"xyz".to_string()));
}
