use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn belyi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_belyi")).arg("--catalog").arg(data_dir()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn passport_of_phi1() {
    let o = belyi(&["passport", "phi1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3^2/2^3/2^3");
}

#[test]
fn verify_prints_checks_and_json() {
    let o = belyi(&["verify", "dp3_i"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dp3_i [PASS]"));
    let o = belyi(&["--json", "verify", "phi1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["entry"], "phi1");
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn j_invariants_from_the_command_line() {
    assert_eq!(stdout(&belyi(&["j", "x^3-x"])).trim(), "1728");
    assert_eq!(stdout(&belyi(&["j", "2:(x+1)(x-1)(x-2)"])).trim(), "21952/9");
    assert_eq!(stdout(&belyi(&["j", "x^3-6r x", "--field", "r:r^2-3"])).trim(), "1728");
}

#[test]
fn iso_verify_rejects_a_map_entry() {
    assert_eq!(belyi(&["iso-verify", "isog_e1_deg5"]).status.code(), Some(0));
    assert_eq!(belyi(&["iso-verify", "phi1"]).status.code(), Some(1));
}

#[test]
fn printed_transformation_is_reported_as_not_holding() {
    let o = belyi(&["iso-verify", "iso_case_j_printed"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn monodromy_of_phi1() {
    let o = belyi(&["--json", "monodromy", "phi1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passport"], "3^2/2^3/2^3");
    assert_eq!(v["genus"], 0);
}

#[test]
fn compose_writes_a_loadable_entry() {
    let tmp = tempfile::tempdir().unwrap();
    std::fs::copy(data_dir().join("phi1.json"), tmp.path().join("phi1.json")).unwrap();
    let out = tmp.path().join("mine.json");
    let o = belyi(&["compose", "--genus0", "phi1", "--cover", "2:x^3+1", "--name", "mine", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"passport\": \"6 3^2/4^3/2^6\""), "{text}");
    let o = belyi(&["verify", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn catalog_run_with_filter_and_exit_codes() {
    let dir = data_dir();
    let o = belyi(&["catalog", "run", dir.to_str().unwrap(), "--filter", "kind=isogeny"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("entries,"));

    let tmp = tempfile::tempdir().unwrap();
    let empty = belyi(&["catalog", "run", tmp.path().to_str().unwrap()]);
    assert_eq!(empty.status.code(), Some(0));

    std::fs::write(tmp.path().join("bad.json"), "{ not json").unwrap();
    assert_eq!(belyi(&["catalog", "run", tmp.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn failing_claim_exits_with_one() {
    let tmp = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data_dir().join("phi1.json")).unwrap().replace("3^2/2^3/2^3", "3^2/2^3/2^2 1^2");
    std::fs::write(tmp.path().join("phi1.json"), text).unwrap();
    let o = belyi(&["catalog", "run", tmp.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_precision_variable_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_belyi"))
        .args(["--catalog", data_dir().to_str().unwrap(), "verify", "phi1"])
        .env("BELYI_PRECISION", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_belyi"))
        .args(["--catalog", data_dir().to_str().unwrap(), "verify", "phi1", "--numeric"])
        .env("BELYI_PRECISION", "53")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn export_matches_shipped_data() {
    let tmp = tempfile::tempdir().unwrap();
    let o = belyi(&["catalog", "export", tmp.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let a = std::fs::read_to_string(tmp.path().join("phi1.json")).unwrap();
    let b = std::fs::read_to_string(data_dir().join("phi1.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn hpg_check_passes() {
    let o = belyi(&["hpg-check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
