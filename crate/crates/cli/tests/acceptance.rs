//! CLI acceptance: golden-file byte equality for the three canonical
//! command examples, plus the 0/1/2 exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read(name: &str) -> Vec<u8> {
    std::fs::read(golden(name)).unwrap()
}

fn polymat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn env_var_overrides_the_enumeration_cap() {
    let path = golden("fig2.poly");
    // the fig2 vector box has 18 cells; a cap of 10 starves it
    let starved = Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(["convert", path.to_str().unwrap(), "--to", "bases"])
        .env("POLYMAT_MAX_SUBSETS", "10")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&starved.stderr).contains("cap"));

    let roomy = Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(["convert", path.to_str().unwrap(), "--to", "bases"])
        .env("POLYMAT_MAX_SUBSETS", "100")
        .output()
        .unwrap();
    assert_eq!(roomy.status.code(), Some(0));
}

#[test]
fn criterion_12_convert_round_trip_is_byte_identical() {
    let circuits = golden("fig2.circuits.vec");
    let to_rank = polymat(&[
        "convert",
        circuits.to_str().unwrap(),
        "--from",
        "circuits",
        "--to",
        "rank",
    ]);
    assert_eq!(to_rank.status.code(), Some(0), "{to_rank:?}");
    assert_eq!(to_rank.stdout, read("fig2.poly"));

    let dir = std::env::temp_dir().join(format!("polymat-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let rank_path = dir.join("fig2.poly");
    std::fs::write(&rank_path, &to_rank.stdout).unwrap();
    let back = polymat(&["convert", rank_path.to_str().unwrap(), "--to", "circuits"]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(
        back.stdout,
        read("fig2.circuits.vec"),
        "round trip must be byte-identical"
    );
    std::fs::remove_dir_all(&dir).ok();
    println!("criterion 12a (convert circuits->rank->circuits byte-identical): PASS");
}

#[test]
fn criterion_12_check_names_c4_and_exits_1() {
    let out = polymat(&[
        "check",
        golden("c4fail.vec").to_str().unwrap(),
        "--axioms",
        "C",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(out.stdout, read("c4fail.check.txt"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C4: FAIL"));
    assert!(out.stderr.is_empty(), "certificates go to stdout");
    println!("criterion 12b (check --axioms C exits 1 naming C4): PASS");
}

#[test]
fn criterion_12_info_on_the_zero_polymatroid() {
    let out = polymat(&["info", golden("zero3.poly").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, read("zero3.info.txt"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank: 0"));
    assert!(text.contains("connected: no"));
    assert!(text.contains("cyclic flats: 1"));
    println!("criterion 12c (info on the zero polymatroid): PASS");
}

#[test]
fn criterion_12_exit_code_contract() {
    // 0: checked and true
    let ok = polymat(&[
        "check",
        golden("fig2.circuits.vec").to_str().unwrap(),
        "--axioms",
        "C",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // 1: checked and false (certificate on stdout)
    let fail = polymat(&[
        "check",
        golden("c4fail.vec").to_str().unwrap(),
        "--axioms",
        "C",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(!fail.stdout.is_empty());

    // 2: unreadable / unparsable input, error text on stderr
    let missing = polymat(&["info", "/no/such/file.poly"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());
    assert!(!missing.stderr.is_empty());

    let dir = std::env::temp_dir().join(format!("polymat-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let garbage = dir.join("garbage.poly");
    std::fs::write(&garbage, "not a table\n").unwrap();
    let bad = polymat(&["info", garbage.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
    println!("criterion 12d (exit codes 0/1/2): PASS");
}

#[test]
fn make_and_natural_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("polymat-make-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let made = polymat(&["make", "fig2poly"]);
    assert_eq!(made.status.code(), Some(0));
    assert_eq!(made.stdout, read("fig2.poly"));

    let poly_path = dir.join("fig2.poly");
    std::fs::write(&poly_path, &made.stdout).unwrap();
    let nat = polymat(&["natural", poly_path.to_str().unwrap()]);
    assert_eq!(nat.status.code(), Some(0));
    let text = String::from_utf8(nat.stdout).unwrap();
    assert!(text.starts_with("poly n=5\n"));
    assert!(text.contains("block 1: (1,1) (1,2)"));
    assert!(text.contains("block 2: (2,1)"));
    assert!(text.contains("block 3: (3,1) (3,2)"));

    // validate accepts what natural emits
    let nat_path = dir.join("nat.poly");
    std::fs::write(&nat_path, &text).unwrap();
    let val = polymat(&["validate", nat_path.to_str().unwrap()]);
    assert_eq!(val.status.code(), Some(0));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn convert_covers_every_representation_pair() {
    let dir = std::env::temp_dir().join(format!("polymat-all-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let rank = read("fig2.poly");
    let rank_path = dir.join("in.poly");
    std::fs::write(&rank_path, &rank).unwrap();

    for to in ["bases", "circuits", "zflats", "rank"] {
        let out = polymat(&[
            "convert",
            rank_path.to_str().unwrap(),
            "--from",
            "rank",
            "--to",
            to,
        ]);
        assert_eq!(out.status.code(), Some(0), "rank -> {to}");
        // and back to rank, landing on the identical table
        let ext = match to {
            "bases" | "circuits" => "vec",
            "zflats" => "zed",
            _ => "poly",
        };
        let mid = dir.join(format!("mid.{ext}"));
        std::fs::write(&mid, &out.stdout).unwrap();
        let back = polymat(&["convert", mid.to_str().unwrap(), "--to", "rank"]);
        assert_eq!(back.status.code(), Some(0), "{to} -> rank");
        assert_eq!(back.stdout, rank, "{to} does not round trip");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rset_report_is_deterministic() {
    let out = polymat(&[
        "rset",
        golden("fig2.poly").to_str().unwrap(),
        "--set",
        "{1}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = "A: {1}\nrank: 2\nmembers: 1\n  {}: 0\nleast cl(cy(A)): {}\ngreatest cy(cl(A)): {}\nbounds: ok\nsublattice: ok\nmodular pairs: ok\n";
    assert_eq!(text, expected);
}
