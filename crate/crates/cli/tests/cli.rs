use std::path::PathBuf;
use std::process::{Command, Output};

fn negk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negk")).args(args).env_remove("NEGK_CATALOG_DIR").output().unwrap()
}

fn catalog_dir() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_catalog(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("negk-cli-{}-{name}.cat", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn compute_prints_r_s_and_the_group() {
    let o = negk(&["compute", "Dicyclic(6)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "r=2 s=1 K-1 = Z^2 + Z/2\n");
    let o = negk(&["compute", "[(1,2,3),(1,2)]"]);
    assert_eq!(stdout(&o), "r=0 s=0 K-1 = 0\n");
}

#[test]
fn compute_by_catalog_key() {
    let o = negk(&["compute", "(16,9)", "--catalog", &catalog_dir()]);
    assert_eq!(stdout(&o), "r=0 s=1 K-1 = Z/2\n");
    let o = negk(&["compute", "(16,99)", "--catalog", &catalog_dir()]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn compute_emits_components_and_table() {
    let o = negk(&["compute", "Dicyclic(4)", "--emit-components", "--emit-chartab"]);
    let out = stdout(&o);
    assert!(out.contains("class\tdegree\torbit\tfs"));
    let contributing = out.lines().filter(|l| l.ends_with("\tyes")).count();
    assert_eq!(contributing, 1);
    assert!(out.contains("\norder\t1\t"));
    assert_eq!(out.lines().filter(|l| l.starts_with("chi")).count(), 7);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(negk(&["compute", "Dicyclic("]).status.code(), Some(2));
    assert_eq!(negk(&["compute", "Dicyclic(0)"]).status.code(), Some(2));
    assert_eq!(negk(&["scan", "--min", "1"]).status.code(), Some(2));
}

#[test]
fn scan_tsv_and_latex() {
    let cat = catalog_dir();
    let o = negk(&["scan", "--min", "6", "--max", "6", "--catalog", &cat]);
    assert_eq!(stdout(&o), "order\tindex\tname\tr\ts\tK-1\n6\t1\tS3\t0\t0\t0\n6\t2\tC6\t1\t0\tZ\n");
    let o = negk(&["scan", "--min", "6", "--max", "6", "--catalog", &cat, "--format", "latex"]);
    let out = stdout(&o);
    assert!(out.starts_with("% n = 6\n"));
    assert!(out.contains(" & 2 & C6 & 1 & 0 & $\\mathbb{Z}$ \\\\"));
    let o = negk(&["scan", "--min", "6", "--max", "6", "--catalog", &cat, "--timings"]);
    assert!(stdout(&o).starts_with("order\tindex\tname\tr\ts\tK-1\tms\n"));
}

#[test]
fn scan_s_positive_and_empty_ranges() {
    let cat = catalog_dir();
    let o = negk(&["scan", "--min", "1", "--max", "24", "--s-positive", "--catalog", &cat]);
    let keys: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split('\t').take(2).collect::<Vec<_>>().join(",")).collect();
    assert_eq!(keys, ["16,9", "20,1", "24,4"]);
    let o = negk(&["scan", "--min", "29", "--max", "31", "--catalog", &cat]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "order\tindex\tname\tr\ts\tK-1\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("29-31"));
}

#[test]
fn catalog_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_negk"))
        .args(["scan", "--min", "4", "--max", "4"])
        .env("NEGK_CATALOG_DIR", catalog_dir())
        .output()
        .unwrap();
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_negk"))
        .args(["scan", "--min", "4", "--max", "4"])
        .env("NEGK_CATALOG_DIR", "/nonexistent/negk")
        .output()
        .unwrap();
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn minimal_s_up_to_24() {
    let o = negk(&["minimal-s", "--max", "24", "--catalog", &catalog_dir()]);
    assert_eq!(stdout(&o), "order\tindex\tname\ts\n16\t9\tQ16\t1\n20\t1\tDic5\t1\n24\t4\tDic6\t1\n");
}

#[test]
fn verify_passes_on_the_catalog() {
    let o = negk(&["verify", "--catalog", &catalog_dir(), "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verified 42 groups:"));
    assert!(stdout(&o).ends_with(" 0 failures\n"));
}

#[test]
fn verify_reports_a_wrong_entry() {
    // declared order 8, generates a group of order 4
    let path = temp_catalog("wrong", "group 8 1 C8\ngen (1,2,3,4)\n");
    let o = negk(&["verify", "--catalog", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn malformed_catalog_is_rejected() {
    let path = temp_catalog("malformed", "group 6 x S3\ngen (1,2)\n");
    let o = negk(&["scan", "--min", "1", "--max", "10", "--catalog", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(2));
}
