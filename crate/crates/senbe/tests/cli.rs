//! CLI integration: exit codes through the real binary, and the
//! thin-adapter property (subcommand output matches direct library calls
//! byte for byte).

use std::process::Command;

use senbe::bounds::bound_iid;
use senbe::constants::published_row;
use senbe::fmt_sig;
use senbe::moments::DistributionSpec;

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_senbe"))
        .args(args)
        .env_remove("SENBE_THREADS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
    )
}

fn run_lib(args: &[&str]) -> (i32, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut buf = Vec::new();
    let code = senbe::cli::run(&args, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn exit_codes() {
    let (code, _) = run_bin(&["selfcheck"]);
    assert_eq!(code, 0);
    let (code, text) = run_bin(&["nonsense"]);
    assert_eq!(code, 2);
    assert!(text.contains("USAGE"));
    let (code, text) = run_bin(&[
        "bound",
        "--dist",
        "student:d=3",
        "--n",
        "10",
        "--triple",
        "t1",
    ]);
    assert_eq!(code, 1);
    assert!(text.contains("moment diverges"));
}

#[test]
fn binary_matches_library() {
    for args in [
        vec![
            "bound",
            "--dist",
            "two-point:b=2",
            "--n",
            "400",
            "--triple",
            "t1",
        ],
        vec!["tails", "--n", "10", "--z", "1.5:3:4"],
        vec![
            "constants",
            "--weights",
            "1,1,1",
            "--be",
            "0.56",
            "--seed-table",
        ],
        vec![
            "truncate",
            "--dist",
            "student:d=20",
            "--n",
            "10000",
            "--triple",
            "t2",
        ],
    ] {
        let (bc, bt) = run_bin(&args);
        let (lc, lt) = run_lib(&args);
        assert_eq!(bc, lc, "{args:?}");
        assert_eq!(bt, lt, "{args:?}");
    }
}

#[test]
fn bound_is_thin_adapter() {
    let (code, text) = run_lib(&[
        "bound",
        "--dist",
        "two-point:b=2",
        "--n",
        "400",
        "--triple",
        "t1",
    ]);
    assert_eq!(code, 0);
    let spec = DistributionSpec::parse("two-point:b=2").unwrap();
    let (m, _) = spec.iid_summary(400).unwrap();
    let p = published_row("t1").unwrap().published;
    let t = senbe::constants::ConstantTriple::bare(p[0], p[1], p[2]);
    let want = bound_iid(&m, &t).unwrap().value;
    assert!(
        text.contains(&format!("value = {}", fmt_sig(want, 10))),
        "{text}"
    );
}

#[test]
fn compare_emits_figure_dataset() {
    let (code, text) = run_lib(&[
        "compare",
        "--dist",
        "student",
        "--param-range",
        "8:20:3",
        "--n",
        "100,10000",
        "--out",
        "csv",
    ]);
    assert_eq!(code, 0, "{text}");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "dist,param,n,shao,shao_trunc_min,thm,thm_trunc_min"
    );
    assert_eq!(lines.len(), 1 + 3 * 2);
    // the d=20, n=10000 row carries the known anchor values
    let anchor = lines
        .iter()
        .find(|l| l.starts_with("student,20,10000"))
        .expect("anchor row present");
    let fields: Vec<&str> = anchor.split(',').collect();
    let shao: f64 = fields[3].parse().unwrap();
    let thm: f64 = fields[5].parse().unwrap();
    assert!((shao - 0.4166).abs() < 5e-3, "{shao}");
    assert!((thm - 0.068).abs() < 5e-3, "{thm}");
}

#[test]
fn verify_subcommand_reports_pass() {
    let (code, text) = run_lib(&[
        "verify",
        "--dist",
        "two-point:b=1",
        "--n",
        "100",
        "--samples",
        "20000",
        "--seed",
        "11",
        "--triple",
        "t4iid",
    ]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("result = pass"), "{text}");
    assert!(text.contains("sup_delta_T"), "{text}");
}

#[test]
fn sample_file_roundtrip() {
    let dir = std::env::temp_dir().join("senbe_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sample.txt");
    std::fs::write(&path, "-1\n-1\n-1\n3\n").unwrap();
    let spec = format!("sample:{}", path.display());
    let (code, text) = run_lib(&["bound", "--dist", &spec, "--n", "100", "--triple", "t1"]);
    assert_eq!(code, 0, "{text}");
    // matches the b = sqrt(3) two-point shape
    let rho = senbe::moments::two_point_moments(3f64.sqrt()).unwrap();
    let m = rho.with_n(100).unwrap();
    let p = published_row("t1").unwrap().published;
    let t = senbe::constants::ConstantTriple::bare(p[0], p[1], p[2]);
    let want = bound_iid(&m, &t).unwrap().value;
    assert!(
        text.contains(&format!("value = {}", fmt_sig(want, 10))),
        "{text}"
    );
}
