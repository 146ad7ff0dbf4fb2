use std::process::{Command, Output};

fn jackpoly(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jackpoly")).args(args.split_whitespace()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_values() {
    for (args, expected) in [
        ("jack eval --mu 2 --theta 1 --n 2 --point 1,1", "3\n"),
        ("binom coeff --lambda 5 --mu 2 --theta 1/2", "10\n"),
        ("shifted eval --mu 2,1 --lambda 1 --theta 2", "0\n"),
        ("thetadim --lambda 2,1 --theta 1", "2\n"),
        ("jack expand --mu 1 --theta 3/2 --n 2", "x1 + x2\n"),
    ] {
        let o = jackpoly(args);
        assert_eq!(o.status.code(), Some(0), "{args}");
        assert_eq!(stdout(&o), expected, "{args}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for (args, flag) in [
        ("jack eval --mu 1,3 --theta 1 --point 1", "--mu"),
        ("binom coeff --lambda 2 --mu 1 --theta 0", "--theta"),
        ("bessel --l 1,x --x 1,1 --theta 1", "--l"),
    ] {
        let o = jackpoly(args);
        assert_eq!(o.status.code(), Some(2), "{args}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(flag), "{args}");
    }
    assert_eq!(jackpoly("jack eval --mu 1 --theta 1 --n 3 --point 1,1").status.code(), Some(2));
    assert_eq!(jackpoly("integral verify --mu 1 --lambda 1,1 --theta 1").status.code(), Some(2));
    assert_eq!(jackpoly("nonsense").status.code(), Some(2));
}

#[test]
fn identity_checks_report_through_exit_code() {
    assert_eq!(jackpoly("binom verify --lambda 2,1 --theta 1/2 --n 3").status.code(), Some(0));
    assert_eq!(jackpoly("integral discrete --mu 1 --lambda 3,1 --theta 1/2 --n 2").status.code(), Some(0));
    assert_eq!(jackpoly("thetadim --lambda 3,1 --mu 1 --theta 2/3 --check").status.code(), Some(0));
    // Too few nodes for an exact answer, with a strict tolerance.
    let o = jackpoly("integral verify --mu 2 --lambda 3,1,0 --theta 3 --nodes-per-dim 1 --tolerance 1e-12");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(jackpoly("integral verify --mu 2 --lambda 3,1,0 --theta 3").status.code(), Some(0));
}

#[test]
fn json_reports() {
    let o = jackpoly("binom verify --lambda 1 --theta 1 --n 1 --format json");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["lhs"]["basis"], "monomial");

    let o = jackpoly("integral verify --mu 1 --lambda 2,0 --theta 1 --format json");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rule"], "gauss_legendre");
    assert!(v["rel_err"].as_f64().unwrap() < 1e-12);

    let o = jackpoly("bessel --l 1 --x 1 --theta 1 --degree-cut 30 --format json");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::E).abs() < 1e-12);
    assert_eq!(v["degree_cut"], 30);
}

#[test]
fn text_floats_have_fifteen_digits() {
    let o = jackpoly("bessel --l 1 --x 1 --theta 1 --degree-cut 30");
    assert!(stdout(&o).starts_with("value: 2.71828182845905\n"), "{}", stdout(&o));
}

#[test]
fn output_is_deterministic() {
    let args = "jack expand --mu 3,1 --theta 2/5 --n 3 --format json";
    assert_eq!(jackpoly(args).stdout, jackpoly(args).stdout);
    let args = "verify suite --max-size 3";
    assert_eq!(jackpoly(args).stdout, jackpoly(args).stdout);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("jackpoly-cli-{}.json", std::process::id()));
    let o =
        jackpoly(&format!("shifted eval --mu 1 --lambda 2,1 --theta 1/2 --format json --output {}", path.display()));
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["value"], "3");
}

#[test]
fn suite_passes_at_size_four() {
    let start = std::time::Instant::now();
    let o = jackpoly("verify suite --max-size 4");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(start.elapsed().as_secs() < 60);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 10);
}
