use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_besseltrig"))
        .args(args)
        .env_remove("BESSELTRIG_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn formula_by_name_and_by_parameters() {
    let o = run(&["formula", "--name", "APP2", "--output", "text"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1/6 + 1/6·cos(x) + 1/3·cos(x·√3/2) + 1/3·cos(x·1/2)\n");

    let o = run(&["formula", "--p", "0", "--n", "2", "--theta", "pi/8"]);
    assert_eq!(stdout(&o), "1/2·cos(x·cos(π/8)) + 1/2·cos(x·sin(π/8))\n");

    let o = run(&["formula", "--name", "J3", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["target_p"], 3);
    assert_eq!(v["predicted_error"]["order"], 15);
}

#[test]
fn precondition_violations_exit_2() {
    let o = run(&["formula", "--p", "3", "--n", "4"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("requires 2p < n"));

    assert_eq!(code(&run(&["sweep", "--name", "APP1", "--xmax", "0", "--step", "0.1"])), 2);
    assert_eq!(code(&run(&["formula", "--name", "J9"])), 2);
    assert_eq!(code(&run(&["--precision", "12", "catalog"])), 2);
    assert_eq!(code(&run(&["formula", "--builder", "j0", "--n", "2", "--theta", "0.3"])), 2);
}

#[test]
fn precision_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_besseltrig"))
        .args(["eval", "--name", "APP1", "--x", "1"])
        .env("BESSELTRIG_PRECISION", "8")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn sweep_csv_is_stable() {
    let args = ["sweep", "--name", "J3", "--xmax", "10", "--step", "0.5", "--output", "csv"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    let mut lines = a.lines();
    assert_eq!(lines.next(), Some("x,approx,reference,error"));
    assert_eq!(a.lines().count(), 21);
    let last = a.lines().last().unwrap();
    assert!(last.starts_with("10,"));
    let err: f64 = last.rsplit(',').next().unwrap().parse().unwrap();
    assert!((err.abs() - 0.0045).abs() < 1e-4);
}

#[test]
fn sweep_json_reports_domains() {
    let o = run(&["sweep", "--name", "J0n6opt", "--xmax", "15", "--step", "0.01", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let domains = v["domains"].as_array().unwrap();
    assert_eq!(domains[0]["tol"], "1e-3");
    assert_eq!(domains[0]["x"], "15");
    assert_eq!(v["fitted_order"], 24);
}

#[test]
fn zeros_against_oracle() {
    let o = run(&["zeros", "--builder", "j0opt", "--n", "2", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["location"].as_str().unwrap().starts_with("2.4044709195"));
    assert!(v[0]["reference"].as_str().unwrap().starts_with("2.4048255576"));

    let o = run(&["zeros", "--name", "J2n6"]);
    assert!(stdout(&o).contains("5.1301993206"));

    let o = run(&["zeros", "--name", "APP1", "--count", "2", "--output", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn identity_commands() {
    let o = run(&["identity", "--family", "mix-even-odd", "--m", "5", "--q", "1", "--k", "6", "--theta", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("exact        -125/1024"));

    let o = run(&["identity", "--family", "cos-even-half", "--n", "1..8", "--k", "auto", "--theta-points", "16"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("failures 0"));

    let o = run(&["identity", "--family", "cos-odd-circle", "--n", "2", "--k", "0", "--theta", "0.7", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed_form_value"], "0");
    assert_eq!(code(&o), 0);

    let o = run(&["identity", "--family", "mix-even-odd", "--m", "1", "--q", "3", "--k", "2", "--theta", "0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn catalog_lists_every_entry() {
    let o = run(&["catalog"]);
    let text = stdout(&o);
    for (name, order) in [
        ("APP1", 8),
        ("APP2", 12),
        ("Fettis15", 30),
        ("J0n3opt", 12),
        ("eps24", 24),
        ("J0n6opt", 24),
        ("J1half24", 23),
        ("J2n6", 10),
        ("J2n8", 14),
        ("J4n8", 12),
        ("J3", 15),
        ("J5", 25),
    ] {
        let row = text.lines().find(|l| l.split_whitespace().next() == Some(name)).unwrap();
        assert_eq!(row.split_whitespace().last().unwrap(), order.to_string(), "{name}");
    }
    let o = run(&["catalog", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 12);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("besseltrig-cli-{}.txt", std::process::id()));
    let o = run(&["catalog", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("Fettis15"));
    std::fs::remove_file(path).unwrap();
}
