//! Runs the `thermal-spin` binary and checks its output files and exit codes.

use std::process::{Command, Output};

use thermal_spin::cli::{EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFICATION};
use thermal_spin::statmech::{massive_exchange, photon_exchange, ReducedSeparation};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thermal-spin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sep(v: f64) -> ReducedSeparation {
    ReducedSeparation::new(v).unwrap()
}

#[test]
fn photon_csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("photon.csv");
    let out = run(&[
        "exchange",
        "--system",
        "photon",
        "--range",
        "0:10:11",
        "--temperature-k",
        "300",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("sep_reduced,sep_si,f\n"));
    assert!(!text.contains('\r'));

    let mut reader = csv::Reader::from_path(&path).unwrap();
    let mut worst = 0.0_f64;
    let mut previous = f64::INFINITY;
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        let u: f64 = record[0].parse().unwrap();
        let si: f64 = record[1].parse().unwrap();
        let f: f64 = record[2].parse().unwrap();
        assert!((si - u * 2.289_8e-3 / 300.0).abs() <= 1e-4 * si);
        worst = worst.max((f - photon_exchange(sep(u)).value()).abs());
        assert!(f < previous);
        previous = f;
        rows += 1;
    }
    assert_eq!(rows, 11);
    assert!(worst <= 1e-12);
}

#[test]
fn massive_json_round_trip() {
    let out = run(&[
        "exchange",
        "--system",
        "massive",
        "--degeneracy",
        "0.5",
        "--range",
        "0:3:31",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    let z = doc["fugacity"].as_f64().unwrap();
    let seps = doc["sep_reduced"].as_array().unwrap();
    let fs = doc["f"].as_array().unwrap();
    assert_eq!(seps.len(), 31);
    for (s, f) in seps.iter().zip(fs) {
        let expected = massive_exchange(sep(s.as_f64().unwrap()), z)
            .unwrap()
            .value();
        assert!((f.as_f64().unwrap() - expected).abs() <= 1e-12);
    }
}

#[test]
fn condensed_input_exits_with_domain_code() {
    let out = run(&[
        "exchange",
        "--system",
        "massive",
        "--degeneracy",
        "3.0",
        "--range",
        "0:1:3",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
    assert!(String::from_utf8_lossy(&out.stderr).contains("condensation"));
}

#[test]
fn malformed_flags_exit_with_usage_code() {
    assert_eq!(
        run(&["exchange", "--system", "photon", "--range", "3:1:4"])
            .status
            .code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(
        run(&["spectrum", "--system", "bogus", "--f", "1"])
            .status
            .code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(
        run(&["spectrum", "--system", "photon"]).status.code(),
        Some(EXIT_USAGE)
    );
}

#[test]
fn spectrum_json_documents() {
    let parse = |args: &[&str]| -> serde_json::Value {
        let out = run(args);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        serde_json::from_slice(&out.stdout).unwrap()
    };
    let photon = parse(&["spectrum", "--system", "photon", "--f", "1"]);
    assert!((photon["min_eigenvalue"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-12);
    assert_eq!(photon["is_ppt"], true);
    assert_eq!(photon["schema"], 1);

    let massive = parse(&["spectrum", "--system", "massive", "--f", "1"]);
    assert!((massive["min_eigenvalue"].as_f64().unwrap() - 1.0 / 12.0).abs() < 1e-12);
    assert_eq!(massive["alpha"], 3);
    assert_eq!(massive["spectrum"].as_array().unwrap().len(), 9);

    let fermion = parse(&["spectrum", "--system", "fermion-T0", "--f", "0.9"]);
    assert_eq!(fermion["is_ppt"], false);
    assert_eq!(fermion["statistics"], "fermion");
    assert!(fermion["negativity"].as_f64().unwrap() > 0.0);
}

#[test]
fn decompose_reports_weights() {
    let out = run(&["decompose", "--f", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["weight_rho0"], 0.75);
    assert_eq!(doc["weight_sigma0"], 0.25);
    assert_eq!(doc["weight_sigma1"], 0.0);
    assert!(doc["reconstruction_error"].as_f64().unwrap() <= 1e-13);
}

#[test]
fn verify_paper_exit_codes() {
    let ok = run(&["verify-paper"]);
    assert!(ok.status.success());
    let table = String::from_utf8_lossy(&ok.stdout);
    assert_eq!(table.lines().filter(|l| l.starts_with("PASS")).count(), 8);

    let fine = run(&["verify-paper", "--grid", "1001"]);
    assert!(fine.status.success());

    let faulted = run(&["verify-paper", "--inject-fault"]);
    assert_eq!(faulted.status.code(), Some(EXIT_VERIFICATION));
    let stderr = String::from_utf8_lossy(&faulted.stderr);
    assert!(stderr.contains("qubit-pt-spectrum"), "{stderr}");
    assert!(String::from_utf8_lossy(&faulted.stdout).contains("negativity"));
}

#[test]
fn help_documents_constants() {
    let out = run(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1.380649e-23"));
    assert!(!text.contains("inject-fault"));
}
