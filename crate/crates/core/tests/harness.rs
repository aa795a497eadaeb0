use std::path::PathBuf;

use strichartz_lab::harness::*;

fn config(name: &str) -> SweepConfig {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name);
    SweepConfig::load(&path).unwrap()
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

/// Every verdict follows from the stored numbers alone.
fn assert_recomputable(r: &SweepReport) {
    for c in &r.checks {
        let again = Check::new(c.name.clone(), c.config, c.measured, c.target, c.tolerance, c.relation);
        assert_eq!(again.outcome, c.outcome, "{}", c.name);
    }
    assert_eq!(r.recompute_outcome(), r.outcome);
    for f in &r.fits {
        let pts: Vec<(f64, f64)> =
            r.rows.iter().filter(|w| w.config == f.config).filter_map(|w| w.values.get(&f.quantity).map(|&v| (w.param, v))).collect();
        let again = fit_slope(&pts).unwrap();
        assert_eq!(again.slope, f.slope, "{}", f.quantity);
    }
}

#[test]
fn perturbed_power_law_fit() {
    let pts: Vec<(f64, f64)> = (0..6)
        .map(|i| {
            let p = 2f64.powi(i + 3);
            (p, (1.0 + if i % 2 == 0 { 0.05 } else { -0.05 }) / p)
        })
        .collect();
    let fit = fit_slope(&pts).unwrap();
    assert!((fit.slope + 1.0).abs() < 0.08, "{fit:?}");
}

#[test]
fn knapp_report_round_trips_and_is_thread_count_independent() {
    let cfg = config("knapp.json");
    let serial = in_pool(1, || run_sweep(&cfg).unwrap());
    let parallel = in_pool(4, || run_sweep(&cfg).unwrap());
    let text = serial.to_json().unwrap();
    assert_eq!(text, parallel.to_json().unwrap());
    assert_eq!(SweepReport::from_json(&text).unwrap(), serial);
    assert_recomputable(&serial);

    let csv = serial.to_csv();
    let params = cfg.params().len() * cfg.configs.len();
    assert_eq!(csv.lines().count(), 1 + params);
    assert_eq!(serial.rows.len(), params);

    // dropping the largest M moves each slope by less than twice its stderr
    for f in &serial.fits {
        let shift = f.drop_largest_shift.unwrap();
        assert!(shift.abs() < 2.0 * f.stderr, "{f:?}");
    }
}

#[test]
fn tube_report_carries_deviation_notes() {
    let mut cfg = config("tube.json");
    cfg.params = vec![0.5, 0.25, 0.125];
    let r = run_sweep(&cfg).unwrap();
    assert!(r.notes.iter().any(|n| n.starts_with("mollification")), "{:?}", r.notes);
    assert!(r.notes.iter().any(|n| n.starts_with("window constants relaxed")), "{:?}", r.notes);
    assert_recomputable(&r);
    for f in &r.fits {
        assert!(f.drop_largest_shift.is_none());
    }
}

#[test]
fn region_scan_csv_and_named_points() {
    let cfg = config("region_n3.json");
    let r = run_sweep(&cfg).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    // 1/40 step on the unit square
    assert_eq!(r.raster.len(), 41 * 41);
    assert_eq!(r.to_csv().lines().count(), 1 + 41 * 41);
    assert_recomputable(&r);
}

#[test]
fn emitted_files_are_byte_stable() {
    let cfg = config("scaling.json");
    let dir = std::env::temp_dir().join(format!("strichartz-harness-{}", std::process::id()));
    let a = run_sweep(&cfg).unwrap();
    let b = run_sweep(&cfg).unwrap();
    let pa = emit_report(&a, &[Format::Json, Format::Csv], &dir.join("a")).unwrap();
    let pb = emit_report(&b, &[Format::Json, Format::Csv], &dir.join("b")).unwrap();
    for (x, y) in pa.iter().zip(&pb) {
        assert_eq!(std::fs::read(x).unwrap(), std::fs::read(y).unwrap(), "{}", x.display());
    }
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn failed_points_do_not_abort_the_sweep() {
    let mut cfg = config("knapp.json");
    // M = 4 is below the family's minimum; the other points still run
    cfg.params = vec![4.0, 8.0, 16.0, 32.0];
    let r = run_sweep(&cfg).unwrap();
    assert!(r.failures.iter().any(|f| f.param == 4.0));
    assert_eq!(r.rows.len(), 6);
    assert_eq!(r.outcome, r.recompute_outcome());
}
