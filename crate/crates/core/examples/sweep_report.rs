//! Builds a sweep configuration in code, runs it and writes JSON and CSV
//! reports, the same path the `strichartz sweep` command takes.

use strichartz_lab::harness::*;

fn main() -> strichartz_lab::Result<()> {
    let cfg = SweepConfig::from_json(
        r#"{
            "kind": "SCALING",
            "n": 1,
            "configs": [{ "inv_q": "0", "inv_qt_prime": "1/2", "inv_rt_prime": "1", "inv_r": "0" }],
            "params": [2]
        }"#,
    )?;
    let report = run_sweep(&cfg)?;
    for c in &report.checks {
        println!("{:?} {} measured {:?}", c.outcome, c.name, c.measured);
    }
    let dir = std::env::temp_dir().join("strichartz-example");
    for path in emit_report(&report, &[Format::Json, Format::Csv], &dir)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}
