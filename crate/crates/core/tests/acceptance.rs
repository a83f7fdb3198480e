use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use jacobi_type::exactalg::{int, rat, Poly};
use jacobi_type::highops::{explicit_coefficient, HighOpParams};
use jacobi_type::orthogonality::{gram_matrix, InnerProductSpec};
use jacobi_type::report::{Format, SuiteReport};
use jacobi_type::suites::{run_default, SUITES};
use jacobi_type::table::coefficient_table;

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    note: String,
}

fn suite_outcome(id: u32, name: &'static str, suite: &str, extra: impl FnOnce() -> Result<(), String>) -> Outcome {
    let start = Instant::now();
    let (passed, note) = match run_default(suite) {
        Ok(r) if r.is_success() => match extra() {
            Ok(()) => (true, format!("{} cases", r.summary.total)),
            Err(e) => (false, e),
        },
        Ok(r) => {
            let first = r.cases.iter().find(|c| c.detail != "ok").map(|c| c.detail.clone());
            (false, format!("{} failed, {} errors; {:?}", r.summary.failed, r.summary.errored, first))
        }
        Err(e) => (false, e.to_string()),
    };
    Outcome {
        id,
        name,
        passed,
        note: format!("{note}, {:.1}s", start.elapsed().as_secs_f64()),
    }
}

fn top_coefficients() -> Result<(), String> {
    for a in 0..=3u32 {
        for b in [rat(-1, 2), int(0), rat(1, 2), int(1), rat(5, 2), rat(7, 3)] {
            let prm = HighOpParams::new(a, b.clone()).map_err(|e| e.to_string())?;
            let top = explicit_coefficient(prm.order(), &prm).map_err(|e| e.to_string())?;
            if top != Poly::from_ints(&[-1, 0, 1]).pow(a + 2) {
                return Err(format!("top coefficient wrong at alpha={a}, beta={b}"));
            }
        }
    }
    let csv = coefficient_table(0, &int(0), Format::Csv, None).map_err(|e| e.to_string())?;
    let rows: Vec<&str> = csv.lines().collect();
    if rows.first() != Some(&"i,coeff0,coeff1,coeff2,coeff3,coeff4")
        || rows.get(1) != Some(&"1,-4,4,0,0,0")
        || rows.get(2) != Some(&"2,-10,-4,14,0,0")
        || rows.get(4) != Some(&"4,1,0,-2,0,1")
    {
        return Err(format!("golden table mismatch:\n{csv}"));
    }
    Ok(())
}

fn gram_spot_value() -> Result<(), String> {
    let spec = InnerProductSpec::new(int(0), int(0), int(1)).map_err(|e| e.to_string())?;
    let g = gram_matrix(1, &spec).map_err(|e| e.to_string())?;
    if g[0][1] != int(0) || g[1][1] != rat(10, 3) {
        return Err(format!("G[0][1] = {}, G[1][1] = {}", g[0][1], g[1][1]));
    }
    Ok(())
}

fn end_to_end() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_jacobi-type"))
        .args(["verify", "--suite", "all", "--format", "json"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let check = || -> Result<(), String> {
        if !out.status.success() {
            return Err(format!("exit status {:?}", out.status.code()));
        }
        if elapsed > Duration::from_secs(60) {
            return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
        }
        let reports: Vec<SuiteReport> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if reports.len() != SUITES.len() || !reports.iter().all(SuiteReport::is_success) {
            return Err("missing or failing suite in report".into());
        }
        for r in &reports {
            if SuiteReport::from_json(&r.to_json()).ok().as_ref() != Some(r) {
                return Err(format!("{} report does not round-trip", r.suite));
            }
        }
        Ok(())
    };
    let (passed, note) = match check() {
        Ok(()) => (true, format!("all suites, {:.1}s", elapsed.as_secs_f64())),
        Err(e) => (false, e),
    };
    Outcome {
        id: 10,
        name: "end-to-end run and JSON round trip",
        passed,
        note,
    }
}

#[test]
fn acceptance_criteria() {
    let outcomes = vec![
        suite_outcome(1, "five operator routes agree", "routes", || Ok(())),
        suite_outcome(2, "coefficient identities and golden table", "coeffs", top_coefficients),
        suite_outcome(3, "spectral equation", "eigen", || Ok(())),
        suite_outcome(4, "mirrored operator", "mirror", || Ok(())),
        suite_outcome(5, "kernel identities", "kernel", || Ok(())),
        suite_outcome(6, "operator symmetry", "symmetry", || Ok(())),
        suite_outcome(7, "orthogonality and G[1][1] = 10/3", "gram", gram_spot_value),
        suite_outcome(8, "Jacobi basics", "basics", || Ok(())),
        suite_outcome(9, "ultraspherical link", "ultra", || {
            match run_default("substitution") {
                Ok(r) if r.is_success() => Ok(()),
                Ok(r) => Err(format!("substitution: {} failed", r.summary.failed + r.summary.errored)),
                Err(e) => Err(e.to_string()),
            }
        }),
        end_to_end(),
    ];
    let mut out = std::io::stdout().lock();
    for o in &outcomes {
        let _ = writeln!(
            out,
            "criterion {:>2}: {}  {} ({})",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.note
        );
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
