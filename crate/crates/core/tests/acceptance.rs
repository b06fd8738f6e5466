//! Acceptance checks. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use purcell::connection::force_balance_residual;
use purcell::oracle::{oracle_connection_with, OracleReading};
use purcell::verify::{run_verify, VerifySpec};
use purcell::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Converged one-cycle displacement of `Square(π/4, 1)` at L = 1.
const SQUARE_DX: f64 = -0.253_216_060_275_54;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn unit_model() -> Model64 {
    Model::corrected(Params64::unit())
}

fn grid21() -> Vec<Shape64> {
    let a = 0.75 * PI;
    let v = |i: usize| (-a * (20 - i) as f64 + a * i as f64) / 20.0;
    (0..21)
        .flat_map(|i| (0..21).map(move |j| ShapeState::new(v(i), v(j))))
        .collect()
}

fn random_shapes(seed: u64, n: usize) -> Vec<Shape64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = 0.75 * PI;
    (0..n)
        .map(|_| ShapeState::new(rng.gen_range(-r..r), rng.gen_range(-r..r)))
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if d == 0.0 {
        0.0
    } else {
        d / a.abs().max(b.abs())
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let report = run_verify(&VerifySpec::default()).expect("verify sweep");
    let elapsed = start.elapsed().as_secs_f64();
    let literal_worst = random_shapes(0, 200)
        .iter()
        .map(|s| {
            let o = oracle_connection_with(s, &Params64::unit(), OracleReading::printed_labels()).unwrap();
            let n = local_connection(s, &unit_model()).unwrap();
            verify::deviation(&n, 1.0, &o).into_iter().fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    let Some(w) = &report.winner else {
        return outcome(
            false,
            format!("{} combinations within tolerance", report.passing_combinations),
        );
    };
    let c = w.combination;
    outcome(
        report.passing_combinations >= 1 && elapsed < 30.0,
        format!(
            "winner ({}, {}, {:+}) max dev {:.2e}; {} passing; printed labels alone give {:.2e}; {:.2} s",
            c.drag_mode.name(),
            c.geometry.name(),
            c.sign,
            w.max_deviation,
            report.passing_combinations,
            literal_worst,
            elapsed
        ),
    )
}

fn collinear() -> Outcome {
    let a = local_connection(&ShapeState::new(0.0, 0.0), &unit_model()).unwrap();
    let want = [0.0, 0.0, -1.0 / 3.0, -1.0 / 3.0, 7.0 / 27.0, -7.0 / 27.0];
    let err = a
        .entries()
        .iter()
        .zip(want)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    outcome(err <= 1e-12, format!("max abs error {err:.2e}"))
}

fn k_invariance() -> Outcome {
    let mut worst = 0.0_f64;
    for s in grid21() {
        let a: Vec<_> = [0.5, 1.0, 7.3]
            .iter()
            .map(|&k| {
                local_connection(&s, &Model::corrected(Params64::new(1.0, k).unwrap()))
                    .unwrap()
                    .entries()
            })
            .collect();
        for other in &a[1..] {
            for e in 0..6 {
                worst = worst.max(rel(a[0][e], other[e]));
            }
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max relative difference {worst:.2e} over 441 shapes"),
    )
}

fn l_scaling() -> Outcome {
    let mut worst = 0.0_f64;
    for s in grid21() {
        let one = local_connection(&s, &unit_model()).unwrap().entries();
        let two = local_connection(&s, &Model::corrected(Params64::new(2.0, 1.0).unwrap()))
            .unwrap()
            .entries();
        for e in 0..6 {
            let factor = if e < 4 { 2.0 } else { 1.0 };
            worst = worst.max(rel(factor * one[e], two[e]));
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max relative difference {worst:.2e} over 441 shapes"),
    )
}

fn residual() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0_f64;
    for s in random_shapes(5, 1000) {
        let rate = ShapeRate::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let r = force_balance_residual(&s, &rate, &unit_model()).unwrap();
        worst = worst.max(r.iter().fold(0.0, |a: f64, b| a.max(b.abs())));
    }
    outcome(
        worst <= 1e-10,
        format!("max residual {worst:.2e} over 1000 random (alpha, rate)"),
    )
}

fn symmetries() -> Outcome {
    let (mut parity, mut swap) = (0.0_f64, 0.0_f64);
    let m = unit_model();
    for s in random_shapes(6, 1000) {
        let a = local_connection(&s, &m).unwrap().a;
        let neg = local_connection(&ShapeState::new(-s.alpha1, -s.alpha2), &m).unwrap().a;
        let sw = local_connection(&s.swapped(), &m).unwrap().a;
        for r in 0..3 {
            let p = if r == 0 { -1.0 } else { 1.0 };
            let q = if r == 1 { 1.0 } else { -1.0 };
            for c in 0..2 {
                parity = parity.max(rel(neg[r][c], p * a[r][c]));
                swap = swap.max(rel(sw[r][1 - c], q * a[r][c]));
            }
        }
    }
    outcome(
        parity <= 1e-11 && swap <= 1e-11,
        format!("parity {parity:.2e}, swap mirror {swap:.2e} (relative, 1000 shapes)"),
    )
}

fn settings(steps: usize, cycles: usize) -> IntegratorSettings {
    IntegratorSettings {
        steps_per_cycle: steps,
        cycles,
        method: Method::Rk4,
    }
}

fn holonomy(gait: &Gait64, steps: usize, cycles: usize) -> Pose64 {
    net_displacement(&integrate_gait(gait, &unit_model(), settings(steps, cycles)).unwrap()).unwrap()
}

fn scallop() -> Outcome {
    let a = FRAC_PI_3;
    let w = |x: f64| Waypoint {
        shape: ShapeState::new(x, x),
        fraction: 0.5,
    };
    let h = holonomy(&GaitSpec::waypoints(vec![w(0.0), w(a)], 1.0), 10_000, 1);
    let err = h.max_abs_diff(&Pose::identity());
    outcome(
        err <= 1e-8,
        format!("holonomy ({:.2e}, {:.2e}, {:.2e})", h.x, h.y, h.theta),
    )
}

fn square_structure() -> Outcome {
    let g = GaitSpec::square(FRAC_PI_4, 1.0);
    let h = holonomy(&g, 10_000, 1);
    let back = holonomy(&g.reversed(), 10_000, 1);
    let twice = holonomy(&g, 10_000, 2);
    let inverse_err = back.max_abs_diff(&h.inverse());
    let power_err = twice.max_abs_diff(&h.compose(&h));
    let pinned = (h.x - SQUARE_DX).abs();
    let pass = h.y.abs() <= 1e-6
        && h.theta.abs() <= 1e-6
        && h.x.abs() > 1e-3
        && inverse_err <= 1e-7
        && power_err <= 1e-9
        && pinned <= 1e-11;
    outcome(
        pass,
        format!(
            "dx {:.15}, dy {:.1e}, dtheta {:.1e}; reverse {inverse_err:.1e}; two cycles {power_err:.1e}; pin drift {pinned:.1e}",
            h.x, h.y, h.theta
        ),
    )
}

fn convergence() -> Outcome {
    let start = Instant::now();
    let g = GaitSpec::square(FRAC_PI_4, 1.0);
    let h: Vec<Pose64> = [250, 500, 1000, 2000].iter().map(|&n| holonomy(&g, n, 1)).collect();
    let diffs: Vec<f64> = h.windows(2).map(|w| w[0].max_abs_diff(&w[1])).collect();
    let orders: Vec<f64> = diffs.windows(2).map(|d| (d[0] / d[1]).log2()).collect();
    let elapsed = start.elapsed().as_secs_f64();
    let worst = orders.iter().copied().fold(f64::INFINITY, f64::min);
    outcome(
        worst >= 3.5 && elapsed < 10.0,
        format!("observed orders {:.3?}; {:.2} s", orders, elapsed),
    )
}

fn run_cli(dir: &Path, command: &str, config: &str, threads: Option<&str>) -> Vec<(String, Vec<u8>)> {
    std::fs::create_dir_all(dir).unwrap();
    let cfg = dir.join("config.json");
    std::fs::write(&cfg, config).unwrap();
    let out = dir.join("out");
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_purcell"));
    cmd.args([command, "--config"])
        .arg(&cfg)
        .arg("--output")
        .arg(&out)
        .arg("--quiet");
    if let Some(t) = threads {
        cmd.env("RAYON_NUM_THREADS", t);
    }
    let status = cmd.status().expect("run purcell");
    assert!(status.success(), "purcell {command} failed");
    let mut files: Vec<_> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                std::fs::read(&p).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn determinism() -> Outcome {
    let tmp = tempfile::tempdir().unwrap();
    let cases = [
        ("verify", r#"{"command":"verify","seed":0,"verify":{"samples":1000}}"#),
        (
            "simulate",
            r#"{"command":"simulate","gait":{"kind":"square","amplitude":0.7853981633974483,"period":1.0},"steps_per_cycle":1000}"#,
        ),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (cmd, config) in cases {
        let a = run_cli(&tmp.path().join(format!("{cmd}-a")), cmd, config, None);
        let b = run_cli(&tmp.path().join(format!("{cmd}-b")), cmd, config, None);
        let c = run_cli(&tmp.path().join(format!("{cmd}-c")), cmd, config, Some("1"));
        let same = a == b && a == c && !a.is_empty();
        pass &= same;
        let bytes: usize = a.iter().map(|(_, d)| d.len()).sum();
        notes.push(format!(
            "{cmd}: {} files, {bytes} bytes, {}",
            a.len(),
            if same { "identical" } else { "DIFFERENT" }
        ));
    }
    outcome(pass, notes.join("; "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("collinear closed form", collinear),
        ("k-invariance", k_invariance),
        ("L-scaling", l_scaling),
        ("force-balance residual", residual),
        ("symmetry suite", symmetries),
        ("scallop theorem", scallop),
        ("square-gait structure", square_structure),
        ("integrator convergence", convergence),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
