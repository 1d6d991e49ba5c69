//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Built without the libtest harness so the lines always print.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use period_forge::canon::is_isomorphic;
use period_forge::closed::{family_period, zeta, zigzag_period};
use period_forge::families::{family_graph, zigzag, FamilyParams};
use period_forge::kirchhoff::{psi_del_contract, psi_enumerate, psi_eval, spanning_tree_count, DEFAULT_MAX_EDGES};
use period_forge::mc::{estimate_period, zscore, McConfig, Sampler};
use period_forge::transforms::{planar_dual, reduce_to_zigzag};
use period_forge::{EdgeId, Multigraph};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn twist_chains() -> Check {
    let mut runs = 0;
    for p in FamilyParams::all_up_to(6) {
        let report = reduce_to_zigzag(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(report.verdict, || format!("{p}: verdict false"))?;
        ensure(report.steps.len() as u32 == p.m() - 1, || format!("{p}: wrong step count"))?;
        ensure(report.steps.iter().all(|s| s.twisted_matches), || format!("{p}: twisted graph mismatch"))?;
        let z = zigzag(p.n()).map_err(|e| e.to_string())?;
        ensure(is_isomorphic(&report.terminal, &z), || format!("{p}: terminal is not Z_{}", p.n()))?;
        runs += 1;
    }
    Ok(format!("{runs} triples"))
}

fn zigzag_terminals() -> Check {
    let mut count = 0;
    for total in 2..=6 {
        for k in 1..total {
            let l = total - k;
            let g = family_graph(FamilyParams::new(k, l, 1).map_err(|e| e.to_string())?);
            let z = zigzag(2 * k + 2 * l + 2).map_err(|e| e.to_string())?;
            ensure(is_isomorphic(&g, &z), || format!("G({k}, {l}, 1) is not Z_{}", 2 * total + 2))?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs"))
}

fn dual_identity() -> Check {
    for (k, l, m) in [(1, 1, 1), (1, 1, 2), (2, 1, 1)] {
        let g = family_graph(FamilyParams::new(k, l, m).unwrap());
        let dual = planar_dual(&g).map_err(|e| e.to_string())?;
        let lhs = psi_enumerate(&dual, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
        let rhs = psi_enumerate(&g, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?.complement();
        ensure(lhs == rhs, || format!("({k}, {l}, {m}): polynomials differ"))?;
    }
    let g = family_graph(FamilyParams::new(1, 2, 2).unwrap());
    let dual = planar_dual(&g).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let point: BTreeMap<EdgeId, f64> = g.edges().iter().map(|e| (e.id, rng.random_range(0.05..20.0))).collect();
        let inverse: BTreeMap<EdgeId, f64> = point.iter().map(|(&e, &x)| (e, 1.0 / x)).collect();
        let product: f64 = point.values().product();
        let lhs = psi_eval(&dual, &point).map_err(|e| e.to_string())?;
        let rhs = product * psi_eval(&g, &inverse).map_err(|e| e.to_string())?;
        worst = worst.max(((lhs - rhs) / rhs).abs());
    }
    ensure(worst <= 1e-10, || format!("numeric mismatch {worst:e} on (1, 2, 2)"))?;
    Ok(format!("3 symbolic, 100 points max rel {worst:.1e}"))
}

fn random_connected(rng: &mut ChaCha8Rng, max_edges: usize) -> Multigraph {
    let n = rng.random_range(2..=6u32);
    let mut pairs: Vec<(u32, u32)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    let extra = rng.random_range(0..=max_edges - pairs.len());
    while pairs.len() < (n - 1) as usize + extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            pairs.push((u, v));
        }
    }
    Multigraph::from_pairs(n, &pairs).unwrap()
}

fn kirchhoff_backends() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..50 {
        let g = random_connected(&mut rng, 8);
        let a = psi_enumerate(&g, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
        let b = psi_del_contract(&g, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("random graph {i}: backends differ"))?;
    }
    let mut families = 0;
    for p in FamilyParams::all_up_to(5) {
        let g = family_graph(p);
        let poly = psi_enumerate(&g, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
        let trees = spanning_tree_count(&g).map_err(|e| e.to_string())?;
        ensure(BigInt::from(poly.len()) == trees, || format!("{p}: {} monomials, {trees} trees", poly.len()))?;
        families += 1;
    }
    Ok(format!("50 random graphs, {families} family graphs"))
}

fn monte_carlo() -> Check {
    let k4 = zigzag(3).unwrap();
    let reference = zigzag_period(3).unwrap().as_float(1e-13).map_err(|e| e.to_string())?;
    let mut estimates = Vec::new();
    for sampler in [Sampler::Simplex, Sampler::Affine] {
        let cfg = McConfig {
            samples: 1_000_000,
            seed: 0,
            workers: 4,
            sampler,
            ..McConfig::default()
        };
        let est = estimate_period(&k4, &cfg).map_err(|e| e.to_string())?;
        let z = zscore(&est, reference).map_err(|e| e.to_string())?;
        let rel = est.stderr / est.mean;
        ensure(z.abs() <= 3.0, || format!("{sampler}: |z| = {:.2}", z.abs()))?;
        ensure(rel <= 0.02, || format!("{sampler}: stderr/mean = {rel:.4}"))?;
        estimates.push((est.mean, est.stderr, z));
    }
    let (a, b) = (estimates[0], estimates[1]);
    let combined = (a.1 * a.1 + b.1 * b.1).sqrt();
    ensure((a.0 - b.0).abs() <= 3.0 * combined, || format!("samplers differ by {:.4}", (a.0 - b.0).abs()))?;
    Ok(format!(
        "simplex {:.4} (z {:+.2}), affine {:.4} (z {:+.2}), reference {reference:.4}",
        a.0, a.2, b.0, b.2
    ))
}

fn closed_forms() -> Check {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    for (n, c) in [(3, r(6, 1)), (4, r(20, 1)), (5, r(441, 8))] {
        let v = zigzag_period(n).map_err(|e| e.to_string())?;
        ensure(v.coefficient() == &c, || format!("zigzag {n}: {}", v.coefficient()))?;
    }
    let v = family_period(FamilyParams::new(1, 1, 1).unwrap());
    ensure(v.coefficient() == &r(168, 1), || format!("(1, 1, 1): {}", v.coefficient()))?;
    for total in 2..=10 {
        for k in 1..total {
            let p = FamilyParams::new(k, total - k, 1).unwrap();
            ensure(family_period(p) == zigzag_period(2 * total + 2).unwrap(), || format!("{p} differs"))?;
        }
    }
    let mut worst: f64 = 0.0;
    for s in [3u32, 5, 7, 9, 13] {
        let fast = zeta(s, 1e-13).map_err(|e| e.to_string())?;
        let sf = s as f64;
        let m = 100_000u32;
        let head: f64 = (1..=m).rev().map(|k| (k as f64).powf(-sf)).sum();
        let tail = 0.5 * ((m as f64 + 1.0).powf(1.0 - sf) + (m as f64).powf(1.0 - sf)) / (sf - 1.0);
        worst = worst.max(((fast - head - tail) / fast).abs());
    }
    ensure(worst <= 1e-12, || format!("zeta mismatch {worst:e}"))?;
    Ok(format!("zeta max rel {worst:.1e}"))
}

fn forge(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_period-forge"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn determinism() -> Check {
    let gens: [&[&str]; 4] = [
        &["gen", "zigzag", "--n", "7"],
        &["gen", "zigzag-completed", "--n", "7"],
        &["gen", "family", "--k", "2", "--l", "1", "--m", "3"],
        &["gen", "family-dual", "--k", "2", "--l", "1", "--m", "3"],
    ];
    for args in gens {
        ensure(forge(args)? == forge(args)?, || format!("{args:?} output changed"))?;
    }
    let dir = std::env::temp_dir().join(format!("period-forge-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let file = dir.join("k4.json");
    let file = file.to_str().unwrap();
    forge(&["gen", "zigzag", "--n", "3", "--out", file])?;
    for sampler in ["simplex", "affine"] {
        let args = ["period", "mc", "--graph", file, "--samples", "64000", "--seed", "3", "--workers", "4", "--sampler", sampler];
        ensure(forge(&args)? == forge(&args)?, || format!("period mc --sampler {sampler} output changed"))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    let cfg = McConfig { samples: 64_000, seed: 17, workers: 4, ..McConfig::default() };
    let k4 = zigzag(3).unwrap();
    let (a, b) = (estimate_period(&k4, &cfg), estimate_period(&k4, &cfg));
    ensure(matches!((&a, &b), (Ok(x), Ok(y)) if x == y), || "estimates differ".into())?;
    Ok("4 generators, 2 samplers".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 twist chain for all k+l+m <= 6", twist_chains, Duration::from_secs(30)),
        ("2 G(k,l,1) is the zig-zag graph, k+l <= 6", zigzag_terminals, Duration::from_secs(5)),
        ("3 dual polynomial identity", dual_identity, Duration::from_secs(60)),
        ("4 Kirchhoff backends agree", kirchhoff_backends, Duration::from_secs(60)),
        ("5 Monte Carlo on K4 against 6 zeta(3)", monte_carlo, Duration::from_secs(60)),
        ("6 closed-form table", closed_forms, Duration::from_secs(5)),
        ("7 determinism", determinism, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= budget) {
            (Ok(detail), true) => format!("PASS  criterion {name}: {detail}"),
            (Ok(detail), false) => format!("FAIL  criterion {name}: over time budget {budget:?}; {detail}"),
            (Err(why), _) => format!("FAIL  criterion {name}: {why}"),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!("{verdict} [{:.2} s]", elapsed.as_secs_f64());
    }
    println!("{} of 7 criteria passed", 7 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
