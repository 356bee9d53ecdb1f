//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use delta3::digits::{classify_cardinality, enumerate_representations, parse, ReprCardinality};
use delta3::fractal::{golden_dimension, level_function, levelset_dimension_10, log3_2, quaternary_digits, quaternary_to_delta};
use delta3::measure::{
    cdf, charfn, classify, decompose_cantor_pair, decompose_uniform_plus_cantor, eta_params, phi,
    sample_many, sample_sum_many, uniform_plus_cantor_laws, DigitLaw, ProbVector,
};
use delta3::measure::charfn::rounding_slack;
use delta3::rational::{rat, render, Rat};
use delta3::stats::{chi_square_critical, chi_square_statistic, ks_critical_two_sample, ks_two_sample};
use delta3::Execution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const LIMIT_1: Duration = Duration::from_secs(10);
const LIMIT_2: Duration = Duration::from_secs(1);
const LIMIT_3: Duration = Duration::from_secs(60);
const LIMIT_4: Duration = Duration::from_secs(30);
const LIMIT_5: Duration = Duration::from_secs(1);
const LIMIT_6: Duration = Duration::from_secs(60);
const LIMIT_7: Duration = Duration::from_secs(5);
const LIMIT_8: Duration = Duration::from_secs(5);
const LIMIT_9: Duration = Duration::from_secs(10);

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok { Ok(()) } else { Err(msg()) }
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_delta3"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("delta3 {args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    serde_json::from_str(&cli(args)?).map_err(|e| e.to_string())
}

/// CSV rows (without header) and the JSON summary after the blank line.
fn dimension_output(digits: &str, nmax: usize) -> Result<(Vec<u64>, Value), String> {
    let text = cli(&["dimension", "--digits", digits, "--nmax", &nmax.to_string()])?;
    let (table, summary) = text.split_once("\r\n\n").ok_or("missing JSON summary")?;
    let counts = table
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).and_then(|c| c.parse().ok()).ok_or(format!("bad row {l:?}")))
        .collect::<Result<Vec<u64>, _>>()?;
    Ok((counts, serde_json::from_str(summary).map_err(|e| e.to_string())?))
}

fn weights(d: i64) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c, d - a - b - c]);
            }
        }
    }
    out
}

fn arg(r: &Rat) -> String {
    render(r)
}

/// Absolute-continuity boundary on the full step-1/10 simplex grid (which contains
/// the 66-point slice p₁ = p₂) plus the line p₁ = p₂ = 1/3.
fn criterion_1() -> Check {
    let mut points: Vec<[Rat; 4]> = weights(10)
        .into_iter()
        .filter(|w| !w.contains(&10))
        .map(|w| w.map(|x| rat(x, 10)))
        .collect();
    for j in 0..=10 {
        points.push([rat(j, 30), rat(1, 3), rat(1, 3), rat(10 - j, 30)]);
    }
    let mut on_line = 0;
    for p in &points {
        let args: Vec<String> = p.iter().map(arg).collect();
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let class = cli_json(&[&["classify"], &a[..]].concat())?;
        let lb = cli_json(&[&["lbound"], &a[..], &["--N", "3", "--K", "40"]].concat())?;
        let lb = lb["lower_bound"].as_f64().ok_or("no lower_bound")?;
        let line = p[1] == rat(1, 3) && p[2] == rat(1, 3);
        let ac = class["class"] == "absolutely_continuous";
        ensure(ac == line, || format!("classify {args:?} -> {}", class["class"]))?;
        if line {
            on_line += 1;
            ensure(lb == 0.0, || format!("lbound {args:?} = {lb} on the line"))?;
        } else if p.iter().all(|x| *x != rat(0, 1)) {
            ensure(lb > 1e-6, || format!("lbound {args:?} = {lb}"))?;
        }
    }
    ensure(on_line == 11, || format!("{on_line} line points"))
}

fn criterion_2() -> Check {
    let (counts, summary) = dimension_output("12", 12)?;
    ensure(counts.len() == 12, || format!("{} levels", counts.len()))?;
    for (i, &c) in counts.iter().enumerate() {
        ensure(c == 1 << (i + 1), || format!("N({}) = {c}", i + 1))?;
    }
    let slope = summary["slope"].as_f64().ok_or("no slope")?;
    ensure((slope - log3_2()).abs() < 1e-9, || format!("slope {slope}"))
}

fn criterion_3() -> Check {
    let (counts, summary) = dimension_output("013", 13)?;
    ensure(counts[..3] == [3, 8, 21], || format!("counts begin {:?}", &counts[..3]))?;
    let ratio = counts[12] as f64 / counts[11] as f64;
    ensure(ratio > 2.60 && ratio < 2.64, || format!("N(13)/N(12) = {ratio}"))?;
    let slope = summary["slope"].as_f64().ok_or("no slope")?;
    ensure((slope - golden_dimension()).abs() < 0.02, || format!("slope {slope}"))?;
    let (mirror, _) = dimension_output("023", 13)?;
    ensure(mirror == counts, || "digits 023 give different counts".into())
}

fn criterion_4() -> Check {
    let tol = 1e-4;
    let p = ProbVector::rational((1, 3), (1, 3), (1, 3), (0, 1)).map_err(|e| e.to_string())?;
    for j in 0..50 {
        let x = rat(j, 49);
        let b = cdf(&p, &x, tol).map_err(|e| e.to_string())?;
        let v = j as f64 / 49.0;
        ensure(b.lo <= v && v <= b.hi && b.width() <= tol, || format!("F({x}) ∈ [{}, {}]", b.lo, b.hi))?;
    }
    let p = ProbVector::rational((0, 1), (1, 3), (1, 3), (1, 3)).map_err(|e| e.to_string())?;
    for j in 0..50 {
        let x = rat(1, 2) + rat(j, 49);
        let b = cdf(&p, &x, tol).map_err(|e| e.to_string())?;
        let v = j as f64 / 49.0;
        ensure(b.lo <= v && v <= b.hi && b.width() <= tol, || format!("F({x}) ∈ [{}, {}]", b.lo, b.hi))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let card = |s: &str| classify_cardinality(&parse(s).unwrap()).map_err(|e| e.to_string());
    for s in ["(12)", "3333(12)", "(3)", "(0)"] {
        ensure(card(s)? == ReprCardinality::Unique, || format!("{s} not unique"))?;
    }
    for s in ["(2)", "(1)", "0(3)", "2(3)", "1(0)"] {
        ensure(card(s)? == ReprCardinality::Countable, || format!("{s} not countable"))?;
    }
    for s in ["(10)", "(30)"] {
        ensure(card(s)? == ReprCardinality::Continuum, || format!("{s} not continuum"))?;
    }
    let d = parse("1010(12)").unwrap();
    let reps: Vec<String> = enumerate_representations(&d, 4)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| r.to_string())
        .collect();
    let listed = ["0303(12)", "0310(12)", "1003(12)", "1010(12)"];
    ensure(card("1010(12)")? == ReprCardinality::Finite(4) && reps == listed, || {
        format!("1010(12) is {:?} with members {reps:?}", card("1010(12)").unwrap())
    })
}

fn criterion_6() -> Check {
    const N: usize = 100_000;
    let crit = ks_critical_two_sample(0.01, N, N);
    let p = ProbVector::rational((1, 4), (1, 4), (1, 4), (1, 4)).map_err(|e| e.to_string())?;
    let pair = decompose_cantor_pair(&p).map_err(|e| e.to_string())?;
    ensure(pair.u.exact == Some(rat(1, 2)) && pair.v.exact == Some(rat(1, 2)), || format!("{pair:?}"))?;
    let (theta, eps) = pair.laws().map_err(|e| e.to_string())?;
    let sum = sample_sum_many(&[theta, eps], 30, N, 1, Execution::default());
    let direct = sample_many(&p, 30, N, 2, Execution::default());
    let d = ks_two_sample(&sum, &direct);
    ensure(d < crit, || format!("θ+ε: D = {d} ≥ {crit}"))?;

    let p = ProbVector::rational((1, 6), (1, 3), (1, 3), (1, 6)).map_err(|e| e.to_string())?;
    let x = decompose_uniform_plus_cantor(&p).map_err(|e| e.to_string())?;
    ensure(x.exact == Some(rat(1, 2)), || format!("x = {x:?}"))?;
    let (tau, zeta) = uniform_plus_cantor_laws(x.value).map_err(|e| e.to_string())?;
    let sum = sample_sum_many(&[tau, zeta], 30, N, 3, Execution::default());
    let direct = sample_many(&p, 30, N, 4, Execution::default());
    let d = ks_two_sample(&sum, &direct);
    ensure(d < crit, || format!("τ+ζ: D = {d} ≥ {crit}"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let k = 40;
    for _ in 0..5 {
        let w: [f64; 4] = std::array::from_fn(|_| rng.random_range(0.01..1.0));
        let s: f64 = w.iter().sum();
        let p = ProbVector::from_floats(w.map(|x| x / s)).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let t = rng.random_range(0.0..100.0);
            let whole = charfn(&p, t, k);
            let inner = charfn(&p, t / 3.0, k);
            let gap = (whole.value - phi(&p, 1, t) * inner.value).norm();
            let bound = whole.tail_bound + inner.tail_bound + 2.0 * rounding_slack(k);
            ensure(gap <= bound, || format!("t = {t}: {gap} > {bound}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let est = levelset_dimension_10(10).map_err(|e| e.to_string())?;
    for &(n, c) in &est.counts {
        ensure(c == 1 << n, || format!("N({n}) = {c}"))?;
    }
    ensure(est.base == 16 && (est.slope - 0.25).abs() < 1e-9, || format!("slope {}", est.slope))?;
    for (x, y) in [(rat(0, 1), rat(0, 1)), (rat(1, 1), rat(3, 2)), (rat(2, 5), rat(5, 8))] {
        let q = quaternary_digits(&x).map_err(|e| e.to_string())?;
        let d = quaternary_to_delta(&q).map_err(|e| e.to_string())?;
        ensure(d.expand(24) == q.expand(24), || format!("{q} rewritten to {d}"))?;
        ensure(q.evaluate(4).map_err(|e| e.to_string())? == x, || format!("{q} ≠ {x}"))?;
        let f = level_function(&x).map_err(|e| e.to_string())?;
        ensure(f == y, || format!("f({x}) = {f}, expected {y}"))?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    const N: usize = 100_000;
    let p = eta_params(&rat(1, 2)).map_err(|e| e.to_string())?;
    let expected = [rat(1, 8), rat(3, 8), rat(3, 8), rat(1, 8)];
    ensure(p.exact() == Some(&expected), || format!("{p:?}"))?;
    let class = classify(&p).map_err(|e| e.to_string())?;
    ensure(!class.is_absolutely_continuous(), || format!("{class:?}"))?;
    // push-forward of three fair bits
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut observed = [0u64; 4];
    for _ in 0..N {
        observed[(0..3).filter(|_| rng.random_bool(0.5)).count()] += 1;
    }
    let (stat, df) = chi_square_statistic(&observed, &p.floats());
    let crit = chi_square_critical(0.01, df);
    ensure(stat < crit, || format!("bits: χ² = {stat} ≥ {crit}"))?;
    let law = DigitLaw::of(&p);
    let mut observed = [0u64; 4];
    for _ in 0..N {
        observed[law.draw(&mut rng) as usize] += 1;
    }
    let (stat, df) = chi_square_statistic(&observed, &p.floats());
    ensure(stat < crit, || format!("sampler: χ² = {stat} ≥ {crit} (df {df})"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 absolute continuity boundary", criterion_1, LIMIT_1),
        ("2 dimension log3(2)", criterion_2, LIMIT_2),
        ("3 golden dimension", criterion_3, LIMIT_3),
        ("4 uniform cases", criterion_4, LIMIT_4),
        ("5 representation census", criterion_5, LIMIT_5),
        ("6 convolution identities", criterion_6, LIMIT_6),
        ("7 charfn functional equation", criterion_7, LIMIT_7),
        ("8 level-set dimension 1/4", criterion_8, LIMIT_8),
        ("9 eta bridge", criterion_9, LIMIT_9),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (took {took:.2?}, limit {limit:?})"),
            Err(msg) => format!("FAIL ({msg})"),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("{verdict} criterion {name} [{took:.2?}]");
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
