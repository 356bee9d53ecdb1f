use std::io;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use delta3::digits::{classify_cardinality, enumerate_representations, DigitString, ReprCardinality};
use delta3::fractal::{box_dimension, level_set, target_dimension, DigitSet};
use delta3::measure::{
    cdf_many, charfn, classify, decompose_cantor_pair, decompose_uniform_plus_cantor, l_lower_bound,
    ProbVector,
};
use delta3::rational::{self, rat, render, three_halves, Rat};
use delta3::series::{
    eta_subsum_digits, greedy_approximate, kakeya_check, series_remainder, series_term, subsum,
    SubsumSelector,
};
use delta3::Execution;

mod output;

use output::{csv_writer, emit_json, fmt};

/// Distributions of random variables with independent redundant base-3 digits.
#[derive(Parser)]
#[command(name = "delta3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Probs {
    /// p0 p1 p2 p3, as `a/b` or decimals summing to 1
    #[arg(num_args = 4, required = true, value_names = ["P0", "P1", "P2", "P3"])]
    p: Vec<String>,
}

impl Probs {
    fn vector(&self) -> Result<ProbVector> {
        Ok(ProbVector::parse(&self.p)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Value and representations of a digit string such as `1010(12)`
    Repr {
        digits: String,
        /// longest preperiod to enumerate (default: max(preperiod, 3))
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Type of the distribution
    Classify(Probs),
    /// Enclosures of the distribution function on a uniform grid of [0, 3/2]
    Cdf {
        #[command(flatten)]
        probs: Probs,
        #[arg(long, default_value_t = 31)]
        grid: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Characteristic function on [0, T]
    Charfn {
        #[command(flatten)]
        probs: Probs,
        #[arg(long, default_value_t = 50.0)]
        tmax: f64,
        #[arg(long, default_value_t = 0.5)]
        step: f64,
        #[arg(long = "K", default_value_t = 40)]
        k: usize,
    },
    /// Certified lower bound for limsup |f(t)|
    Lbound {
        #[command(flatten)]
        probs: Probs,
        #[arg(long = "N", default_value_t = 3)]
        n: usize,
        #[arg(long = "K", default_value_t = 40)]
        k: usize,
    },
    /// Box counting for numbers with digits restricted to a set
    Dimension {
        #[arg(long)]
        digits: String,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// Level set of the base-4 to redundant base-3 map
    Levelset {
        digits: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Convolution decompositions
    Decompose(Probs),
    /// The series with terms 3^-ceil(n/3)
    Series {
        /// check u_n <= r_n for n up to this index
        #[arg(long, conflicts_with = "greedy")]
        check: Option<usize>,
        /// approximate this number greedily by a subsum
        #[arg(long, requires = "nmax")]
        greedy: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
    },
}

fn cardinality_json(c: ReprCardinality) -> Value {
    match c {
        ReprCardinality::Finite(n) => json!({"cardinality": c.name(), "count": n}),
        _ => json!({"cardinality": c.name()}),
    }
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

fn repr(text: &str, depth: Option<usize>) -> Result<()> {
    let d: DigitString = text.parse()?;
    let card = classify_cardinality(&d)?;
    let depth = depth.unwrap_or(d.preperiod().len().max(3));
    let reps: Option<Vec<String>> = match card {
        ReprCardinality::Continuum => None,
        _ => Some(enumerate_representations(&d, depth)?.iter().map(|r| r.to_string()).collect()),
    };
    let body = json!({
        "input": text,
        "canonical": d.to_string(),
        "value": render(&d.value()?),
        "depth": depth,
        "representations": reps,
    });
    emit_json(merge(body, cardinality_json(card)))
}

fn cdf(p: &ProbVector, grid: usize, tol: f64) -> Result<()> {
    if grid == 0 {
        bail!("--grid must be at least 1");
    }
    let xs: Vec<Rat> = (0..grid)
        .map(|j| match grid {
            1 => rat(0, 1),
            _ => three_halves() * rat(j as i64, grid as i64 - 1),
        })
        .collect();
    let bounds = cdf_many(p, &xs, tol, Execution::default())?;
    let mut w = csv_writer(io::stdout().lock());
    w.write_record(["x", "lo", "hi"])?;
    for (x, b) in xs.iter().zip(bounds) {
        w.write_record([fmt(rational::to_f64(x)), fmt(b.lo), fmt(b.hi)])?;
    }
    w.flush()?;
    Ok(())
}

fn charfn_table(p: &ProbVector, tmax: f64, step: f64, k: usize) -> Result<()> {
    if step.is_nan() || step <= 0.0 || !tmax.is_finite() || tmax < 0.0 {
        bail!("need --step > 0 and a finite --tmax >= 0");
    }
    let mut w = csv_writer(io::stdout().lock());
    w.write_record(["t", "re", "im", "abs", "tail_bound"])?;
    let steps = (tmax / step + 1e-9).floor() as usize;
    for i in 0..=steps {
        let t = i as f64 * step;
        let r = charfn(p, t, k);
        w.write_record([fmt(t), fmt(r.value.re), fmt(r.value.im), fmt(r.value.norm()), fmt(r.tail_bound)])?;
    }
    w.flush()?;
    Ok(())
}

fn dimension(digits: &str, nmax: usize) -> Result<()> {
    let v: DigitSet = digits.parse()?;
    let est = box_dimension(&v, nmax)?;
    {
        let mut w = csv_writer(io::stdout().lock());
        w.write_record(["n", "count", "log3_count"])?;
        for &(n, c) in &est.counts {
            w.write_record([n.to_string(), c.to_string(), fmt((c as f64).ln() / 3f64.ln())])?;
        }
        w.flush()?;
    }
    println!();
    let target = target_dimension(&v);
    emit_json(json!({
        "digit_set": v,
        "nmax": nmax,
        "slope": est.slope,
        "r2": est.r2,
        "target": target,
        "abs_error": (est.slope - target).abs(),
    }))
}

fn levelset(text: &str, depth: Option<usize>) -> Result<()> {
    let y: DigitString = text.parse()?;
    let depth = depth.unwrap_or(y.preperiod().len().max(3));
    let set = level_set(&y, depth)?;
    let mut body = serde_json::to_value(&set)?;
    if let Value::Object(m) = &mut body {
        m.remove("cardinality");
        m.insert("depth".into(), depth.into());
    }
    emit_json(merge(body, cardinality_json(set.cardinality)))
}

fn decompose(p: &ProbVector) -> Result<()> {
    let upc = decompose_uniform_plus_cantor(p).ok().map(|x| json!({"x": x}));
    let pair = decompose_cantor_pair(p).ok();
    emit_json(json!({"uniform_plus_cantor": upc, "cantor_pair": pair}))
}

fn series(check: Option<usize>, greedy: Option<String>, nmax: Option<usize>) -> Result<()> {
    if let Some(n) = check {
        if n == 0 {
            bail!("--check needs n >= 1");
        }
        return emit_json(json!({
            "n": n,
            "holds": kakeya_check(n),
            "term": render(&series_term(n)?),
            "remainder": render(&series_remainder(n)),
        }));
    }
    let (Some(x), Some(nmax)) = (greedy, nmax) else {
        bail!("give either --check n or --greedy x --nmax n");
    };
    let x = rational::parse(&x).with_context(|| format!("cannot read {x:?} as a number"))?;
    let sel = greedy_approximate(&x, nmax)?;
    let mut w = csv_writer(io::stdout().lock());
    w.write_record(["bits", "digits", "value"])?;
    for len in (3..=nmax).step_by(3) {
        let prefix = SubsumSelector::new(sel.bits()[..len].to_vec());
        let digits: String = eta_subsum_digits(&prefix)?.iter().map(|d| char::from(b'0' + d)).collect();
        w.write_record([prefix.render(), digits, render(&subsum(&prefix))])?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Repr { digits, depth } => repr(&digits, depth),
        Command::Classify(p) => {
            let p = p.vector()?;
            let class = serde_json::to_value(classify(&p)?)?;
            emit_json(merge(json!({"p": p}), class))
        }
        Command::Cdf { probs, grid, tol } => cdf(&probs.vector()?, grid, tol),
        Command::Charfn { probs, tmax, step, k } => charfn_table(&probs.vector()?, tmax, step, k),
        Command::Lbound { probs, n, k } => {
            let p = probs.vector()?;
            emit_json(json!({"p": p, "N": n, "K": k, "lower_bound": l_lower_bound(&p, n, k)}))
        }
        Command::Dimension { digits, nmax } => dimension(&digits, nmax),
        Command::Levelset { digits, depth } => levelset(&digits, depth),
        Command::Decompose(p) => decompose(&p.vector()?),
        Command::Series { check, greedy, nmax } => series(check, greedy, nmax),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
