//! JSON and CSV emission.

use std::io::{self, Write};

use anyhow::Result;
use num::BigInt;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

/// `x` rounded to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn is_rational(s: &str) -> bool {
    match s.split_once('/') {
        Some((n, d)) => n.parse::<BigInt>().is_ok() && d.parse::<BigInt>().is_ok(),
        None => false,
    }
}

fn rational_decimal(s: &str) -> Option<f64> {
    delta3::rational::parse(s).ok().map(|r| round15(delta3::rational::to_f64(&r)))
}

/// Rounds floats and adds a `<key>_decimal` sibling next to every exact
/// rational string (or list of them).
fn decorate(v: &mut Value) {
    match v {
        Value::Object(map) => {
            let mut extra = Map::new();
            for (k, val) in map.iter_mut() {
                decorate(val);
                match val {
                    Value::String(s) if is_rational(s) => {
                        if let Some(d) = rational_decimal(s) {
                            extra.insert(format!("{k}_decimal"), d.into());
                        }
                    }
                    Value::Array(items)
                        if !items.is_empty()
                            && items.iter().all(|i| i.as_str().is_some_and(is_rational)) =>
                    {
                        let ds: Vec<Value> = items
                            .iter()
                            .filter_map(|i| rational_decimal(i.as_str()?))
                            .map(Value::from)
                            .collect();
                        extra.insert(format!("{k}_decimal"), ds.into());
                    }
                    _ => {}
                }
            }
            map.extend(extra);
        }
        Value::Array(items) => items.iter_mut().for_each(decorate),
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = round15(x).into();
            }
        }
        _ => {}
    }
}

/// Prints `body` (an object) with the schema version first.
pub fn emit_json(body: Value) -> Result<()> {
    let mut out = Map::new();
    out.insert("schema".into(), SCHEMA.into());
    match body {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("result".into(), other);
        }
    }
    let mut v = Value::Object(out);
    decorate(&mut v);
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, &v)?;
    writeln!(stdout)?;
    Ok(())
}

pub fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(w)
}

pub fn fmt(x: f64) -> String {
    round15(x).to_string()
}
