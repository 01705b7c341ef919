//! Plain-text data products: CSV tables, JSON documents and scatter listings.
//!
//! All writers emit UTF-8 with `\n` record terminators and sorted rows, so
//! the same inputs always give the same bytes.

use serde_json::{json, Value};

use crate::disk::DiskSymbol;
use crate::enumeration::{numerators, HalfPlaneItem};
use crate::error::{Error, Result};
use crate::modular::DedekindSymbol;
use crate::patterns::Fraction;

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn table<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = writer();
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    finish(w)
}

/// `n,k` rows sorted by `(n, k)`; lines are the rows with `n = 0`.
pub fn enumeration_csv(items: &[HalfPlaneItem]) -> Result<String> {
    let mut keys: Vec<(i64, i64)> = items.iter().map(HalfPlaneItem::key).collect();
    keys.sort_unstable();
    table(&["n", "k"], keys.into_iter().map(|(n, k)| [n.to_string(), k.to_string()]))
}

pub fn parse_enumeration_csv(text: &str) -> Result<Vec<HalfPlaneItem>> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = r.headers().map_err(csv_err)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["n", "k"] {
        return Err(Error::Parse(format!("expected header n,k, found {}", headers.iter().collect::<Vec<_>>().join(","))));
    }
    let mut out = Vec::new();
    for record in r.records() {
        let record = record.map_err(csv_err)?;
        let field = |i: usize| -> Result<i64> {
            record[i].parse().map_err(|_| Error::Parse(format!("not an integer: {:?}", &record[i])))
        };
        out.push(HalfPlaneItem::from_key(field(0)?, field(1)?)?);
    }
    Ok(out)
}

/// `[{"kind": "circle", "n": 3, "k": 1, "m": 0}, {"kind": "line", "k": 1}, ...]`
pub fn enumeration_json(items: &[HalfPlaneItem]) -> Value {
    let mut sorted = items.to_vec();
    sorted.sort();
    serde_json::to_value(sorted).expect("plain integer records serialize")
}

/// Points `(n, k)` with `k ∈ K(n)`, `0 ≤ k < n ≤ n_max`.
pub fn scatter_points(n_max: i64) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(numerators(n)?.ks.into_iter().map(|k| (n, k)));
    }
    Ok(out)
}

/// One `n k` pair per line.
pub fn scatter_text(points: &[(i64, i64)]) -> String {
    points.iter().map(|(n, k)| format!("{n} {k}\n")).collect()
}

pub fn disk_csv(symbols: &[DiskSymbol]) -> Result<String> {
    let mut sorted = symbols.to_vec();
    sorted.sort_by_key(|d| (d.n, d.p, d.q));
    table(&["n", "p", "q"], sorted.into_iter().map(|d| [d.n.to_string(), d.p.to_string(), d.q.to_string()]))
}

/// `[{"p": 2, "q": 1, "n": 1}, ...]` in `(n, p, q)` order.
pub fn disk_json(symbols: &[DiskSymbol]) -> Value {
    let mut sorted = symbols.to_vec();
    sorted.sort_by_key(|d| (d.n, d.p, d.q));
    Value::Array(sorted.into_iter().map(|d| json!({"p": d.p, "q": d.q, "n": d.n})).collect())
}

pub fn symbols_csv<'a>(symbols: impl IntoIterator<Item = &'a DedekindSymbol>) -> Result<String> {
    table(
        &["xdot", "beta", "gamma"],
        symbols.into_iter().map(|s| [s.xdot.to_string(), s.beta.to_string(), s.gamma.to_string()]),
    )
}

pub fn series_csv(terms: &[(i64, Fraction)]) -> Result<String> {
    table(&["ell", "k", "n"], terms.iter().map(|(ell, f)| [ell.to_string(), f.k.to_string(), f.n.to_string()]))
}

pub fn indexed_symbols_csv(terms: &[(i64, DedekindSymbol)]) -> Result<String> {
    table(
        &["index", "xdot", "beta", "gamma"],
        terms.iter().map(|(i, s)| [i.to_string(), s.xdot.to_string(), s.beta.to_string(), s.gamma.to_string()]),
    )
}
