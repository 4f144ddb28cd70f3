//! Result envelopes and their CSV / JSON forms.

use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kauffman_tl::Closure;
use crate::sparse::CsrMatrix;
use crate::walk_abelian::VarianceSurface;
use crate::walk_nonabelian::{Distribution, SweepRow};

/// A bracket evaluation as reported to the user.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketReport {
    pub strands: usize,
    pub word: String,
    pub closure: Closure,
    pub level: Option<i64>,
    /// Laurent polynomial in `A`, when computed exactly.
    pub exact: Option<String>,
    /// `[re, im]` at the model's `A`, when computed numerically.
    pub value: Option<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Distribution(Distribution),
    Surface(VarianceSurface),
    Sweep(Vec<SweepRow>),
    Polynomial(BracketReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeMeta {
    pub tool_version: String,
    pub config: serde_json::Value,
    pub engine: Option<String>,
    pub wall_time_s: f64,
}

impl EnvelopeMeta {
    pub fn new(config: serde_json::Value, engine: Option<String>, wall_time_s: f64) -> Self {
        EnvelopeMeta { tool_version: env!("CARGO_PKG_VERSION").to_string(), config, engine, wall_time_s }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope {
    pub payload: Payload,
    pub meta: EnvelopeMeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown output format `{other}`; expected csv or json"))),
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

/// Shortest decimal that parses back to the same `f64`; exponent form
/// for very small or large magnitudes.
fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn to_json(env: &ResultEnvelope) -> Result<String> {
    serde_json::to_string_pretty(env).map_err(io_err)
}

pub fn from_json(s: &str) -> Result<ResultEnvelope> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// The payload as a CSV table with one header row.
pub fn to_csv(payload: &Payload) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match payload {
        Payload::Distribution(d) => {
            let exact = d.exact.as_ref();
            if exact.is_some() {
                w.write_record(["s", "P", "P_exact"]).map_err(io_err)?;
            } else {
                w.write_record(["s", "P"]).map_err(io_err)?;
            }
            for (i, (s, p)) in d.positions.iter().zip(&d.probs).enumerate() {
                let mut row = vec![s.to_string(), num(*p)];
                if let Some(e) = exact {
                    row.push(e[i].to_string());
                }
                w.write_record(&row).map_err(io_err)?;
            }
        }
        Payload::Surface(surface) => {
            w.write_record(["t", "phi", "v_sim", "v_analytic"]).map_err(io_err)?;
            for r in &surface.rows {
                let analytic = r.v_analytic.map(num).unwrap_or_default();
                w.write_record([r.t.to_string(), num(r.phi), num(r.v_sim), analytic]).map_err(io_err)?;
            }
        }
        Payload::Sweep(rows) => {
            w.write_record(["k", "d_q", "d_c"]).map_err(io_err)?;
            for r in rows {
                w.write_record([r.k.to_string(), num(r.d_q), num(r.d_c)]).map_err(io_err)?;
            }
        }
        Payload::Polynomial(b) => {
            w.write_record(["n", "word", "closure", "k", "exact", "re", "im"]).map_err(io_err)?;
            let (re, im) = b.value.map_or((String::new(), String::new()), |[re, im]| (num(re), num(im)));
            w.write_record([
                b.strands.to_string(),
                b.word.clone(),
                b.closure.to_string(),
                b.level.map(|k| k.to_string()).unwrap_or_default(),
                b.exact.clone().unwrap_or_default(),
                re,
                im,
            ])
            .map_err(io_err)?;
        }
    }
    String::from_utf8(w.into_inner().map_err(io_err)?).map_err(io_err)
}

pub fn serialize(env: &ResultEnvelope, format: Format) -> Result<String> {
    match format {
        Format::Csv => to_csv(&env.payload),
        Format::Json => to_json(env),
    }
}

pub fn write_envelope<W: Write>(env: &ResultEnvelope, format: Format, sink: &mut W) -> Result<()> {
    let text = serialize(env, format)?;
    sink.write_all(text.as_bytes()).map_err(io_err)?;
    if format == Format::Json {
        sink.write_all(b"\n").map_err(io_err)?;
    }
    sink.flush().map_err(io_err)
}

/// Nonzero entries as `row,col,re,im`.
pub fn generator_triplets_csv(m: &CsrMatrix<Complex64>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["row", "col", "re", "im"]).map_err(io_err)?;
    for (r, c, z) in m.triplets() {
        w.write_record([r.to_string(), c.to_string(), num(z.re), num(z.im)]).map_err(io_err)?;
    }
    String::from_utf8(w.into_inner().map_err(io_err)?).map_err(io_err)
}
