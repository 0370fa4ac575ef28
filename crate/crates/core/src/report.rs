//! Machine-readable run reports. One JSON schema for all commands:
//! {kappa, nu, theta: "p/q", r, degree, coeffs[], h, c0, c1, meta{...}},
//! with reals rounded to 12 significant digits and rationals printed "p/q";
//! the CSV rendering is a header row plus one row per record.

use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::functional::{AmplifierConfig, BoundResult};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Round to 12 significant digits (the decimal the report prints).
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}")
        .parse()
        .expect("scientific notation round-trip")
}

/// A real as a JSON value carrying exactly the 12-significant-digit decimal.
pub fn real(x: f64) -> Value {
    if x.is_finite() {
        Value::from(round12(x))
    } else {
        Value::Null
    }
}

/// The 12-significant-digit decimal as printed text (CSV cells).
pub fn real_str(x: f64) -> String {
    real(x).to_string()
}

pub fn rational_str(q: &BigRational) -> String {
    if q.denom() == &num_bigint::BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Report trailer: sampling inputs when they apply, wall time, crate version.
#[derive(Clone, Copy, Debug, Default)]
pub struct Meta {
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub runtime_ms: u128,
}

impl Meta {
    pub fn to_json(self) -> Value {
        let mut meta = Map::new();
        if let Some(seed) = self.seed {
            meta.insert("seed".into(), seed.into());
        }
        if let Some(samples) = self.samples {
            meta.insert("samples".into(), samples.into());
        }
        meta.insert("runtime_ms".into(), (self.runtime_ms as u64).into());
        meta.insert("version".into(), VERSION.into());
        Value::Object(meta)
    }
}

/// The shared JSON body for evaluate/optimize/reproduce outcomes.
pub fn bound_json(result: &BoundResult, config: &AmplifierConfig, meta: Meta) -> Value {
    let mut body = json!({
        "kappa": real(result.kappa),
        "nu": real(result.nu),
        "theta": rational_str(&config.theta),
        "r": config.r,
        "degree": config.degree,
        "coeffs": result.coefficients.iter().map(|&c| real(c)).collect::<Vec<_>>(),
        "c0": real(result.c0_value),
        "c1": real(result.c1_value),
        "meta": meta.to_json(),
    });
    let obj = body.as_object_mut().unwrap();
    if let Some(h) = result.h {
        obj.insert("h".into(), real(h));
    }
    if let Some(k) = result.kappa_input {
        obj.insert("kappa_input".into(), real(k));
    }
    body
}

/// CSV rendering of the same record: header plus one row per record.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: Vec<S>) -> Table {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "ragged table row");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory csv");
        for row in &self.rows {
            w.write_record(row).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}

pub fn bound_table(result: &BoundResult, config: &AmplifierConfig, meta: Meta) -> Table {
    let mut table = Table::new(vec![
        "kappa",
        "nu",
        "theta",
        "r",
        "degree",
        "coeffs",
        "h",
        "kappa_input",
        "c0",
        "c1",
        "seed",
        "samples",
        "runtime_ms",
        "version",
    ]);
    let opt_real = |v: Option<f64>| v.map(real_str).unwrap_or_default();
    let opt_int = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    table.push(vec![
        real_str(result.kappa),
        real_str(result.nu),
        rational_str(&config.theta),
        config.r.to_string(),
        config.degree.to_string(),
        result
            .coefficients
            .iter()
            .map(|&c| real_str(c))
            .collect::<Vec<_>>()
            .join(";"),
        opt_real(result.h),
        opt_real(result.kappa_input),
        real_str(result.c0_value),
        real_str(result.c1_value),
        opt_int(meta.seed),
        opt_int(meta.samples),
        meta.runtime_ms.to_string(),
        VERSION.to_string(),
    ]);
    table
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Csv,
}

/// Write the report to the path, or to standard output when none is given.
pub fn emit(json: &Value, table: &Table, format: OutFormat, out_path: Option<&Path>) -> Result<()> {
    let text = match format {
        OutFormat::Json => {
            let body = serde_json::to_string_pretty(json).expect("Value serialization");
            format!("{body}\n")
        }
        OutFormat::Csv => table.to_csv(),
    };
    match out_path {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let stdout = std::io::stdout();
            stdout.lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
