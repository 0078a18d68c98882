//! JSON and CSV forms of quasi-polynomials, certificates and degree tables.
//! Every number is an exact `num/den` string.

use std::path::Path;
use std::str::FromStr;

use cable_slopes_core::cabling::{CableParams, ClosedForm, MaxCertificate};
use cable_slopes_core::qpoly::{PeriodicSeq, QuasiPoly};
use cable_slopes_core::Rational;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"period", "a", "b", "d", "valid_from"}`; entry `i` of each list is the
/// coefficient at `n ≡ i (mod period)`. `tail` holds the degrees at colors
/// `1..valid_from` when the file describes a base knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPolyJson {
    pub period: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub d: Vec<String>,
    pub valid_from: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tail: Vec<String>,
}

fn strings(seq: &PeriodicSeq, period: usize) -> Vec<String> {
    seq.expanded(period).iter().map(ToString::to_string).collect()
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim()).map_err(|_| CliError::invalid(format!("not a rational number: {s:?}")))
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl QuasiPolyJson {
    pub fn from_qp(qp: &QuasiPoly) -> Self {
        let period = qp.period();
        QuasiPolyJson {
            period,
            a: strings(qp.a(), period),
            b: strings(qp.b(), period),
            d: strings(qp.d(), period),
            valid_from: qp.valid_from(),
            tail: Vec::new(),
        }
    }

    pub fn from_closed_form(cf: &ClosedForm) -> Self {
        let mut json = Self::from_qp(cf.qp());
        json.tail = cf.tail().iter().map(ToString::to_string).collect();
        json
    }

    pub fn to_qp(&self) -> Result<QuasiPoly, CliError> {
        if [self.a.len(), self.b.len(), self.d.len()].iter().any(|&l| l != self.period) {
            return Err(CliError::invalid(format!("coefficient lists must have length period = {}", self.period)));
        }
        QuasiPoly::from_residues(parse_all(&self.a)?, parse_all(&self.b)?, parse_all(&self.d)?, self.valid_from)
            .map_err(|e| CliError::invalid(e.to_string()))
    }

    /// A missing tail is only accepted when `valid_from = 1`.
    pub fn to_closed_form(&self) -> Result<ClosedForm, CliError> {
        ClosedForm::new(self.to_qp()?, parse_all(&self.tail)?).map_err(|e| CliError::invalid(e.to_string()))
    }
}

pub fn read_closed_form(path: &Path) -> Result<ClosedForm, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let json: QuasiPolyJson =
        serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    json.to_closed_form()
}

/// `{"n", "argmax_k", "max", "gap", "unique", "d_plus"}`. `gap` is null when
/// the sample set has one element; `d_plus` is null unless the maximizer is
/// unique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: u64,
    pub argmax_k: String,
    pub max: String,
    pub gap: Option<String>,
    pub unique: bool,
    pub d_plus: Option<String>,
}

impl CertificateJson {
    pub fn new(cert: &MaxCertificate, params: CableParams) -> Self {
        CertificateJson {
            n: cert.n,
            argmax_k: cert.argmax.to_rational().to_string(),
            max: cert.max_value.to_string(),
            gap: cert.gap.as_ref().map(ToString::to_string),
            unique: cert.unique,
            d_plus: cert.degree(params).map(|d| d.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub n: u64,
    pub d_plus: String,
}

/// Reads `n,d_plus` rows. Rows must be sorted by `n`; gaps are reported by
/// the fitter.
pub fn read_degree_csv(text: &str) -> Result<Vec<(u64, Rational)>, CliError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| CliError::invalid(e.to_string()))?.clone();
    if headers.len() < 2 || &headers[0] != "n" || &headers[1] != "d_plus" {
        return Err(CliError::invalid("expected CSV header n,d_plus"));
    }
    let mut out = Vec::new();
    for row in reader.deserialize::<DegreeRow>() {
        let row = row.map_err(|e| CliError::invalid(e.to_string()))?;
        out.push((row.n, parse_rational(&row.d_plus)?));
    }
    Ok(out)
}

pub fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("serializing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializing to memory");
    s.push('\n');
    s
}
