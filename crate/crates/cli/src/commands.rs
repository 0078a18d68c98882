//! Subcommands. Each returns its complete output; the binary only writes it.

use std::fmt::Write as _;
use std::path::PathBuf;

use cable_slopes_core::cabling::{
    admissible, cable_exact, cable_quasipoly, cable_quasipoly_unchecked, AdmissibleBranch, CableParams, CableQuasiPoly,
    CertificateScanner, DegreeProvider, ExactKnot, JonesTable, MaxCertificate, Regime,
};
use cable_slopes_core::conjectures::GridSpec;
use cable_slopes_core::fusion::{
    delta_bruteforce, delta_closed, fusion_degree, special_forms, FusionError, FusionParams,
};
use cable_slopes_core::qpoly::{fit_quasipoly, m_constants, QpolyError, QuasiPoly};
use cable_slopes_core::Rational;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::base::{identification, max_color, Base, BaseSpec};
use crate::formats::{read_degree_csv, to_json, write_csv, CertificateJson, DegreeRow, QuasiPolyJson};
use crate::sweep::{self, ReportJson, ReportRow};
use crate::{CliError, Format, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "cable-slopes",
    version,
    about = "Degree quasi-polynomials of colored Jones polynomials of 2-fusion knots and their cables"
)]
pub struct Cli {
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridPreset {
    Standard,
    Empty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degrees d+[J_K(n)] of the 2-fusion knot K(m1,m2).
    Fusion {
        #[arg(long, allow_hyphen_values = true)]
        m1: i64,
        #[arg(long, allow_hyphen_values = true)]
        m2: i64,
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
    },
    /// Per-n maximizer certificates and the degree quasi-polynomial of a cable.
    Cable {
        /// unknot, torus:p,q, fusion:m1,m2 or qp:<file>
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(long, default_value_t = 60)]
        n_max: u64,
        /// Also expand the cabling sum and compare its top degree.
        #[arg(long)]
        exact: bool,
        /// Largest period tried when fitting the certified degrees.
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Fit a quasi-polynomial to an `n,d_plus` CSV file (`-` for stdin).
    Fit {
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_period: usize,
    },
    /// Check both conjectures over a grid of 2-fusion knots and their cables.
    Verify {
        #[arg(long, value_enum, default_value_t = GridPreset::Standard)]
        grid: GridPreset,
        /// Inclusive m1 range `lo,hi`, overriding the preset.
        #[arg(long, allow_hyphen_values = true)]
        m1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m2: Option<String>,
        /// Cable q values, comma separated.
        #[arg(long)]
        qs: Option<String>,
        /// Distance of p from each admissibility threshold.
        #[arg(long)]
        margin: Option<i64>,
        /// Extra base knots given as quasi-polynomial files.
        #[arg(long)]
        golden: Vec<PathBuf>,
    },
    /// Colored Jones polynomials of the torus knot T(p,q) by exact cabling.
    TorusExact {
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
    },
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Fusion { m1, m2, n_max, mode } => fusion(FusionParams::new(*m1, *m2), *n_max, *mode, format),
        Command::Cable { base, p, q, n_max, exact, max_period } => {
            let spec: BaseSpec = base.parse()?;
            let params = CableParams::new(*p, *q).map_err(|e| CliError::invalid(e.to_string()))?;
            cable(&spec, params, *n_max, *exact, *max_period, format)
        }
        Command::Fit { input, max_period } => {
            let text = if input.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(input)
            }
            .map_err(|source| CliError::Io { path: input.display().to_string(), source })?;
            fit(&text, *max_period, format)
        }
        Command::Verify { grid, m1, m2, qs, margin, golden } => {
            let mut spec = match grid {
                GridPreset::Standard => GridSpec::standard(),
                GridPreset::Empty => GridSpec::empty(),
            };
            if let Some(r) = m1 {
                spec.m1 = range(r)?;
            }
            if let Some(r) = m2 {
                spec.m2 = range(r)?;
            }
            if let Some(qs) = qs {
                spec.qs = list(qs)?;
            }
            if let Some(m) = margin {
                spec.margin = *m;
            }
            if spec.qs.iter().any(|&q| q < 2) || spec.margin < 0 {
                return Err(CliError::invalid("cable q values must be at least 2 and the margin non-negative"));
            }
            let mut bases = Vec::new();
            for path in golden {
                let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                bases.push((label, crate::formats::read_closed_form(path)?));
            }
            verify(&spec, &bases, format)
        }
        Command::TorusExact { p, q, n_max } => {
            let params = CableParams::new(*p, *q).map_err(|e| CliError::invalid(e.to_string()))?;
            Ok(torus_exact(params, *n_max, format))
        }
    }
}

fn range(s: &str) -> Result<(i64, i64), CliError> {
    match list(s)?.as_slice() {
        [lo, hi] => Ok((*lo, *hi)),
        _ => Err(CliError::invalid(format!("expected a range `lo,hi`, got {s:?}"))),
    }
}

fn list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::invalid(format!("not an integer list: {s:?}"))))
        .collect()
}

fn compact(json: &QuasiPolyJson) -> String {
    serde_json::to_string(json).expect("serializing to memory")
}

fn degree_rows(degrees: &[Rational]) -> Vec<DegreeRow> {
    degrees.iter().enumerate().map(|(i, d)| DegreeRow { n: i as u64 + 1, d_plus: d.to_string() }).collect()
}

#[derive(Debug, Serialize)]
struct Discrepancy {
    n: u64,
    expected: String,
    found: String,
    source: &'static str,
}

#[derive(Debug, Serialize)]
struct FusionJson {
    knot: String,
    identification: Option<String>,
    rerouted: bool,
    trivial: bool,
    mode: String,
    degrees: Vec<DegreeRow>,
    discrepancy: Option<Discrepancy>,
    quasipoly: Option<QuasiPolyJson>,
}

fn fusion_err(e: FusionError) -> CliError {
    CliError::invalid(e.to_string())
}

/// `d+[J_K(n)]` for `n <= n_max`. Degenerate knots are rerouted to the exact
/// engine through their torus identification.
pub fn fusion(params: FusionParams, n_max: u64, mode: Mode, format: Format) -> Result<Outcome, CliError> {
    if n_max == 0 {
        return Err(CliError::invalid("n-max must be at least 1"));
    }
    let special = special_forms(params);
    let note = special.map(|s| identification(params, s));
    let exact = special.and_then(|s| s.exact_knot());
    let rerouted = params.is_degenerate();
    let mut discrepancy = None;

    let (degrees, qp) = if rerouted {
        let knot = exact.clone().ok_or_else(|| CliError::invalid(format!("{params} is degenerate")))?;
        let base = Base::exact(params.to_string(), note.clone(), knot.clone())?;
        let provider = DegreeProvider::exact(knot, n_max);
        let degrees: Vec<Rational> = (1..=n_max).map(|n| provider.degree(n)).collect();
        (degrees, Some(base.closed.qp().clone()))
    } else {
        let d_plus = |delta: Rational, n: u64| delta + Rational::new(n as i64 - 1, 2);
        let mut degrees = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            let closed = d_plus(delta_closed(params, n - 1).map_err(fusion_err)?, n);
            if mode != Mode::Closed {
                let brute = d_plus(delta_bruteforce(params, n - 1).map_err(fusion_err)?, n);
                if mode == Mode::Both && brute != closed && discrepancy.is_none() {
                    discrepancy = Some(Discrepancy {
                        n,
                        expected: brute.to_string(),
                        found: closed.to_string(),
                        source: "lattice",
                    });
                }
                if mode == Mode::Brute {
                    degrees.push(brute);
                    continue;
                }
            }
            degrees.push(closed);
        }
        if let (Mode::Both, Some(knot), None) = (mode, &exact, &discrepancy) {
            let provider = DegreeProvider::exact(knot.clone(), n_max);
            discrepancy = (1..=n_max).zip(&degrees).find(|(n, d)| &provider.degree(*n) != *d).map(|(n, d)| {
                Discrepancy { n, expected: provider.degree(n).to_string(), found: d.to_string(), source: "exact" }
            });
        }
        let qp = match fusion_degree(params) {
            Ok(cf) => Some(cf.qp().clone()),
            Err(FusionError::DisplayMismatch { n }) => {
                discrepancy.get_or_insert(Discrepancy {
                    n,
                    expected: "displayed closed form".into(),
                    found: "lattice maximum".into(),
                    source: "display",
                });
                None
            }
            Err(e) => return Err(fusion_err(e)),
        };
        (degrees, qp)
    };

    let failure = discrepancy.as_ref().map(|d| {
        format!("first discrepancy at n = {} ({}): expected {}, found {}", d.n, d.source, d.expected, d.found)
    });
    let json = FusionJson {
        knot: params.to_string(),
        identification: note,
        rerouted,
        trivial: special.is_some_and(|s| s.is_trivial()),
        mode: format!("{mode:?}").to_lowercase(),
        degrees: degree_rows(&degrees),
        discrepancy,
        quasipoly: qp.as_ref().map(QuasiPolyJson::from_qp),
    };
    let output = match format {
        Format::Json => to_json(&json),
        Format::Csv => write_csv(&json.degrees),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "knot: {}", json.knot).unwrap();
            if let Some(id) = &json.identification {
                let how = if rerouted { "rerouted to the exact engine" } else { "computed as a 2-fusion knot" };
                writeln!(s, "identification: {id}, {how}").unwrap();
            }
            writeln!(s, "mode: {}", json.mode).unwrap();
            s.push_str(&write_csv(&json.degrees));
            writeln!(s, "discrepancies: {}", usize::from(json.discrepancy.is_some())).unwrap();
            if let Some(qp) = &json.quasipoly {
                writeln!(s, "quasipoly: {}", compact(qp)).unwrap();
            }
            s
        }
    };
    Ok(Outcome { output, failure })
}

#[derive(Debug, Serialize)]
struct CableJson {
    base: String,
    identification: Option<String>,
    cable: String,
    admissible: Option<String>,
    certificates: Vec<CertificateJson>,
    exact_degrees: Option<Vec<DegreeRow>>,
    regime: Option<String>,
    closed_form: Option<QuasiPolyJson>,
    fitted: Option<QuasiPolyJson>,
    agreement: bool,
    error: Option<String>,
}

fn branch_name(b: AdmissibleBranch) -> String {
    match b {
        AdmissibleBranch::Left => "left".into(),
        AdmissibleBranch::Right => "right".into(),
    }
}

fn same_formula(a: &QuasiPoly, b: &QuasiPoly) -> bool {
    a.a() == b.a() && a.b() == b.b() && a.d() == b.d()
}

/// Certified degrees on the longest run of unique maximizers ending at the
/// last color.
fn certified_suffix(certs: &[MaxCertificate], params: CableParams) -> Vec<(u64, Rational)> {
    let mut out: Vec<(u64, Rational)> = certs.iter().rev().map_while(|c| c.degree(params).map(|d| (c.n, d))).collect();
    out.reverse();
    out
}

pub fn cable(
    spec: &BaseSpec,
    params: CableParams,
    n_max: u64,
    exact: bool,
    max_period: Option<usize>,
    format: Format,
) -> Result<Outcome, CliError> {
    if n_max == 0 {
        return Err(CliError::invalid("n-max must be at least 1"));
    }
    let base = Base::resolve(spec)?;
    if exact && base.exact.is_none() {
        return Err(CliError::invalid(format!("--exact needs an exactly computable base, not {spec}")));
    }
    let provider = base.provider(params, n_max);
    let scanner = CertificateScanner::new(&provider, params, n_max).map_err(|e| CliError::invalid(e.to_string()))?;
    let certs: Vec<MaxCertificate> = (1..=n_max).map(|n| scanner.scan(n)).collect();
    let mut problems = Vec::new();

    let exact_degrees = if exact {
        let table = JonesTable::new(base.exact.clone().expect("checked above"), max_color(params, n_max));
        let mut rows = Vec::new();
        for cert in &certs {
            let top = cable_exact(&table, params, cert.n)
                .degree_hi()
                .map_err(|_| CliError::invalid(format!("the cabling sum vanishes at n = {}", cert.n)))?;
            let ok = match cert.degree(params) {
                Some(d) => d == top,
                None => top <= cert.degree_bound(params),
            };
            if !ok {
                problems.push(format!("exact degree {top} at n = {} disagrees with the certificate", cert.n));
            }
            rows.push(DegreeRow { n: cert.n, d_plus: top.to_string() });
        }
        Some(rows)
    } else {
        None
    };

    // The closed form needs a constant quadratic and a non-positive linear
    // coefficient; without them only the certificates are reported.
    let (branch, closed, error) = match m_constants(base.closed.qp()) {
        Err(e) => (None, None, Some(format!("closed form not applicable: {e}"))),
        Ok(sc) => {
            let branch = admissible(&sc, params);
            let closed: Result<CableQuasiPoly, _> = match branch {
                Some(_) => cable_quasipoly(&base.closed, params),
                None => cable_quasipoly_unchecked(&base.closed, params),
            };
            match closed {
                Ok(c) => (branch, Some(c), None),
                Err(e) => {
                    problems.push(e.to_string());
                    (branch, None, Some(e.to_string()))
                }
            }
        }
    };

    let samples = certified_suffix(&certs, params);
    let period =
        max_period.unwrap_or_else(|| closed.as_ref().map_or((samples.len() / 4).clamp(1, 8), |c| c.qp.period()));
    let fitted = match fit_quasipoly(&samples, period) {
        Ok(qp) => Some(qp),
        Err(e) => {
            problems.push(format!("fitting the certified degrees: {e}"));
            None
        }
    };

    if let (Some(c), Some(f)) = (&closed, &fitted) {
        if !same_formula(&c.qp, f) {
            problems.push("fitted and closed-form quasi-polynomials differ".into());
        }
        if let Some(cert) = certs
            .iter()
            .find(|cert| cert.n >= c.qp.valid_from() && cert.degree(params) != Some(c.qp.formula_at(cert.n)))
        {
            problems.push(format!("closed form disagrees with the certificate at n = {}", cert.n));
        }
    }
    let agreement = problems.is_empty();

    let json = CableJson {
        base: base.label.clone(),
        identification: base.note.clone(),
        cable: params.to_string(),
        admissible: branch.map(branch_name),
        certificates: certs.iter().map(|c| CertificateJson::new(c, params)).collect(),
        exact_degrees,
        regime: closed.as_ref().map(|c| match c.regime {
            Regime::Left => "left".into(),
            Regime::Right => "right".into(),
        }),
        closed_form: closed.as_ref().map(|c| QuasiPolyJson::from_qp(&c.qp)),
        fitted: fitted.as_ref().map(QuasiPolyJson::from_qp),
        agreement,
        error,
    };
    let output = match format {
        Format::Json => to_json(&json),
        Format::Csv => write_csv(&json.certificates),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "base: {}", json.base).unwrap();
            if let Some(id) = &json.identification {
                writeln!(s, "identification: {id}").unwrap();
            }
            writeln!(s, "cable: {}", json.cable).unwrap();
            writeln!(s, "admissible: {}", json.admissible.as_deref().unwrap_or("no")).unwrap();
            s.push_str(&write_csv(&json.certificates));
            if let Some(rows) = &json.exact_degrees {
                writeln!(s, "exact degrees:").unwrap();
                s.push_str(&write_csv(rows));
            }
            let none = || "none".to_string();
            writeln!(s, "regime: {}", json.regime.clone().unwrap_or_else(none)).unwrap();
            writeln!(s, "closed_form: {}", json.closed_form.as_ref().map_or_else(none, compact)).unwrap();
            writeln!(s, "fitted: {}", json.fitted.as_ref().map_or_else(none, compact)).unwrap();
            writeln!(s, "agreement: {}", json.agreement).unwrap();
            s
        }
    };
    let failure = (!problems.is_empty()).then(|| problems.join("; "));
    Ok(Outcome { output, failure })
}

pub fn fit(csv_text: &str, max_period: usize, format: Format) -> Result<Outcome, CliError> {
    let samples = read_degree_csv(csv_text)?;
    match fit_quasipoly(&samples, max_period) {
        Ok(qp) => {
            let json = QuasiPolyJson::from_qp(&qp);
            let output = match format {
                Format::Text => format!("{}\n", compact(&json)),
                _ => to_json(&json),
            };
            Ok(Outcome::success(output))
        }
        Err(e @ QpolyError::NonConsecutiveSamples { .. }) => Err(CliError::invalid(e.to_string())),
        Err(e) => Ok(Outcome { output: String::new(), failure: Some(e.to_string()) }),
    }
}

pub fn verify(
    spec: &GridSpec,
    bases: &[(String, cable_slopes_core::cabling::ClosedForm)],
    format: Format,
) -> Result<Outcome, CliError> {
    let reports = sweep::run(spec, bases)?;
    let failed = reports.iter().filter(|r| !r.pass()).count();
    let output = match format {
        Format::Json => to_json(&reports.iter().map(ReportJson::new).collect::<Vec<_>>()),
        Format::Csv => write_csv(reports.iter().map(ReportRow::new)),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let cable = r.cable.map(|c| format!(" {c}-cable")).unwrap_or_default();
                let js: Vec<String> = r.js.iter().map(ToString::to_string).collect();
                let status = if r.pass() { "PASS" } else { "FAIL" };
                write!(s, "{status} {}{cable} js={{{}}}", r.knot, js.join(",")).unwrap();
                if let Some(e) = &r.error {
                    write!(s, " error: {e}").unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "{} reports, {failed} failed", reports.len()).unwrap();
            s
        }
    };
    let failure = (failed > 0).then(|| format!("{failed} of {} reports failed", reports.len()));
    Ok(Outcome { output, failure })
}

#[derive(Debug, Serialize)]
struct TorusRow {
    n: u64,
    d_plus: String,
    jones: String,
}

pub fn torus_exact(params: CableParams, n_max: u64, format: Format) -> Outcome {
    let knot = ExactKnot::torus(params);
    let table = JonesTable::new(knot, n_max);
    let rows: Vec<TorusRow> = (1..=n_max)
        .map(|n| {
            let j = table.get(n).expect("table covers n_max");
            let d = j.degree_hi().map(|d| d.to_string()).unwrap_or_else(|_| "-".into());
            TorusRow { n, d_plus: d, jones: j.to_string() }
        })
        .collect();
    let output = match format {
        Format::Json => to_json(&rows),
        Format::Csv => write_csv(&rows),
        Format::Text => {
            let mut s = format!("T{params}\n");
            for r in &rows {
                writeln!(s, "n={} d_plus={} J={}", r.n, r.d_plus, r.jones).unwrap();
            }
            s
        }
    };
    Outcome::success(output)
}
