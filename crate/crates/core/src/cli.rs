//! The `epoly` command line: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 bad input, 2 verification failure.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::corpus;
use crate::enriched::{enumerate_signed_antichains, enumerate_signed_filters};
use crate::error::{Error, Result};
use crate::geometry::{
    count_lattice_points, ehrhart, enumerate_left_enriched, generators, lattice_points, vertices, vertices_by_lp,
    PolytopeKind,
};
use crate::poset::{Limits, Poset};
use crate::rat::PointFn;
use crate::report::CheckOutcome;
use crate::statistics::{d_vector, gamma_polynomial, hstar_from_ehrhart, peak_distribution, DRoute, Statistics};
use crate::transfer::{enriched_phi, enriched_psi, pi_map, stanley_phi, stanley_psi, theta_map};
use crate::triangulation::{facets, flag_vectors, verify_triangulation};
use crate::verify::{verify_suite_with, InequalityOracle, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "epoly", version, about = "Exact computations on enriched order and chain polytopes of posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Poset file, or `builtin:<name>`.
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    Phi,
    Psi,
    Ephi,
    Epsi,
    Pi,
    Theta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    All,
    Hstar,
    Gamma,
    Dvector,
    Flags,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basic data of a poset.
    Info {
        #[command(flatten)]
        common: Common,
    },
    /// Lattice points of a dilate, or left enriched P-partitions with `--kind lepp`.
    Points {
        #[command(flatten)]
        common: Common,
        /// eo, ec, o, c or lepp.
        #[arg(long, default_value = "eo")]
        kind: String,
        #[arg(long, default_value_t = 1)]
        dilate: i64,
    },
    /// Ehrhart polynomial and h*-vector.
    Ehrhart {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "eo")]
        kind: String,
        /// Also require the enriched order and chain polynomials to agree.
        #[arg(long)]
        check: bool,
    },
    /// Apply a transfer map or P-partition bijection to a point.
    Transfer {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        map: MapName,
        /// JSON array of rationals, e.g. '["1/2","0","1"]'.
        #[arg(long)]
        point: String,
        /// Bound for `pi` and `theta`.
        #[arg(long, default_value_t = 1)]
        dilate: i64,
    },
    /// Vertices of a polytope.
    Vertices {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "eo")]
        kind: String,
        /// Cross-check against the LP vertex oracle.
        #[arg(long)]
        check: bool,
    },
    /// Facets of the unimodular triangulation.
    Triangulate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "eo")]
        kind: String,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// h*, γ, d-vector and flag-vector statistics.
    Stats {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = What::All)]
        what: What,
    },
    /// The full invariant suite; without `--poset`, over every built-in poset.
    Verify {
        #[arg(long)]
        poset: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long = "m-max", default_value_t = 2)]
        m_max: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((value, format, passed)) => {
            let _ = out.write_all(render(&value, format).as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Verification(_) => EXIT_VERIFY,
                _ => EXIT_BAD_INPUT,
            }
        }
    }
}

fn load(source: &str) -> Result<Poset> {
    Ok(corpus::load(source)?.with_limits(Limits::from_env()?))
}

fn parse_kind(s: &str) -> Result<PolytopeKind> {
    s.parse()
}

fn ints(v: &[i64]) -> Value {
    json!(v)
}

fn big(v: &[i128]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

fn execute(cmd: Command) -> Result<(Value, Format, bool)> {
    match cmd {
        Command::Info { common } => {
            let p = load(&common.poset)?;
            let label = |v: usize| p.label(v).to_string();
            let value = json!({
                "elements": p.labels(),
                "covers": p.cover_pairs().iter().map(|&(a, b)| [label(a), label(b)]).collect::<Vec<_>>(),
                "size": p.len(),
                "minimal": p.minimal_elements().iter().map(label).collect::<Vec<_>>(),
                "maximal": p.maximal_elements().iter().map(label).collect::<Vec<_>>(),
                "linear_extensions": p.count_linear_extensions()?.to_string(),
                "natural_labeling": p.natural_labeling(),
                "signed_filters": enumerate_signed_filters(&p)?.len(),
                "signed_antichains": enumerate_signed_antichains(&p)?.len(),
            });
            Ok((value, common.format, true))
        }
        Command::Points { common, kind, dilate } => {
            let p = load(&common.poset)?;
            if dilate < 0 {
                return Err(Error::InvalidArgument("--dilate must be nonnegative".into()));
            }
            let pts = if kind == "lepp" {
                enumerate_left_enriched(&p, dilate)?
            } else {
                lattice_points(parse_kind(&kind)?, &p, dilate)?
            };
            let value = json!({
                "kind": kind,
                "dilate": dilate,
                "count": pts.len(),
                "points": pts.iter().map(|x| ints(x)).collect::<Vec<_>>(),
            });
            Ok((value, common.format, true))
        }
        Command::Ehrhart { common, kind, check } => {
            let p = load(&common.poset)?;
            let kind = parse_kind(&kind)?;
            let poly = ehrhart(kind, &p)?;
            let d = p.len() as i64;
            let counts = (0..=d + 1)
                .map(|m| count_lattice_points(kind, &p, m).map(|c| c.to_string()))
                .collect::<Result<Vec<_>>>()?;
            let mut value = json!({
                "kind": kind.short_name(),
                "coefficients": poly.to_json(),
                "polynomial": poly.display_in("m"),
                "counts": counts,
                "hstar": big(&hstar_from_ehrhart(&poly, p.len())?),
            });
            let mut passed = true;
            if check {
                let eo = ehrhart(PolytopeKind::EnrichedOrderPoly, &p)?;
                let ec = ehrhart(PolytopeKind::EnrichedChainPoly, &p)?;
                passed = eo == ec;
                value["check"] = CheckOutcome::new(
                    "enriched_ehrhart_agree",
                    passed,
                    format!("{} vs {}", eo.display_in("m"), ec.display_in("m")),
                )
                .to_json();
            }
            Ok((value, common.format, passed))
        }
        Command::Transfer { common, map, point, dilate } => {
            let p = load(&common.poset)?;
            let x = PointFn::parse_json(&point)?;
            x.check_dim(p.len())?;
            let image = match map {
                MapName::Phi => stanley_phi(&p, &x)?,
                MapName::Psi => stanley_psi(&p, &x)?,
                MapName::Ephi => enriched_phi(&p, &x)?,
                MapName::Epsi => enriched_psi(&p, &x)?,
                MapName::Pi | MapName::Theta => {
                    let h = x
                        .to_ints()
                        .ok_or_else(|| Error::InvalidPoint("P-partition bijections take integer points".into()))?;
                    let y = if map == MapName::Pi { pi_map(&p, &h, dilate)? } else { theta_map(&p, &h, dilate)? };
                    PointFn::from_ints(&y)
                }
            };
            Ok((image.to_json(), common.format, true))
        }
        Command::Vertices { common, kind, check } => {
            let p = load(&common.poset)?;
            let kind = parse_kind(&kind)?;
            let verts = vertices(kind, &p)?;
            let mut value = json!({
                "kind": kind.short_name(),
                "count": verts.len(),
                "vertices": verts.iter().map(PointFn::to_json).collect::<Vec<_>>(),
            });
            let mut passed = true;
            if check {
                let mut lp = vertices_by_lp(&generators(kind, &p)?)?;
                let mut ours = verts.clone();
                lp.sort_by_key(|x| x.to_ints());
                ours.sort_by_key(|x| x.to_ints());
                passed = lp == ours;
                value["check"] = CheckOutcome::new(
                    "vertices_match_lp",
                    passed,
                    format!("{} by order maximality, {} by LP", ours.len(), lp.len()),
                )
                .to_json();
            }
            Ok((value, common.format, passed))
        }
        Command::Triangulate { common, kind, verify, samples, seed } => {
            let p = load(&common.poset)?;
            let kind = parse_kind(&kind)?;
            if verify {
                let report = verify_triangulation(kind, &p, samples, seed)?;
                let passed = report.passed();
                Ok((report.to_json(&p), common.format, passed))
            } else {
                let fs = facets(kind, &p)?;
                let value = json!({
                    "kind": kind.short_name(),
                    "facet_count": fs.len(),
                    "facets": fs.iter().map(|f| f.to_json(&p)).collect::<Vec<_>>(),
                });
                Ok((value, common.format, true))
            }
        }
        Command::Stats { common, what } => {
            let p = load(&common.poset)?;
            let d = p.len();
            let value = match what {
                What::All => {
                    let s = Statistics::compute(&p)?;
                    let checks = s.checks();
                    let passed = !checks.iter().any(CheckOutcome::failed);
                    let mut v = s.to_json();
                    v["checks"] = Value::Array(checks.iter().map(CheckOutcome::to_json).collect());
                    return Ok((v, common.format, passed));
                }
                What::Hstar => {
                    let eo = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedOrderPoly, &p)?, d)?;
                    let ec = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedChainPoly, &p)?, d)?;
                    json!({ "hstar_eo": big(&eo), "hstar_ec": big(&ec) })
                }
                What::Gamma => {
                    let h = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedOrderPoly, &p)?, d)?;
                    json!({ "gamma": big(&gamma_polynomial(&h, d)?) })
                }
                What::Dvector => {
                    let peaks = peak_distribution(&p)?;
                    json!({
                        "via_gamma": big(&d_vector(&p, DRoute::ViaGamma)?),
                        "via_peaks": big(&d_vector(&p, DRoute::ViaPeaks)?),
                        "peaks": peaks.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect::<Map<_, _>>(),
                    })
                }
                What::Flags => flag_vectors(&p)?.to_json(),
            };
            Ok((value, common.format, true))
        }
        Command::Verify { poset, format, m_max, seed, samples } => {
            if m_max < 1 {
                return Err(Error::InvalidArgument("--m-max must be at least 1".into()));
            }
            let opts = VerifyOptions { m_max, seed, samples, ..Default::default() };
            let targets: Vec<(String, Poset)> = match poset {
                Some(source) => vec![(source.clone(), load(&source)?)],
                None => {
                    let limits = Limits::from_env()?;
                    corpus::all().into_iter().map(|(n, p)| (format!("builtin:{n}"), p.with_limits(limits))).collect()
                }
            };
            let mut reports = Map::new();
            let mut passed = true;
            let mut failures = 0;
            for (name, p) in &targets {
                let r = verify_suite_with(p, &opts, &InequalityOracle);
                passed &= r.passed();
                failures += r.failures();
                reports.insert(name.clone(), r.to_json());
            }
            let value = json!({ "passed": passed, "failures": failures, "posets": reports });
            Ok((value, format, passed))
        }
    }
}

/// JSON is pretty-printed; text flattens the value into aligned
/// `key: value` lines.
fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut rows = Vec::new();
            flatten("", value, &mut rows);
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            rows.iter().map(|(k, v)| format!("{k:width$}  {v}\n")).collect()
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("null".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) => {
            let parts = items.iter().map(scalar).collect::<Option<Vec<_>>>()?;
            Some(format!("({})", parts.join(",")))
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = inline(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                flatten(&join(k), item, rows);
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), item, rows);
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}
