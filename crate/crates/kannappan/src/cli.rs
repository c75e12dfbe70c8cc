//! Batch front door.  Every run prints either a human table or a JSON
//! report (deterministic for a fixed configuration and seed) and exits 0
//! only when all requested assertions hold.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{literal, Carrier, Element};
use crate::defect::{
    kannappan_defect, nfold_defect, quadratic_exchange_residuals, sup_defect,
};
use crate::error::{Error, Result};
use crate::eta::{instability_witness, PatternCounter};
use crate::limits::{
    decompose, hat_limit, hat_limit_iterative, tilde_limit, tilde_limit_iterative,
    DecomposeParams, LimitParams,
};
use crate::realfn::{parse_fn_literal, parse_value, FnConfig, RealFn};
use crate::report::{to_json, RunReport};
use crate::value::Value;
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "kannappan",
    about = "Defect sweeps, dyadic limits, decomposition, instability witnesses, \
             and closed-form solving for f(xyz)+f(x)+f(y)+f(z)=f(xy)+f(xz)+f(yz)",
    after_help = "Element literals: words `aabb` (unit `_`), vectors `3,-1,2`, residues `3`,\n\
                  Klein `1|b|c|bc`, wreath `top|slot=value;...` (e.g. `b|1=3;c=-2`),\n\
                  zero-adjoined `0` or a base literal, pairs `left#right`.\n\
                  Carriers: Z, Z^3, Z/5, free:ab, free1:ab, klein, wreath:<base>,\n\
                  zero:<base>, pair:<left>:<right>.\n\
                  Functions: quadratic:<k²+k rationals>, additive:<k rationals>,\n\
                  eta[:pattern], etatilde[:pattern], noise:<amp>[:seed][:even],\n\
                  pullback:<hom>:<fn>, or @file.json with a declarative config."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CommonOpts {
    /// Function literal or @path to a JSON config.
    #[arg(long = "fn")]
    function: String,
    /// Carrier descriptor (see --help).
    #[arg(long)]
    carrier: String,
    /// Output format.
    #[arg(long, default_value = "table")]
    format: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defect at a triple, or the sup over a corpus of triples.
    Defect {
        #[command(flatten)]
        common: CommonOpts,
        /// Triple `x;y;z` (comma form allowed on Z).
        #[arg(long)]
        triple: Option<String>,
        /// File with one triple per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Sweep this many random triples instead.
        #[arg(long)]
        random: Option<usize>,
        /// Size hint for random elements (word length / coordinate range).
        #[arg(long, default_value_t = 20)]
        size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// n-fold defect of a list of elements.
    Nfold {
        #[command(flatten)]
        common: CommonOpts,
        /// Elements separated by `;`.
        #[arg(long)]
        elems: String,
        /// Defect constant; when omitted the analytic bound is used if
        /// known, otherwise an empirical sweep estimate (labeled).
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dyadic limit (quartic or linear normalization) at a point.
    Limit {
        #[command(flatten)]
        common: CommonOpts,
        /// Element literal.
        #[arg(long)]
        point: String,
        /// `hat` (f(x^2^n)/4^n) or `tilde` (f(x^2^n)/2^n).
        #[arg(long, default_value = "hat")]
        mode: String,
        #[arg(long, default_value_t = 40)]
        nmax: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Doubling bound for the tilde hypothesis check.
        #[arg(long)]
        c: Option<String>,
        /// Force the iterative route even when a closed form exists.
        #[arg(long, default_value_t = false)]
        iterative: bool,
    },
    /// Quartic + linear + bounded split over a corpus file.
    Decompose {
        #[command(flatten)]
        common: CommonOpts,
        /// File with one element literal per line.
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 40)]
        nmax: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pattern counts: eta(word), eta(word^2^n), or the linear limit.
    Eta {
        #[arg(long)]
        word: String,
        /// Count in word^(2^power) via the doubling recurrence.
        #[arg(long)]
        power: Option<u32>,
        /// Return the linear dyadic limit instead.
        #[arg(long, default_value_t = false)]
        tilde: bool,
        #[arg(long, default_value = "aabb")]
        pattern: String,
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// The instability witness table; exits nonzero on any mismatch.
    Witness {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Probe-point fit of f(v) = vᵀMv + a·v on Z^k.
    Fit {
        /// Function literal or @path.
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Noisy quadratic recovery with the 3·defect bound.
    Jung {
        /// Function literal or @path (carrier Z^dim).
        #[arg(long = "fn")]
        function: String,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// File with one element literal per line.
        #[arg(long)]
        corpus: PathBuf,
        /// Evenness tolerance θ.
        #[arg(long)]
        theta: f64,
        /// Defect bound; measured over sampled corpus triples when omitted.
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Quadratic-exchange residuals at a triple on a group carrier.
    Exchange {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        triple: String,
    },
}

fn load_fn(carrier: &Carrier, spec: &str) -> Result<RealFn> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)?;
        let cfg: FnConfig = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("bad function config {path}: {e}")))?;
        cfg.build(carrier)
    } else {
        parse_fn_literal(carrier, spec)
    }
}

fn read_corpus_elements(carrier: &Carrier, path: &Path) -> Result<Vec<Element>> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| literal::parse_element(carrier, l))
        .collect()
}

fn read_corpus_triples(
    carrier: &Carrier,
    path: &Path,
) -> Result<Vec<(Element, Element, Element)>> {
    let text = std::fs::read_to_string(path)?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| literal::parse_triple(carrier, l))
        .collect()
}

#[derive(Serialize)]
struct DefectRunPayload {
    #[serde(serialize_with = "crate::report::value_as_string")]
    value: Value,
    triple: (String, String, String),
    arithmetic: &'static str,
}

#[derive(Serialize)]
struct LimitPayload {
    mode: String,
    point: String,
    #[serde(flatten)]
    result: crate::limits::DyadicLimitResult,
}

#[derive(Serialize)]
struct DecomposePayload {
    corpus: String,
    corpus_len: usize,
    #[serde(serialize_with = "crate::report::value_as_string")]
    remainder_sup: Value,
    #[serde(serialize_with = "crate::report::value_as_string")]
    defect_sup_empirical: Value,
    defect_bound_source: &'static str,
    defect_samples: usize,
    partial: bool,
    closed_form: bool,
    rows: Vec<DecomposeRow>,
}

#[derive(Serialize)]
struct DecomposeRow {
    point: String,
    quartic: String,
    linear: String,
    remainder: String,
}

pub fn run<I, T>(args: I) -> Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::parse_from(args);
    match cli.command {
        Command::Defect {
            common,
            triple,
            corpus,
            random,
            size,
            seed,
        } => {
            let carrier = literal::parse_carrier(&common.carrier)?;
            let f = load_fn(&carrier, &common.function)?;
            if let Some(triple) = triple {
                let (x, y, z) = literal::parse_triple(&carrier, &triple)?;
                let value = kannappan_defect(&f, &x, &y, &z)?;
                let payload = DefectRunPayload {
                    value: value.clone(),
                    triple: (x.to_string(), y.to_string(), z.to_string()),
                    arithmetic: if f.is_exact() { "exact" } else { "float" },
                };
                emit(
                    &common.format,
                    "defect",
                    Some(&common),
                    Some(seed),
                    None,
                    &payload,
                    || format!("defect at ({x}, {y}, {z}) = {value}"),
                    &[],
                );
                return Ok(0);
            }
            let triples = if let Some(path) = corpus {
                read_corpus_triples(&carrier, &path)?
            } else {
                let n = random.unwrap_or(1000);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..n)
                    .map(|_| {
                        (
                            carrier.sample(&mut rng, size),
                            carrier.sample(&mut rng, size),
                            carrier.sample(&mut rng, size),
                        )
                    })
                    .collect()
            };
            let report = sup_defect(&f, &triples)?;
            let csv_rows: Vec<String> = triples
                .iter()
                .map(|(x, y, z)| {
                    let d = kannappan_defect(&f, x, y, z).expect("already evaluated once");
                    format!("{x};{y};{z};{d}")
                })
                .collect();
            emit(
                &common.format,
                "defect",
                Some(&common),
                Some(seed),
                None,
                &report,
                || {
                    format!(
                        "sup |defect| = {} over {} triples, witness ({}, {}, {})",
                        report.sup_estimate,
                        report.samples,
                        report.triple.0,
                        report.triple.1,
                        report.triple.2
                    )
                },
                &csv_rows,
            );
            Ok(0)
        }
        Command::Nfold {
            common,
            elems,
            c,
            seed,
        } => {
            let carrier = literal::parse_carrier(&common.carrier)?;
            let f = load_fn(&carrier, &common.function)?;
            let xs: Vec<Element> = elems
                .split(';')
                .map(|s| literal::parse_element(&carrier, s))
                .collect::<Result<_>>()?;
            let (c_value, c_source) = resolve_bound(&f, &carrier, c.as_deref(), seed)?;
            let (value, bound) = nfold_defect(&f, &xs, &c_value)?;
            #[derive(Serialize)]
            struct NfoldPayload {
                n: usize,
                #[serde(serialize_with = "crate::report::value_as_string")]
                value: Value,
                #[serde(serialize_with = "crate::report::value_as_string")]
                bound: Value,
                #[serde(serialize_with = "crate::report::value_as_string")]
                c: Value,
                c_source: &'static str,
                within: bool,
            }
            let payload = NfoldPayload {
                n: xs.len(),
                value: value.clone(),
                bound: bound.clone(),
                c: c_value,
                c_source,
                within: value.abs_le(&bound),
            };
            let within = payload.within;
            emit(
                &common.format,
                "nfold",
                Some(&common),
                Some(seed),
                None,
                &payload,
                || {
                    format!(
                        "n = {}, value = {value}, bound = {bound} ({c_source} c): {}",
                        xs.len(),
                        if within { "within" } else { "EXCEEDED" }
                    )
                },
                &[],
            );
            Ok(if within { 0 } else { 1 })
        }
        Command::Limit {
            common,
            point,
            mode,
            nmax,
            tol,
            c,
            iterative,
        } => {
            let carrier = literal::parse_carrier(&common.carrier)?;
            let f = load_fn(&carrier, &common.function)?;
            let x = literal::parse_element(&carrier, &point)?;
            let params = LimitParams { n_max: nmax, tol };
            let c_value = c.as_deref().map(parse_value).transpose()?;
            let result = match (mode.as_str(), iterative) {
                ("hat", false) => hat_limit(&f, &x, &params)?,
                ("hat", true) => hat_limit_iterative(&f, &x, &params)?,
                ("tilde", false) => tilde_limit(&f, &x, &params, c_value.as_ref())?,
                ("tilde", true) => tilde_limit_iterative(&f, &x, &params)?,
                _ => {
                    return Err(Error::Parse(format!(
                        "mode must be hat or tilde, got `{mode}`"
                    )))
                }
            };
            let converged = result.converged;
            let payload = LimitPayload {
                mode: mode.clone(),
                point: x.to_string(),
                result,
            };
            emit(
                &common.format,
                "limit",
                Some(&common),
                None,
                Some(tol),
                &payload,
                || {
                    format!(
                        "{mode} limit at {x} = {} ({}; {} iterations, gap {})",
                        payload.result.value,
                        if payload.result.closed_form {
                            "closed form"
                        } else if converged {
                            "converged"
                        } else {
                            "NOT converged"
                        },
                        payload.result.iterations,
                        payload.result.cauchy_gap
                    )
                },
                &[],
            );
            Ok(if converged { 0 } else { 1 })
        }
        Command::Decompose {
            common,
            corpus,
            nmax,
            tol,
            seed,
        } => {
            let carrier = literal::parse_carrier(&common.carrier)?;
            let f = load_fn(&carrier, &common.function)?;
            let corpus = read_corpus_elements(&carrier, &corpus)?;
            let params = DecomposeParams {
                limit: LimitParams { n_max: nmax, tol },
                defect_samples: 200,
                seed,
            };
            let d = decompose(&f, &corpus, &params)?;
            let rows: Vec<DecomposeRow> = corpus
                .iter()
                .map(|x| {
                    Ok(DecomposeRow {
                        point: x.to_string(),
                        quartic: d.quartic_part.evaluate(x)?.to_string(),
                        linear: d.linear_part.evaluate(x)?.to_string(),
                        remainder: f
                            .evaluate(x)?
                            .sub(&d.quartic_part.evaluate(x)?)
                            .sub(&d.linear_part.evaluate(x)?)
                            .to_string(),
                    })
                })
                .collect::<Result<_>>()?;
            let payload = DecomposePayload {
                corpus: d.corpus.clone(),
                corpus_len: d.corpus_len,
                remainder_sup: d.remainder_sup.clone(),
                defect_sup_empirical: d.defect_sup_empirical.clone(),
                defect_bound_source: "empirical",
                defect_samples: d.defect_samples,
                partial: d.partial,
                closed_form: d.quartic_closed.is_some(),
                rows,
            };
            let partial = d.partial;
            emit(
                &common.format,
                "decompose",
                Some(&common),
                Some(seed),
                Some(tol),
                &payload,
                || {
                    format!(
                        "{} points: remainder sup = {}, empirical defect sup = {} \
                         ({} samples){}",
                        d.corpus_len,
                        d.remainder_sup,
                        d.defect_sup_empirical,
                        d.defect_samples,
                        if partial { "; PARTIAL (non-convergence)" } else { "" }
                    )
                },
                &payload
                    .rows
                    .iter()
                    .map(|r| format!("{};{};{};{}", r.point, r.quartic, r.linear, r.remainder))
                    .collect::<Vec<_>>(),
            );
            Ok(if partial { 1 } else { 0 })
        }
        Command::Eta {
            word,
            power,
            tilde,
            pattern,
            format,
        } => {
            let counter = PatternCounter::new(
                crate::algebra::Word::from_str_unchecked(&pattern),
                crate::algebra::Alphabet::ab(),
            )?;
            let w = crate::algebra::Word::from_str_unchecked(&word);
            #[derive(Serialize)]
            struct EtaPayload {
                word: String,
                pattern: String,
                quantity: String,
                value: String,
            }
            let (quantity, value) = if tilde {
                ("tilde".to_string(), counter.eta_tilde(&w)?.to_string())
            } else if let Some(n) = power {
                (
                    format!("count in word^(2^{n})"),
                    counter.eta_power_count(&w, n)?.to_string(),
                )
            } else {
                ("count".to_string(), counter.eta(&w)?.to_string())
            };
            let payload = EtaPayload {
                word: word.clone(),
                pattern,
                quantity: quantity.clone(),
                value: value.clone(),
            };
            emit(
                &format,
                "eta",
                None,
                None,
                None,
                &payload,
                || format!("{quantity} of `{word}` = {value}"),
                &[],
            );
            Ok(0)
        }
        Command::Witness { format } => {
            let report = instability_witness()?;
            let ok = report.ok;
            if format == "json" {
                println!(
                    "{}",
                    to_json(&RunReport {
                        command: "witness".into(),
                        carrier: Some("free:ab".into()),
                        function: Some("eta".into()),
                        seed: None,
                        tol: None,
                        report: &report,
                    })
                );
            } else {
                println!("word     eta  eta_tilde");
                for row in &report.rows {
                    println!("{:8} {:4} {:4}", row.word, row.eta, row.eta_tilde);
                }
                println!(
                    "defect of eta_tilde at (a, a, bb) = {}  (nonzero: the linear \
                     limit is no solution)",
                    report.tilde_defect
                );
                println!(
                    "same combination under eta itself  = {}",
                    report.eta_defect
                );
                println!(
                    "homogeneity pairs checked = {} ({})",
                    report.homogeneity_pairs_checked,
                    if report.homogeneity_ok { "all exact" } else { "MISMATCH" }
                );
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Fit { function, dim, format } => {
            let carrier = Carrier::lattice(dim);
            let f = load_fn(&carrier, &function)?;
            let model = crate::abelian::fit_quadratic_additive(&f)?;
            if format == "json" {
                println!(
                    "{}",
                    to_json(&RunReport {
                        command: "fit".into(),
                        carrier: Some(carrier.describe()),
                        function: Some(function),
                        seed: None,
                        tol: None,
                        report: &model,
                    })
                );
            } else {
                println!("M (symmetric {dim}x{dim}):");
                for row in &model.form {
                    println!("  [{}]", row.join(", "));
                }
                println!("a: ({})", model.additive.join(", "));
            }
            Ok(0)
        }
        Command::Jung {
            function,
            dim,
            corpus,
            theta,
            d,
            seed,
            format,
        } => {
            let carrier = Carrier::lattice(dim);
            let f = load_fn(&carrier, &function)?;
            let corpus = read_corpus_elements(&carrier, &corpus)?;
            let (d_value, d_source) = match d {
                Some(s) => (parse_value(&s)?, "supplied"),
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let triples: Vec<_> = (0..200)
                        .map(|_| {
                            let pick = |rng: &mut ChaCha8Rng| {
                                corpus[rng.gen_range(0..corpus.len())].clone()
                            };
                            (pick(&mut rng), pick(&mut rng), pick(&mut rng))
                        })
                        .collect();
                    (sup_defect(&f, &triples)?.sup_estimate, "measured")
                }
            };
            let recovery = crate::abelian::jung_recover(&f, &corpus, &d_value, theta)?;
            let ok = recovery.within_bound;
            if format == "json" {
                println!(
                    "{}",
                    to_json(&RunReport {
                        command: "jung".into(),
                        carrier: Some(carrier.describe()),
                        function: Some(function),
                        seed: Some(seed),
                        tol: Some(theta),
                        report: &recovery,
                    })
                );
            } else {
                println!("recovered Q:");
                for row in &recovery.model.form {
                    println!("  [{}]", row.join(", "));
                }
                println!("defect bound d = {} ({d_source})", recovery.defect_bound);
                println!(
                    "sup |f − Q| = {} vs 3d = {}: {}",
                    recovery.sup_dev,
                    recovery.deviation_bound,
                    if ok { "within" } else { "EXCEEDED" }
                );
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Verify { format } => {
            let outcomes = verify::run_all()?;
            let all_ok = outcomes.iter().all(|o| o.passed);
            if format == "json" {
                println!("{}", to_json(&outcomes));
            } else {
                for o in &outcomes {
                    println!("{}", o.line());
                }
                println!(
                    "{}/{} criteria passed",
                    outcomes.iter().filter(|o| o.passed).count(),
                    outcomes.len()
                );
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Exchange { common, triple } => {
            let carrier = literal::parse_carrier(&common.carrier)?;
            let f = load_fn(&carrier, &common.function)?;
            let (x, y, z) = literal::parse_triple(&carrier, &triple)?;
            let (printed, corrected) = quadratic_exchange_residuals(&f, &x, &y, &z)?;
            #[derive(Serialize)]
            struct ExchangePayload {
                as_printed: String,
                corrected: String,
            }
            let payload = ExchangePayload {
                as_printed: printed.to_string(),
                corrected: corrected.to_string(),
            };
            emit(
                &common.format,
                "exchange",
                Some(&common),
                None,
                None,
                &payload,
                || {
                    format!(
                        "as-printed residual = {printed}, corrected residual = {corrected}"
                    )
                },
                &[],
            );
            Ok(0)
        }
    }
}

use rand::Rng;

fn resolve_bound(
    f: &RealFn,
    carrier: &Carrier,
    c: Option<&str>,
    seed: u64,
) -> Result<(Value, &'static str)> {
    if let Some(s) = c {
        return Ok((parse_value(s)?, "supplied"));
    }
    if let Some(b) = f.analytic_defect_bound() {
        return Ok((b, "analytic"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<_> = (0..500)
        .map(|_| {
            (
                carrier.sample(&mut rng, 12),
                carrier.sample(&mut rng, 12),
                carrier.sample(&mut rng, 12),
            )
        })
        .collect();
    Ok((sup_defect(f, &triples)?.sup_estimate, "empirical"))
}

fn emit<T: Serialize, F: FnOnce() -> String>(
    format: &str,
    command: &str,
    common: Option<&CommonOpts>,
    seed: Option<u64>,
    tol: Option<f64>,
    payload: &T,
    table_line: F,
    csv_rows: &[String],
) {
    match format {
        "json" => {
            println!(
                "{}",
                to_json(&RunReport {
                    command: command.into(),
                    carrier: common.map(|c| c.carrier.clone()),
                    function: common.map(|c| c.function.clone()),
                    seed,
                    tol,
                    report: payload,
                })
            );
        }
        "csv" if !csv_rows.is_empty() => {
            for row in csv_rows {
                println!("{row}");
            }
        }
        _ => println!("{}", table_line()),
    }
}
