use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use extsq_core::algebra::{matrix_from_json, udl_explicit, udl_oracle, MatrixJson};
use extsq_core::euler::{complex_str, ext2_factor, partial_l, primes_below, standard_factor, SatakeData};
use extsq_core::lfactors::{
    casselman_embedding, fe_ratio_check, fe_sweep, holomorphy_check, l_inf, omega, pole_enumeration, ReprData,
};
use extsq_core::report::{CheckResult, RunReport};
use extsq_core::shuffle::kappa::parity_constraint_holds;
use extsq_core::shuffle::*;
use extsq_core::special::{g_delta, g_delta_integral, CutoffSpec};
use extsq_core::Error;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{checks, sample};

#[derive(Parser, Debug)]
#[command(name = "extsq", version, about = "Archimedean exterior-square gamma factors and their identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized sweep.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// UDL and NHN factorizations of a matrix given as JSON.
    Decompose { matrix: PathBuf },
    /// The shuffle identities at one size, symbolically where feasible.
    ShuffleVerify {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// G_δ(s) in closed form, optionally against the regularized integral.
    Gamma {
        #[arg(long, default_value_t = 0)]
        delta: u8,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// L_∞(s, π, Ext²⊗χ) from representation data.
    Lfactor {
        repr: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// Poles in Re s ≥ 1/2 and the holomorphy analysis.
    Poles { repr: PathBuf },
    /// The Gamma-ratio functional equation at given or random points.
    FeCheck {
        repr: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Unramified Euler factors and their truncated product.
    Euler {
        satake: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Replicate a single template over every prime below this bound.
        #[arg(long)]
        primes: Option<u64>,
    },
    /// Every acceptance check with a fixed seed.
    Suite,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Decompose { .. } => "decompose",
            Command::ShuffleVerify { .. } => "shuffle-verify",
            Command::Gamma { .. } => "gamma",
            Command::Lfactor { .. } => "lfactor",
            Command::Poles { .. } => "poles",
            Command::FeCheck { .. } => "fe-check",
            Command::Euler { .. } => "euler",
            Command::Suite => "suite",
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn parse_s(text: &str) -> anyhow::Result<Complex64> {
    complex_str::parse(text).with_context(|| format!("parsing s = {text:?}"))
}

fn fmt_c(z: Complex64) -> String {
    complex_str::format(z)
}

fn load_repr(path: &Path) -> anyhow::Result<ReprData> {
    Ok(ReprData::from_json(&read(path)?)?)
}

/// Executes one subcommand. Input and usage problems are errors; numeric disagreements are failed checks.
pub fn run(cli: &Cli) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new(cli.command.name(), cli.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    match &cli.command {
        Command::Decompose { matrix } => decompose(&mut report, &read(matrix)?)?,
        Command::ShuffleVerify { n, trials, tol } => shuffle_verify(&mut report, &mut rng, *n, *trials, *tol)?,
        Command::Gamma { delta, s, oracle, tol } => gamma(&mut report, *delta, parse_s(s)?, *oracle, *tol)?,
        Command::Lfactor { repr, s } => {
            lfactor(&mut report, &load_repr(repr)?, s.as_deref().map(parse_s).transpose()?)?
        }
        Command::Poles { repr } => poles(&mut report, &load_repr(repr)?)?,
        Command::FeCheck { repr, s, trials, tol } => {
            let s = s.as_deref().map(parse_s).transpose()?;
            fe_check(&mut report, &mut rng, &load_repr(repr)?, s, *trials, *tol)?
        }
        Command::Euler { satake, s, primes } => euler(&mut report, &read(satake)?, parse_s(s)?, *primes)?,
        Command::Suite => report = checks::suite(cli.seed),
    }
    Ok(report)
}

fn decompose(report: &mut RunReport, text: &str) -> anyhow::Result<()> {
    let g = matrix_from_json(text)?;
    let explicit = udl_explicit(&g).context("explicit UDL factorization")?;
    let nhn = explicit.to_nhn()?;
    report.push(CheckResult::new("reconstructs", explicit.reconstruct()? == g, "B₊ A⁻¹ B₋ = g"));
    let oracle = udl_oracle(&g)?.to_nhn()?;
    report.push(CheckResult::new("matches-elimination", oracle == nhn, "NHN data from minors vs row elimination"));
    report.result = Some(json!({
        "b_plus": MatrixJson::from_matrix(&explicit.b_plus),
        "a": MatrixJson::from_matrix(&explicit.a),
        "b_minus": MatrixJson::from_matrix(&explicit.b_minus),
        "n": MatrixJson::from_matrix(&nhn.n),
        "h": nhn.h.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "n_minus": MatrixJson::from_matrix(&nhn.n_minus),
    }));
    Ok(())
}

fn shuffle_verify(
    report: &mut RunReport,
    rng: &mut ChaCha8Rng,
    n: usize,
    trials: usize,
    tol: f64,
) -> anyhow::Result<()> {
    if !(2..=6).contains(&n) {
        bail!("--n must be between 2 and 6");
    }
    let exact = |name: &str, ok: bool, how: &str| CheckResult::new(name, ok, how.to_string());
    if n <= 3 {
        let v = UnfoldVars::symbolic(n, &format!("cli{n}"));
        let b = build_b(&v)?;
        report.push(exact("tilde-relations", tilde_relations_hold(&v, &b)?, "symbolic"));
        report.push(exact("superdiagonal-sum", superdiag_sum_oracle(&v)? == superdiag_sum(&v)?, "symbolic"));
        let (l, r) = altsum_check(&v)?;
        report.push(exact("alternating-sum", l == r, "symbolic"));
        let x = XVars::symbolic(n, &format!("clx{n}"));
        report.push(exact(
            "lower-factor",
            lower_factor_recursive(&x)? == lower_factor_oracle(&x.to_unfold()?)?,
            "symbolic",
        ));
    } else {
        let (mut tilde, mut sup, mut alt, mut low, mut done, mut attempts) = (true, true, true, true, 0, 0);
        while done < trials && attempts < 20 * trials.max(1) {
            attempts += 1;
            let v = sample::unfold_vars(rng, n);
            let (Ok(b), Ok(oracle)) = (build_b(&v), superdiag_sum_oracle(&v)) else { continue };
            tilde &= tilde_relations_hold(&v, &b)?;
            sup &= oracle == superdiag_sum(&v)?;
            let (l, r) = altsum_check(&v)?;
            alt &= l == r;
            if let Ok(x) = v.to_x() {
                if let Ok(want) = lower_factor_oracle(&v) {
                    low &= lower_factor_recursive(&x)? == want;
                }
            }
            done += 1;
        }
        let how = format!("{done} random rational points");
        let enough = done == trials;
        report.push(exact("tilde-relations", enough && tilde, &how));
        report.push(exact("superdiagonal-sum", enough && sup, &how));
        report.push(exact("alternating-sum", enough && alt, &how));
        report.push(exact("lower-factor", enough && low, &how));
    }
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let x = sample::x_point(rng, n);
        let ep = sample::embedding(rng, 2 * n);
        let (a, b) = (shuffled_whittaker_closed(&x, &ep)?, shuffled_whittaker_oracle(&x, &ep)?);
        worst = worst.max((a - b).norm() / b.norm());
    }
    report.push(CheckResult::new("whittaker", worst <= tol, format!("{trials} points, max rel error {worst:.2e}")));
    let mut patterns = 0;
    let mut kappa_ok = true;
    for bits in 0u32..(1 << (2 * n)) {
        let delta: Vec<u8> = (0..2 * n).map(|k| ((bits >> k) & 1) as u8).collect();
        for eps in 0..2u8 {
            for eta in 0..2u8 {
                if parity_constraint_holds(n, &delta, eps, eta) {
                    kappa_ok &= kappa_signs(n, &delta, eps, eta)?.product_matches();
                    patterns += 1;
                }
            }
        }
    }
    report.push(CheckResult::new("kappa", kappa_ok, format!("{patterns} sign patterns")));
    report.result = Some(json!({ "n_half": n, "sigma": sigma(n)?.permutation }));
    Ok(())
}

fn gamma(report: &mut RunReport, delta: u8, s: Complex64, oracle: bool, tol: f64) -> anyhow::Result<()> {
    if delta > 1 {
        bail!("--delta must be 0 or 1");
    }
    let closed = g_delta(delta, s)?;
    report.push(CheckResult::new(
        "closed-form",
        closed.is_finite(),
        format!("G_{delta}({}) = {}", fmt_c(s), fmt_c(closed)),
    ));
    let mut result = json!({ "delta": delta, "s": fmt_c(s), "closed_form": fmt_c(closed) });
    if oracle {
        match g_delta_integral(delta, s, &CutoffSpec::default()) {
            Ok(q) => {
                let err = (q - closed).norm();
                report.push(CheckResult::new(
                    "oracle-agreement",
                    err <= tol,
                    format!("|difference| {err:.2e} (tol {tol:.0e})"),
                ));
                result["oracle"] = Value::String(fmt_c(q));
            }
            Err(e) => report.push(CheckResult::fail("oracle-agreement", e.to_string())),
        }
    }
    report.result = Some(result);
    Ok(())
}

fn lfactor(report: &mut RunReport, r: &ReprData, s: Option<Complex64>) -> anyhow::Result<()> {
    let violations = r.validate();
    report.push(CheckResult::new(
        "valid",
        violations.is_empty(),
        violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "),
    ));
    let r = r.normalized()?;
    let l = l_inf(&r)?;
    let e = casselman_embedding(&r)?;
    let mut result = json!({
        "normalized": r,
        "pi2": l.pi2.to_string(),
        "pi3": l.pi3.to_string(),
        "pi4": l.pi4.to_string(),
        "pi5": l.pi5.to_string(),
        "l_inf": l.total().to_string(),
        "lambda": e.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "delta": e.delta,
        "omega": fmt_c(omega(&r)?),
    });
    if let Some(s) = s {
        match l.eval(s) {
            Ok(v) => result["value"] = Value::String(fmt_c(v)),
            Err(err) => report.push(CheckResult::fail("evaluation", err.to_string())),
        }
    }
    report.result = Some(result);
    Ok(())
}

fn poles(report: &mut RunReport, r: &ReprData) -> anyhow::Result<()> {
    let rep = holomorphy_check(r)?;
    report.push(CheckResult::new("families-match", rep.families_match, "lattice scan vs three-family list"));
    report.push(CheckResult::new("holomorphy", rep.passed, rep.failures.join("; ")));
    report.result = Some(json!({
        "poles": pole_enumeration(r)?.entries,
        "partial_product_zeros": rep.partial_zeros.iter().map(|(k, p)| json!({ "k": k, "location": p })).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn fe_check(
    report: &mut RunReport,
    rng: &mut ChaCha8Rng,
    r: &ReprData,
    s: Option<Complex64>,
    trials: usize,
    tol: f64,
) -> anyhow::Result<()> {
    let pts = match s {
        Some(s) => vec![s],
        None => {
            let mut pts = Vec::with_capacity(trials);
            while pts.len() < trials {
                let s = Complex64::new(rng.gen_range(-0.8..1.8), rng.gen_range(-3.0..3.0));
                match fe_ratio_check(r, s) {
                    Err(Error::NearPole(..)) => continue,
                    other => {
                        other?;
                        pts.push(s);
                    }
                }
            }
            pts
        }
    };
    let rep = fe_sweep(r, &pts, tol)?;
    let detail = if rep.twisted {
        format!("twisted; constant spread {:.2e}, unit error {:.2e}", rep.constant_spread, rep.max_unit_err)
    } else {
        format!("max rel error {:.2e} (tol {tol:.0e})", rep.max_rel_err)
    };
    report.push(CheckResult::new("functional-equation", rep.passed, detail));
    report.push(CheckResult::new("omega-unit", rep.max_unit_err <= 1e-12, format!("{:.2e}", rep.max_unit_err)));
    report.result = Some(json!({
        "omega": fmt_c(omega(r)?),
        "samples": rep.samples.iter().map(|x| json!({
            "s": fmt_c(x.s), "lhs": fmt_c(x.lhs), "rhs": fmt_c(x.rhs), "relative_error": x.relative_error(),
        })).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn euler(report: &mut RunReport, text: &str, s: Complex64, primes: Option<u64>) -> anyhow::Result<()> {
    let parsed: Value = serde_json::from_str(text).context("parsing Satake JSON")?;
    let data: Vec<SatakeData> = match (parsed, primes) {
        (Value::Array(items), None) => items.into_iter().map(serde_json::from_value).collect::<Result<_, _>>()?,
        (Value::Array(_), Some(_)) => bail!("--primes replicates a single template; pass one object"),
        (obj, Some(x)) => {
            let t: SatakeData = serde_json::from_value(obj)?;
            t.check()?;
            primes_below(x).into_iter().map(|p| SatakeData { p, ..t.clone() }).collect()
        }
        (obj, None) => vec![serde_json::from_value(obj)?],
    };
    for d in &data {
        d.check()?;
    }
    let first = data.first().context("no Satake data")?;
    let local = ext2_factor(first, s).map(fmt_c).map_err(|e| e.to_string());
    let standard = standard_factor(first, s).map(fmt_c).map_err(|e| e.to_string());
    let mut result = json!({ "s": fmt_c(s), "primes": data.len(), "first_prime": first.p });
    match (&local, &standard) {
        (Ok(l), Ok(st)) => {
            result["ext2_factor"] = Value::String(l.clone());
            result["standard_factor"] = Value::String(st.clone());
        }
        _ => report.push(CheckResult::fail("local-factor", local.err().or(standard.err()).unwrap_or_default())),
    }
    match partial_l(&data, s) {
        Ok(v) => {
            result["partial_l"] = Value::String(fmt_c(v));
            report.push(CheckResult::pass("partial-product", format!("{} primes", data.len())));
        }
        Err(e) => report.push(CheckResult::fail("partial-product", e.to_string())),
    }
    report.result = Some(result);
    Ok(())
}

/// Text rendering: result fields one per line, then the checks.
pub fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    if let Some(Value::Object(map)) = &report.result {
        for (k, v) in map {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    }
    out.push_str(&report.to_string());
    out
}
