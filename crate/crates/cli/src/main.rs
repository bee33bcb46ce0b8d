//! `pellsum`: exact evaluation, generating functions, power linearization,
//! closed-form power sums, verification and benchmarking for a family of
//! generalized Pell sequences.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 degenerate-input error. All numeric inputs are exact rationals in
//! `p/q` or integer form; decimal-point input is rejected.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pell_cli::bench::{default_grid, run_bench};
use pell_cli::output::{string_list, string_map, JsonOutput};
use pell_cli::verify::{run_verify, Suite, VerifyBounds};
use pell_core::gf::{gf_series, subsequence_gf, weighted_partial_sum};
use pell_core::linearize::{eval_linearized, linearize, TermKind};
use pell_core::powersum::{
    power_sum_brute, power_sum_closed, power_sum_gf_bounded, PowerSumRequest,
    DEFAULT_SYMBOLIC_BOUND,
};
use pell_core::{
    pell_binet, pell_fast, pell_iter, q_pell, symbolic_params, Error as CoreError, Field,
    PellParams, Rational,
};

#[derive(Parser)]
#[command(
    name = "pellsum",
    version,
    about = "Exact arithmetic, identities and closed-form power sums for generalized Pell sequences"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Iter,
    Fast,
    Binet,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SumMode {
    Closed,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate P(n)
    Pell {
        /// Parameter R as an exact rational (p/q or integer)
        #[arg(long = "R", allow_hyphen_values = true, conflicts_with = "symbolic")]
        r: Option<String>,
        /// Index n (negative indices use the backward recurrence)
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Evaluation method; `all` prints every route and an agreement flag
        #[arg(long, value_enum, default_value_t = Method::Iter)]
        method: Method,
        /// Compute in the rational-function field over R
        #[arg(long)]
        symbolic: bool,
    },
    /// Evaluate the companion value Q(n) = 2P(n+1) - R P(n)
    Q {
        #[arg(long = "R", allow_hyphen_values = true, conflicts_with = "symbolic")]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        symbolic: bool,
    },
    /// Generating function of the stride-m subsequence P(mk)
    Gf {
        #[arg(long)]
        m: u32,
        #[arg(long = "R", allow_hyphen_values = true, conflicts_with = "symbolic")]
        r: Option<String>,
        #[arg(long)]
        symbolic: bool,
        /// Also print series coefficients u(0..=N)
        #[arg(long, value_name = "N")]
        series: Option<u64>,
    },
    /// Partial sums: pure power sums of P(mk)^ell, or sigma-weighted
    /// first-power sums when --sigma is given
    Sum {
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        /// Exponent for power sums (default 1); incompatible with --sigma
        #[arg(long, conflicts_with = "sigma")]
        ell: Option<u32>,
        /// Weight for sigma-weighted first-power partial sums
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, value_enum, default_value_t = SumMode::Closed)]
        mode: SumMode,
    },
    /// Linearize P(n)^ell into first-power terms with geometric weights
    Linearize {
        #[arg(long)]
        ell: u32,
        /// Evaluate coefficients at a numeric parameter
        #[arg(long = "R", allow_hyphen_values = true)]
        r: Option<String>,
        /// Check the form against P(n)^ell for n <= N (requires --R)
        #[arg(long, value_name = "N", requires = "r")]
        check: Option<u64>,
    },
    /// Symbolic generating function of the partial-sum sequence of P(mk)^ell
    PowersumGf {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        ell: u32,
        /// Exponent bound for the symbolic computation
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_BOUND)]
        bound: u32,
    },
    /// Run a verification suite and print its report
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Reduced grids for a fast smoke run
        #[arg(long)]
        quick: bool,
    },
    /// Closed-form vs brute-force benchmark with multiplication counts
    Bench {
        #[arg(long = "R", allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, requires = "r")]
        m: Option<u32>,
        #[arg(long, requires = "r")]
        ell: Option<u32>,
        #[arg(long, requires = "r")]
        n: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Identities,
    Examples,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Core => Suite::Core,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Examples => Suite::Examples,
        }
    }
}

enum CliError {
    Usage(String),
    Degenerate(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Verification(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Degenerate(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Degenerate(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BinetInconsistency(_) => CliError::Verification(e.to_string()),
            _ => CliError::Degenerate(e.to_string()),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>()
        .map_err(|e| CliError::Usage(format!("{}: {}", s, e)))
}

fn numeric_params(r: &str) -> Result<PellParams<Rational>, CliError> {
    Ok(PellParams::numeric(parse_rational(r)?)?)
}

/// Output of one command: human text plus the JSON mirror, and whether the
/// run counts as a verification failure.
struct CommandOutput {
    text: String,
    json: JsonOutput,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", out.json.render()),
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: &Command) -> Result<CommandOutput, CliError> {
    match command {
        Command::Pell {
            r,
            n,
            method,
            symbolic,
        } => cmd_pell(r.as_deref(), *n, *method, *symbolic),
        Command::Q { r, n, symbolic } => cmd_q(r.as_deref(), *n, *symbolic),
        Command::Gf {
            m,
            r,
            symbolic,
            series,
        } => cmd_gf(*m, r.as_deref(), *symbolic, *series),
        Command::Sum {
            r,
            m,
            n,
            ell,
            sigma,
            mode,
        } => cmd_sum(r, *m, *n, *ell, sigma.as_deref(), *mode),
        Command::Linearize { ell, r, check } => cmd_linearize(*ell, r.as_deref(), *check),
        Command::PowersumGf { m, ell, bound } => cmd_powersum_gf(*m, *ell, *bound),
        Command::Verify { suite, quick } => cmd_verify((*suite).into(), *quick),
        Command::Bench { r, m, ell, n } => cmd_bench(r.as_deref(), *m, *ell, *n),
    }
}

/// Evaluates P(n) by the chosen method(s) over either coefficient field.
fn pell_values<K: Field>(
    params: &PellParams<K>,
    n: i64,
    method: Method,
) -> Result<Vec<(&'static str, K)>, CliError> {
    let need_nonneg = |method: &str| -> Result<u64, CliError> {
        u64::try_from(n).map_err(|_| {
            CliError::Usage(format!(
                "method {} requires a nonnegative index, got {}",
                method, n
            ))
        })
    };
    let mut values = Vec::new();
    if matches!(method, Method::Iter | Method::All) {
        values.push(("iter", pell_iter(params, n)));
    }
    if matches!(method, Method::Fast | Method::All) {
        values.push(("fast", pell_fast(params, need_nonneg("fast")?)));
    }
    if matches!(method, Method::Binet | Method::All) {
        values.push(("binet", pell_binet(params, need_nonneg("binet")?)?));
    }
    Ok(values)
}

fn cmd_pell(r: Option<&str>, n: i64, method: Method, symbolic: bool) -> Result<CommandOutput, CliError> {
    let (values, r_label) = if symbolic {
        (pell_values(&symbolic_params(), n, method)?
            .into_iter()
            .map(|(k, v)| (k, v.to_string()))
            .collect::<Vec<_>>(), "R".to_string())
    } else {
        let r = r.ok_or_else(|| CliError::Usage("either --R or --symbolic is required".into()))?;
        let params = numeric_params(r)?;
        (pell_values(&params, n, method)?
            .into_iter()
            .map(|(k, v)| (k, v.to_string()))
            .collect::<Vec<_>>(), params.r().to_string())
    };

    let agreement = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = String::new();
    for (name, v) in &values {
        text.push_str(&format!("P({}) = {} ({})\n", n, v, name));
    }
    if matches!(method, Method::All) {
        text.push_str(&format!("agreement: {}\n", agreement));
    }

    let mut pairs: Vec<(&str, String)> = values.iter().map(|(k, v)| (*k, v.clone())).collect();
    if matches!(method, Method::All) {
        pairs.push(("agreement", agreement.to_string()));
    }
    let json = JsonOutput::new("pell")
        .param("R", r_label)
        .param("n", n)
        .param("symbolic", symbolic)
        .result(string_map(&pairs));
    Ok(CommandOutput {
        text,
        json,
        failed: !agreement,
    })
}

fn cmd_q(r: Option<&str>, n: i64, symbolic: bool) -> Result<CommandOutput, CliError> {
    let (value, r_label) = if symbolic {
        let params = symbolic_params();
        (q_pell(&params, n).to_string(), "R".to_string())
    } else {
        let r = r.ok_or_else(|| CliError::Usage("either --R or --symbolic is required".into()))?;
        let params = numeric_params(r)?;
        (q_pell(&params, n).to_string(), params.r().to_string())
    };
    let text = format!("Q({}) = {}\n", n, value);
    let json = JsonOutput::new("q")
        .param("R", r_label)
        .param("n", n)
        .param("symbolic", symbolic)
        .result(string_map(&[("value", value)]));
    Ok(CommandOutput {
        text,
        json,
        failed: false,
    })
}

fn gf_render<K: Field>(
    params: &PellParams<K>,
    m: u32,
    series: Option<u64>,
) -> (String, serde_json::Value) {
    let gf = subsequence_gf(params, m);
    let coeffs = [
        ("n0", gf.n0.to_string()),
        ("n1", gf.n1.to_string()),
        ("b", gf.b.to_string()),
        ("c", gf.c.to_string()),
        ("d", gf.d.to_string()),
    ];
    let mut text = format!(
        "G(z) = (n0 + n1 z)/(b + c z + d z^2) for u(k) = P({}k)\n",
        m
    );
    for (name, v) in &coeffs {
        text.push_str(&format!("{} = {}\n", name, v));
    }
    let mut pairs: Vec<(&str, String)> = coeffs.iter().map(|(k, v)| (*k, v.clone())).collect();
    let series_values: Option<Vec<String>> = series.map(|n| {
        gf_series(&gf, n).iter().map(|v| v.to_string()).collect()
    });
    if let Some(values) = &series_values {
        text.push_str(&format!("series: {}\n", values.join(", ")));
    }
    let mut result = string_map(&pairs.drain(..).collect::<Vec<_>>());
    if let Some(values) = series_values {
        result["series"] = string_list(values.clone());
        // insertion keeps map sorted; rebuild through the object API
        if let serde_json::Value::Object(map) = &mut result {
            map.insert("series".into(), string_list(values));
        }
    }
    (text, result)
}

fn cmd_gf(
    m: u32,
    r: Option<&str>,
    symbolic: bool,
    series: Option<u64>,
) -> Result<CommandOutput, CliError> {
    if m < 1 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let ((text, result), r_label) = if symbolic {
        (gf_render(&symbolic_params(), m, series), "R".to_string())
    } else {
        let r = r.ok_or_else(|| CliError::Usage("either --R or --symbolic is required".into()))?;
        let params = numeric_params(r)?;
        let label = params.r().to_string();
        (gf_render(&params, m, series), label)
    };
    let json = JsonOutput::new("gf")
        .param("R", r_label)
        .param("m", m)
        .param("symbolic", symbolic)
        .result(result);
    Ok(CommandOutput {
        text,
        json,
        failed: false,
    })
}

fn cmd_sum(
    r: &str,
    m: u32,
    n: u64,
    ell: Option<u32>,
    sigma: Option<&str>,
    mode: SumMode,
) -> Result<CommandOutput, CliError> {
    if m < 1 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let params = numeric_params(r)?;

    if let Some(sigma) = sigma {
        let sigma = parse_rational(sigma)?;
        let gf = subsequence_gf(&params, m);
        let sum = weighted_partial_sum(&gf, &sigma, n);
        let text = format!(
            "sum_(k=0..{}) sigma^k P({}k) = {} (resonance fallback: {})\n",
            n, m, sum.value, sum.used_fallback
        );
        let json = JsonOutput::new("sum")
            .param("R", params.r())
            .param("m", m)
            .param("n", n)
            .param("sigma", &sigma)
            .result(string_map(&[
                ("fallback", sum.used_fallback.to_string()),
                ("value", sum.value.to_string()),
            ]));
        return Ok(CommandOutput {
            text,
            json,
            failed: false,
        });
    }

    let ell = ell.unwrap_or(1);
    let req = PowerSumRequest::new(params.clone(), m, ell, n)?;
    let (mut pairs, mut text) = (Vec::new(), String::new());
    let mut failed = false;
    match mode {
        SumMode::Closed => {
            let v = power_sum_closed(&req)?;
            text.push_str(&format!("closed: {}\n", v));
            pairs.push(("closed", v.to_string()));
        }
        SumMode::Brute => {
            let v = power_sum_brute(&req);
            text.push_str(&format!("brute: {}\n", v));
            pairs.push(("brute", v.to_string()));
        }
        SumMode::Both => {
            use std::time::Instant;
            let t0 = Instant::now();
            let closed = power_sum_closed(&req)?;
            let closed_time = t0.elapsed();
            let t1 = Instant::now();
            let brute = power_sum_brute(&req);
            let brute_time = t1.elapsed();
            let equal = closed == brute;
            failed = !equal;
            text.push_str(&format!("closed: {} ({:?})\n", closed, closed_time));
            text.push_str(&format!("brute:  {} ({:?})\n", brute, brute_time));
            text.push_str(&format!("equal: {}\n", equal));
            pairs.push(("brute", brute.to_string()));
            pairs.push(("brute_time", format!("{:?}", brute_time)));
            pairs.push(("closed", closed.to_string()));
            pairs.push(("closed_time", format!("{:?}", closed_time)));
            pairs.push(("equal", equal.to_string()));
        }
    }
    let json = JsonOutput::new("sum")
        .param("R", params.r())
        .param("ell", ell)
        .param("m", m)
        .param("n", n)
        .result(string_map(&pairs));
    Ok(CommandOutput { text, json, failed })
}

fn cmd_linearize(ell: u32, r: Option<&str>, check: Option<u64>) -> Result<CommandOutput, CliError> {
    if ell < 1 {
        return Err(CliError::Usage("--ell must be at least 1".into()));
    }
    let form = linearize(ell);
    let mut text = format!(
        "P(n)^{} = sum of {} terms; each term is coeff * P(stride*n + shift) * (-R/2)^(geo*n)\n",
        ell,
        form.terms.len()
    );
    let mut rows = Vec::new();
    for term in &form.terms {
        let kind = match term.kind {
            TermKind::Pell => "P",
            TermKind::PellShifted => "P-shifted",
            TermKind::Constant => "constant",
        };
        text.push_str(&format!(
            "  kind={:<10} stride={} shift={} geo={} coeff={}\n",
            kind, term.stride, term.shift, term.geo, term.coeff
        ));
        rows.push(string_map(&[
            ("coeff", term.coeff.to_string()),
            ("geo", term.geo.to_string()),
            ("kind", kind.to_string()),
            ("shift", term.shift.to_string()),
            ("stride", term.stride.to_string()),
        ]));
    }
    let mut result = serde_json::Map::new();
    result.insert("terms".into(), serde_json::Value::Array(rows));

    let mut failed = false;
    if let Some(r) = r {
        let params = numeric_params(r)?;
        if let Some(n_max) = check {
            let mut ok = true;
            for n in 0..=n_max {
                let got = eval_linearized(&form, &params, n)?;
                let expected = pell_iter(&params, n as i64).pow_int(ell as i64)?;
                if got != expected {
                    ok = false;
                    text.push_str(&format!("check FAILED at n = {}\n", n));
                    break;
                }
            }
            if ok {
                text.push_str(&format!("check passed for n <= {}\n", n_max));
            }
            failed = !ok;
            result.insert(
                "check".into(),
                serde_json::Value::String(if ok { "pass".into() } else { "fail".into() }),
            );
        } else {
            let evaluated: Vec<String> = form
                .terms
                .iter()
                .map(|t| t.coeff.eval(params.r()).map(|v: Rational| v.to_string()))
                .collect::<Result<_, _>>()?;
            text.push_str(&format!(
                "coefficients at R = {}: {}\n",
                params.r(),
                evaluated.join(", ")
            ));
            result.insert("coefficients_at_R".into(), string_list(evaluated));
        }
    }

    let mut json = JsonOutput::new("linearize")
        .param("ell", ell)
        .result(serde_json::Value::Object(result));
    if let Some(r) = r {
        json = json.param("R", parse_rational(r)?);
    }
    Ok(CommandOutput { text, json, failed })
}

fn cmd_powersum_gf(m: u32, ell: u32, bound: u32) -> Result<CommandOutput, CliError> {
    if m < 1 || ell < 1 {
        return Err(CliError::Usage("--m and --ell must be at least 1".into()));
    }
    let gf = power_sum_gf_bounded(m, ell, bound)?;
    let mut text = format!(
        "generating function of partial sums of P({}k)^{}: {} fractions (num(z)/den(z), coefficients as reduced num/den polynomials in R)\n",
        m,
        ell,
        gf.fractions.len()
    );
    let mut rows = Vec::new();
    for (i, frac) in gf.fractions.iter().enumerate() {
        text.push_str(&format!("  [{}] {}\n", i, frac));
        rows.push(string_map(&[
            ("den", frac.den.to_string()),
            ("num", frac.num.to_string()),
        ]));
    }
    let json = JsonOutput::new("powersum-gf")
        .param("ell", ell)
        .param("m", m)
        .result(serde_json::Value::Array(rows));
    Ok(CommandOutput {
        text,
        json,
        failed: false,
    })
}

fn cmd_verify(suite: Suite, quick: bool) -> Result<CommandOutput, CliError> {
    let bounds = if quick {
        VerifyBounds::quick()
    } else {
        VerifyBounds::default()
    };
    let report = run_verify(suite, &bounds);
    let text = report.render_text();
    let json = JsonOutput::new("verify")
        .param("quick", quick)
        .param("suite", suite)
        .result(report.to_json_value());
    Ok(CommandOutput {
        text,
        json,
        failed: !report.passed(),
    })
}

fn cmd_bench(
    r: Option<&str>,
    m: Option<u32>,
    ell: Option<u32>,
    n: Option<u64>,
) -> Result<CommandOutput, CliError> {
    let grid = match r {
        Some(r) => {
            let params = numeric_params(r)?;
            let (m, ell, n) = (m.unwrap_or(1), ell.unwrap_or(1), n.unwrap_or(1000));
            vec![PowerSumRequest::new(params, m, ell, n)?]
        }
        None => default_grid(),
    };
    let records = run_bench(&grid).map_err(CliError::Verification)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for rec in &records {
        text.push_str(&rec.render_text());
        text.push('\n');
        rows.push(string_map(&[
            ("R", rec.r.to_string()),
            ("brute_muls", rec.brute_muls.to_string()),
            ("brute_time", format!("{:?}", rec.brute_time)),
            ("closed_muls", rec.closed_muls.to_string()),
            ("closed_time", format!("{:?}", rec.closed_time)),
            ("ell", rec.exponent.to_string()),
            ("equal", rec.equal.to_string()),
            ("m", rec.stride.to_string()),
            ("n", rec.upper.to_string()),
        ]));
    }
    let json = JsonOutput::new("bench").result(serde_json::Value::Array(rows));
    Ok(CommandOutput {
        text,
        json,
        failed: false,
    })
}
