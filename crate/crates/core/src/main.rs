use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use besseltrig::error::{Error, Result};
use besseltrig::error_lab::{self, ErrorReport, ZeroReport};
use besseltrig::formula::{
    build_j0, build_j0_optimal, build_jp, build_odd_order, catalog, OutputFormat, TrigFormula,
    CATALOG_NAMES,
};
use besseltrig::oracle::bessel_j;
use besseltrig::power_sums::{
    brute_force, closed_form, verify, ParamRange, PowerSumQuery, SumFamily, Theta, ThetaGrid,
    VerificationRanges, VerificationReport,
};
use besseltrig::real::{parse_decimal_ratio, Precision, Real};

/// Trigonometric-sum approximations of Bessel functions, their error laws,
/// and closed forms for sums of powers of sines and cosines.
#[derive(Parser, Debug)]
#[command(name = "besseltrig", version)]
struct Cli {
    /// Working precision in decimal digits (at least 16).
    #[arg(long, global = true, env = "BESSELTRIG_PRECISION", default_value_t = Precision::DEFAULT_DIGITS)]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a formula.
    Formula {
        #[command(flatten)]
        select: Selector,
        /// Render as LaTeX (text output only).
        #[arg(long)]
        latex: bool,
    },
    /// Tabulate the error against the oracle on a uniform grid.
    Sweep {
        #[command(flatten)]
        select: Selector,
        #[arg(long)]
        xmax: String,
        #[arg(long, default_value = "0.1")]
        step: String,
    },
    /// Locate zeros and compare with the oracle's.
    Zeros {
        #[command(flatten)]
        select: Selector,
        #[arg(long, default_value_t = 1)]
        count: u32,
    },
    /// Check a power-sum closed form against direct summation.
    Identity {
        #[arg(long)]
        family: SumFamily,
        /// Node parameter, `a` or `a..b`.
        #[arg(long = "n", visible_alias = "m", default_value = "1")]
        node: ParamRange,
        /// Harmonic index; every admissible value when omitted.
        #[arg(long)]
        q: Option<ParamRange>,
        /// Power index, `auto` or a range.
        #[arg(long, default_value = "auto")]
        k: String,
        /// A single angle; overrides --theta-points.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, default_value_t = 16)]
        theta_points: u32,
    },
    /// List the named formulas.
    Catalog,
    /// Evaluate a formula and the oracle at given points.
    Eval {
        #[command(flatten)]
        select: Selector,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        x: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct Selector {
    /// A catalog entry.
    #[arg(long, conflicts_with_all = ["builder", "p"])]
    name: Option<String>,
    #[arg(long, value_enum)]
    builder: Option<Builder>,
    /// Bessel order for the phase-shifted series; 0 with --theta selects cosine nodes.
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Node offset, e.g. `pi/8` or `3*pi/16`.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builder {
    J0,
    J0opt,
    Jp,
    Odd,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

impl Selector {
    fn resolve(&self, prec: Precision) -> Result<TrigFormula> {
        if let Some(name) = &self.name {
            return catalog(name);
        }
        let n = || self.n.ok_or_else(|| usage("--n is required"));
        let theta = || -> Result<BigRational> {
            match &self.theta {
                None => Ok(BigRational::default()),
                Some(s) => match Theta::parse(s, prec)? {
                    Theta::PiMultiple(r) => Ok(r),
                    Theta::Raw(_) => Err(usage(format!("--theta {s:?} must be a rational multiple of pi"))),
                },
            }
        };
        let builder = match (self.builder, self.p) {
            (Some(b), _) => b,
            (None, Some(0)) if self.theta.is_some() => Builder::J0,
            (None, Some(_)) => Builder::Jp,
            (None, None) => return Err(usage("select a formula with --name, --builder or --p/--n")),
        };
        if self.theta.is_some() && builder != Builder::J0 {
            return Err(usage("--theta applies to the cosine-node series only"));
        }
        match builder {
            Builder::J0 => build_j0(n()?, &theta()?),
            Builder::J0opt => build_j0_optimal(n()?),
            Builder::Jp => build_jp(self.p.unwrap_or(0), n()?),
            Builder::Odd => build_odd_order(n()?),
        }
    }
}

fn no_csv(what: &str) -> Error {
    usage(format!("{what} has no csv output; use text or json"))
}

fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let prec = Precision::new(cli.precision)?;
    let sig = (prec.digits() as usize).min(20);
    let mut ok = true;
    let out = match &cli.command {
        Command::Formula { select, latex } => {
            let f = select.resolve(prec)?;
            match (cli.output, latex) {
                (Output::Json, _) => f.emit(OutputFormat::Json) + "\n",
                (Output::Csv, _) => return Err(no_csv("formula")),
                (Output::Text, true) => f.emit(OutputFormat::Latex) + "\n",
                (Output::Text, false) => f.emit(OutputFormat::Text) + "\n",
            }
        }
        Command::Sweep { select, xmax, step } => {
            let f = select.resolve(prec)?;
            let report = error_lab::sweep(&f, &parse_decimal_ratio(xmax)?, &parse_decimal_ratio(step)?, prec)?;
            match cli.output {
                Output::Csv => report.to_csv(),
                Output::Json => json(&report.to_json()),
                Output::Text => sweep_text(&f, &report),
            }
        }
        Command::Zeros { select, count } => {
            let f = select.resolve(prec)?;
            let zs = error_lab::zeros(&f, *count, prec)?;
            zeros_out(&zs, cli.output, sig)
        }
        Command::Identity { family, node, q, k, theta, theta_points } => {
            let k = match k.as_str() {
                "auto" => None,
                s => Some(s.parse::<ParamRange>()?),
            };
            let theta = theta.as_deref().map(|s| Theta::parse(s, prec)).transpose()?;
            let single = node.start == node.end
                && q.is_none_or(|r| r.start == r.end)
                && k.is_some_and(|r| r.start == r.end)
                && theta.is_some();
            if single && (q.is_some() || !family.is_mixed()) {
                let q = q.map_or(0, |r| r.start);
                let query = PowerSumQuery::new(*family, node.start, q, k.unwrap().start, theta.unwrap());
                single_identity(&query, cli.output, prec, &mut ok)?
            } else {
                if *theta_points == 0 {
                    return Err(usage("--theta-points must be positive"));
                }
                let grid = match theta {
                    Some(t) => ThetaGrid::Single(t),
                    None => ThetaGrid::Uniform(*theta_points),
                };
                let ranges = VerificationRanges { node: *node, q: *q, k };
                let report = verify(*family, &ranges, &grid, prec);
                ok = report.passed();
                match cli.output {
                    Output::Json => json(&serde_json::to_value(&report).expect("report serializes")),
                    Output::Csv => return Err(no_csv("identity")),
                    Output::Text => verify_text(&report),
                }
            }
        }
        Command::Catalog => catalog_out(cli.output)?,
        Command::Eval { select, x } => {
            let f = select.resolve(prec)?;
            eval_out(&f, x, cli.output, prec, sig)?
        }
    };
    Ok((out, ok))
}

fn sweep_text(f: &TrigFormula, r: &ErrorReport) -> String {
    let mut s = String::new();
    let sig = 6;
    writeln!(s, "formula   {}", f.id()).unwrap();
    writeln!(s, "target    J_{}", r.target).unwrap();
    writeln!(s, "points    {}", r.grid.len()).unwrap();
    writeln!(s, "max |eps| {}", r.max_abs_eps.to_sci_string(sig)).unwrap();
    match &r.fit {
        Some(fit) => writeln!(s, "fit       eps ~ {} x^{}", fit.coeff.to_sci_string(sig), fit.order).unwrap(),
        None => writeln!(s, "fit       below working precision").unwrap(),
    }
    writeln!(
        s,
        "predicted order {}{}",
        f.predicted_error.order,
        f.predicted_error
            .coeff
            .as_ref()
            .map(|c| format!(", coeff {}", c.to_real(r.precision).to_sci_string(sig)))
            .unwrap_or_default()
    )
    .unwrap();
    for (tol, x) in r.domains() {
        writeln!(s, "|eps| <= {tol:e} up to x = {}", besseltrig::real::ratio_to_decimal_string(&x)).unwrap();
    }
    if let (Some(x), Some(e)) = (r.grid.last(), r.eps.last()) {
        writeln!(s, "eps({}) = {}", besseltrig::real::ratio_to_decimal_string(x), e.to_sci_string(sig)).unwrap();
    }
    s
}

fn zeros_out(zs: &[ZeroReport], out: Output, sig: usize) -> String {
    match out {
        Output::Json => json(&serde_json::Value::Array(zs.iter().map(|z| z.to_json(sig)).collect())),
        Output::Csv => {
            let mut s = String::from("index,location,reference,discrepancy\n");
            for z in zs {
                writeln!(
                    s,
                    "{},{},{},{}",
                    z.zero_index,
                    z.location.to_sci_string(sig),
                    z.reference.to_sci_string(sig),
                    z.discrepancy.to_sci_string(sig.min(6))
                )
                .unwrap();
            }
            s
        }
        Output::Text => {
            let mut s = String::new();
            for z in zs {
                writeln!(
                    s,
                    "zero {}: {} (oracle {}, diff {})",
                    z.zero_index,
                    z.location.to_sci_string(sig),
                    z.reference.to_sci_string(sig),
                    z.discrepancy.to_sci_string(6)
                )
                .unwrap();
            }
            s
        }
    }
}

fn single_identity(q: &PowerSumQuery, out: Output, prec: Precision, ok: &mut bool) -> Result<String> {
    let cf = closed_form(q)?;
    let rhs = cf.eval(&q.theta, prec);
    let lhs = brute_force(q, prec)?;
    let diff = (&lhs - &rhs).abs();
    *ok = diff <= Real::pow10(8 - prec.digits() as i64, prec);
    let exact = match &q.theta {
        Theta::PiMultiple(t) => Some(cf.eval_exact(t).text()),
        Theta::Raw(_) => None,
    };
    let sig = (prec.digits() as usize).min(20);
    Ok(match out {
        Output::Json => json(&serde_json::json!({
            "family": q.family,
            "node_param": q.node_param,
            "q": q.q,
            "k": q.k,
            "theta": q.theta.text(),
            "closed_form": cf.text(),
            "exact": exact,
            "closed_form_value": rhs.to_sci_string(sig),
            "direct_sum": lhs.to_sci_string(sig),
            "diff": diff.to_sci_string(4),
        })),
        Output::Csv => return Err(no_csv("identity")),
        Output::Text => {
            let mut s = String::new();
            writeln!(s, "{} n={} q={} k={} theta={}", q.family.cli_name(), q.node_param, q.q, q.k, q.theta.text())
                .unwrap();
            writeln!(s, "closed form  {}", cf.text()).unwrap();
            if let Some(e) = exact {
                writeln!(s, "exact        {e}").unwrap();
            }
            writeln!(s, "value        {}", rhs.to_sci_string(sig)).unwrap();
            writeln!(s, "direct sum   {}", lhs.to_sci_string(sig)).unwrap();
            writeln!(s, "diff         {}", diff.to_sci_string(4)).unwrap();
            s
        }
    })
}

fn verify_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{} n={} q={} k={} over {} theta point(s)",
        r.family.cli_name(),
        if r.ranges.node_param.start == r.ranges.node_param.end {
            r.ranges.node_param.start.to_string()
        } else {
            format!("{}..{}", r.ranges.node_param.start, r.ranges.node_param.end)
        },
        r.ranges.q,
        r.ranges.k,
        r.theta_points
    )
    .unwrap();
    writeln!(s, "checked {}, skipped {}, failures {}", r.checked, r.skipped, r.failed.len()).unwrap();
    writeln!(s, "max diff {} (tolerance {})", r.max_diff, r.tolerance).unwrap();
    for f in &r.failed {
        writeln!(
            s,
            "FAIL n={} q={} k={} theta={}: direct {} closed form {} diff {}",
            f.params.node_param, f.params.q, f.params.k, f.theta, f.lhs, f.rhs, f.diff
        )
        .unwrap();
    }
    s
}

fn catalog_out(out: Output) -> Result<String> {
    let rows = CATALOG_NAMES.iter().map(|n| catalog(n)).collect::<Result<Vec<_>>>()?;
    let mut s = String::new();
    match out {
        Output::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "name": f.name,
                        "target_p": f.target.get(),
                        "terms": f.terms.len(),
                        "error_order": f.predicted_error.order,
                        "error_coeff": f.predicted_error.coeff.as_ref().map(|c| c.text()),
                        "equivalent": besseltrig::formula::catalog_equivalent(f.name.as_deref().unwrap_or_default())
                            .map(|sp| sp.id()),
                    })
                })
                .collect();
            return Ok(json(&serde_json::Value::Array(items)));
        }
        Output::Csv => {
            s.push_str("name,target_p,terms,error_order\n");
            for f in &rows {
                writeln!(s, "{},{},{},{}", f.name.as_deref().unwrap_or_default(), f.target.get(), f.terms.len(), f.predicted_error.order)
                    .unwrap();
            }
        }
        Output::Text => {
            writeln!(s, "{:<10} {:<6} {:>5} {:>6}", "name", "target", "terms", "order").unwrap();
            for f in &rows {
                writeln!(
                    s,
                    "{:<10} {:<6} {:>5} {:>6}",
                    f.name.as_deref().unwrap_or_default(),
                    format!("J_{}", f.target.get()),
                    f.terms.len(),
                    f.predicted_error.order
                )
                .unwrap();
            }
        }
    }
    Ok(s)
}

fn eval_out(f: &TrigFormula, xs: &[String], out: Output, prec: Precision, sig: usize) -> Result<String> {
    let resolved = f.resolve(prec);
    let mut rows = Vec::with_capacity(xs.len());
    for s in xs {
        let x = Real::parse_decimal(s, prec)?;
        let approx = resolved.eval(&x);
        let reference = bessel_j(f.target, &x, prec)?;
        let err = &reference - &approx;
        rows.push((s.trim().to_string(), approx, reference, err));
    }
    let mut s = String::new();
    match out {
        Output::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(x, a, r, e)| {
                    serde_json::json!({
                        "x": x,
                        "approx": a.to_sci_string(sig),
                        "reference": r.to_sci_string(sig),
                        "error": e.to_sci_string(sig),
                    })
                })
                .collect();
            return Ok(json(&serde_json::json!({ "formula": f.id(), "points": items })));
        }
        Output::Csv => {
            s.push_str("x,approx,reference,error\n");
            for (x, a, r, e) in &rows {
                writeln!(s, "{x},{},{},{}", a.to_sci_string(sig), r.to_sci_string(sig), e.to_sci_string(sig)).unwrap();
            }
        }
        Output::Text => {
            for (x, a, r, e) in &rows {
                writeln!(
                    s,
                    "x = {x}: approx {} oracle {} error {}",
                    a.to_sci_string(sig),
                    r.to_sci_string(sig),
                    e.to_sci_string(6)
                )
                .unwrap();
            }
        }
    }
    Ok(s)
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            if let Err(e) = emit(&cli.out, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numeric() { 3 } else { 2 })
        }
    }
}
