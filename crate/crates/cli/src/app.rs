//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsatoms_core::sequence::{
    self, fixed_decimal, growth_report, rational_string, verify_genfunc_coeffs, verify_recursions,
    CheckReport, Enclosure, TableSet, TABLE1_HEADER, TABLE2_HEADER,
};
use nsatoms_core::structure::{level_sets, matrix_word, sigma_level_sets, sigma_word};
use nsatoms_core::{suites, Error, Family, Limits, NumericalMonoid, NumericalSet, Strategy};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bfile::BFile;
use crate::cache::{self, CacheError};

#[derive(Parser, Debug)]
#[command(
    name = "nsatoms",
    version,
    about = "Numerical sets without small atoms: tables, checks and sequences"
)]
pub struct Cli {
    /// Worker threads for counting (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Sequence cache file.
    #[arg(
        long,
        global = true,
        env = "NSATOMS_CACHE",
        default_value = "./nsatoms-cache.txt"
    )]
    cache: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Lift the desk-scale enumeration limits.
    #[arg(long, global = true)]
    allow_long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bounds for the limit of beta.
    Table1 {
        #[arg(long, default_value_t = 14)]
        max_n: u32,
    },
    /// Approximations of the symmetric limit.
    Table2 {
        #[arg(long, default_value_t = 32)]
        max_n: u32,
    },
    /// One sequence through index `max`.
    Seq {
        /// A, Aprime, Asigma or Asigmaprime.
        family: String,
        #[arg(long)]
        max: u32,
    },
    /// Fraction of numerical sets with Frobenius number g having a small atom.
    Beta(RatioArgs),
    /// Fraction of numerical sets with Frobenius number g having no small atom.
    Gamma(RatioArgs),
    /// Beta restricted to maximal negative semisymmetric sets.
    BetaSigma(RatioArgs),
    /// Gamma restricted to maximal negative semisymmetric sets.
    GammaSigma(RatioArgs),
    /// Certified enclosure of a limit.
    Enclose {
        #[arg(value_enum)]
        bound: Bound,
        #[arg(long)]
        n: u32,
        /// Decimal places in CSV output.
        #[arg(long, default_value_t = 6)]
        digits: u32,
        /// Print exact `p/q` endpoints.
        #[arg(long)]
        exact: bool,
    },
    /// Run an invariant suite.
    Verify(VerifyArgs),
    /// Anti-atom set of a monoid given as `g=..;in=..`.
    Antiatom { spec: String },
    /// OEIS b-file interchange.
    Oeis {
        #[arg(value_enum)]
        action: OeisAction,
        target: String,
        #[arg(long, default_value_t = 19)]
        terms: u32,
        #[arg(long)]
        path: PathBuf,
    },
    /// Spawning tree output.
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
}

#[derive(Args, Debug)]
struct RatioArgs {
    #[arg(long)]
    g: u32,
    /// Print `p/q` instead of a rounded decimal.
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum Bound {
    BetaInf,
    GammaInf,
    BetaSigmaInf,
    GammaSigmaInf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Recursions,
    Genfunc,
    Bounds,
    Bijections,
    Determinism,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest g for brute-force scans.
    #[arg(long)]
    g_max: Option<u32>,
    /// Largest g for symmetric brute-force scans.
    #[arg(long)]
    sigma_g_max: Option<u32>,
    /// Largest k for non-symmetric sequences.
    #[arg(long)]
    k_max: Option<u32>,
    /// Largest k for symmetric sequences.
    #[arg(long)]
    sigma_k_max: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OeisAction {
    Export,
    Check,
}

#[derive(Subcommand, Debug)]
enum TreeAction {
    /// Print `<level>;<word>` for every vertex through `levels`.
    Dump {
        #[arg(long)]
        levels: u32,
        #[arg(long)]
        sigma: bool,
    },
}

/// Outcome classes mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Verification(String),
    Usage(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Semantic(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Semantic(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::LimitExceeded { .. }
            | Error::Domain(_)
            | Error::Parse(_)
            | Error::WindowMismatch(..)
            | Error::WindowViolation(_)
            | Error::InvalidSet(_)
            | Error::InvalidMask(_) => Failure::Usage(m),
            Error::MissingSequenceData { .. } => Failure::Verification(m),
            _ => Failure::Semantic(m),
        }
    }
}

impl From<CacheError> for Failure {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::CorruptCache(_) | CacheError::VersionMismatch(_) => {
                Failure::Verification(e.to_string())
            }
            CacheError::Io { .. } | CacheError::Locked(_) => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

struct Context<'a> {
    limits: Limits,
    format: Format,
    tables: TableSet,
    out: &'a mut dyn Write,
}

impl Context<'_> {
    fn fill(&mut self, family: Family, max: u32) -> Result<(), Failure> {
        self.tables
            .fill(family, max, &self.limits, Strategy::Parallel)?;
        Ok(())
    }

    fn require_recursions(&self) -> Outcome {
        let report = verify_recursions(&self.tables);
        let first = report.failures().next().map(|c| c.label.clone());
        match first {
            None => Ok(()),
            Some(label) => Err(Failure::Verification(format!(
                "recursion check failed: {label}"
            ))),
        }
    }

    fn emit_json(&mut self, v: &Value) -> Outcome {
        writeln!(self.out, "{v}")?;
        Ok(())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    // Output is buffered so the command can run on the worker pool.
    let mut buffer = Vec::new();
    let result = pool.install(|| execute(cli, &mut buffer));
    if out.write_all(&buffer).and_then(|()| out.flush()).is_err() {
        return 2;
    }
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Outcome {
    let limits = if cli.allow_long {
        Limits::long()
    } else {
        Limits::default()
    };
    let tables = cache::load(&cli.cache)?;
    let before = cache::render(&tables);
    let mut ctx = Context {
        limits,
        format: cli.format,
        tables,
        out,
    };
    let verified = matches!(cli.command, Command::Verify(_));
    dispatch(&mut ctx, cli.command)?;
    if cache::render(&ctx.tables) != before {
        if !verified {
            ctx.require_recursions()?;
        }
        cache::save(&cli.cache, &ctx.tables)?;
    }
    Ok(())
}

fn dispatch(ctx: &mut Context, command: Command) -> Outcome {
    match command {
        Command::Table1 { max_n } => table1(ctx, max_n),
        Command::Table2 { max_n } => table2(ctx, max_n),
        Command::Seq { family, max } => seq(ctx, &family, max),
        Command::Beta(a) => ratio(ctx, "beta", a, false, false),
        Command::Gamma(a) => ratio(ctx, "gamma", a, false, true),
        Command::BetaSigma(a) => ratio(ctx, "beta_sigma", a, true, false),
        Command::GammaSigma(a) => ratio(ctx, "gamma_sigma", a, true, true),
        Command::Enclose {
            bound,
            n,
            digits,
            exact,
        } => enclose(ctx, bound, n, digits, exact),
        Command::Verify(args) => verify(ctx, &args),
        Command::Antiatom { spec } => antiatom(ctx, &spec),
        Command::Oeis {
            action,
            target,
            terms,
            path,
        } => oeis(ctx, action, &target, terms, &path),
        Command::Tree {
            action: TreeAction::Dump { levels, sigma },
        } => tree_dump(ctx, levels, sigma),
    }
}

fn table1(ctx: &mut Context, max_n: u32) -> Outcome {
    ctx.fill(Family::A, max_n)?;
    ctx.fill(Family::APrime, max_n)?;
    ctx.require_recursions()?;
    let rows = sequence::table1(&ctx.tables, max_n)?;
    match ctx.format {
        Format::Csv => {
            writeln!(ctx.out, "{TABLE1_HEADER}")?;
            for r in &rows {
                writeln!(ctx.out, "{}", r.csv())?;
            }
            Ok(())
        }
        Format::Json => ctx.emit_json(&Value::Array(rows.iter().map(|r| r.json()).collect())),
    }
}

fn table2(ctx: &mut Context, max_n: u32) -> Outcome {
    if max_n == 0 {
        return Err(Failure::Usage("--max-n must be >= 1".into()));
    }
    ctx.fill(Family::ASigma, max_n)?;
    ctx.fill(Family::ASigmaPrime, 2 * max_n - 1)?;
    ctx.require_recursions()?;
    let rows = sequence::table2(&ctx.tables, max_n)?;
    match ctx.format {
        Format::Csv => {
            writeln!(ctx.out, "{TABLE2_HEADER}")?;
            for r in &rows {
                writeln!(ctx.out, "{}", r.csv())?;
            }
            Ok(())
        }
        Format::Json => ctx.emit_json(&Value::Array(rows.iter().map(|r| r.json()).collect())),
    }
}

fn seq(ctx: &mut Context, family: &str, max: u32) -> Outcome {
    let family: Family = family.parse()?;
    ctx.fill(family, max)?;
    let table = ctx.tables.get(family);
    let rows: Vec<(u32, String, &str)> = table
        .iter()
        .take(max as usize)
        .map(|(k, e)| {
            let tag = match e.provenance {
                sequence::Provenance::Enumerated => "enumerated",
                sequence::Provenance::Recursion => "recursion",
                sequence::Provenance::Imported => "imported",
            };
            (k, e.value.to_string(), tag)
        })
        .collect();
    match ctx.format {
        Format::Csv => {
            writeln!(ctx.out, "k,{},provenance", family.name())?;
            for (k, v, tag) in rows {
                writeln!(ctx.out, "{k},{v},{tag}")?;
            }
            Ok(())
        }
        Format::Json => {
            let items = rows
                .into_iter()
                .map(|(k, v, tag)| json!({ "k": k, "value": v, "provenance": tag }))
                .collect();
            ctx.emit_json(&json!({ "family": family.name(), "values": Value::Array(items) }))
        }
    }
}

fn ratio(ctx: &mut Context, name: &str, args: RatioArgs, sigma: bool, complement: bool) -> Outcome {
    let k = args.g.saturating_sub(1) / 2;
    ctx.fill(if sigma { Family::ASigma } else { Family::A }, k)?;
    let t = &ctx.tables;
    let q = match (sigma, complement) {
        (false, false) => sequence::beta(args.g, t)?,
        (false, true) => sequence::gamma(args.g, t)?,
        (true, false) => sequence::beta_sigma(args.g, t)?,
        (true, true) => sequence::gamma_sigma(args.g, t)?,
    };
    match ctx.format {
        Format::Csv if args.exact => writeln!(ctx.out, "{}", rational_string(&q))?,
        Format::Csv => writeln!(ctx.out, "{}", fixed_decimal(&q, 6))?,
        Format::Json => {
            let v = json!({ "quantity": name, "g": args.g, "value": rational_string(&q), "decimal": fixed_decimal(&q, 6) });
            ctx.emit_json(&v)?;
        }
    }
    Ok(())
}

fn enclose(ctx: &mut Context, bound: Bound, n: u32, digits: u32, exact: bool) -> Outcome {
    let (name, e): (&str, Enclosure) = match bound {
        Bound::BetaInf | Bound::GammaInf => {
            ctx.fill(Family::A, n)?;
            if matches!(bound, Bound::BetaInf) {
                ("beta_inf", sequence::enclose_beta_inf(n, &ctx.tables)?)
            } else {
                ("gamma_inf", sequence::enclose_gamma_inf(n, &ctx.tables)?)
            }
        }
        Bound::BetaSigmaInf | Bound::GammaSigmaInf => {
            ctx.fill(Family::ASigma, n.saturating_sub(1))?;
            if matches!(bound, Bound::BetaSigmaInf) {
                (
                    "beta_sigma_inf",
                    sequence::enclose_beta_sigma_inf(n, &ctx.tables)?,
                )
            } else {
                (
                    "gamma_sigma_inf",
                    sequence::enclose_gamma_sigma_inf(n, &ctx.tables)?,
                )
            }
        }
    };
    let parts = [e.lo().clone(), e.hi().clone(), e.midpoint(), e.half_width()];
    match ctx.format {
        Format::Csv => {
            writeln!(ctx.out, "bound,n,lo,hi,midpoint,half_width")?;
            let cells: Vec<String> = parts
                .iter()
                .map(|q| {
                    if exact {
                        rational_string(q)
                    } else {
                        fixed_decimal(q, digits)
                    }
                })
                .collect();
            writeln!(ctx.out, "{name},{n},{}", cells.join(","))?;
            Ok(())
        }
        Format::Json => {
            let [lo, hi, mid, half] = parts.map(|q| rational_string(&q));
            ctx.emit_json(&json!({ "bound": name, "n": n, "lo": lo, "hi": hi, "midpoint": mid, "half_width": half }))
        }
    }
}

fn verify(ctx: &mut Context, args: &VerifyArgs) -> Outcome {
    let suites: Vec<Suite> = if args.suite == Suite::All {
        vec![
            Suite::Oracle,
            Suite::Recursions,
            Suite::Genfunc,
            Suite::Bounds,
            Suite::Bijections,
            Suite::Determinism,
        ]
    } else {
        vec![args.suite]
    };
    let mut reports = Vec::new();
    for suite in suites {
        reports.push(run_suite(ctx, suite, args)?);
    }
    let mut failed = 0;
    let mut total = 0;
    match ctx.format {
        Format::Csv => {
            for r in &reports {
                write!(ctx.out, "{r}")?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .flat_map(|r| {
                    r.checks
                        .iter()
                        .map(|c| json!({ "suite": r.title, "check": c.label, "pass": c.pass }))
                })
                .collect();
            ctx.emit_json(&Value::Array(items))?;
        }
    }
    for r in &reports {
        total += r.checks.len();
        failed += r.failures().count();
    }
    if ctx.format == Format::Csv {
        writeln!(ctx.out, "verify: {total} checks, {failed} failed")?;
    }
    if failed > 0 {
        return Err(Failure::Verification(format!(
            "{failed} of {total} checks failed"
        )));
    }
    Ok(())
}

fn run_suite(ctx: &mut Context, suite: Suite, args: &VerifyArgs) -> Result<CheckReport, Failure> {
    let limits = ctx.limits;
    let strategy = Strategy::Parallel;
    let report = match suite {
        Suite::Oracle => suites::oracle_suite(
            args.g_max.unwrap_or(14),
            args.sigma_g_max.unwrap_or(29),
            &mut ctx.tables,
            &limits,
            strategy,
        )?,
        Suite::Recursions => {
            let (k, ks) = (args.k_max.unwrap_or(16), args.sigma_k_max.unwrap_or(32));
            ctx.fill(Family::A, k)?;
            ctx.fill(Family::APrime, 2 * k + 1)?;
            ctx.fill(Family::ASigma, ks)?;
            ctx.fill(Family::ASigmaPrime, (2 * ks).saturating_sub(1))?;
            verify_recursions(&ctx.tables)
        }
        Suite::Genfunc => {
            let n = 2 * args.k_max.unwrap_or(16) + 1;
            let ns = (2 * args.sigma_k_max.unwrap_or(32)).saturating_sub(1);
            ctx.fill(Family::A, (n - 1) / 2)?;
            ctx.fill(Family::APrime, n)?;
            ctx.fill(Family::ASigma, ns.saturating_sub(1) / 2)?;
            ctx.fill(Family::ASigmaPrime, ns)?;
            let mut r = verify_genfunc_coeffs(&ctx.tables, n, false)?;
            r.extend(verify_genfunc_coeffs(&ctx.tables, ns, true)?);
            r
        }
        Suite::Bounds => {
            let k = args.k_max.unwrap_or(16);
            ctx.fill(Family::A, k)?;
            ctx.fill(Family::APrime, k)?;
            ctx.fill(Family::ASigma, args.sigma_k_max.unwrap_or(32))?;
            ctx.fill(Family::ASigmaPrime, args.sigma_k_max.unwrap_or(32))?;
            let g = growth_report(&ctx.tables);
            let mut r = g.bounds;
            r.extend(g.monotone);
            let g_max = args.g_max.unwrap_or(12);
            ctx.fill(Family::A, g_max.saturating_sub(1) / 2)?;
            r.extend(sequence::anti_atom_bound_check(
                g_max,
                &ctx.tables,
                &limits,
            )?);
            r
        }
        Suite::Bijections => suites::bijection_suite(
            args.g_max.unwrap_or(14),
            args.k_max.unwrap_or(8),
            args.sigma_k_max.unwrap_or(12),
            10,
            &mut ctx.tables,
            &limits,
            strategy,
        )?,
        Suite::Determinism => suites::determinism_suite([12, 22, 26, 41], &limits)?,
        Suite::All => unreachable!("expanded by the caller"),
    };
    Ok(report)
}

fn antiatom(ctx: &mut Context, spec: &str) -> Outcome {
    let set: NumericalSet = spec
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let m = NumericalMonoid::try_from(set)?;
    let members = m.anti_atom_set();
    let class = set.classify_symmetry();
    match ctx.format {
        Format::Csv => {
            writeln!(ctx.out, "monoid {m}")?;
            writeln!(ctx.out, "count {}", members.len())?;
            writeln!(ctx.out, "type {}", m.type_number())?;
            writeln!(ctx.out, "symmetry {class}")?;
            if members.len() <= 64 {
                for s in &members {
                    writeln!(ctx.out, "member {s}")?;
                }
            }
            Ok(())
        }
        Format::Json => {
            let listed: Option<Vec<String>> =
                (members.len() <= 64).then(|| members.iter().map(|s| s.to_string()).collect());
            ctx.emit_json(&json!({
                "monoid": m.to_string(),
                "count": members.len(),
                "type": m.type_number(),
                "symmetry": class.to_string(),
                "members": listed,
            }))
        }
    }
}

/// `a(n) = A′^σ_{2n−1}` for `n = 1..=terms`.
fn a008929(ctx: &mut Context, terms: u32) -> Result<Vec<BigUint>, Failure> {
    ctx.fill(Family::ASigmaPrime, (2 * terms).saturating_sub(1))?;
    (1..=terms)
        .map(|n| Ok(ctx.tables.value(Family::ASigmaPrime, 2 * n - 1)?.clone()))
        .collect()
}

fn oeis(
    ctx: &mut Context,
    action: OeisAction,
    target: &str,
    terms: u32,
    path: &PathBuf,
) -> Outcome {
    if target != "A008929" {
        return Err(Failure::Usage(format!(
            "unsupported OEIS target {target:?}; only A008929"
        )));
    }
    match action {
        OeisAction::Export => {
            let b = BFile::new(a008929(ctx, terms)?);
            fs::write(path, b.render())?;
            writeln!(
                ctx.out,
                "wrote {terms} terms of A008929 to {}",
                path.display()
            )?;
            Ok(())
        }
        OeisAction::Check => {
            let text = fs::read_to_string(path)?;
            let b = BFile::parse(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let expected = a008929(ctx, b.terms().len() as u32)?;
            match b.first_mismatch(&expected) {
                None => {
                    writeln!(ctx.out, "ok: {} terms of A008929 match", b.terms().len())?;
                    Ok(())
                }
                Some(n) => {
                    let msg = format!(
                        "mismatch at n={n}: file has {}, computed {}",
                        b.terms()[n - 1],
                        expected[n - 1]
                    );
                    writeln!(ctx.out, "{msg}")?;
                    Err(Failure::Verification(msg))
                }
            }
        }
    }
}

fn tree_dump(ctx: &mut Context, levels: u32, sigma: bool) -> Outcome {
    let cap = match (sigma, ctx.limits == Limits::default()) {
        (false, true) => 10,
        (true, true) => 20,
        (_, false) => 30,
    };
    if levels > cap {
        return Err(Failure::Usage(format!(
            "--levels {levels} exceeds {cap}; use --allow-long"
        )));
    }
    let mut json_rows = Vec::new();
    for k in 0..=levels {
        let sets: Box<dyn Iterator<Item = NumericalSet>> = if sigma {
            sigma_level_sets(k)?
        } else {
            level_sets(k)?
        };
        for s in sets {
            let word = if sigma {
                sigma_word(&s).to_string()
            } else {
                matrix_word(&s).row_major()
            };
            match ctx.format {
                Format::Csv => writeln!(ctx.out, "{k};{word}")?,
                Format::Json => {
                    json_rows.push(json!({ "level": k, "word": word, "set": s.to_string() }))
                }
            }
        }
    }
    if ctx.format == Format::Json {
        ctx.emit_json(&Value::Array(json_rows))?;
    }
    Ok(())
}
