//! The `finicert` command line. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 mathematical rejection or refutation, 2 input
//! error, 3 step budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certifier::serial::CertificateFile;
use crate::certifier::{
    fiber_dimension, finiteness_certificate, CertError, CertifierConfig, FiberLength,
    RejectionWitness, Rewriter, SquareSystem, Verdict,
};
use crate::corpus::{self, SplitMix64};
use crate::groebner::{OrderKind, DEFAULT_BUDGET};
use crate::liealg::{audit_suite, AuditOptions, LieAlgebraSpec, LieError};
use crate::parse::parse_monomial;
use crate::polyring::{scalar, Scalar};
use crate::sysfile::SystemFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Parser)]
#[command(
    name = "finicert",
    version,
    about = "Certify that a homogeneous polynomial map with only the origin over 0 is finite",
    after_help = "Exit codes: 0 success, 1 rejection/refutation, 2 input error, 3 step budget exceeded."
)]
struct Cli {
    /// Monomial order for Gröbner computations.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Step budget per Gröbner computation (reductions plus pair steps).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the system's only common zero is the origin.
    ///
    /// Example: finicert check newton2.sys
    Check { system: PathBuf },
    /// Build and self-verify a finiteness certificate.
    ///
    /// Example: finicert certify newton2.sys --out newton2.cert.json
    Certify {
        system: PathBuf,
        /// Where to write the certificate (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a system, independently of how it was made.
    ///
    /// Example: finicert verify newton2.sys newton2.cert.json
    Verify { system: PathBuf, certificate: PathBuf },
    /// Express a monomial over the certificate's generator set.
    ///
    /// Example: finicert rewrite newton2.sys newton2.cert.json "x^3"
    Rewrite { system: PathBuf, certificate: PathBuf, monomial: String },
    /// Length of the fiber over a target point.
    ///
    /// Example: finicert fiber elementary2.sys --target 1,-6
    Fiber(FiberArgs),
    /// List or emit the built-in systems.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Decide nilpotency of an element by both routes.
    ///
    /// Example: finicert nilpotent sl2 0,1,0
    Nilpotent {
        algebra: String,
        /// Comma-separated coordinates in the algebra's basis.
        #[arg(allow_hyphen_values = true)]
        coordinates: String,
    },
    /// Run the invariant audit suite on a shipped Lie algebra.
    ///
    /// Example: finicert liealg-audit sl3 --seed 7
    LiealgAudit {
        algebra: String,
        /// Random elements for the nilpotency route comparison.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Constructed nilpotent conjugates.
        #[arg(long, default_value_t = 100)]
        nilpotents: usize,
    },
}

#[derive(Debug, Args)]
struct FiberArgs {
    system: PathBuf,
    /// Comma-separated rational coordinates, e.g. `1,-6` or `1/2,0`.
    #[arg(long, allow_hyphen_values = true)]
    target: Option<String>,
    /// Number of seeded random integer targets in [-9, 9] (used when no
    /// --target is given).
    #[arg(long, default_value_t = 1)]
    random: usize,
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    /// Names, expected status and degrees.
    List,
    /// Print (or write) one entry in system-file format.
    Emit {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every entry as `<name>.sys` into a directory.
    Dump {
        #[arg(long)]
        out: PathBuf,
    },
    /// A seeded random dense system.
    ///
    /// Example: finicert corpus random --vars 2 --degrees 2,2 --seed 3
    Random {
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Comma-separated degrees, one per variable.
        #[arg(long, default_value = "2,2")]
        degrees: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        let code = match &e {
            CertError::NotFinite(_) | CertError::CertificateInvalid(_) => EXIT_REJECTED,
            CertError::ResourceBudgetExceeded(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        let code = if matches!(e, LieError::RouteDisagreement { .. }) { EXIT_REJECTED } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    config: CertifierConfig,
    seed: u64,
    out: &'a mut dyn Write,
}

macro_rules! say {
    ($ctx:expr, $($arg:tt)*) => {
        writeln!($ctx.out, $($arg)*).map_err(|e| Failure::input(format!("write failed: {e}")))?
    };
}

/// Runs the CLI on `args` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    let config = CertifierConfig {
        order: match cli.order {
            OrderArg::Grevlex => OrderKind::Grevlex,
            OrderArg::Lex => OrderKind::Lex,
        },
        budget: Some(cli.budget),
    };
    let mut ctx = Ctx { config, seed: cli.seed, out };
    let result = match cli.command {
        Command::Check { system } => cmd_check(&mut ctx, &system),
        Command::Certify { system, out } => cmd_certify(&mut ctx, &system, out.as_deref()),
        Command::Verify { system, certificate } => cmd_verify(&mut ctx, &system, &certificate),
        Command::Rewrite { system, certificate, monomial } => cmd_rewrite(&mut ctx, &system, &certificate, &monomial),
        Command::Fiber(args) => cmd_fiber(&mut ctx, &args),
        Command::Corpus { action } => cmd_corpus(&mut ctx, action),
        Command::Nilpotent { algebra, coordinates } => cmd_nilpotent(&mut ctx, &algebra, &coordinates),
        Command::LiealgAudit { algebra, samples, nilpotents } => cmd_liealg_audit(&mut ctx, &algebra, samples, nilpotents),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn load_file(path: &Path) -> Result<SystemFile, Failure> {
    SystemFile::parse(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<SquareSystem, Failure> {
    let f = load_file(path)?;
    SquareSystem::new(f.ring, f.polys).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_certificate(path: &Path) -> Result<CertificateFile, Failure> {
    CertificateFile::from_json(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_scalars(text: &str) -> Result<Vec<Scalar>, Failure> {
    text.split(',')
        .map(|s| scalar::parse_scalar(s.trim()).map_err(|e| Failure::input(format!("bad coordinate {s:?}: {e}"))))
        .collect()
}

fn show_point(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar::to_display).collect();
    format!("({})", parts.join(", "))
}

fn degrees_text(sys: &SquareSystem) -> String {
    let d: Vec<String> = sys.degrees().iter().map(u32::to_string).collect();
    format!("({})", d.join(", "))
}

fn report_witness(ctx: &mut Ctx<'_>, sys: &SquareSystem, w: &RejectionWitness) -> Result<(), Failure> {
    let ring = sys.ring();
    let names = ring.chart_names(w.chart);
    say!(ctx, "witness chart: {} ({} = 1)", w.chart + 1, ring.names()[w.chart]);
    say!(ctx, "chart variables: {}", if names.is_empty() { "(none)".to_string() } else { names.join(", ") });
    say!(ctx, "reduced Groebner basis of the chart ideal (proper):");
    for g in w.basis.basis() {
        say!(ctx, "  {}", crate::parse::format_polynomial(g, &names));
    }
    say!(ctx, "witness audit: {}", if w.audit(sys) { "passed" } else { "FAILED" });
    Ok(())
}

fn cmd_check(ctx: &mut Ctx<'_>, path: &Path) -> Outcome {
    let f = load_file(path)?;
    let n = f.ring.arity();
    match Verdict::of(f.ring.clone(), f.polys, &ctx.config)? {
        Verdict::InputError(e) => Err(Failure::input(format!("{}: {e}", path.display()))),
        Verdict::CertifiedFinite => {
            say!(ctx, "verdict: FINITE");
            say!(ctx, "the only common zero is the origin; all {n} chart ideals are the unit ideal");
            Ok(EXIT_OK)
        }
        Verdict::RejectedPositiveDimensional(w) => {
            let sys = load_system(path)?;
            say!(ctx, "verdict: REJECTED (zero fiber is positive dimensional)");
            report_witness(ctx, &sys, &w)?;
            Ok(EXIT_REJECTED)
        }
    }
}

fn cmd_certify(ctx: &mut Ctx<'_>, path: &Path, out: Option<&Path>) -> Outcome {
    let sys = load_system(path)?;
    let cert = match finiteness_certificate(&sys, &ctx.config) {
        Ok(c) => c,
        Err(CertError::NotFinite(w)) => {
            say!(ctx, "verdict: REJECTED (zero fiber is positive dimensional); no certificate written");
            report_witness(ctx, &sys, &w)?;
            return Ok(EXIT_REJECTED);
        }
        Err(e) => return Err(e.into()),
    };
    let c = cert.c;
    let file = CertificateFile::new(&sys, cert);
    let json = file.to_json();
    match out {
        Some(p) => {
            write_file(p, &json)?;
            say!(ctx, "certified: c = {c}, degrees {}, hash {}", degrees_text(&sys), file.system_hash);
            say!(ctx, "wrote {}", p.display());
        }
        None => {
            ctx.out.write_all(json.as_bytes()).map_err(|e| Failure::input(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(ctx: &mut Ctx<'_>, system: &Path, certificate: &Path) -> Outcome {
    let sys = load_system(system)?;
    let file = load_certificate(certificate)?;
    match file.verify_against(&sys) {
        Ok(()) => {
            say!(ctx, "certificate valid: X_k^{} lies in the ideal of the system for every k", file.certificate.c);
            Ok(EXIT_OK)
        }
        Err(e) => {
            say!(ctx, "certificate REJECTED: {e}");
            Ok(EXIT_REJECTED)
        }
    }
}

fn cmd_rewrite(ctx: &mut Ctx<'_>, system: &Path, certificate: &Path, monomial: &str) -> Outcome {
    let sys = load_system(system)?;
    let file = load_certificate(certificate)?;
    if let Err(e) = file.verify_against(&sys) {
        say!(ctx, "certificate REJECTED: {e}");
        return Ok(EXIT_REJECTED);
    }
    let names = sys.ring().names();
    let alpha = parse_monomial(monomial, names).map_err(|e| Failure::input(format!("monomial: {e}")))?;
    let mut rw = Rewriter::new(&sys, &file.certificate)?;
    let result = rw.rewrite(&alpha)?;
    let p_names: Vec<String> = (1..=sys.arity()).map(|i| format!("p{i}")).collect();
    let gens = rw.generators();
    say!(ctx, "generators: {} monomials with every exponent < {}", gens.len(), gens.c);
    say!(ctx, "{} =", crate::parse::format_monomial(&alpha, names));
    for (s, a) in result.terms.iter().rev() {
        say!(ctx, "  + ({}) * {}", crate::parse::format_polynomial(a, &p_names), crate::parse::format_monomial(s, names));
    }
    say!(ctx, "where p_i is the i-th polynomial of the system");
    say!(ctx, "substitution check: passed");
    Ok(EXIT_OK)
}

fn cmd_fiber(ctx: &mut Ctx<'_>, args: &FiberArgs) -> Outcome {
    let sys = load_system(&args.system)?;
    let n = sys.arity();
    let targets: Vec<Vec<Scalar>> = match &args.target {
        Some(t) => {
            let v = parse_scalars(t)?;
            if v.len() != n {
                return Err(Failure::input(format!("target has {} coordinates, system has {n} polynomials", v.len())));
            }
            vec![v]
        }
        None => {
            let mut rng = SplitMix64::new(ctx.seed);
            (0..args.random).map(|_| (0..n).map(|_| scalar::int(rng.range_i64(-9, 9))).collect()).collect()
        }
    };
    for t in &targets {
        let len = fiber_dimension(&sys, t, &ctx.config)?;
        say!(ctx, "target {}: {len}", show_point(t));
        if let FiberLength::Length(l) = len {
            if l as u64 != sys.degree_product() {
                say!(ctx, "  (degree product is {})", sys.degree_product());
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_corpus(ctx: &mut Ctx<'_>, action: CorpusAction) -> Outcome {
    match action {
        CorpusAction::List => {
            for e in corpus::all_entries() {
                let degrees: Vec<String> = e.polys.iter().map(|p| p.degree().to_string()).collect();
                say!(ctx, "{:<18} {:<21} degrees ({})  {}", e.name, e.expected.as_str(), degrees.join(", "), e.note);
            }
            say!(ctx, "random: `corpus random --vars N --degrees d1,..,dN --seed S` (N <= 3, d <= 3)");
        }
        CorpusAction::Emit { name, out } => {
            let e = corpus::entry_by_name(&name).ok_or_else(|| Failure::input(format!("unknown corpus entry {name:?}")))?;
            emit(ctx, &e.to_system_file(), out.as_deref())?;
        }
        CorpusAction::Dump { out } => {
            fs::create_dir_all(&out).map_err(|e| Failure::input(format!("cannot create {}: {e}", out.display())))?;
            for e in corpus::all_entries() {
                let p = out.join(format!("{}.sys", e.name));
                write_file(&p, &e.to_system_file())?;
                say!(ctx, "wrote {}", p.display());
            }
        }
        CorpusAction::Random { vars, degrees, out } => {
            let degrees: Vec<u32> = degrees
                .split(',')
                .map(|d| d.trim().parse().map_err(|_| Failure::input(format!("bad degree {d:?}"))))
                .collect::<Result<_, _>>()?;
            let sys = corpus::random_system(vars, &degrees, ctx.seed).map_err(|e| Failure::input(e.to_string()))?;
            let text = format!(
                "# random system: {vars} variables, degrees {}, seed {}\n{}",
                degrees_text(&sys),
                ctx.seed,
                SystemFile::new(sys.ring().clone(), sys.polys().to_vec()).to_text()
            );
            emit(ctx, &text, out.as_deref())?;
        }
    }
    Ok(EXIT_OK)
}

fn emit(ctx: &mut Ctx<'_>, text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => {
            write_file(p, text)?;
            say!(ctx, "wrote {}", p.display());
        }
        None => ctx.out.write_all(text.as_bytes()).map_err(|e| Failure::input(e.to_string()))?,
    }
    Ok(())
}

fn cmd_nilpotent(ctx: &mut Ctx<'_>, algebra: &str, coordinates: &str) -> Outcome {
    let g = LieAlgebraSpec::by_name(algebra)?;
    let x = parse_scalars(coordinates)?;
    let (a, b) = g.nilpotency_routes(&x)?;
    let yn = |v: bool| if v { "nilpotent" } else { "not nilpotent" };
    let ring = g.coordinate_ring();
    say!(ctx, "algebra: {} (dim {}, basis {})", g.name(), g.dim(), ring.names().join(", "));
    say!(ctx, "element: {}", show_point(&x));
    say!(ctx, "route A, ad(x)^{} = 0: {}", g.dim(), yn(a));
    say!(ctx, "route B, Tr(ad(x)^k) = 0 for k = 1..{}: {}", g.dim(), yn(b));
    if a != b {
        say!(ctx, "nilpotent: ROUTES DISAGREE");
        return Ok(EXIT_REJECTED);
    }
    say!(ctx, "nilpotent: {} (routes agree)", if a { "yes" } else { "no" });
    Ok(if a { EXIT_OK } else { EXIT_REJECTED })
}

fn cmd_liealg_audit(ctx: &mut Ctx<'_>, algebra: &str, samples: usize, nilpotents: usize) -> Outcome {
    let g = LieAlgebraSpec::by_name(algebra)?;
    let opts = AuditOptions { seed: ctx.seed, random_elements: samples, nilpotents, ..AuditOptions::default() };
    say!(ctx, "audit of {} (dim {}, seed {})", g.name(), g.dim(), ctx.seed);
    let lines = audit_suite(&g, &opts);
    for l in &lines {
        say!(ctx, "{} {}: {}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    say!(ctx, "{} of {} checks passed", lines.len() - failed, lines.len());
    Ok(if failed == 0 { EXIT_OK } else { EXIT_REJECTED })
}
