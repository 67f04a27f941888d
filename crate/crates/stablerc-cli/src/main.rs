//! `stablerc`: validation, enumeration, bijection runs and identity checks
//! for stable rigged configurations.
//!
//! Every verb reads JSON (from a file or `-` for stdin) and writes JSON or
//! a human-readable rendering. Exit codes: 0 ok, 1 verification failed,
//! 2 invalid input, 3 work budget exceeded.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use stablerc::bijection::psi_tilde_traced;
use stablerc::rigged::{check_stability, enumerate_rc, stable_profile, DEFAULT_MAX_CONFIGS};
use stablerc::tableaux::{enumerate_lr_bounded, lr_coefficient};
use stablerc::{
    fermionic_m, m_by_enumeration, psi, verify_identity, AffineType, Error, Family, Half, Kind, Partition,
    QuantumSpace, RiggedConfiguration, SkewTableau,
};

#[derive(Parser)]
#[command(
    name = "stablerc",
    version,
    about = "Stable rigged configurations and their bijections"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Bound on candidate configurations and rigged configurations visited.
    #[arg(long, default_value_t = DEFAULT_MAX_CONFIGS, global = true)]
    max_configs: u64,
    /// Bound on LR tableaux listed by `lr-coef --list`.
    #[arg(long, default_value_t = 100_000, global = true)]
    max_tableaux: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Check membership of a rigged configuration in RC(lambda, L).
    Validate {
        #[command(flatten)]
        rc: RcArgs,
        /// Weight to check against; defaults to the weight read off the configuration.
        #[arg(long, value_parser = parse_partition)]
        lambda: Option<Partition>,
        /// Also check vacancy numbers at unoccupied lengths.
        #[arg(long)]
        strict: bool,
    },
    /// Print the weight of a rigged configuration.
    Weight(RcArgs),
    /// Print every row with its vacancy number and rigging.
    Vacancy(RcArgs),
    /// Print the charge of a rigged configuration.
    Charge(RcArgs),
    /// List RC(lambda, L) in canonical order.
    Enumerate(InstanceArgs),
    /// Evaluate the fermionic formula M(lambda, L; q).
    Fermionic {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Compare against the charge generating function over all rigged configurations.
        #[arg(long)]
        check: bool,
    },
    /// Run the bijection onto a type-A rigged configuration and an LR tableau.
    Psi {
        #[command(flatten)]
        rc: RcArgs,
        /// Emit every intermediate state.
        #[arg(long)]
        trace: bool,
    },
    /// Invert `psi`, reading its JSON output.
    PsiInv {
        /// Output of `psi`; `-` or absent reads stdin.
        input: Option<PathBuf>,
        /// Emit every intermediate state.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the Littlewood-Richardson coefficient c^eta_{lambda mu}.
    LrCoef {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        eta: Partition,
        /// List the LR tableaux as well.
        #[arg(long)]
        list: bool,
    },
    /// Check M^kind(lambda, L) against its expansion over LR coefficients.
    VerifyIdentity {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Tile kind; defaults to the kind of the instance's type.
        #[arg(long)]
        kind: Option<Kind>,
        /// Ranks above the minimum stable rank used for the stable sums.
        #[arg(long, default_value_t = 1)]
        margin: usize,
    },
    /// Check the stability conditions of a rigged configuration.
    StableCheck(RcArgs),
}

#[derive(Args)]
struct RcArgs {
    /// Rigged configuration file; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct InstanceArgs {
    /// File with any of `type`, `rank`, `lambda`, `L`; flags override it.
    input: Option<PathBuf>,
    #[arg(long = "type")]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
    /// Partition as a JSON array, e.g. `[2,2,1]`.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    /// Quantum space as JSON triples `[a, i, multiplicity]`.
    #[arg(long = "L", value_parser = parse_space)]
    space: Option<QuantumSpace>,
}

fn parse_partition(s: &str) -> Result<Partition> {
    serde_json::from_str(s).with_context(|| format!("expected a partition like [2,1], got {s:?}"))
}

fn parse_space(s: &str) -> Result<QuantumSpace> {
    serde_json::from_str(s).with_context(|| format!("expected triples like [[1,1,2]], got {s:?}"))
}

fn read_input(path: Option<&PathBuf>) -> Result<(String, String)> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok((p.display().to_string(), text))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            Ok(("<stdin>".into(), text))
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("parsing {name}"))
}

fn read_rc(args: &RcArgs) -> Result<RiggedConfiguration> {
    let (name, text) = read_input(args.input.as_ref())?;
    parse_json(&name, &text)
}

struct Instance {
    ty: Option<AffineType>,
    lambda: Partition,
    space: QuantumSpace,
}

fn read_instance(args: &InstanceArgs) -> Result<Instance> {
    let mut file = Value::Null;
    if args.input.is_some() {
        let (name, text) = read_input(args.input.as_ref())?;
        file = parse_json(&name, &text)?;
    }
    let field = |key: &str| file.get(key).cloned();
    let family = match (args.family, field("type")) {
        (Some(f), _) => Some(f),
        (None, Some(v)) => Some(serde_json::from_value(v).context("field `type`")?),
        (None, None) => None,
    };
    let rank = match (args.rank, field("rank")) {
        (Some(r), _) => Some(r),
        (None, Some(v)) => Some(serde_json::from_value(v).context("field `rank`")?),
        (None, None) => None,
    };
    let lambda = match (&args.lambda, field("lambda")) {
        (Some(p), _) => p.clone(),
        (None, Some(v)) => serde_json::from_value(v).context("field `lambda`")?,
        (None, None) => bail!(Error::Invalid("missing `lambda`".into())),
    };
    let space = match (&args.space, field("L")) {
        (Some(l), _) => l.clone(),
        (None, Some(v)) => serde_json::from_value(v).context("field `L`")?,
        (None, None) => bail!(Error::Invalid("missing `L`".into())),
    };
    let ty = match (family, rank) {
        (Some(f), Some(r)) => Some(AffineType::new(f, r)?),
        (None, None) => None,
        _ => bail!(Error::Invalid("`type` and `rank` must be given together".into())),
    };
    Ok(Instance { ty, lambda, space })
}

fn require_type(inst: &Instance) -> Result<AffineType> {
    inst.ty
        .ok_or_else(|| anyhow!(Error::Invalid("missing `type` and `rank`".into())))
}

/// A rigged configuration with its rows annotated as `[length, vacancy, rigging]`.
#[derive(Serialize)]
struct Annotated {
    rc: RiggedConfiguration,
    annotated: Vec<Vec<(Half, i64, i64)>>,
}

impl Annotated {
    fn new(rc: RiggedConfiguration) -> Annotated {
        let annotated = rc.annotated();
        Annotated { rc, annotated }
    }
}

#[derive(Serialize, Deserialize)]
struct Source {
    #[serde(rename = "type")]
    family: Family,
    rank: usize,
}

#[derive(Serialize)]
struct PsiStepView {
    l: Half,
    letter: u32,
    k: usize,
    #[serde(flatten)]
    state: Annotated,
    tableau: SkewTableau,
}

#[derive(Serialize)]
struct PsiView {
    source: Source,
    lambda: Partition,
    mu: Partition,
    eta: Partition,
    #[serde(flatten)]
    state: Annotated,
    tableau: SkewTableau,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<PsiStepView>>,
}

#[derive(Deserialize)]
struct PsiInput {
    source: Source,
    rc: RiggedConfiguration,
    tableau: SkewTableau,
}

#[derive(Serialize)]
struct TildeStepView {
    k: usize,
    #[serde(flatten)]
    state: Annotated,
}

#[derive(Serialize)]
struct PsiInvView {
    #[serde(flatten)]
    state: Annotated,
    application_order: Vec<usize>,
    trace: Vec<TildeStepView>,
}

/// What a verb produced: its JSON value, its text rendering and whether a
/// verification it performed succeeded.
struct Report {
    json: Value,
    text: String,
    verified: bool,
}

impl Report {
    fn new(json: impl Serialize, text: String) -> Result<Report> {
        Ok(Report {
            json: serde_json::to_value(json)?,
            text,
            verified: true,
        })
    }

    fn verified(mut self, ok: bool) -> Report {
        self.verified = ok;
        self
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let limit = cli.max_configs;
    match &cli.command {
        Command::Validate { rc, lambda, strict } => {
            let rc = read_rc(rc)?;
            let lambda = match lambda {
                Some(l) => l.clone(),
                None => rc.weight()?,
            };
            let violations: Vec<String> = if *strict {
                rc.validate_strict(&lambda)
            } else {
                rc.validate(&lambda)
            }
            .iter()
            .map(ToString::to_string)
            .collect();
            let valid = violations.is_empty();
            let mut text = format!("valid: {valid}\nlambda: {lambda}\n");
            for v in &violations {
                writeln!(text, "  {v}")?;
            }
            let json = serde_json::json!({ "valid": valid, "lambda": lambda, "violations": violations });
            Ok(Report::new(json, text)?.verified(valid))
        }
        Command::Weight(args) => {
            let lambda = read_rc(args)?.weight()?;
            Report::new(serde_json::json!({ "lambda": lambda }), format!("{lambda}\n"))
        }
        Command::Vacancy(args) => {
            let rc = read_rc(args)?;
            let text = rc.to_string();
            Report::new(Annotated::new(rc), text)
        }
        Command::Charge(args) => {
            let rc = read_rc(args)?;
            let charge = rc.charge()?;
            Report::new(serde_json::json!({ "charge": charge }), format!("{charge}\n"))
        }
        Command::Enumerate(args) => {
            let inst = read_instance(args)?;
            let rcs = enumerate_rc(require_type(&inst)?, &inst.lambda, &inst.space, limit)?;
            let mut text = format!("{} rigged configurations\n", rcs.len());
            for rc in &rcs {
                write!(text, "{rc}")?;
            }
            Report::new(serde_json::json!({ "count": rcs.len(), "rcs": rcs }), text)
        }
        Command::Fermionic { instance, check } => {
            let inst = read_instance(instance)?;
            let ty = require_type(&inst)?;
            let result = fermionic_m(ty, &inst.lambda, &inst.space, limit)?;
            let mut text = format!("M = {}\n", result.polynomial);
            let mut json = serde_json::to_value(&result)?;
            let mut ok = true;
            if *check {
                let by_rc = m_by_enumeration(ty, &inst.lambda, &inst.space, limit)?;
                ok = by_rc == result.polynomial;
                writeln!(text, "sum over RC = {by_rc}\nagrees: {ok}")?;
                json["by_enumeration"] = serde_json::to_value(&by_rc)?;
                json["agrees"] = Value::Bool(ok);
            }
            Ok(Report::new(json, text)?.verified(ok))
        }
        Command::Psi { rc, trace } => {
            let rc = read_rc(rc)?;
            let source = Source {
                family: rc.affine_type().family(),
                rank: rc.affine_type().rank(),
            };
            let out = psi(&rc)?;
            let mut text = String::new();
            if *trace {
                for step in &out.trace {
                    writeln!(text, "delta_{} -> k = {}, letter {}", step.l, step.k, step.letter)?;
                    write!(text, "{}{}", step.rc, step.tableau)?;
                }
            }
            writeln!(text, "lambda = {}, mu = {}, eta = {}", out.lambda, out.mu, out.eta)?;
            write!(text, "{}{}", out.rc, out.tableau)?;
            let view = PsiView {
                source,
                lambda: out.lambda,
                mu: out.mu,
                eta: out.eta,
                state: Annotated::new(out.rc),
                tableau: out.tableau,
                trace: trace.then(|| {
                    out.trace
                        .into_iter()
                        .map(|s| PsiStepView {
                            l: s.l,
                            letter: s.letter,
                            k: s.k,
                            state: Annotated::new(s.rc),
                            tableau: s.tableau,
                        })
                        .collect()
                }),
            };
            Report::new(view, text)
        }
        Command::PsiInv { input, trace } => {
            let (name, text) = read_input(input.as_ref())?;
            let inp: PsiInput = parse_json(&name, &text)?;
            inp.tableau.check_shape()?;
            let target = AffineType::new(inp.source.family, inp.source.rank)?;
            let out = psi_tilde_traced(&inp.rc, &inp.tableau, target)?;
            let mut text = String::new();
            if *trace {
                for step in &out.trace {
                    write!(text, "delta~_{}\n{}", step.k, step.rc)?;
                }
            }
            write!(text, "{}", out.rc)?;
            if !*trace {
                return Report::new(&out.rc, text);
            }
            let view = PsiInvView {
                application_order: out.groups.application_order(),
                state: Annotated::new(out.rc),
                trace: out
                    .trace
                    .into_iter()
                    .map(|s| TildeStepView {
                        k: s.k,
                        state: Annotated::new(s.rc),
                    })
                    .collect(),
            };
            Report::new(view, text)
        }
        Command::LrCoef { lambda, mu, eta, list } => {
            let c = lr_coefficient(lambda, mu, eta);
            let mut text = format!("{c}\n");
            if !*list {
                return Report::new(serde_json::json!({ "coefficient": c }), text);
            }
            let tableaux = enumerate_lr_bounded(eta, lambda, mu, cli.max_tableaux)?;
            for t in &tableaux {
                write!(text, "\n{t}")?;
            }
            Report::new(serde_json::json!({ "coefficient": c, "tableaux": tableaux }), text)
        }
        Command::VerifyIdentity { instance, kind, margin } => {
            let inst = read_instance(instance)?;
            let kind = match (kind, inst.ty) {
                (Some(k), _) => *k,
                (None, Some(ty)) => ty.kind(),
                (None, None) => bail!(Error::Invalid("missing `--kind` or `type`".into())),
            };
            let check = verify_identity(kind, &inst.lambda, &inst.space, *margin, limit)?;
            let mut text = format!("equal: {}\nlhs: {}\nrhs: {}\n", check.equal, check.lhs, check.rhs);
            writeln!(text, "{:<16} {:<20} {:>4}  M_empty", "mu", "eta", "c")?;
            for w in &check.witnesses {
                writeln!(
                    text,
                    "{:<16} {:<20} {:>4}  {}",
                    w.mu.to_string(),
                    w.eta.to_string(),
                    w.coefficient,
                    w.m_empty
                )?;
            }
            let equal = check.equal;
            Ok(Report::new(check, text)?.verified(equal))
        }
        Command::StableCheck(args) => {
            let rc = read_rc(args)?;
            let violations = check_stability(&rc);
            let profile = stable_profile(&rc).ok();
            let stable = violations.is_empty();
            let mut text = format!("stable: {stable}\n");
            if let Some(p) = &profile {
                writeln!(text, "k = {}, nu* = {}, l* = {}", p.k, p.nu_star, p.l_star)?;
            }
            for v in &violations {
                writeln!(text, "  {v}")?;
            }
            let json = serde_json::json!({ "stable": stable, "profile": profile, "violations": violations });
            Ok(Report::new(json, text)?.verified(stable))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Budget { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("JSON value")),
                Format::Pretty => print!("{}", report.text),
            }
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
