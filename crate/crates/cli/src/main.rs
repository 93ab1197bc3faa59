mod view;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use admissible::affine::diagram_automorphisms;
use admissible::classification::{AdmissibleLevelContext, DufloJoseph, DEFAULT_TWIST_CAP};
use admissible::rational::frac;
use admissible::{
    is_admissible_number, parse_rational, reduction_data, AffineWeight, Error, ExtendedWeylElement, FiniteRootSystem,
    LieType, Q, DEFAULT_WEYL_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use view::*;

/// Admissible levels, admissible weights and the sets Pr_k for affine Lie
/// algebras, computed in exact arithmetic.
#[derive(Parser)]
#[command(name = "admissible", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a level is admissible and print the certificate.
    LevelCheck(LevelArgs),
    /// List Pr_k^+ and Pr_k at an admissible level.
    Enumerate(LevelArgs),
    /// Decide whether L(λ) is a module over the simple vertex algebra.
    Classify(WeightArgs),
    /// Print the sl2 reduction data (i, k_i, λ^(i)) and the necessary conditions.
    Reduce(WeightArgs),
    /// Apply generators of the extended affine Weyl group as Duflo-Joseph moves.
    Orbit(OrbitArgs),
    /// Dump the finite root system.
    RootData(TypeArgs),
    /// Count |Pr_k^+| and |Pr_k| over a grid of types and levels read from a TOML file.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct TypeArgs {
    /// Lie type, e.g. A1, B2, G2.
    #[arg(long = "type")]
    lie_type: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct LevelArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Level k as an exact rational, e.g. -1/2.
    #[arg(long, allow_hyphen_values = true)]
    level: String,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    lvl: LevelArgs,
    /// Dynkin labels of the finite part, comma separated (default: all zero).
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    w: WeightArgs,
    /// Comma-separated generators applied left to right: s0..sl (simple
    /// reflections), t1..tl (translations by fundamental coweights), dj (the
    /// diagram automorphism sending α0 to αj).
    #[arg(long)]
    generators: String,
}

#[derive(Args)]
struct SweepArgs {
    /// TOML file with `types`, `p_max` and `q_max`.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepConfig {
    types: Vec<String>,
    p_max: i64,
    q_max: i64,
}

/// How a command ended when it did not succeed.
enum Failure {
    /// Malformed input: exit status 2.
    Usage(String),
    /// A mathematical rejection: exit status 1.
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TypeSyntax(_)
            | Error::InvalidType { .. }
            | Error::RationalSyntax { .. }
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Math(format!("output error: {e}"))
    }
}

type Outcome = Result<bool, Failure>;

const WEYL_CAP_VAR: &str = "ADMISSIBLE_WEYL_CAP";

fn weyl_cap() -> Result<u128, Failure> {
    match std::env::var(WEYL_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{WEYL_CAP_VAR}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_WEYL_CAP),
    }
}

fn root_system(name: &str) -> Result<FiniteRootSystem, Failure> {
    let t: LieType = name.parse()?;
    Ok(FiniteRootSystem::new(t)?)
}

fn parse_weight(rs: &FiniteRootSystem, text: Option<&str>, level: Q) -> Result<AffineWeight, Failure> {
    let labels: Vec<Q> = match text {
        None => vec![frac(0, 1); rs.rank()],
        Some(s) => s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_, _>>()?,
    };
    if labels.len() != rs.rank() {
        return Err(Failure::Usage(format!(
            "--weight {:?} has {} labels, type {} needs {}",
            text.unwrap_or_default(),
            labels.len(),
            rs.lie_type(),
            rs.rank()
        )));
    }
    Ok(AffineWeight::from_labels(rs, &labels, level)?)
}

fn context(rs: &FiniteRootSystem, k: Q) -> Result<AdmissibleLevelContext, Failure> {
    Ok(AdmissibleLevelContext::with_caps(rs.clone(), k, weyl_cap()?, DEFAULT_TWIST_CAP)?)
}

fn emit<T: Serialize>(out: &mut impl Write, format: Format, value: &T, tsv: Vec<String>) -> Result<(), Failure> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Math(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        Format::Tsv => {
            for line in tsv {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn level_check(args: &LevelArgs, out: &mut impl Write) -> Outcome {
    let rs = root_system(&args.ty.lie_type)?;
    let k = parse_rational(&args.level)?;
    let cert = is_admissible_number(&rs, &k)?;
    let v = LevelView::new(&rs, &cert);
    emit(out, args.ty.format, &v, v.tsv())?;
    Ok(cert.admissible)
}

fn enumerate(args: &LevelArgs, out: &mut impl Write) -> Outcome {
    let rs = root_system(&args.ty.lie_type)?;
    let ctx = context(&rs, parse_rational(&args.level)?)?;
    let verbose = args.ty.verbose;
    let v = EnumerationView {
        lie_type: rs.lie_type().to_string(),
        level: q(ctx.k()),
        integral_system: ctx.base_system().type_name(),
        pr_plus: EnumerationView::weight_set(&rs, ctx.pr_plus()),
        pr: EnumerationView::pr_set(&rs, ctx.pr()?, verbose),
        twists: if verbose { Some(ctx.twists()?.len()) } else { None },
    };
    emit(out, args.ty.format, &v, v.tsv())?;
    Ok(true)
}

fn classify(args: &WeightArgs, out: &mut impl Write) -> Outcome {
    let rs = root_system(&args.lvl.ty.lie_type)?;
    let k = parse_rational(&args.lvl.level)?;
    let lambda = parse_weight(&rs, args.weight.as_deref(), k.clone())?;
    let ctx = context(&rs, k)?;
    let verdict = ctx.is_module(&lambda)?;
    let v = ClassifyView::new(&rs, &lambda, &verdict, ctx.base_system().type_name(), args.lvl.ty.verbose);
    emit(out, args.lvl.ty.format, &v, v.tsv())?;
    Ok(true)
}

fn reduce(args: &WeightArgs, out: &mut impl Write) -> Outcome {
    let rs = root_system(&args.lvl.ty.lie_type)?;
    let k = parse_rational(&args.lvl.level)?;
    let lambda = parse_weight(&rs, args.weight.as_deref(), k.clone())?;
    let cert = is_admissible_number(&rs, &k)?;
    let v = if cert.admissible {
        let ctx = context(&rs, k)?;
        ReduceView::from_battery(&rs, &lambda, &ctx.necessary_condition_battery(&lambda)?)
    } else {
        ReduceView {
            weight: WeightView::new(&rs, &lambda),
            rows: reduction_data(&rs, &lambda)
                .iter()
                .map(|d| ReductionRow {
                    i: d.index + 1,
                    k_i: q(&d.level),
                    label: q(&d.label),
                    sl2_admissible: None,
                })
                .collect(),
            battery: None,
        }
    };
    emit(out, args.lvl.ty.format, &v, v.tsv())?;
    Ok(true)
}

fn generator(rs: &FiniteRootSystem, name: &str) -> Result<ExtendedWeylElement, Failure> {
    let bad = || Failure::Usage(format!("unknown generator {name:?} (expected s0..s{l}, t1..t{l} or d0..d{l})", l = rs.rank()));
    let (kind, index) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let index: usize = index.parse().map_err(|_| bad())?;
    let l = rs.rank();
    match kind {
        "s" if index <= l => Ok(ExtendedWeylElement::simple_reflection(rs, index)?),
        "t" if (1..=l).contains(&index) => {
            Ok(ExtendedWeylElement::translation(rs, rs.fundamental_coweights()[index - 1].clone())?)
        }
        "d" if index <= l => diagram_automorphisms(rs)
            .into_iter()
            .find(|g| g.diagram_permutation(rs).is_some_and(|perm| perm[0] == index))
            .ok_or_else(|| Failure::Usage(format!("no diagram automorphism sends alpha_0 to alpha_{index}"))),
        _ => Err(bad()),
    }
}

fn orbit(args: &OrbitArgs, out: &mut impl Write) -> Outcome {
    let w = &args.w;
    let rs = root_system(&w.lvl.ty.lie_type)?;
    let k = parse_rational(&w.lvl.level)?;
    let mut lambda = parse_weight(&rs, w.weight.as_deref(), k.clone())?;
    let ctx = context(&rs, k)?;
    let names: Vec<&str> = args.generators.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let gens = names.iter().map(|n| generator(&rs, n)).collect::<Result<Vec<_>, _>>()?;
    let start = WeightView::new(&rs, &lambda);
    let start_is_module = ctx.is_module(&lambda)?.is_module();
    let mut steps = Vec::new();
    for (step, (name, g)) in names.iter().zip(&gens).enumerate() {
        let (applied, blocking_root, blocking_value) = match ctx.duflo_joseph_move(&lambda, g) {
            DufloJoseph::Applied(next) => {
                lambda = next;
                (true, None, None)
            }
            DufloJoseph::Inapplicable { root, value } => (false, Some(RootView::new(&rs, &root)), Some(q(&value))),
        };
        steps.push(OrbitStep {
            step: step + 1,
            generator: name.to_string(),
            applied,
            weight: WeightView::new(&rs, &lambda),
            blocking_root,
            blocking_value,
        });
        if !applied {
            break;
        }
    }
    let v = OrbitView {
        start,
        start_is_module,
        steps,
    };
    emit(out, w.lvl.ty.format, &v, v.tsv())?;
    Ok(true)
}

fn root_data(args: &TypeArgs, out: &mut impl Write) -> Outcome {
    let rs = root_system(&args.lie_type)?;
    let v = RootDataView::new(&rs);
    emit(out, args.format, &v, v.tsv())?;
    Ok(true)
}

fn sweep(args: &SweepArgs, out: &mut impl Write) -> Outcome {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.config.display())))?;
    let config: SweepConfig =
        toml::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", args.config.display())))?;
    let mut rows = Vec::new();
    for t in &config.types {
        let rs = root_system(t)?;
        for q_ in 1..=config.q_max {
            for p in 1..=config.p_max {
                if num_integer::gcd(p, q_) != 1 {
                    continue;
                }
                let k = frac(p, q_) - frac(rs.dual_coxeter_number(), 1);
                if !is_admissible_number(&rs, &k)?.admissible {
                    continue;
                }
                let ctx = context(&rs, k)?;
                rows.push(SweepRow {
                    lie_type: rs.lie_type().to_string(),
                    level: q(ctx.k()),
                    pr_plus: ctx.pr_plus().len(),
                    pr: ctx.pr()?.len(),
                });
            }
        }
    }
    let mut tsv = vec!["type\tlevel\tpr_plus\tpr".to_string()];
    tsv.extend(rows.iter().map(SweepRow::tsv));
    emit(out, args.format, &rows, tsv)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::LevelCheck(a) => level_check(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Classify(a) => classify(a, &mut out),
        Command::Reduce(a) => reduce(a, &mut out),
        Command::Orbit(a) => orbit(a, &mut out),
        Command::RootData(a) => root_data(a, &mut out),
        Command::Sweep(a) => sweep(a, &mut out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
