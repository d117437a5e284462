mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anticode::catalog::Recipe;
use anticode::code::{ENV_ENUMERATION_CAP, ENV_GRAPH_DIMENSION_CAP, ENV_MINIMALITY_CAP};
use anticode::{
    analyze, complement, transform_wd, verify_manifest, verify_swrg, BestKnownTable, CodeFile,
    Error, Limits, LinearCode, Manifest, Status, WalkCounts, WdTransformSpec, WeightDistribution,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Format;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "anticode",
    version,
    about = "Build projective codes and anticodes, enumerate weights, check bounds and walk-regularity",
    after_help = format!(
        "Enumeration caps can be raised or lowered with {ENV_ENUMERATION_CAP}, {ENV_MINIMALITY_CAP} \
         (both counted in codewords) and {ENV_GRAPH_DIMENSION_CAP} (coset graph dimension).\n\
         Exit status: 0 success, 1 verification mismatch, 2 usage error, 3 cap exceeded."
    )
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of standard output. For `construct` and
    /// `complement` this is the JSON code file, and a summary goes to standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the named families.
    Construct(ConstructArgs),
    /// Report parameters, weight distribution, bounds, minimality and optimality.
    Analyze {
        /// JSON code file.
        input: PathBuf,
    },
    /// Complement a projective code inside PG(K-1, q).
    Complement {
        input: PathBuf,
        #[arg(long = "K")]
        big_k: usize,
    },
    /// Predict the complement's weight distribution from the input's.
    WdTransform {
        /// Code file, or a JSON weight distribution `{q, n, k, counts}`.
        input: PathBuf,
        #[arg(long = "K")]
        big_k: usize,
    },
    /// Certify l-strong walk-regularity of a binary three-weight code's coset graph.
    SwrgVerify {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Regression catalog of published parameters.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Check every manifest row against construction or the distribution transform.
    Verify {
        /// TOML manifest; defaults to the bundled one.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Best-known table (`q n k d_best tag` per line); defaults to the bundled one.
        #[arg(long)]
        best_known: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simplex,
    Complement,
    Rs,
    CompRs,
    CompMds,
    FixedWeight,
    TwoSubspace,
    Ovoid,
    DualBch,
    Kasami,
    Concat,
}

#[derive(Args)]
struct ConstructArgs {
    family: Family,
    /// Base family for `complement` and `concat`.
    #[arg(long, value_enum)]
    of: Option<Family>,
    /// Base code file for `complement` and `concat`.
    #[arg(long, conflicts_with = "of")]
    input: Option<PathBuf>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Extension degree; sets q = 2^s for the outer code of `concat`.
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    w: Option<usize>,
    /// Points removed beyond the trivial choice in `comp-rs` and `comp-mds`.
    #[arg(long, default_value_t = 0)]
    h: usize,
    #[arg(long = "K")]
    big_k: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e.is_cap() { EXIT_CAP } else { EXIT_USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("{family} needs --{flag}")))
}

fn recipe(family: Family, a: &ConstructArgs) -> Result<Recipe, Failure> {
    let q = || match (a.q, a.s) {
        (Some(q), _) => Ok(q),
        (None, Some(s)) => 2u32.checked_pow(s).ok_or_else(|| usage("--s is too large")),
        (None, None) => Err(usage("this family needs --q (or --s for q = 2^s)")),
    };
    let k = || need(a.k, "k", "this family");
    let m = || need(a.m, "m", "this family");
    Ok(match family {
        Family::Simplex => Recipe::Simplex { q: q()?, k: k()? },
        Family::Rs => Recipe::Rs { q: q()?, k: k()? },
        Family::CompRs => Recipe::CompRs {
            q: q()?,
            k: k()?,
            h: a.h,
        },
        Family::CompMds => Recipe::CompMds {
            q: q()?,
            k: k()?,
            h: a.h,
        },
        Family::FixedWeight => Recipe::FixedWeight {
            k: k()?,
            w: need(a.w, "w", "fixed-weight")?,
        },
        Family::TwoSubspace => Recipe::TwoSubspace { q: q()? },
        Family::Ovoid => Recipe::Ovoid { q: q()? },
        Family::DualBch => Recipe::DualBch { m: m()? },
        Family::Kasami => Recipe::Kasami { m: m()? },
        Family::Complement | Family::Concat => {
            let of = need(a.of, "of", "a nested family")?;
            if matches!(of, Family::Complement | Family::Concat) {
                return Err(usage("--of must name a base family"));
            }
            let base = Box::new(recipe(of, a)?);
            match family {
                Family::Complement => Recipe::Complement {
                    of: base,
                    big_k: need(a.big_k, "K", "complement")?,
                },
                _ => Recipe::Concat { of: base },
            }
        }
    })
}

fn read_code(path: &Path) -> Result<LinearCode, Failure> {
    let file = CodeFile::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    file.to_code()
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn construct(a: &ConstructArgs) -> Result<LinearCode, Failure> {
    if let Some(path) = &a.input {
        let base = read_code(path)?;
        return match a.family {
            Family::Complement => Ok(complement(&base, need(a.big_k, "K", "complement")?)?),
            Family::Concat => Ok(anticode::concatenate_with_simplex(&base)?),
            _ => Err(usage("--input only applies to complement and concat")),
        };
    }
    let r = recipe(a.family, a)?;
    Ok(r.build()?.with_label(r.to_string()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_code(cli: &Cli, code: &LinearCode, limits: &Limits) -> Result<u8, Failure> {
    let wd = match code.weight_distribution(limits) {
        Ok(wd) => Some(wd),
        Err(e) if e.is_cap() => None,
        Err(e) => return Err(e.into()),
    };
    let file = CodeFile::from_code(code, wd.as_ref());
    match &cli.out {
        Some(path) => {
            file.write(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            print!("{}", render::code_summary(cli.format, &file, Some(path)));
        }
        None if matches!(cli.format, Format::Json) => println!("{}", file.to_json()),
        None => print!("{}", render::code_summary(cli.format, &file, None)),
    }
    Ok(0)
}

fn read_distribution(path: &Path, limits: &Limits) -> Result<WeightDistribution, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if let Ok(file) = CodeFile::from_json(&text) {
        if let Some(wd) = file.cached_distribution() {
            return Ok(wd);
        }
        let code = file
            .to_code()
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(code.weight_distribution(limits)?);
    }
    let wd: WeightDistribution = serde_json::from_str(&text).map_err(|e| {
        usage(format!(
            "{}: neither a code file nor a weight distribution: {e}",
            path.display()
        ))
    })?;
    wd.validate()
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(wd)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let limits = Limits::from_env();
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Construct(a) => emit_code(cli, &construct(a)?, &limits),
        Command::Complement { input, big_k } => {
            let base = read_code(input)?;
            let label = format!("complement({},K={big_k})", base.label());
            emit_code(cli, &complement(&base, *big_k)?.with_label(label), &limits)
        }
        Command::Analyze { input } => {
            let code = read_code(input)?;
            let report = analyze(&code, &limits, BestKnownTable::bundled())?;
            emit(out, &render::report(cli.format, &report))?;
            Ok(if report.skipped.is_empty() {
                0
            } else {
                EXIT_CAP
            })
        }
        Command::WdTransform { input, big_k } => {
            let base = read_distribution(input, &limits)?;
            let wd = transform_wd(&WdTransformSpec {
                base,
                big_k: *big_k,
            })?;
            emit(out, &render::distribution(cli.format, &wd))?;
            Ok(0)
        }
        Command::SwrgVerify { input, l } => {
            let code = read_code(input)?;
            let cert = verify_swrg(&code, *l, &limits)?;
            emit(out, &render::certificate(cli.format, &cert))?;
            let constant = matches!(cert.walk_counts, WalkCounts::Constant(_));
            let inconsistent = cert.spectrum_verified == Some(false)
                || (constant && cert.analytic_matches == Some(false));
            Ok(if inconsistent { EXIT_MISMATCH } else { 0 })
        }
        Command::Catalog {
            action:
                CatalogAction::Verify {
                    manifest,
                    best_known,
                },
        } => {
            let manifest = match manifest {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    Manifest::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?
                }
                None => Manifest::bundled(),
            };
            let custom_table;
            let table = match best_known {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    custom_table = BestKnownTable::parse(&text)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    &custom_table
                }
                None => BestKnownTable::bundled(),
            };
            let report = verify_manifest(&manifest, &limits, table);
            emit(out, &render::catalog(cli.format, &report))?;
            let mismatch = report.rows.iter().any(|r| {
                r.status == Status::Fail || (r.status == Status::Error && !r.cap_exceeded)
            });
            Ok(if mismatch {
                EXIT_MISMATCH
            } else if report.any_cap_exceeded() {
                EXIT_CAP
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
