mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permcode::{CodeFamily, Composition, Error, Permutation, VerifyConfig};

/// Hard cap on exhaustive sizes unless `--allow-large` is given.
const HARD_CAP: usize = 9;

#[derive(Parser)]
#[command(
    name = "permcode",
    version,
    about = "Permutation codes, flagged ribbons and equidistribution checks"
)]
struct Cli {
    /// Lift the size cap of 9 for enumeration commands.
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lehmer, inverse, major and saillance codes of a permutation.
    Code(CodeArgs),
    /// Permutation with a given code.
    Decode(DecodeArgs),
    /// Flagged ribbon functions of compositions.
    Ribbon(RibbonArgs),
    /// Exhaustive verification sweeps.
    Verify(VerifyArgs),
    /// Taylor tree expansion of dx/dt = V(x).
    Trees(TreesArgs),
    /// L-equivalence classes.
    Lclass(LclassArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Permutation, e.g. 4123 or 10,2,1,...
    #[arg(required_unless_present = "table")]
    perm: Option<String>,
    /// Print the Ic/Mc/Sc table of S_n grouped by inverse descent classes.
    #[arg(long, value_name = "N", conflicts_with = "perm")]
    table: Option<usize>,
    /// Comma-separated subset of lehmer, invcode, majcode, scode.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<String>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DecodeArgs {
    /// Code digits, or comma-separated entries.
    code: String,
    #[arg(long, default_value = "scode")]
    family: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RibbonMode {
    /// `h^I(X_I)`.
    Product,
    /// `r_I` by inclusion-exclusion.
    Ie,
    /// `r_I` by the determinant.
    Det,
}

#[derive(Args)]
struct RibbonArgs {
    /// Composition, e.g. (2,1,2) or 212.
    #[arg(required_unless_present = "all")]
    composition: Option<String>,
    #[arg(long, value_enum, default_value = "ie")]
    mode: RibbonMode,
    /// Every composition of N, in table order.
    #[arg(long, value_name = "N", conflicts_with = "composition")]
    all: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, value_delimiter = ',', default_value = "invcode,scode,majcode")]
    families: Vec<String>,
    /// theorem, coarse, ncinv, scstep, em, fs or all.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, env = "PERMCODE_WORKERS", default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TreesArgs {
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LclassArgs {
    #[arg(long, required_unless_present = "n", conflicts_with = "n")]
    perm: Option<String>,
    /// List every class of S_N.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_cap(n: usize, allow_large: bool) -> Result<(), Failure> {
    if n > HARD_CAP && !allow_large {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the cap of {HARD_CAP}; pass --allow-large to run anyway"
        )));
    }
    Ok(())
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse::<Permutation>()?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Code(args) => {
            let codecs = match &args.families {
                Some(names) => names
                    .iter()
                    .map(|n| render::codec(n))
                    .collect::<Result<Vec<_>, _>>()?,
                None => render::CODECS.to_vec(),
            };
            if let Some(n) = args.table {
                check_cap(n, cli.allow_large)?;
                return Ok(if args.json {
                    render::table_json(n)
                } else {
                    render::table(n)
                });
            }
            let p = parse_perm(args.perm.as_deref().unwrap_or_default())?;
            Ok(render::codes(&p, &codecs, args.json))
        }
        Command::Decode(args) => {
            let codec = render::codec(&args.family)?;
            let code = args.code.parse()?;
            let p = (codec.decode)(&code);
            Ok(if args.json {
                format!(
                    "{}\n",
                    serde_json::json!({ "family": codec.name, "code": code, "perm": p })
                )
            } else {
                format!("{p}\n")
            })
        }
        Command::Ribbon(args) => {
            let comps = match (args.all, &args.composition) {
                (Some(n), _) => {
                    check_cap(n, cli.allow_large)?;
                    permcode::compositions_of(n)
                }
                (None, Some(s)) => {
                    let c: Composition = s.parse()?;
                    check_cap(c.size(), cli.allow_large)?;
                    vec![c]
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            Ok(render::ribbons(&comps, args.mode, args.json))
        }
        Command::Verify(args) => {
            check_cap(args.n, cli.allow_large)?;
            let families = args
                .families
                .iter()
                .map(|f| CodeFamily::by_name(f))
                .collect::<Result<Vec<_>, _>>()?;
            let checks = permcode::Check::parse_list(&args.checks)?;
            if args.workers == 0 {
                return Err(Failure::Usage("--workers must be at least 1".into()));
            }
            let config = VerifyConfig {
                bound: args.n.max(permcode::verify::DEFAULT_BOUND),
                workers: args.workers,
            };
            let report = permcode::verify(args.n, &families, &checks, &config)?;
            let out = if args.json {
                format!("{}\n", report.to_json())
            } else {
                report.render_text()
            };
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Trees(args) => {
            if args.n == 0 {
                return Err(Failure::Usage("trees needs n >= 1".into()));
            }
            check_cap(args.n, cli.allow_large)?;
            Ok(render::trees(args.n, args.json))
        }
        Command::Lclass(args) => match (&args.perm, args.n) {
            (Some(s), _) => {
                let p = parse_perm(s)?;
                Ok(render::lclass(&p, args.json))
            }
            (None, Some(n)) => {
                check_cap(n, cli.allow_large)?;
                Ok(render::lclasses(n, args.json))
            }
            (None, None) => unreachable!("clap requires one of them"),
        },
    }
}
