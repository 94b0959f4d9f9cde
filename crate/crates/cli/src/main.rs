use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qhankel::families::{generate, FamilyId, FamilyKind, Route};
use qhankel::hankel::{hankel_det, DetAlgorithm};
use qhankel::jfraction::{extract, MomentSequence};
use qhankel::motzkin::{build_table, ClassicalInstance};
use qhankel::verify::{run_suite, IdentityId};

#[derive(Parser)]
#[command(
    name = "qhankel",
    version,
    about = "Exact Hankel determinants over Z[q, x]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one member of a polynomial family
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
        route: RouteArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hankel determinant det(a_{i+j+shift}) of a family, 0 <= i, j < n
    Det {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, value_enum, default_value_t = AlgArg::Bareiss)]
        alg: AlgArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the identity catalog
    Verify {
        /// `all` or a comma-separated list of identity tags
        #[arg(long, visible_alias = "id", value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Comma-separated values of c for the parametrised identities
        #[arg(long, value_delimiter = ',', default_value = "1",
              value_parser = clap::value_parser!(u32).range(1..))]
        c: Vec<u32>,
        /// Report wall-clock time per case instead of 0
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recover Jacobi coefficients from the moments of a family
    Jfraction {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dump the weighted Motzkin triangle of rs, poch or hermite
    Table {
        #[arg(long, visible_alias = "family", value_parser = parse_instance)]
        name: ClassicalInstance,
        #[arg(long, visible_alias = "n")]
        depth: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, visible_alias = "family", value_parser = parse_family)]
    name: FamilyKind,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    c: u32,
}

impl FamilyArgs {
    fn id(&self) -> FamilyId {
        FamilyId::new(self.name, self.c)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Closed,
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    Bareiss,
    Cofactor,
}

#[derive(Clone)]
struct Suite {
    name: String,
    ids: Vec<IdentityId>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Suite {
            name: "all".into(),
            ids: IdentityId::ALL.to_vec(),
        });
    }
    let ids = s
        .split(',')
        .map(|t| t.trim().parse::<IdentityId>())
        .collect::<Result<Vec<_>, _>>()?;
    let name = ids.iter().map(|id| id.tag()).collect::<Vec<_>>().join(",");
    Ok(Suite { name, ids })
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse()
}

fn parse_instance(s: &str) -> Result<ClassicalInstance, String> {
    ClassicalInstance::from_name(s)
        .ok_or_else(|| format!("unknown instance `{s}` (rs, poch, hermite)"))
}

struct Outcome {
    text: String,
    json: String,
    failed: bool,
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn run(command: Command) -> Result<(Outcome, OutputArgs), String> {
    match command {
        Command::Family {
            family,
            n,
            route,
            output,
        } => {
            let route = match route {
                RouteArg::Closed => Route::ClosedForm,
                RouteArg::Recurrence => Route::RecurrenceOrOperator,
            };
            let value = generate(family.id(), n, route).values.pop().unwrap();
            let json = json!({
                "family": family.name.name(),
                "c": family.id().c,
                "n": n,
                "value": value.to_string(),
            });
            Ok((
                Outcome {
                    text: format!("{value}\n"),
                    json: pretty(json),
                    failed: false,
                },
                output,
            ))
        }
        Command::Det {
            family,
            n,
            shift,
            alg,
            output,
        } => {
            let len = (2 * n + shift).saturating_sub(1);
            let seq = generate(family.id(), len.max(1) - 1, Route::ClosedForm).values;
            let algorithm = match alg {
                AlgArg::Bareiss => DetAlgorithm::Bareiss,
                AlgArg::Cofactor => DetAlgorithm::Cofactor,
            };
            let d = hankel_det(&seq, n, shift, algorithm).map_err(|e| e.to_string())?;
            let json = json!({
                "family": family.name.name(),
                "c": family.id().c,
                "n": n,
                "shift": shift,
                "det": d.to_string(),
            });
            Ok((
                Outcome {
                    text: format!("{d}\n"),
                    json: pretty(json),
                    failed: false,
                },
                output,
            ))
        }
        Command::Verify {
            suite,
            n_max,
            c,
            timings,
            output,
        } => {
            let report = run_suite(&suite.name, &suite.ids, n_max as usize, &c);
            let json = report.to_json(timings);
            let outcome = Outcome {
                text: report.to_text(),
                json,
                failed: !report.all_passed(),
            };
            Ok((outcome, output))
        }
        Command::Jfraction {
            family,
            depth,
            output,
        } => {
            let depth = depth as usize;
            let seq = generate(family.id(), 2 * depth - 1, Route::ClosedForm).values;
            let moments = MomentSequence::from_polys(&seq).map_err(|e| e.to_string())?;
            let coeffs = extract(&moments, depth).map_err(|e| e.to_string())?;
            let mut text = String::new();
            for (k, s) in coeffs.s.iter().enumerate() {
                text.push_str(&format!("s({k}) = {s}\n"));
            }
            for (k, t) in coeffs.t.iter().enumerate() {
                text.push_str(&format!("t({k}) = {t}\n"));
            }
            let json = json!({
                "family": family.name.name(),
                "c": family.id().c,
                "depth": depth,
                "s": coeffs.s.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "t": coeffs.t.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok((
                Outcome {
                    text,
                    json: pretty(json),
                    failed: false,
                },
                output,
            ))
        }
        Command::Table {
            name,
            depth,
            output,
        } => {
            let table =
                build_table(&name.coefficients(depth.max(1)), depth).map_err(|e| e.to_string())?;
            let rows: Vec<Vec<String>> = table
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let json = json!({ "instance": name.name(), "depth": depth, "rows": rows });
            Ok((
                Outcome {
                    text: table.to_string(),
                    json: pretty(json),
                    failed: false,
                },
                output,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, output) = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let body = match output.format {
        Format::Text => outcome.text,
        Format::Json => outcome.json + "\n",
    };
    match &output.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{body}"),
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
