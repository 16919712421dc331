//! `qknot`: coloured Jones and ADO invariants of braid closures.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qknot_core::oracles::{burau_alexander, kauffman_jones};
use qknot_core::table::{load_table, lookup};
use qknot_core::verify::{run_suite, MarkovConfig, SUITES};
use qknot_core::verma::representation_matrix;
use qknot_core::{ado, coloured_jones, unified_pairing, BraidWord, Error, InvariantReport};

#[derive(Parser, Debug)]
#[command(
    name = "qknot",
    version,
    about = "Exact coloured Jones and ADO invariants of braid closures"
)]
struct Cli {
    /// Worker threads for the pairing sum (default: all cores).
    #[arg(long, global = true, env = "QKNOT_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coloured Jones polynomial J_N in q.
    Jones(InvariantArgs),
    /// ADO invariant Phi_N in s over Z[xi_N].
    Ado(InvariantArgs),
    /// The unified pairing I_N in Z[x^±1, d^±1].
    Unified(InvariantArgs),
    /// Independent colour-2 oracles (Kauffman bracket, reduced Burau).
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Representation matrix of a braid on one weight space, as JSON.
    Matrix {
        #[command(flatten)]
        input: Input,
        /// Total weight m of the space V_{n,m}.
        #[arg(long)]
        weight: u32,
    },
    /// Runs the verification suites and prints one line per suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct InvariantArgs {
    #[command(flatten)]
    input: Input,
    /// Colour N (dimension of the coloured representation).
    #[arg(long, alias = "colour", value_parser = clap::value_parser!(u32).range(1..))]
    color: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Compute even when the closure has several components.
    #[arg(long)]
    force: bool,
}

/// Where the braid comes from: an inline word or a named table entry.
#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
struct Input {
    /// Braid word, e.g. "1 -2 1 -2"; letter k means sigma_|k|^sign(k).
    #[arg(long, allow_hyphen_values = true, requires = "strands", conflicts_with_all = ["knot", "table"])]
    braid: Option<String>,
    #[arg(long, requires = "braid")]
    strands: Option<usize>,
    /// Name of a knot in the table given by --table.
    #[arg(long, requires = "table")]
    knot: Option<String>,
    #[arg(long, requires = "knot")]
    table: Option<PathBuf>,
}

impl Input {
    fn braid(&self) -> Result<BraidWord, Error> {
        match (&self.braid, self.strands, &self.knot, &self.table) {
            (Some(word), Some(strands), None, None) => BraidWord::parse(word, strands),
            (None, None, Some(name), Some(path)) => {
                let table = load_table(path)?;
                Ok(lookup(&table, name)?.braid.clone())
            }
            _ => Err(Error::InvalidArgument(
                "give either --braid with --strands, or --knot with --table".into(),
            )),
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite to run, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Maximum word length of random braids.
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// Colours for the Markov suite.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3])]
    colors: Vec<u32>,
    /// Number of random (braid, move) pairs.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Append wall-clock time to each suite line.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Jones,
    Alexander,
}

/// Successful output plus the exit status to report.
struct Rendered {
    stdout: String,
    ok: bool,
}

impl Rendered {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

fn require_knot(beta: &BraidWord, force: bool) -> Result<(), Error> {
    if force || beta.is_knot() {
        Ok(())
    } else {
        Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        })
    }
}

fn invariant(kind: &str, args: &InvariantArgs) -> Result<Rendered, Error> {
    let beta = args.input.braid()?;
    require_knot(&beta, args.force)?;
    let (text, report) = match kind {
        "jones" => {
            let j = coloured_jones(&beta, args.color, true)?;
            (j.to_string(), InvariantReport::jones(&beta, args.color, &j))
        }
        "ado" => {
            let a = ado(&beta, args.color, true)?;
            (a.to_string(), InvariantReport::ado(&beta, args.color, &a))
        }
        _ => {
            let p = unified_pairing(&beta, args.color)?;
            (
                p.value.to_string(),
                InvariantReport::unified(&beta, args.color, &p.value),
            )
        }
    };
    Ok(Rendered::ok(match args.format {
        Format::Text => format!("{text}\n"),
        Format::Json => format!("{}\n", report.to_json()),
    }))
}

fn oracle(which: OracleKind, input: &Input, format: Format) -> Result<Rendered, Error> {
    let beta = input.braid()?;
    let (name, value) = match which {
        OracleKind::Jones => ("jones", kauffman_jones(&beta)?),
        OracleKind::Alexander => ("alexander", burau_alexander(&beta)?),
    };
    Ok(Rendered::ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let doc = serde_json::json!({
                "oracle": name,
                "braid": beta.letters(),
                "strands": beta.strands(),
                "value": value.to_string(),
            });
            format!("{doc}\n")
        }
    }))
}

fn verify(args: &VerifyArgs) -> Result<Rendered, Error> {
    if args.colors.is_empty() || args.colors.iter().any(|&c| c < 2) {
        return Err(Error::InvalidArgument("--colors needs values >= 2".into()));
    }
    let names: Vec<&str> = if args.suite == "all" {
        SUITES.to_vec()
    } else {
        args.suite.split(',').map(str::trim).collect()
    };
    let cfg = MarkovConfig {
        pairs: args.count,
        max_len: args.max_len.max(1),
        colours: args.colors.clone(),
        seed: args.seed,
    };
    let mut out = String::new();
    let (mut passed, mut total) = (0, 0);
    for name in names {
        let report = run_suite(name, &cfg).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "unknown suite '{name}' (expected one of {})",
                SUITES.join(", ")
            ))
        })?;
        if args.timings {
            out.push_str(&format!("{report}\n"));
        } else {
            let status = if report.ok() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} {}/{}\n",
                report.name,
                report.passed(),
                report.total
            ));
        }
        for failure in report.failures.iter().take(5) {
            out.push_str(&format!("  {failure}\n"));
        }
        passed += report.passed();
        total += report.total;
    }
    let ok = passed == total;
    out.push_str(&format!(
        "{} {passed}/{total}\n",
        if ok { "PASS" } else { "FAIL" }
    ));
    Ok(Rendered { stdout: out, ok })
}

fn execute(command: &Command) -> Result<Rendered, Error> {
    match command {
        Command::Jones(args) => invariant("jones", args),
        Command::Ado(args) => invariant("ado", args),
        Command::Unified(args) => invariant("unified", args),
        Command::Oracle {
            which,
            input,
            format,
        } => oracle(*which, input, *format),
        Command::Matrix { input, weight } => {
            let beta = input.braid()?;
            Ok(Rendered::ok(format!(
                "{}\n",
                representation_matrix(&beta, *weight)?.to_json()
            )))
        }
        Command::Verify(args) => verify(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            // clap spreads one message over several lines; keep the part
            // before the usage block on a single line.
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.is_empty())
                .collect();
            eprintln!(
                "error: usage: {}",
                message.join(" ").trim_start_matches("error: ")
            );
            return ExitCode::from(2);
        }
    };

    let outcome = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => {
                eprintln!("error: thread-pool: {e}");
                return ExitCode::from(1);
            }
        },
        None => execute(&cli.command),
    };

    match outcome {
        Ok(rendered) => {
            print!("{}", rendered.stdout);
            if rendered.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
