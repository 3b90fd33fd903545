use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotcolor::{LinearQuandleParams, OrientedDiagram};
use knotcolor_cli::commands::{self, ColorTarget, OrderMode, Output};
use knotcolor_cli::formats::{parse_diagram, DiagramFormat};
use knotcolor_cli::CliError;

#[derive(Parser)]
#[command(
    name = "knotcolor",
    version,
    about = "Quandle colorings and Alexander polynomials of knots"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Read the diagram from FILE (.tri, .pd or .json).
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "diagram")]
    input: Option<PathBuf>,

    /// Inline diagram text instead of --input.
    #[arg(long, global = true, value_name = "TEXT")]
    diagram: Option<String>,

    /// Diagram format, overriding detection from the extension or content.
    #[arg(long, global = true, value_enum)]
    diagram_format: Option<DiagramFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalized Alexander polynomial.
    Alexander,
    /// Count colorings by a linear or catalog quandle.
    Color(ColorArgs),
    /// Minimal linear coloring modulus or minimal quandle order.
    MinOrder {
        #[arg(long, value_enum)]
        mode: OrderMode,
    },
    /// Classify twist knots by minimal quandle order.
    Twist(TwistArgs),
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long, requires_all = ["ell", "k"], conflicts_with = "quandle")]
    n: Option<u64>,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    /// Catalog name (Z3_1x1, S4, Z5_1x1, …, QS6, QS6p, Z7_1x5) or an inline JSON table.
    #[arg(long, required_unless_present = "n")]
    quandle: Option<String>,
    /// Also list up to LIMIT colorings (quandles: one non-constant coloring).
    #[arg(long, value_name = "LIMIT")]
    list: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TwistArgs {
    #[arg(long)]
    c: Option<u64>,
    /// Inclusive range such as 3..14.
    #[arg(long)]
    range: Option<String>,
}

fn read_diagram(cli: &Cli) -> Result<OrientedDiagram, CliError> {
    let (text, detected) = match (&cli.input, &cli.diagram) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let detected =
                DiagramFormat::from_path(path).unwrap_or_else(|| DiagramFormat::sniff(&text));
            (text, detected)
        }
        (None, Some(text)) => (text.clone(), DiagramFormat::sniff(text)),
        (None, None) => {
            return Err(CliError::Usage(
                "a diagram is required: pass --input FILE or --diagram TEXT".into(),
            ))
        }
    };
    parse_diagram(&text, cli.diagram_format.unwrap_or(detected))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Alexander => commands::alexander(&read_diagram(cli)?),
        Command::Color(args) => {
            let target = match (&args.quandle, args.n, args.ell, args.k) {
                (Some(spec), ..) => ColorTarget::Quandle(commands::resolve_quandle(spec)?),
                (None, Some(n), Some(ell), Some(k)) => {
                    ColorTarget::Linear(LinearQuandleParams::new(n, ell, k)?)
                }
                _ => {
                    return Err(CliError::Usage(
                        "pass --n, --ell and --k, or --quandle".into(),
                    ))
                }
            };
            commands::color(&read_diagram(cli)?, &target, args.list)
        }
        Command::MinOrder { mode } => commands::min_order(&read_diagram(cli)?, *mode),
        Command::Twist(args) => match (args.c, &args.range) {
            (Some(c), _) => commands::twist_single(c),
            (None, Some(range)) => {
                let (a, b) = commands::parse_range(range)?;
                commands::twist_range(a, b)
            }
            (None, None) => unreachable!("clap requires one of --c and --range"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
