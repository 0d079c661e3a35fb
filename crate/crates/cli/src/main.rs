use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use opticforge_cli::commands::{self, failure, Outcome};
use opticforge_cli::error::{CliResult, EXIT_INTERNAL};
use opticforge_cli::render::Format;
use opticforge_cli::suites::cmd_suite;

#[derive(Parser)]
#[command(name = "opticforge", version, about = "Check, evaluate and draw optics over finite sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Tikz,
}

#[derive(Subcommand)]
enum Cmd {
    /// Typecheck every diagram, check naturality and the expectations.
    Check { file: PathBuf },
    /// Evaluate a diagram to an optic and print it.
    Eval {
        file: PathBuf,
        #[arg(short = 'd', long = "diagram")]
        name: String,
    },
    /// Compare two diagrams.
    Equal {
        file: PathBuf,
        d1: String,
        d2: String,
        #[arg(long)]
        residual_bound: Option<usize>,
    },
    /// Lawfulness of a named optic or lens.
    Laws {
        file: PathBuf,
        #[arg(short = 'o', long = "optic")]
        name: String,
    },
    /// Run a built-in exhaustive suite.
    Suite {
        name: String,
        #[arg(long)]
        card: Option<usize>,
    },
    /// Count optic classes for a hom such as "(B,B) -> (B,B)".
    Count {
        file: PathBuf,
        #[arg(long)]
        hom: String,
        #[arg(long)]
        residual_bound: Option<usize>,
    },
    /// Draw a diagram as SVG or TikZ.
    Render {
        file: PathBuf,
        #[arg(short = 'd', long = "diagram")]
        name: String,
        #[arg(short = 'f', long = "format", value_enum, default_value = "svg")]
        format: FormatArg,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

fn run(cmd: Cmd) -> CliResult<Outcome> {
    match cmd {
        Cmd::Check { file } => commands::cmd_check(&file),
        Cmd::Eval { file, name } => commands::cmd_eval(&file, &name),
        Cmd::Equal { file, d1, d2, residual_bound } => commands::cmd_equal(&file, &d1, &d2, residual_bound),
        Cmd::Laws { file, name } => commands::cmd_laws(&file, &name),
        Cmd::Suite { name, card } => cmd_suite(&name, card),
        Cmd::Count { file, hom, residual_bound } => commands::cmd_count(&file, &hom, residual_bound),
        Cmd::Render { file, name, format, out } => {
            let format = match format {
                FormatArg::Svg => Format::Svg,
                FormatArg::Tikz => Format::Tikz,
            };
            commands::cmd_render(&file, &name, format, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match std::panic::catch_unwind(|| run(cli.cmd)) {
        Ok(Ok(o)) => o,
        Ok(Err(e)) => {
            let o = failure(&e);
            eprint!("{}", o.text);
            return ExitCode::from(o.code as u8);
        }
        Err(_) => return ExitCode::from(EXIT_INTERNAL as u8),
    };
    print!("{}", outcome.text);
    ExitCode::from(outcome.code as u8)
}
