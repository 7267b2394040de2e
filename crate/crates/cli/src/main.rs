use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, ValueEnum};
use dpscan_cli::{run, LanguageChoice, OutputFormat, RunConfig};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Lang {
    Java,
    Cpp,
    Auto,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Detect design-pattern instances in Java or C++ source trees.
#[derive(Debug, Parser)]
#[command(name = "dpscan", version)]
struct Args {
    /// Source roots (files or directories).
    #[arg(long = "src", required = true, num_args = 1.., action = ArgAction::Append)]
    src: Vec<PathBuf>,
    /// Pattern definition file or directory of them.
    #[arg(long)]
    patterns: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    lang: Lang,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Report every candidate separately instead of merging near-duplicates.
    #[arg(long)]
    no_merge: bool,
    /// Write the extracted class graph in canonical form to this file.
    #[arg(long, value_name = "PATH")]
    dump_graph: Option<PathBuf>,
    /// Print skipped files and unresolved names to standard error.
    #[arg(long)]
    verbose: bool,
    #[arg(long, hide = true, value_name = "SEED")]
    shuffle_discovery: Option<u64>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let config = RunConfig {
        sources: args.src,
        patterns: args.patterns,
        language: match args.lang {
            Lang::Java => LanguageChoice::Java,
            Lang::Cpp => LanguageChoice::Cpp,
            Lang::Auto => LanguageChoice::Auto,
        },
        format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        merge: !args.no_merge,
        verbose: args.verbose,
        dump_graph: args.dump_graph,
        discovery_seed: args.shuffle_discovery,
    };
    let code = run(&config, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
