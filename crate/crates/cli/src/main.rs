use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stagefuzz::LabelSet;
use stagefuzz_cli::presets::resolve_stage_names;
use stagefuzz_cli::{
    analyze_command, combine_command, compare_command, parse_group_file, render_report,
    AnalysisOptions, CliError, GroupDataset, InputFormat, OutputFormat, ParseOptions,
    RenderOptions, Result,
};

#[derive(Parser)]
#[command(name = "stagefuzz", version, about = "Fuzzy analysis of staged group performance")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single group.
    Analyze { file: PathBuf },
    /// Analyze several groups, combine them and compare stage centroids.
    Compare {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Pseudo-frequency view of several groups.
    Combine {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        /// Also compute strife, non-specificity and entropy of the combined view.
        #[arg(long)]
        measures: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    #[value(name = "json-like", alias = "json")]
    JsonLike,
    #[value(name = "svg-like", alias = "svg")]
    SvgLike,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputArg {
    Auto,
    Structured,
    Tabular,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,

    /// Decimal places in text output.
    #[arg(long, global = true, default_value_t = 3)]
    precision: usize,

    /// Print exact fractions in text output.
    #[arg(long, global = true)]
    exact: bool,

    /// Shannon entropy normalizer (default: number of profiles).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(2..))]
    normalizer: Option<u64>,

    /// Stage names: a preset such as `mm`, or a comma-separated list.
    #[arg(long, global = true)]
    stages: Option<String>,

    /// Tolerance for treating centroid coordinates as equal.
    #[arg(long, global = true, default_value_t = 1e-9)]
    epsilon: f64,

    /// Input format; `auto` picks tabular for `.csv` files.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    input: InputArg,

    /// Comma-separated label names, lowest success first (default a,b,c,d,e).
    #[arg(long, global = true)]
    labels: Option<String>,
}

fn load(path: &Path, common: &Common) -> Result<GroupDataset> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let format = match common.input {
        InputArg::Structured => InputFormat::Structured,
        InputArg::Tabular => InputFormat::Tabular,
        InputArg::Auto => match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => InputFormat::Tabular,
            _ => InputFormat::Structured,
        },
    };
    let labels = common
        .labels
        .as_deref()
        .map(|s| LabelSet::new(s.split(',').map(str::trim)))
        .transpose()
        .map_err(|e| CliError::model("--labels", e))?;
    let options = ParseOptions {
        labels,
        group_name: path.file_stem().map(|s| s.to_string_lossy().into_owned()),
    };
    let mut dataset = parse_group_file(&bytes, format, &options).map_err(|e| match e {
        CliError::Model { context, source } => CliError::Model {
            context: format!("{}: {context}", path.display()),
            source,
        },
        CliError::Invalid(msg) => CliError::Invalid(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    if let Some(spec) = &common.stages {
        dataset.rename_stages(&resolve_stage_names(spec)?)?;
    }
    Ok(dataset)
}

fn run(cli: Cli) -> Result<Vec<u8>> {
    let common = &cli.common;
    let mut options = AnalysisOptions {
        normalizer: common.normalizer,
        epsilon: common.epsilon,
        combined_measures: false,
    };
    let load_all = |files: &[PathBuf]| files.iter().map(|f| load(f, common)).collect::<Result<Vec<_>>>();
    let report = match &cli.command {
        Command::Analyze { file } => analyze_command(&load(file, common)?, &options)?,
        Command::Compare { files } => compare_command(&load_all(files)?, &options)?,
        Command::Combine { files, measures } => {
            options.combined_measures = *measures;
            combine_command(&load_all(files)?, &options)?
        }
    };
    let format = match common.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::JsonLike => OutputFormat::Structured,
        FormatArg::SvgLike => OutputFormat::Svg,
    };
    let render = RenderOptions {
        precision: common.precision,
        exact: common.exact,
    };
    Ok(render_report(&report, format, &render))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(bytes) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(&bytes).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
