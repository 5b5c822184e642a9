use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lookback_cli::{
    cdf_bench_table, cmd_cdf_bench, cmd_figure5, cmd_price, cmd_table, figure5_table, init_threads_from_env,
    parse_n_list, price_table, table_rows_table, CdfBenchSpec, CliError, JSpec, Method, OutputFormat,
    RunConfig, Table, TableId,
};
use lookback_core::{MarketState, Side};

#[derive(Parser)]
#[command(
    name = "lookback",
    version,
    about = "Floating-strike lookback prices on the binomial lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Price one market at each n.
    Price {
        #[command(flatten)]
        market: MarketArgs,
        /// Periods: comma list and/or a..b ranges.
        #[arg(long, default_value = "1000")]
        n: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Reduced)]
        method: MethodArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Reference tables T1..T4 (market parameters are fixed).
    Table {
        /// T1, T2, T3 or T4.
        id: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Lattice call price for every n in 2..=n-max, next to the continuous price.
    Figure5 {
        #[arg(long, default_value_t = 5000)]
        n_max: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Error of the binomial CDF expansion against exact summation.
    CdfBench {
        #[arg(long, default_value = "200,400,800,1600,3200,6400")]
        n: String,
        /// p_n = p0 + p-alpha/sqrt(n).
        #[arg(long, default_value_t = 0.5)]
        p0: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        p_alpha: f64,
        /// A ratio r for j = floor(r n), or `median`.
        #[arg(long, default_value = "0.55")]
        j: String,
        /// Correction orders kept (0..=4).
        #[arg(long, default_value_t = 4)]
        orders: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct MarketArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 80.0)]
    spot: f64,
    /// Running minimum for calls, running maximum for puts.
    #[arg(long, allow_hyphen_values = true, default_value_t = 60.0)]
    extremum: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.2)]
    sigma: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.08)]
    rate: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.27)]
    tau: f64,
    #[arg(long, default_value = "call")]
    side: String,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output file (standard output when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Reduced,
    Tree,
    Expansion,
    Bs,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Reduced => Method::Reduced,
            MethodArg::Tree => Method::Tree,
            MethodArg::Expansion => Method::Expansion,
            MethodArg::Bs => Method::Bs,
        }
    }
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn parse_j(s: &str) -> Result<JSpec, CliError> {
    if s.eq_ignore_ascii_case("median") {
        return Ok(JSpec::Median);
    }
    match s.parse::<f64>() {
        Ok(r) if (0.0..=1.0).contains(&r) => Ok(JSpec::Ratio(r)),
        _ => Err(CliError::Domain(format!(
            "--j must be a ratio in [0, 1] or `median`, got `{s}`"
        ))),
    }
}

fn emit(table: &Table, out: &OutArgs) -> Result<(), CliError> {
    let text = table.render(out.format.into())?;
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    init_threads_from_env()?;
    match cli.command {
        Command::Price {
            market,
            n,
            method,
            out,
        } => {
            let side: Side = market.side.parse()?;
            let cfg = RunConfig {
                market: MarketState::new(
                    market.spot,
                    market.extremum,
                    market.sigma,
                    market.rate,
                    market.tau,
                )?,
                side,
                n_values: parse_n_list(&n)?,
                method: method.into(),
                output_format: out.format.into(),
                output_path: out.out.clone(),
            };
            let rows = cmd_price(&cfg)?;
            emit(&price_table(&rows, cfg.method), &out)
        }
        Command::Table { id, out } => {
            let rows = cmd_table(id.parse::<TableId>()?)?;
            emit(&table_rows_table(&rows), &out)
        }
        Command::Figure5 { n_max, out } => emit(&figure5_table(&cmd_figure5(n_max)?), &out),
        Command::CdfBench {
            n,
            p0,
            p_alpha,
            j,
            orders,
            out,
        } => {
            let spec = CdfBenchSpec {
                n_list: parse_n_list(&n)?,
                p0,
                p_alpha,
                j: parse_j(&j)?,
                orders,
            };
            emit(&cdf_bench_table(&cmd_cdf_bench(&spec)?), &out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
