//! Library side of the `lookback` command: configuration, per-command row builders,
//! and CSV/JSON rendering.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{
    cdf_bench_table, cmd_cdf_bench, cmd_figure5, cmd_price, cmd_table, figure5_table, price_table,
    table_rows_table, CdfBenchRow, CdfBenchSpec, Figure5Row, JSpec, TableId, TableRow, TABLE_PERIODS,
};
pub use config::{parse_n_list, Method, OutputFormat, RunConfig};
pub use error::CliError;
pub use output::{Table, SCHEMA_VERSION};

/// Sizes the global rayon pool from `LOOKBACK_THREADS` (unset or 0 means automatic).
/// Calling it more than once is harmless; only the first call takes effect.
pub fn init_threads_from_env() -> Result<(), CliError> {
    let n = match std::env::var("LOOKBACK_THREADS") {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Domain(format!("LOOKBACK_THREADS must be a count, got `{s}`")))?,
        _ => 0,
    };
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}
