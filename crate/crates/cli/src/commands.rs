use crate::config::{check_increasing, Method, RunConfig};
use crate::error::CliError;
use crate::output::{Cell, Table};
use lookback_core::binomial_expansion::{cdf_expansion, expansion_error};
use lookback_core::numerics::binom_cdf;
use lookback_core::price_asymptotics::residual_row;
use lookback_core::{
    bs_price, expansion_coeffs, expansion_price, price_backward_induction, price_closed,
    price_closed_reduced, MarketState, Side,
};
use rayon::prelude::*;

/// Runs `f` for each n on the rayon pool and returns results in input order.
fn fan_out<T: Send>(
    ns: &[u64],
    f: impl Fn(u64) -> Result<T, CliError> + Sync + Send,
) -> Result<Vec<T>, CliError> {
    ns.par_iter().map(|&n| f(n)).collect()
}

pub fn cmd_price(cfg: &RunConfig) -> Result<Vec<(u64, f64)>, CliError> {
    cfg.validate()?;
    let (m, side) = (&cfg.market, cfg.side);
    let expansion = match cfg.method {
        Method::Expansion => Some(expansion_coeffs(m, side)?),
        _ => None,
    };
    let bs = match cfg.method {
        Method::Bs => Some(bs_price(m, side)?),
        _ => None,
    };
    fan_out(&cfg.n_values, |n| {
        let v = match cfg.method {
            Method::Closed => price_closed(m, n, side)?,
            Method::Reduced => price_closed_reduced(m, n, side)?,
            Method::Tree => price_backward_induction(m, n, side)?,
            Method::Expansion => expansion_price(expansion.as_ref().expect("computed"), n),
            Method::Bs => bs.expect("computed"),
        };
        Ok((n, v))
    })
}

pub fn price_table(rows: &[(u64, f64)], method: Method) -> Table {
    Table {
        command: "price",
        columns: vec!["n", "method", "price"],
        rows: rows
            .iter()
            .map(|&(n, v)| {
                vec![
                    Cell::Int(n as i64),
                    Cell::Text(method.as_str().into()),
                    Cell::Real(v),
                ]
            })
            .collect(),
    }
}

/// The four reference markets: S = 80, sigma = 0.2, tau = 1.27; calls with M = 60, puts with M = 100.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
}

pub const TABLE_PERIODS: [u64; 5] = [1000, 5000, 10_000, 50_000, 100_000];

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::T1, TableId::T2, TableId::T3, TableId::T4];

    pub fn side(self) -> Side {
        match self {
            TableId::T1 | TableId::T2 => Side::Call,
            TableId::T3 | TableId::T4 => Side::Put,
        }
    }

    pub fn market(self) -> MarketState {
        let (m, r) = match self {
            TableId::T1 => (60.0, 0.08),
            TableId::T2 => (60.0, 0.0),
            TableId::T3 => (100.0, 0.08),
            TableId::T4 => (100.0, 0.0),
        };
        MarketState::new(80.0, m, 0.2, r, 1.27).expect("valid reference market")
    }
}

impl std::str::FromStr for TableId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_uppercase().as_str() {
            "T1" | "1" => Ok(TableId::T1),
            "T2" | "2" => Ok(TableId::T2),
            "T3" | "3" => Ok(TableId::T3),
            "T4" | "4" => Ok(TableId::T4),
            _ => Err(CliError::Domain(format!("unknown table `{s}`, expected T1..T4"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub n: u64,
    pub price_n: f64,
    pub price_bs: f64,
    /// (price_n - price_bs) sqrt(n).
    pub scaled1: f64,
    pub coeff1: f64,
    /// (price_n - price_bs - coeff1/sqrt(n)) n.
    pub scaled2: f64,
    pub coeff2: f64,
}

pub fn cmd_table(id: TableId) -> Result<Vec<TableRow>, CliError> {
    let exp = expansion_coeffs(&id.market(), id.side())?;
    fan_out(&TABLE_PERIODS, |n| {
        let r = residual_row(&exp, n)?;
        Ok(TableRow {
            n,
            price_n: r.price_n,
            price_bs: exp.c0,
            scaled1: r.scaled1,
            coeff1: exp.c1,
            scaled2: r.scaled2,
            coeff2: exp.c2_at(n),
        })
    })
}

pub fn table_rows_table(rows: &[TableRow]) -> Table {
    Table {
        command: "table",
        columns: vec![
            "n", "price_n", "price_bs", "scaled1", "coeff1", "scaled2", "coeff2",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.n as i64),
                    Cell::Real(r.price_n),
                    Cell::Real(r.price_bs),
                    Cell::Real(r.scaled1),
                    Cell::Real(r.coeff1),
                    Cell::Real(r.scaled2),
                    Cell::Real(r.coeff2),
                ]
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure5Row {
    pub n: u64,
    pub price_n: f64,
    pub price_bs: f64,
}

/// Lattice call prices for n = 2..=n_max on the T1 market, next to the continuous price.
pub fn cmd_figure5(n_max: u64) -> Result<Vec<Figure5Row>, CliError> {
    if !(2..=5000).contains(&n_max) {
        return Err(CliError::Domain(format!(
            "n_max must lie in 2..=5000, got {n_max}"
        )));
    }
    let m = TableId::T1.market();
    let bs = bs_price(&m, Side::Call)?;
    let ns: Vec<u64> = (2..=n_max).collect();
    fan_out(&ns, |n| {
        Ok(Figure5Row {
            n,
            price_n: price_closed_reduced(&m, n, Side::Call)?,
            price_bs: bs,
        })
    })
}

pub fn figure5_table(rows: &[Figure5Row]) -> Table {
    Table {
        command: "figure5",
        columns: vec!["n", "price_n", "price_bs"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.n as i64),
                    Cell::Real(r.price_n),
                    Cell::Real(r.price_bs),
                ]
            })
            .collect(),
    }
}

/// How the CDF index is chosen for each n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JSpec {
    /// j = floor(ratio n).
    Ratio(f64),
    /// j = floor((n - 1)/2).
    Median,
}

/// p_n = p0 + p_alpha/sqrt(n).
#[derive(Debug, Clone, PartialEq)]
pub struct CdfBenchSpec {
    pub n_list: Vec<u64>,
    pub p0: f64,
    pub p_alpha: f64,
    pub j: JSpec,
    /// Number of correction orders kept, 0..=4.
    pub orders: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfBenchRow {
    pub n: u64,
    pub p: f64,
    pub j: i64,
    pub exact: f64,
    pub expansion: f64,
    /// |exact - expansion|, measured on the smaller tail.
    pub err: f64,
    /// err n^{5/2}.
    pub err_scaled: f64,
}

pub fn cmd_cdf_bench(spec: &CdfBenchSpec) -> Result<Vec<CdfBenchRow>, CliError> {
    check_increasing(&spec.n_list)?;
    if spec.orders > 4 {
        return Err(CliError::Domain("orders must be in 0..=4".into()));
    }
    fan_out(&spec.n_list, |n| {
        let nf = n as f64;
        let p = spec.p0 + spec.p_alpha / nf.sqrt();
        let j = match spec.j {
            JSpec::Ratio(r) => (r * nf).floor() as i64,
            JSpec::Median => (n as i64 - 1) / 2,
        };
        let e = cdf_expansion(n, p, j)?;
        let err = expansion_error(n, p, j, spec.orders)?;
        Ok(CdfBenchRow {
            n,
            p,
            j,
            exact: binom_cdf(n, p, j),
            expansion: e.value_with_orders(spec.orders),
            err,
            err_scaled: err * nf.powf(2.5),
        })
    })
}

pub fn cdf_bench_table(rows: &[CdfBenchRow]) -> Table {
    Table {
        command: "cdf-bench",
        columns: vec!["n", "p", "j", "exact", "expansion", "err", "err_scaled"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.n as i64),
                    Cell::Real(r.p),
                    Cell::Int(r.j),
                    Cell::Real(r.exact),
                    Cell::Real(r.expansion),
                    Cell::Real(r.err),
                    Cell::Real(r.err_scaled),
                ]
            })
            .collect(),
    }
}
