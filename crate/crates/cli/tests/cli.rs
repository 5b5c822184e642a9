use std::process::{Command, Output};

use lookback_cli::{
    cmd_cdf_bench, cmd_figure5, cmd_price, cmd_table, CdfBenchSpec, JSpec, Method, OutputFormat, RunConfig,
    TableId,
};
use lookback_core::{bs_price, MarketState, Side};

fn lookback(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lookback"))
        .args(args)
        .env("LOOKBACK_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/output.schema.json");
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&v).expect("schema compiles")
}

fn t1() -> MarketState {
    MarketState::new(80.0, 60.0, 0.2, 0.08, 1.27).unwrap()
}

fn config(method: Method, ns: Vec<u64>) -> RunConfig {
    RunConfig {
        market: t1(),
        side: Side::Call,
        n_values: ns,
        method,
        output_format: OutputFormat::Csv,
        output_path: None,
    }
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    let args = [
        "price",
        "--n",
        "10..40,100,500",
        "--side",
        "put",
        "--extremum",
        "100",
    ];
    let a = lookback(&args, "1");
    let b = lookback(&args, "4");
    let c = lookback(&args, "0");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let text = stdout(&a);
    let ns: Vec<u64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ns.len(), 33);
    assert!(ns.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn csv_layout() {
    let o = lookback(&["figure5", "--n-max", "20"], "0");
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    assert!(text.ends_with('\n'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,price_n,price_bs"));
    assert_eq!(lines.next(), Some("2,26.03214307,26.38638432"));
    assert_eq!(text.lines().count(), 20);
}

#[test]
fn exit_codes() {
    let ok = lookback(&["price", "--n", "10"], "0");
    assert_eq!(ok.status.code(), Some(0));
    for args in [
        vec!["price", "--sigma", "-0.2"],
        vec!["price", "--extremum", "90"],
        vec!["price", "--n", "30,20"],
        vec!["table", "T9"],
        vec!["figure5", "--n-max", "1"],
        vec!["cdf-bench", "--j", "1.5"],
    ] {
        let o = lookback(&args, "0");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let rec: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert!(schema().is_valid(&rec), "{rec}");
        assert_eq!(rec["error"]["kind"], "domain");
    }
    for args in [
        vec!["price", "--method", "tree", "--n", "5001"],
        vec!["price", "--method", "closed", "--n", "6000"],
    ] {
        let o = lookback(&args, "0");
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        let rec: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(rec["error"]["kind"], "budget");
        assert!(schema().is_valid(&rec));
    }
}

#[test]
fn json_output_matches_schema() {
    let s = schema();
    for args in [
        vec!["price", "--n", "5,10", "--format", "json"],
        vec!["price", "--n", "5", "--method", "bs", "--format", "json"],
        vec!["table", "T3", "--format", "json"],
        vec!["figure5", "--n-max", "6", "--format", "json"],
        vec!["cdf-bench", "--n", "201,401", "--j", "median", "--format", "json"],
    ] {
        let o = lookback(&args, "0");
        assert!(o.status.success(), "{args:?}");
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(s.is_valid(&doc), "{args:?}: {doc}");
        assert_eq!(doc["schema_version"], "1");
    }
    let bogus = serde_json::json!({"schema_version": "1", "command": "price", "columns": ["n"], "rows": [{"n": 1, "colour": 2}]});
    assert!(!s.is_valid(&bogus));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("lookback-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let o = lookback(&["price", "--n", "7", "--out", path.to_str().unwrap()], "0");
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,method,price\n7,reduced,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tree_and_reduced_agree_at_313() {
    let tree = cmd_price(&config(Method::Tree, vec![313])).unwrap()[0].1;
    let red = cmd_price(&config(Method::Reduced, vec![313])).unwrap()[0].1;
    assert!(((tree - red) / red).abs() < 1e-10, "{tree} {red}");
}

#[test]
fn bs_column_is_constant() {
    let rows = cmd_price(&config(Method::Bs, vec![3, 17, 1000, 1_000_000])).unwrap();
    let bs = bs_price(&t1(), Side::Call).unwrap();
    assert!(rows.iter().all(|&(_, v)| v == bs));
}

#[test]
fn reduced_price_at_1000() {
    let v = cmd_price(&config(Method::Reduced, vec![1000])).unwrap()[0].1;
    assert!((v - 26.3647).abs() < 5e-5);
}

#[test]
fn table_spot_cells() {
    let t1 = cmd_table(TableId::T1).unwrap();
    let last = t1.last().unwrap();
    assert_eq!(last.n, 100_000);
    assert!((last.price_n - 26.3842).abs() < 5e-4);
    assert!((last.scaled2 - 0.6746).abs() < 5e-4);

    let t2 = cmd_table(TableId::T2).unwrap();
    assert!((t2[1].scaled2 - 0.9868).abs() < 5e-4);
    assert!((t2[1].coeff2 - 1.0069).abs() < 5e-4);

    let t4 = cmd_table(TableId::T4).unwrap();
    assert!((t4[0].price_n - 23.4800).abs() < 5e-4);
    assert!((t4[0].coeff1 + 3.6413).abs() < 5e-4);
}

#[test]
fn figure5_rows() {
    let rows = cmd_figure5(60).unwrap();
    assert_eq!(rows.len(), 59);
    assert!((rows[0].price_n - 26.03214307).abs() < 5e-8);
    assert!((rows[48].price_n - 26.29339471).abs() < 5e-8);
    assert!(rows.iter().all(|r| (r.price_bs - 26.3864).abs() < 5e-5));
    assert!(cmd_figure5(5001).is_err());
}

#[test]
fn cdf_bench_rows() {
    let median = cmd_cdf_bench(&CdfBenchSpec {
        n_list: vec![3, 101, 2001],
        p0: 0.5,
        p_alpha: 0.0,
        j: JSpec::Median,
        orders: 4,
    })
    .unwrap();
    assert!(median.iter().all(|r| r.err < 1e-15));

    let shifted = cmd_cdf_bench(&CdfBenchSpec {
        n_list: vec![200, 400, 800, 1600, 3200, 6400],
        p0: 0.5,
        p_alpha: 0.1,
        j: JSpec::Ratio(0.55),
        orders: 4,
    })
    .unwrap();
    assert!(shifted.last().unwrap().err <= 1e-9);
    assert!(cmd_cdf_bench(&CdfBenchSpec {
        n_list: vec![10, 5],
        p0: 0.5,
        p_alpha: 0.0,
        j: JSpec::Median,
        orders: 4
    })
    .is_err());
}
