use lookback_core::cv_tree::{
    path_count, path_count_enumerate, path_counts, price_backward_induction, price_closed,
    price_closed_reduced, tree_params, Level,
};
use lookback_core::{MarketState, Side};
use proptest::prelude::*;

fn market(spot: f64, extremum: f64, rate: f64) -> MarketState {
    MarketState::new(spot, extremum, 0.2, rate, 1.27).unwrap()
}

fn j0_grid() -> Vec<f64> {
    let mut g = vec![0.0, 0.3, 1.0, 1.6, 2.0, 3.7, 0.999, 5.5];
    for k in [1.0, 2.0, 3.0] {
        g.push(k - 1e-6);
        g.push(k + 1e-6);
    }
    g
}

#[test]
fn counts_match_enumeration() {
    for j0 in j0_grid() {
        for n in 1..=14u64 {
            let tally = path_count_enumerate(j0, n).unwrap();
            for (&(level, k), &count) in &tally {
                let c = path_count(j0, level.value(j0), k as i64, n).unwrap();
                assert_eq!(c.count, count as u128, "j0={j0} n={n} level={level:?} k={k}");
            }
            // and nothing nonzero that the walk never produced
            let listed = path_counts(j0, n).unwrap();
            assert_eq!(listed.len(), tally.len(), "j0={j0} n={n}");
            let total: u128 = listed.iter().map(|c| c.count).sum();
            assert_eq!(total, 1u128 << n);
        }
    }
}

#[test]
fn totals_up_to_twenty_two() {
    for j0 in [0.0, 0.3, 1.0, 1.6, 2.0, 3.7] {
        for n in [15u64, 18, 22] {
            let total: u128 = path_counts(j0, n).unwrap().iter().map(|c| c.count).sum();
            assert_eq!(total, 1u128 << n);
        }
        let e: u64 = path_count_enumerate(j0, 20).unwrap().values().sum();
        assert_eq!(e, 1 << 20);
    }
}

#[test]
fn integer_start_reaches_overlap_levels() {
    let tally = path_count_enumerate(1.0, 5).unwrap();
    assert!(tally.keys().all(|(l, _)| matches!(l, Level::Integer(_))));
    assert_eq!(tally.values().sum::<u64>(), 32);
}

/// S_t sum_{j,k} g(j) Lambda_{j,k} w^k (1-w)^{n-k}: the price straight from the path counts.
fn price_from_counts(m: &MarketState, n: u64, side: Side) -> f64 {
    let t = tree_params(m, n, side).unwrap();
    let w = match side {
        Side::Call => t.q_adj,
        Side::Put => 1.0 - t.q_adj,
    };
    let mut v = 0.0;
    for c in path_counts(t.j0, n).unwrap() {
        let g = match side {
            Side::Call => 1.0 - (-t.h * c.j).exp(),
            Side::Put => (t.h * c.j).exp() - 1.0,
        };
        v += g * c.count as f64 * w.powi(c.k as i32) * (1.0 - w).powi((n - c.k) as i32);
    }
    m.spot * v
}

#[test]
fn prices_agree_with_count_sums() {
    let cases = [
        (market(80.0, 60.0, 0.08), Side::Call),
        (market(80.0, 80.0, 0.08), Side::Call),
        (market(80.0, 78.0, 0.0), Side::Call),
        (market(80.0, 100.0, 0.08), Side::Put),
        (market(80.0, 80.0, 0.0), Side::Put),
    ];
    for (m, side) in cases {
        for n in [1u64, 2, 3, 10, 37, 60] {
            let want = price_from_counts(&m, n, side);
            let got = price_closed(&m, n, side).unwrap();
            assert!(
                (got - want).abs() < 1e-11 * want.max(1.0),
                "{side:?} n={n}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn emission_tree_three_periods() {
    let m = market(80.0, 80.0, 0.08);
    let want = price_from_counts(&m, 3, Side::Call);
    assert!((price_backward_induction(&m, 3, Side::Call).unwrap() - want).abs() < 1e-12);
    assert!((want - 13.787_048_503_69).abs() < 1e-9);
}

#[test]
fn probability_mass_is_one() {
    for (j0, n) in [(0.0, 20u64), (1.6, 40), (2.0, 33), (3.7, 60)] {
        for w in [0.3f64, 0.5, 0.52] {
            let s: f64 = path_counts(j0, n)
                .unwrap()
                .iter()
                .map(|c| c.count as f64 * w.powi(c.k as i32) * (1.0 - w).powi((n - c.k) as i32))
                .sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn three_way_agreement() {
    let markets = [
        (market(80.0, 60.0, 0.08), Side::Call),
        (market(80.0, 60.0, 0.0), Side::Call),
        (market(80.0, 100.0, 0.08), Side::Put),
        (market(80.0, 100.0, 0.0), Side::Put),
        (market(80.0, 80.0, 0.08), Side::Call),
        (market(80.0, 80.0, 0.0), Side::Put),
    ];
    let ns = [1u64, 2, 3, 5, 8, 13, 50, 99, 100, 313, 500];
    for (m, side) in markets {
        for n in ns {
            let a = price_closed(&m, n, side).unwrap();
            let b = price_closed_reduced(&m, n, side).unwrap();
            let c = price_backward_induction(&m, n, side).unwrap();
            assert!(
                rel(b, a) < 1e-10,
                "{side:?} r={} n={n}: reduced {b} direct {a}",
                m.rate
            );
            assert!(
                rel(c, a) < 1e-10,
                "{side:?} r={} n={n}: tree {c} direct {a}",
                m.rate
            );
        }
    }
}

#[test]
fn figure5_coordinates() {
    let m = market(80.0, 60.0, 0.08);
    let text = include_str!("data/figure5.csv");
    let mut seen = 0;
    for line in text.lines().skip(1) {
        let (n, v) = line.split_once(',').unwrap();
        let n: u64 = n.parse().unwrap();
        let v: f64 = v.parse().unwrap();
        let got = price_closed_reduced(&m, n, Side::Call).unwrap();
        assert!((got - v).abs() < 5e-8, "n={n}: {got} vs {v}");
        seen += 1;
    }
    assert_eq!(seen, 399);
    for (n, v) in [(2u64, 26.032_143_07), (100, 26.321_392_49), (400, 26.352_712_48)] {
        assert!((price_closed(&m, n, Side::Call).unwrap() - v).abs() < 5e-8);
    }
    assert!((price_backward_induction(&m, 2, Side::Call).unwrap() - 26.032_143_07).abs() < 5e-8);
}

/// Reduced-form prices evaluated in 45-digit arithmetic.
#[test]
fn extended_precision_prices() {
    let cases = [
        (
            market(80.0, 60.0, 0.08),
            Side::Call,
            2000u64,
            26.370_781_782_071_7,
        ),
        (market(80.0, 60.0, 0.0), Side::Call, 2000, 21.390_206_246_572_6),
        (market(80.0, 100.0, 0.08), Side::Put, 2000, 16.412_381_052_892_6),
        (market(80.0, 100.0, 0.0), Side::Put, 2000, 23.512_179_458_347_3),
        (market(80.0, 60.0, 0.08), Side::Call, 100_000, 26.384_155_052_433),
        (market(80.0, 60.0, 0.0), Side::Call, 100_000, 21.416_922_633_066_2),
        (
            market(80.0, 100.0, 0.08),
            Side::Put,
            100_000,
            16.509_761_834_213_6,
        ),
        (market(80.0, 100.0, 0.0), Side::Put, 100_000, 23.580_643_806_53),
    ];
    for (m, side, n, want) in cases {
        let got = price_closed_reduced(&m, n, side).unwrap();
        assert!(
            (got - want).abs() < 3e-11,
            "{side:?} r={} n={n}: {got} vs {want}",
            m.rate
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_markets_agree_and_are_nonnegative(
        s in 50.0f64..150.0,
        gap in 0.0f64..0.5,
        sigma in 0.05f64..0.6,
        rate in prop_oneof![Just(0.0), 0.0f64..0.15],
        tau in 0.05f64..3.0,
        n in 20u64..160,
        call in any::<bool>(),
    ) {
        let (side, extremum) = if call { (Side::Call, s * (-gap).exp()) } else { (Side::Put, s * gap.exp()) };
        let m = MarketState::new(s, extremum, sigma, rate, tau).unwrap();
        prop_assume!(tree_params(&m, n, side).is_ok());
        let a = price_closed(&m, n, side).unwrap();
        let b = price_closed_reduced(&m, n, side).unwrap();
        let c = price_backward_induction(&m, n, side).unwrap();
        prop_assert!(a >= 0.0);
        let scale = a.max(1e-8 * s);
        prop_assert!((b - a).abs() <= 1e-9 * scale, "reduced {} direct {}", b, a);
        prop_assert!((c - a).abs() <= 1e-9 * scale, "tree {} direct {}", c, a);
    }

    #[test]
    fn tree_params_invariants(gap in 0.0f64..1.0, n in 1u64..5000, rate in 0.0f64..0.1) {
        let m = MarketState::new(100.0, 100.0 * (-gap).exp(), 0.25, rate, 1.0).unwrap();
        if let Ok(t) = tree_params(&m, n, Side::Call) {
            prop_assert!((t.u * t.d - 1.0).abs() < 1e-15);
            prop_assert!(t.p_up > 0.0 && t.p_up < 1.0 && t.q_adj > 0.0 && t.q_adj < 1.0);
            prop_assert!((0.0..=0.25).contains(&t.kappa));
            prop_assert_eq!(t.j0, t.j0_floor as f64 + t.j0_frac);
        }
    }
}
