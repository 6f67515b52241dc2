//! Frozen numeric values. Each was computed once from the exact counts and
//! is pinned here so that changes to the numerics are noticed.

use num_bigint::BigUint;
use num_rational::BigRational;
use skewtab_core::asymptotics::{
    band_constants, family_report, log_factorial_family, ribbon_rho_terms, second_order_constant,
    subpoly_report, thick_ribbon_depth_gap, tvk_constant, tvk_log_rate, TvkData,
};
use skewtab_core::bounds::{binom_lemma_check, compare_check};
use skewtab_core::exact::FactorialKind;
use skewtab_core::excited::{proctor_xi, slim_xi_checks};
use skewtab_core::shapes::{connected_skew_shapes, skew_shapes};
use skewtab_core::{Partition, ShapeFamily};

fn close(actual: f64, expected: f64, tol: f64) {
    assert!(
        (actual - expected).abs() <= tol,
        "expected {expected}, got {actual}"
    );
}

#[test]
fn corpus_sizes() {
    assert_eq!(skew_shapes(8).len(), 795);
    assert_eq!(connected_skew_shapes(8).len(), 485);
}

#[test]
fn thick_ribbon_second_order_constants() {
    let expected = [
        (2, 5, -0.2502012118),
        (4, 22, -0.2816527629),
        (6, 51, -0.2678277530),
        (8, 92, -0.2549122980),
        (10, 145, -0.2449590067),
        (12, 210, -0.2373173415),
    ];
    let fam = ShapeFamily::ThickRibbon { k: 1, r: 1 };
    let band = band_constants(&ShapeFamily::ThickRibbon { k: 2, r: 2 }).unwrap();
    for (k, n, c) in expected {
        let so = second_order_constant(&fam, k).unwrap();
        assert_eq!(so.n, n);
        close(so.c, c, 1e-9);
        assert!(band.contains(so.c));
        let rep = family_report(&fam, k).unwrap();
        assert!(rep.sandwich, "k = {k}");
    }
    close(band.lower, -0.3237, 5e-5);
    close(band.upper, -0.0621, 5e-5);
}

#[test]
fn square_second_order_constants() {
    let expected = [
        -0.6833156644,
        -0.7558688230,
        -0.7947086723,
        -0.8180765973,
        -0.8333028660,
    ];
    let fam = ShapeFamily::Square { k: 1 };
    let mut previous = f64::INFINITY;
    for (k, c) in (3..=7).zip(expected) {
        let so = second_order_constant(&fam, k).unwrap();
        close(so.c, c, 1e-9);
        assert!(so.c < previous);
        assert!(so.c > -0.8863);
        previous = so.c;
    }
}

#[test]
fn inverted_thick_hook_second_order_constants() {
    let expected = [-0.318257, -0.585909, -0.657930, -0.687953, -0.703472];
    let fam = ShapeFamily::InvertedThickHook { k: 1 };
    for (k, c) in (1..=5).zip(expected) {
        close(second_order_constant(&fam, k).unwrap().c, c, 1e-6);
    }
}

#[test]
fn thick_ribbon_proctor_values() {
    let expected = [(2, 2u64), (4, 84), (6, 81796), (8, 1844536720)];
    for (k, v) in expected {
        assert_eq!(proctor_xi(k).unwrap(), BigUint::from(v));
    }
}

#[test]
fn slim_ratio() {
    let lambda = Partition::rectangle(200, 203);
    let mu = Partition::new(vec![2, 1]).unwrap();
    let rep = slim_xi_checks(&lambda, &mu).unwrap();
    assert_eq!(
        rep.ratio,
        BigRational::new(39999u32.into(), 40000u32.into())
    );
}

#[test]
fn thick_ribbon_depth_gap_value() {
    let gap = thick_ribbon_depth_gap(30, 4).unwrap();
    close(gap, -0.5774205517667184, 1e-12);
    assert!((-core::f64::consts::LN_2..=0.0).contains(&gap));
}

#[test]
fn tvk_rates_approach_the_constant() {
    let d = TvkData::new(vec![0.3], vec![0.2], vec![0.1], vec![0.05]).unwrap();
    let c = tvk_constant(&d);
    close(c, 0.23901783664516513, 1e-12);
    let expected = [(100, 0.2190128776), (200, 0.2273008375), (400, 0.2322974911)];
    let mut gap = f64::INFINITY;
    for (n, rate) in expected {
        let r = tvk_log_rate(&d, n).unwrap();
        close(r, rate, 1e-9);
        assert!((c - r).abs() < gap);
        gap = (c - r).abs();
    }
}

#[test]
fn ribbon_rho_residuals() {
    let expected = [
        (4, 3, 2.2236791024),
        (6, 2, 1.3881137920),
        (32, 4, 4.8227431295),
    ];
    for (k, m, residual) in expected {
        close(ribbon_rho_terms(k, m).unwrap().residual, residual, 1e-8);
    }
    assert_eq!(ribbon_rho_terms(32, 4).unwrap().n, 128);
}

#[test]
fn ribbon_rho_depth() {
    let sh = ShapeFamily::RibbonRho { k: 32, m: 4 }.generate().unwrap();
    let rep = subpoly_report(&sh);
    assert_eq!(rep.depth, 5);
    assert!(rep.holds);
    assert!(rep.log_f - rep.sum_log_hooks.max(0.0) <= rep.log_f);
    assert!(rep.n_log_depth <= rep.n as f64 * 7f64.ln());
}

#[test]
fn factorial_family_residual_calibration() {
    let psi = [(50, 0.763), (100, 0.764), (200, 0.765)];
    let lambda = [(50, 0.201), (100, 0.197), (200, 0.195)];
    let phi = [(50, -0.033), (100, -0.054), (200, -0.066)];
    for (kind, table) in [
        (FactorialKind::DoubleSuperfactorial, psi),
        (FactorialKind::SuperDoubleFactorial, lambda),
        (FactorialKind::Superfactorial, phi),
    ] {
        for (n, per_n) in table {
            let r = log_factorial_family(kind, n).residual() / n as f64;
            close(r, per_n, 1.5e-3);
        }
    }
    let phi100 = log_factorial_family(FactorialKind::Superfactorial, 100);
    assert!(phi100.residual().abs() <= 200.0);
}

#[test]
fn rank_comparison_over_the_corpus() {
    let (mut na, mut holds, mut fails) = (0, 0, 0);
    for sh in skew_shapes(8) {
        match compare_check(&sh).verdict() {
            None => na += 1,
            Some(true) => holds += 1,
            Some(false) => fails += 1,
        }
    }
    assert_eq!((na, holds, fails), (209, 586, 0));
}

#[test]
fn binomial_lemma_failures() {
    let mut failures = Vec::new();
    for t in 1..=60u64 {
        for r in 1..=60u64 {
            if binom_lemma_check(t, r) == Some(false) {
                failures.push((t, r));
            }
        }
    }
    assert_eq!(failures.len(), 150);
    assert!(failures.iter().all(|&(_, r)| (3..=5).contains(&r)));
    let first_r5 = failures.iter().filter(|p| p.1 == 5).map(|p| p.0).min();
    assert_eq!(first_r5, Some(21));
    assert_eq!(binom_lemma_check(3, 3), Some(true));
    assert_eq!(binom_lemma_check(10, 3), Some(false));
}
