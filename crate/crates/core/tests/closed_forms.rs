use num_bigint::BigInt;
use num_rational::BigRational;

use period_forge::closed::{family_period, ladder_period, zeta, zigzag_period};
use period_forge::families::FamilyParams;

/// Direct sum up to `terms`, plus the midpoint of the integral bounds
/// `[(M+1)^(1-s), M^(1-s)] / (s-1)` on the tail.
fn zeta_by_summation(s: u32, terms: u32) -> f64 {
    let s = s as f64;
    let head: f64 = (1..=terms).rev().map(|k| (k as f64).powf(-s)).sum();
    let m = terms as f64;
    let lower = (m + 1.0).powf(1.0 - s) / (s - 1.0);
    let upper = m.powf(1.0 - s) / (s - 1.0);
    head + 0.5 * (lower + upper)
}

#[test]
fn zeta_matches_summation() {
    for s in [3, 5, 7, 9, 13] {
        let fast = zeta(s, 1e-13).unwrap();
        let slow = zeta_by_summation(s, 100_000);
        assert!(((fast - slow) / slow).abs() < 1e-12, "s = {s}: {fast} vs {slow}");
    }
}

#[test]
fn known_zeta_values() {
    let pi = std::f64::consts::PI;
    assert!((zeta(4, 1e-14).unwrap() - pi.powi(4) / 90.0).abs() < 1e-14);
    assert!((zeta(6, 1e-14).unwrap() - pi.powi(6) / 945.0).abs() < 1e-14);
    assert!((zeta(3, 1e-14).unwrap() - 1.2020569031595942).abs() < 1e-15);
}

#[test]
fn small_zigzag_coefficients() {
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    assert_eq!(zigzag_period(3).unwrap().coefficient(), &r(6, 1));
    assert_eq!(zigzag_period(4).unwrap().coefficient(), &r(20, 1));
    assert_eq!(zigzag_period(5).unwrap().coefficient(), &r(441, 8));
    assert_eq!(zigzag_period(6).unwrap().coefficient(), &r(168, 1));
    assert_eq!(zigzag_period(7).unwrap().coefficient(), &r(33759, 64));
}

#[test]
fn one_rung_families_match_zigzags() {
    for total in 2..=10 {
        for k in 1..total {
            let p = FamilyParams::new(k, total - k, 1).unwrap();
            assert_eq!(family_period(p), zigzag_period(2 * total + 2).unwrap(), "{p}");
        }
    }
}

#[test]
fn family_period_depends_only_on_loop_number() {
    for p in FamilyParams::all_up_to(7) {
        assert_eq!(family_period(p), ladder_period(p.n()).unwrap());
    }
}
