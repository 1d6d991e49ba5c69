//! Closed-form periods: the zig-zag formula and the ladder-family formula,
//! with exact rational prefactors and an Euler-Maclaurin zeta.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::families::FamilyParams;

/// `coefficient * zeta(zeta_argument)` with an exact rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormValue {
    coefficient: BigRational,
    zeta_argument: u32,
}

impl ClosedFormValue {
    pub fn new(coefficient: BigRational, zeta_argument: u32) -> Result<Self> {
        if zeta_argument < 2 {
            return Err(Error::InvalidParameter(format!(
                "zeta argument must be at least 2, got {zeta_argument}"
            )));
        }
        if coefficient.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "period coefficient must be nonnegative, got {coefficient}"
            )));
        }
        Ok(ClosedFormValue {
            coefficient,
            zeta_argument,
        })
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn zeta_argument(&self) -> u32 {
        self.zeta_argument
    }

    /// Floating value, with the error budget split evenly between rounding
    /// the coefficient (at most half an ulp) and zeta.
    pub fn as_float(&self, target_rel_error: f64) -> Result<f64> {
        if self.coefficient.is_zero() {
            return Ok(0.0);
        }
        let c = self.coefficient.to_f64().ok_or_else(|| {
            Error::InvalidParameter("coefficient is out of floating range".into())
        })?;
        let budget = (target_rel_error - f64::EPSILON).max(MIN_REL_ERROR);
        Ok(c * zeta(self.zeta_argument, budget)?)
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * zeta({})", self.coefficient, self.zeta_argument)
    }
}

/// Smallest relative error the double-precision zeta accepts.
pub const MIN_REL_ERROR: f64 = 1e-14;

const BERNOULLI: [(i64, i64); 6] = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730)];

/// `zeta(s)` for integer `s >= 2` by Euler-Maclaurin: the partial sum up to
/// `K - 1`, the integral and half-term corrections at `K`, and Bernoulli
/// corrections through `B_10`. `K` starts at 20 and doubles until the
/// magnitude of the `B_12` term, which bounds the remainder, is below the
/// target.
pub fn zeta(s: u32, target_rel_error: f64) -> Result<f64> {
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "zeta needs s >= 2, got {s}"
        )));
    }
    if target_rel_error.is_nan() || target_rel_error < MIN_REL_ERROR {
        return Err(Error::InvalidParameter(format!(
            "target relative error must be at least {MIN_REL_ERROR:e}, got {target_rel_error:e}"
        )));
    }
    let sf = s as f64;
    let mut k_cut: u32 = 20;
    while remainder_bound(sf, k_cut as f64) > target_rel_error {
        k_cut *= 2;
    }
    let big_k = k_cut as f64;
    let partial: f64 = (1..k_cut).rev().map(|k| (k as f64).powf(-sf)).sum();
    let mut tail = big_k.powf(1.0 - sf) / (sf - 1.0) + 0.5 * big_k.powf(-sf);
    // B_{2j} / (2j)! * s (s+1) ... (s+2j-2) * K^(-s-2j+1)
    let mut rising = sf;
    let mut factorial = 2.0;
    for (j, &(num, den)) in BERNOULLI[..5].iter().enumerate() {
        let order = 2 * (j as i32 + 1);
        tail += num as f64 / den as f64 / factorial * rising * big_k.powf(-sf - order as f64 + 1.0);
        rising *= (sf + order as f64 - 1.0) * (sf + order as f64);
        factorial *= (order as f64 + 1.0) * (order as f64 + 2.0);
    }
    Ok(partial + tail)
}

/// `|B_12| / 12! * s (s+1) ... (s+10) * K^(-s-11)`.
fn remainder_bound(s: f64, big_k: f64) -> f64 {
    let (num, den) = BERNOULLI[5];
    let rising: f64 = (0..11).map(|i| s + i as f64).product();
    let factorial: f64 = (1..=12).map(|i| i as f64).product();
    (num as f64 / den as f64).abs() / factorial * rising * big_k.powf(-s - 11.0)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: u32, r: u32) -> BigInt {
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// Zig-zag period
/// `4 (2n-2)! / (n! (n-1)!) * (1 - (1 - (-1)^n) / 2^(2n-3)) * zeta(2n-3)`.
pub fn zigzag_period(n: u32) -> Result<ClosedFormValue> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "zig-zag periods need n >= 3, got {n}"
        )));
    }
    let base = BigRational::new(
        BigInt::from(4) * factorial(2 * n - 2),
        factorial(n) * factorial(n - 1),
    );
    let parity = if n.is_odd() {
        BigRational::one() - BigRational::new(BigInt::from(2), BigInt::one() << (2 * n - 3))
    } else {
        BigRational::one()
    };
    ClosedFormValue::new(base * parity, 2 * n - 3)
}

/// `4/n * binomial(2n-2, n-1) * zeta(2n-3)` for loop number `n`.
pub fn ladder_period(n: u32) -> Result<ClosedFormValue> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "period formula needs n >= 3, got {n}"
        )));
    }
    let coefficient = BigRational::new(BigInt::from(4) * binomial(2 * n - 2, n - 1), BigInt::from(n));
    ClosedFormValue::new(coefficient, 2 * n - 3)
}

/// Period of `G(k, l, m)`, with `n = 2(k + l + m)`.
pub fn family_period(p: FamilyParams) -> ClosedFormValue {
    ladder_period(p.n()).expect("family loop number is at least 6")
}
