//! Expected commutations, noncommuting pairs and long braid moves in a uniform
//! reduced word of `w0`.
//!
//! With `l = C(n, 2)`, every one of the `l - 1` adjacent positions is either a
//! commutation or a noncommuting pair, so `E(C_n) = l - 1 - E(noncommuting)`.
//! Rotating words makes every position look like the first one, and the
//! first two letters are `j (j+1)` with probability `f^{lambda(a_n^(j))} / f^{delta_n}`.
//! Writing that ratio through hook lengths gives
//!
//! ```text
//! sigma(n, j) = (2j-1)!!/(j-1)! * (2j+1)!!/j! * (2n-2j-3)!!/(n-j-2)! * (2n-2j-1)!!/(n-j-1)!
//!               / (3 l 2^(2n-7))
//! E(noncommuting) = sum_{j=1}^{n-2} sigma(n, j)
//! ```
//!
//! The same sum can be written as `8/(3l) * sum u_{j-1} u_j u_{n-j-2} u_{n-j-1}`
//! with `u_i = (2i+1)!! / (2^i i!)`; both codings are kept and compared in tests.

use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{enumerate_words, CountingSession, DEFAULT_ENUMERATION_CAP};
use crate::{longest_length, ExactRational};

/// Largest `n` for which the `enumerate` method is offered.
pub const ENUMERATE_MAX_N: usize = 6;
/// Largest `n` for which the `dp` method (and exact word counts) is offered.
pub const DP_MAX_N: usize = 10;
/// Largest `n` evaluated with exact rationals; beyond it floats use log space.
pub const EXACT_CLOSED_MAX_N: usize = 300;

/// Leading coefficient of the expected number of noncommuting pairs, `128/(9 pi^2)`.
pub const NONCOMMUTING_SLOPE: f64 = 128.0 / (9.0 * PI * PI);

/// Signature shared by [`sigma`] and substitutes used to exercise the verifier.
pub type SigmaFn = fn(usize, usize) -> Result<ExactRational>;

fn rational(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(n.into())
}

pub fn to_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `m!! = m (m-2) (m-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigUint> {
    if m < -1 {
        return Err(Error::OutOfRange(format!("double factorial of {m}")));
    }
    let mut acc = BigUint::one();
    let mut k = m;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    Ok(acc)
}

fn factorial(m: i64) -> BigUint {
    (2..=m.max(0) as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(2x-1)!! / (x-1)!` for `x >= 1`.
fn odd_over_factorial(x: i64) -> Result<ExactRational> {
    Ok(ExactRational::new(
        double_factorial(2 * x - 1)?.into(),
        factorial(x - 1).into(),
    ))
}

/// `u_i = 3*5*...*(2i+1) / (2*4*...*(2i))`; `u_0 = 1`.
pub fn u(i: usize) -> ExactRational {
    let num = double_factorial(2 * i as i64 + 1).expect("nonnegative argument");
    let den = (BigUint::one() << i) * factorial(i as i64);
    ExactRational::new(num.into(), den.into())
}

fn check_sigma_args(n: usize, j: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    if j == 0 || j > n - 2 {
        return Err(Error::OutOfRange(format!("j = {j} must lie in [1, {}]", n - 2)));
    }
    Ok(())
}

/// The `j`-th summand of the expected number of noncommuting pairs:
/// `2 (l - 1)` times the probability that a word starts with `j (j+1)`.
pub fn sigma(n: usize, j: usize) -> Result<ExactRational> {
    check_sigma_args(n, j)?;
    let (n, j) = (n as i64, j as i64);
    let ell = longest_length(n as usize) as i64;
    // 2^(2n-7) is 1/2 at n = 3, so keep the prefactor rational.
    let prefactor = rational(3 * ell).recip() * rational(2).pow(-(2 * n as i32 - 7));
    Ok(prefactor
        * odd_over_factorial(j)?
        * odd_over_factorial(j + 1)?
        * odd_over_factorial(n - j - 1)?
        * odd_over_factorial(n - j)?)
}

/// `sum_{j=1}^{n-2} sigma(n, j)` with a caller-chosen `sigma`; zero for `n = 2`.
pub fn sum_sigma(n: usize, sigma: SigmaFn) -> Result<ExactRational> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    (1..n.saturating_sub(1)).try_fold(ExactRational::zero(), |acc, j| Ok(acc + sigma(n, j)?))
}

/// Expected number of consecutive noncommuting pairs, `2 E(A_n)`.
pub fn expected_noncommuting(n: usize) -> Result<ExactRational> {
    sum_sigma(n, sigma)
}

/// The same expectation through `8/(3l) * sum u_{j-1} u_j u_{n-j-2} u_{n-j-1}`.
pub fn expected_noncommuting_via_u(n: usize) -> Result<ExactRational> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if n == 2 {
        return Ok(ExactRational::zero());
    }
    let us: Vec<ExactRational> = (0..n).map(u).collect();
    let sum = (1..=n - 2).fold(ExactRational::zero(), |acc, j| {
        acc + &us[j - 1] * &us[j] * &us[n - j - 2] * &us[n - j - 1]
    });
    let ell = longest_length(n) as i64;
    Ok(ExactRational::new(8.into(), (3 * ell).into()) * sum)
}

/// Expected number of positions supporting a commutation, `E(C_n)`.
pub fn expected_commutations(n: usize) -> Result<ExactRational> {
    expected_commutations_with(n, sigma)
}

pub fn expected_commutations_with(n: usize, sigma: SigmaFn) -> Result<ExactRational> {
    let ell = longest_length(n) as i64;
    Ok(rational(ell - 1) - sum_sigma(n, sigma)?)
}

/// Floating evaluation of the noncommuting sum in log space, with
/// `ln u_i` accumulated as `sum_k ln(1 + 1/(2k))`. No intermediate exceeds
/// a handful of units, so this is accurate for any `n`.
pub fn expected_noncommuting_log_space(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if n == 2 {
        return Ok(0.0);
    }
    let mut ln_u = vec![0.0f64; n];
    for i in 1..n {
        ln_u[i] = ln_u[i - 1] + (0.5 / i as f64).ln_1p();
    }
    let ell = longest_length(n) as f64;
    let ln_prefactor = (8.0 / (3.0 * ell)).ln();
    Ok((1..=n - 2)
        .map(|j| (ln_prefactor + ln_u[j - 1] + ln_u[j] + ln_u[n - j - 2] + ln_u[n - j - 1]).exp())
        .sum())
}

/// Exact (then rounded) up to [`EXACT_CLOSED_MAX_N`], log space beyond.
pub fn expected_noncommuting_f64(n: usize) -> Result<f64> {
    if n <= EXACT_CLOSED_MAX_N {
        Ok(to_f64(&expected_noncommuting(n)?))
    } else {
        expected_noncommuting_log_space(n)
    }
}

pub fn expected_commutations_f64(n: usize) -> Result<f64> {
    if n <= EXACT_CLOSED_MAX_N {
        Ok(to_f64(&expected_commutations(n)?))
    } else {
        Ok((longest_length(n) - 1) as f64 - expected_noncommuting_log_space(n)?)
    }
}

/// Leading term `128 n / (9 pi^2)` of the expected noncommuting pairs.
pub fn asymptotic_noncommuting(n: usize) -> f64 {
    NONCOMMUTING_SLOPE * n as f64
}

/// Leading-order expected proportions per unit of word length.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Proportions {
    pub commutations: f64,
    pub noncommuting: f64,
    pub braids: f64,
}

pub fn proportions(n: usize) -> Proportions {
    let n = n as f64;
    Proportions {
        commutations: 1.0,
        noncommuting: 256.0 / (9.0 * PI * PI * n),
        braids: 2.0 / (n * n),
    }
}

/// The expected number of long braid moves in a reduced word of `w0`, for every `n >= 3`.
pub fn reiner_reference() -> ExactRational {
    ExactRational::one()
}

/// Expectations read off from the memoised counts:
/// `E(noncommuting) = 2 (l-1) sum_j P(word starts j, j+1)` and
/// `E(braids) = (l-2) sum_j [P(j, j+1, j) + P(j+1, j, j+1)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DpExpectations {
    pub commutations: ExactRational,
    pub noncommuting: ExactRational,
    pub braids: ExactRational,
}

pub fn dp_expectations(session: &mut CountingSession) -> Result<DpExpectations> {
    let n = session.n();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    let w0 = Permutation::longest_element(n)?;
    let ell = longest_length(n) as i64;
    let mut pair = ExactRational::zero();
    let mut triple = ExactRational::zero();
    for j in 1..=(n as u32 - 2) {
        pair += session.prefix_probability(&w0, &[j, j + 1])?;
        triple += session.prefix_probability(&w0, &[j, j + 1, j])?;
        triple += session.prefix_probability(&w0, &[j + 1, j, j + 1])?;
    }
    let noncommuting = rational(2 * (ell - 1)) * pair;
    Ok(DpExpectations {
        commutations: rational(ell - 1) - &noncommuting,
        noncommuting,
        braids: rational(ell - 2) * triple,
    })
}

/// Exact means over every reduced word of `w0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumeratedMeans {
    pub words: u64,
    pub commutations: ExactRational,
    pub noncommuting: ExactRational,
    pub braids: ExactRational,
}

pub fn enumerated_means(n: usize) -> Result<EnumeratedMeans> {
    let w0 = Permutation::longest_element(n)?;
    let (mut words, mut c, mut nc, mut b) = (0u64, 0u64, 0u64, 0u64);
    for word in enumerate_words(&w0, DEFAULT_ENUMERATION_CAP)? {
        let s = word.stats();
        words += 1;
        c += s.commutations;
        nc += s.noncommuting;
        b += s.braids;
    }
    let mean = |total: u64| ExactRational::new(total.into(), words.into());
    Ok(EnumeratedMeans {
        words,
        commutations: mean(c),
        noncommuting: mean(nc),
        braids: mean(b),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Dp,
    Enumeration,
}

impl Method {
    /// Largest `n` the method accepts.
    pub fn max_n(self) -> usize {
        match self {
            Method::ClosedForm => EXACT_CLOSED_MAX_N,
            Method::Dp => DP_MAX_N,
            Method::Enumeration => ENUMERATE_MAX_N,
        }
    }
}

/// Exact expectations for one `n`, tagged with how they were obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectationReport {
    pub n: usize,
    pub e_commutations: ExactRational,
    pub e_noncommuting: ExactRational,
    pub e_braids_reference: ExactRational,
    pub method: Method,
    pub float_value: f64,
}

impl ExpectationReport {
    pub fn compute(n: usize, method: Method) -> Result<ExpectationReport> {
        let min = if method == Method::ClosedForm { 2 } else { 3 };
        if n < min {
            return Err(Error::DegreeTooSmall { n, min });
        }
        if n > method.max_n() {
            return Err(Error::ResourceCap {
                what: "degree n for this method",
                cap: method.max_n() as u128,
            });
        }
        let (e_commutations, e_noncommuting) = match method {
            Method::ClosedForm => (expected_commutations(n)?, expected_noncommuting(n)?),
            Method::Dp => {
                let dp = dp_expectations(&mut CountingSession::new(n)?)?;
                (dp.commutations, dp.noncommuting)
            }
            Method::Enumeration => {
                let m = enumerated_means(n)?;
                (m.commutations, m.noncommuting)
            }
        };
        debug_assert_eq!(
            &e_commutations + &e_noncommuting,
            rational(longest_length(n) as i64 - 1)
        );
        Ok(ExpectationReport {
            n,
            float_value: to_f64(&e_commutations),
            e_commutations,
            e_noncommuting,
            e_braids_reference: reiner_reference(),
            method,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::tableau_ratio;

    fn ratio(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a.into(), b.into())
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(5).unwrap(), 15u32.into());
        assert_eq!(double_factorial(0).unwrap(), 1u32.into());
        assert_eq!(double_factorial(-1).unwrap(), 1u32.into());
        assert_eq!(double_factorial(7).unwrap(), 105u32.into());
        assert_eq!(double_factorial(8).unwrap(), 384u32.into());
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn u_values() {
        assert_eq!(u(0), ratio(1, 1));
        assert_eq!(u(1), ratio(3, 2));
        assert_eq!(u(2), ratio(15, 8));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(4, 1).unwrap(), ratio(15, 8));
        assert_eq!(sigma(4, 2).unwrap(), ratio(15, 8));
        assert_eq!(sigma(3, 1).unwrap(), ratio(2, 1));
        assert!(sigma(4, 0).is_err());
        assert!(sigma(4, 3).is_err());
        assert!(sigma(2, 1).is_err());
    }

    #[test]
    fn sigma_matches_tableau_ratio() {
        for n in 3..=14 {
            let two_l_minus_1 = rational(2 * (longest_length(n) as i64 - 1));
            for j in 1..=n - 2 {
                assert_eq!(
                    sigma(n, j).unwrap(),
                    &two_l_minus_1 * tableau_ratio(n, j as u32).unwrap(),
                    "n={n} j={j}"
                );
                assert_eq!(sigma(n, j).unwrap(), sigma(n, n - 1 - j).unwrap());
            }
        }
    }

    #[test]
    fn cancelled_hook_ratio() {
        // f^lambda / f^delta = (l-2)!/l! * 3 * (2/3)^2 * u_{j-1} u_j u_{n-j-2} u_{n-j-1}
        for n in 3..=12 {
            let ell = longest_length(n) as i64;
            let lead = ratio(1, ell * (ell - 1)) * rational(3) * ratio(4, 9);
            for j in 1..=n - 2 {
                let shortcut = &lead * u(j - 1) * u(j) * u(n - j - 2) * u(n - j - 1);
                assert_eq!(shortcut, tableau_ratio(n, j as u32).unwrap());
            }
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(expected_noncommuting(2).unwrap(), ratio(0, 1));
        assert_eq!(expected_commutations(2).unwrap(), ratio(0, 1));
        assert_eq!(expected_noncommuting(3).unwrap(), ratio(2, 1));
        assert_eq!(expected_noncommuting(4).unwrap(), ratio(15, 4));
        assert_eq!(expected_noncommuting(5).unwrap(), ratio(345, 64));
        assert_eq!(expected_commutations(3).unwrap(), ratio(0, 1));
        assert_eq!(expected_commutations(4).unwrap(), ratio(5, 4));
        assert_eq!(expected_commutations(5).unwrap(), ratio(231, 64));
        assert!(expected_commutations(1).is_err());
    }

    #[test]
    fn two_codings_agree() {
        for n in 2..=60 {
            assert_eq!(
                expected_noncommuting(n).unwrap(),
                expected_noncommuting_via_u(n).unwrap(),
                "n={n}"
            );
            assert_eq!(
                expected_commutations(n).unwrap() + expected_noncommuting(n).unwrap(),
                rational(longest_length(n) as i64 - 1)
            );
        }
    }

    #[test]
    fn log_space_matches_exact_at_cap() {
        for n in [3, 4, 10, 57, 300] {
            let exact = to_f64(&expected_noncommuting(n).unwrap());
            let logs = expected_noncommuting_log_space(n).unwrap();
            assert!(
                ((exact - logs) / exact).abs() < 5e-13,
                "n={n}: {exact} vs {logs}"
            );
        }
    }

    #[test]
    fn asymptotics() {
        // 128 / (9 pi^2) = 1.44101238957991497..., evaluated at 30 digits
        assert!((NONCOMMUTING_SLOPE - 1.441_012_389_579_915).abs() < 1e-15);
        assert!((asymptotic_noncommuting(3) - 4.323_037_168_739_745).abs() < 1e-14);
        let p = proportions(10);
        assert_eq!(p.commutations, 1.0);
        assert!((p.noncommuting - 2.0 * NONCOMMUTING_SLOPE / 10.0).abs() < 1e-15);
        assert_eq!(p.braids, 0.02);
        assert_eq!(reiner_reference(), ratio(1, 1));
    }

    #[test]
    fn dp_small() {
        let dp = dp_expectations(&mut CountingSession::new(5).unwrap()).unwrap();
        assert_eq!(dp.commutations, ratio(231, 64));
        assert_eq!(dp.noncommuting, ratio(345, 64));
        assert_eq!(dp.braids, ratio(1, 1));
    }

    #[test]
    fn enumerated_small() {
        let m = enumerated_means(3).unwrap();
        assert_eq!((m.words, m.commutations, m.braids), (2, ratio(0, 1), ratio(1, 1)));
        let m = enumerated_means(4).unwrap();
        assert_eq!(m.words, 16);
        assert_eq!(m.commutations, ratio(5, 4));
        assert_eq!(m.noncommuting, ratio(15, 4));
        assert_eq!(m.braids, ratio(1, 1));
    }

    #[test]
    fn report_caps() {
        assert!(matches!(
            ExpectationReport::compute(7, Method::Enumeration),
            Err(Error::ResourceCap { .. })
        ));
        assert!(matches!(
            ExpectationReport::compute(11, Method::Dp),
            Err(Error::ResourceCap { .. })
        ));
        let r = ExpectationReport::compute(4, Method::Enumeration).unwrap();
        assert_eq!(r.e_commutations, ratio(5, 4));
        assert_eq!(r.float_value, 1.25);
    }
}
