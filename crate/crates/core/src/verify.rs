//! Self-verification: every route to the expectations, checked against the others.
//!
//! Each check produces one [`CheckOutcome`]; failures carry the first
//! counterexample found. The closed-form summand is injectable through
//! [`VerifyConfig::sigma`] so that a corrupted formula can be shown to be caught.

use std::collections::HashSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::expectations::{
    dp_expectations, expected_commutations_with, expected_noncommuting_log_space, proportions,
    reiner_reference, sigma, to_f64, SigmaFn, NONCOMMUTING_SLOPE,
};
use crate::perm::Permutation;
use crate::sampler::{monte_carlo_with, prepare, sample_word, trial_rng};
use crate::tableaux::{delete_corners, hook_length_count, staircase, tableau_ratio};
use crate::word::{
    enumerate_words, evaluate, rotate, CountingSession, DEFAULT_ENUMERATION_CAP,
};
use crate::{longest_length, ExactRational};

/// 99.9% quantile of the chi-square distribution with 15 degrees of freedom.
pub const CHI2_15_Q999: f64 = 37.697;

pub const VERIFY_MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failure: Option<String>, detail: impl Into<String>) -> Self {
        match failure {
            None => CheckOutcome {
                name: name.into(),
                passed: true,
                detail: detail.into(),
            },
            Some(counterexample) => CheckOutcome {
                name: name.into(),
                passed: false,
                detail: counterexample,
            },
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{tag}] {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub sigma: SigmaFn,
    pub seed: u64,
    /// Monte Carlo draws for the mean check at `n = max_n`.
    pub trials: u64,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig {
            max_n,
            sigma,
            seed: 20_100_512,
            trials: 20_000,
        }
    }
}

/// Pearson statistic of `counts` against equal expected frequencies.
pub fn chi_square_uniform(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum()
}

fn rat(n: i64) -> ExactRational {
    ExactRational::from_integer(n.into())
}

/// Runs all checks up to `config.max_n`, passing each outcome to `on_check`
/// as soon as it is known.
pub fn run(config: &VerifyConfig, mut on_check: impl FnMut(&CheckOutcome)) -> Result<VerifyReport> {
    if !(3..=VERIFY_MAX_N).contains(&config.max_n) {
        return Err(Error::OutOfRange(format!(
            "max_n must lie in [3, {VERIFY_MAX_N}], got {}",
            config.max_n
        )));
    }
    let mut report = VerifyReport::default();
    let mut push = |c: CheckOutcome| {
        on_check(&c);
        report.checks.push(c);
    };
    let max_n = config.max_n;

    for n in 3..=max_n.min(6) {
        for c in enumeration_checks(n, config.sigma)? {
            push(c);
        }
    }
    for n in 3..=max_n.min(9) {
        push(dp_check(n, config.sigma)?);
    }
    push(stanley_check(max_n)?);
    push(shape_check(max_n)?);
    push(sigma_ratio_check(max_n, config.sigma)?);
    push(uniformity_check(config.seed)?);
    push(monte_carlo_check(max_n, config)?);
    push(determinism_check(max_n.min(6), config.seed)?);
    push(asymptotic_check()?);
    push(proportion_check()?);
    Ok(report)
}

fn enumeration_checks(n: usize, sigma: SigmaFn) -> Result<Vec<CheckOutcome>> {
    let w0 = Permutation::longest_element(n)?;
    let ell = longest_length(n) as u64;
    let words: Vec<_> = enumerate_words(&w0, DEFAULT_ENUMERATION_CAP)?.collect();
    let count = words.len() as u64;
    let (mut c, mut b, mut asc, mut desc) = (0u64, 0u64, 0u64, 0u64);
    let mut complement_failure = None;
    for w in &words {
        let s = w.stats();
        c += s.commutations;
        b += s.braids;
        asc += s.ascending_pairs;
        desc += s.descending_pairs;
        if complement_failure.is_none() {
            if s.commutations + s.noncommuting != ell - 1 {
                complement_failure = Some(format!(
                    "{:?}: {} + {} != {}",
                    w.letters(),
                    s.commutations,
                    s.noncommuting,
                    ell - 1
                ));
            } else if let Err(e) = rotate(w).and_then(|r| evaluate(n, r.letters())) {
                complement_failure = Some(format!("rotation of {:?} invalid: {e}", w.letters()));
            }
        }
    }
    let rotated: HashSet<Vec<u32>> = words
        .iter()
        .filter_map(|w| rotate(w).ok().map(|r| r.letters().to_vec()))
        .collect();
    if complement_failure.is_none() && rotated.len() != words.len() {
        complement_failure = Some(format!("rotation hit only {} of {count} words", rotated.len()));
    }
    if complement_failure.is_none() && asc != desc {
        complement_failure = Some(format!("ascending {asc} != descending {desc}"));
    }

    let mean = ExactRational::new(c.into(), count.into());
    let closed = expected_commutations_with(n, sigma)?;
    let braid_mean = ExactRational::new(b.into(), count.into());
    Ok(vec![
        CheckOutcome::new(
            format!("enumeration E(C_{n})"),
            (mean != closed).then(|| format!("mean over {count} words {mean} != closed form {closed}")),
            format!("{mean} over {count} words"),
        ),
        CheckOutcome::new(
            format!("complement and rotation n={n}"),
            complement_failure,
            format!("{count} words"),
        ),
        CheckOutcome::new(
            format!("enumeration braid mean n={n}"),
            (braid_mean != reiner_reference()).then(|| format!("braid mean {braid_mean} != 1")),
            "1",
        ),
    ])
}

fn dp_check(n: usize, sigma: SigmaFn) -> Result<CheckOutcome> {
    let dp = dp_expectations(&mut CountingSession::new(n)?)?;
    let closed = expected_commutations_with(n, sigma)?;
    let failure = if dp.commutations != closed {
        Some(format!("dp {} != closed form {closed}", dp.commutations))
    } else if !dp.braids.is_one() {
        Some(format!("dp braid expectation {} != 1", dp.braids))
    } else {
        None
    };
    Ok(CheckOutcome::new(
        format!("dp E(C_{n}) and braids"),
        failure,
        format!("{closed}"),
    ))
}

fn stanley_check(max_n: usize) -> Result<CheckOutcome> {
    let mut failure = None;
    'outer: for n in 3..=max_n.min(9) {
        let mut session = CountingSession::new(n)?;
        let dp = session.count(&Permutation::longest_element(n)?)?;
        let hooks = hook_length_count(&staircase(n)?);
        if dp != hooks {
            failure = Some(format!("n={n}: R(w0) = {dp} but f^delta = {hooks}"));
            break;
        }
        if n <= 7 {
            for j in 1..=(n as u32 - 2) {
                let a = Permutation::a_permutation(n, j)?;
                let (r, f) = (session.count(&a)?, hook_length_count(&a.shape()));
                if r != f {
                    failure = Some(format!("a_{n}^({j}): R = {r} but f = {f}"));
                    break 'outer;
                }
            }
        }
    }
    Ok(CheckOutcome::new(
        "reduced words counted by hook lengths",
        failure,
        format!("n = 3..{}", max_n.min(9)),
    ))
}

fn shape_check(max_n: usize) -> Result<CheckOutcome> {
    let mut failure = None;
    'outer: for n in 3..=max_n {
        let delta = staircase(n)?;
        for j in 1..=n - 2 {
            let a = Permutation::a_permutation(n, j as u32)?;
            let cut = delete_corners(&delta, (j, j + 1))?;
            if a.shape() != cut || !a.is_vexillary() {
                failure = Some(format!(
                    "a_{n}^({j}) = {a}: shape {} vs {cut}, vexillary {}",
                    a.shape(),
                    a.is_vexillary()
                ));
                break 'outer;
            }
        }
    }
    Ok(CheckOutcome::new(
        "shape of a_n^(j) is delta_n minus two corners",
        failure,
        format!("n = 3..{max_n}"),
    ))
}

fn sigma_ratio_check(max_n: usize, sigma: SigmaFn) -> Result<CheckOutcome> {
    let mut failure = None;
    'outer: for n in 3..=max_n {
        let scale = rat(2 * (longest_length(n) as i64 - 1));
        for j in 1..=n - 2 {
            let s = sigma(n, j)?;
            let t = &scale * tableau_ratio(n, j as u32)?;
            if s != t {
                failure = Some(format!("n={n} j={j}: sigma {s} != 2(l-1) f-ratio {t}"));
                break 'outer;
            }
        }
    }
    Ok(CheckOutcome::new(
        "sigma equals scaled tableau ratio",
        failure,
        format!("n = 3..{max_n}"),
    ))
}

fn uniformity_check(seed: u64) -> Result<CheckOutcome> {
    let mut session = CountingSession::new(4)?;
    prepare(&mut session)?;
    let words: Vec<Vec<u32>> = enumerate_words(&Permutation::longest_element(4)?, 16)?
        .map(|w| w.letters().to_vec())
        .collect();
    let mut counts = vec![0u64; words.len()];
    for t in 0..16_000 {
        let w = sample_word(&session, &mut trial_rng(seed, t))?;
        let k = words
            .binary_search_by(|x| x.as_slice().cmp(w.letters()))
            .map_err(|_| Error::NotLongestWord)?;
        counts[k] += 1;
    }
    let chi2 = chi_square_uniform(&counts);
    Ok(CheckOutcome::new(
        "sampler uniform on the 16 words of S_4",
        (chi2 >= CHI2_15_Q999).then(|| format!("chi-square {chi2:.3} >= {CHI2_15_Q999}")),
        format!("chi-square {chi2:.3} < {CHI2_15_Q999}"),
    ))
}

fn monte_carlo_check(n: usize, config: &VerifyConfig) -> Result<CheckOutcome> {
    let mut session = CountingSession::new(n)?;
    prepare(&mut session)?;
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let s = monte_carlo_with(&session, config.trials, config.seed, workers)?;
    let exact = to_f64(&expected_commutations_with(n, config.sigma)?);
    let dc = (s.mean_commutations - exact).abs();
    let db = (s.mean_braids - 1.0).abs();
    let failure = if dc > 4.0 * s.se_commutations {
        Some(format!(
            "mean commutations {} vs {exact}: off by {dc:.4} > 4 se = {:.4}",
            s.mean_commutations,
            4.0 * s.se_commutations
        ))
    } else if db > 4.0 * s.se_braids {
        Some(format!("mean braids {} off by {db:.4} > 4 se", s.mean_braids))
    } else {
        None
    };
    Ok(CheckOutcome::new(
        format!("Monte Carlo means n={n}"),
        failure,
        format!(
            "{} trials: commutations {:.4} (exact {exact:.4}), braids {:.4}",
            config.trials, s.mean_commutations, s.mean_braids
        ),
    ))
}

fn determinism_check(n: usize, seed: u64) -> Result<CheckOutcome> {
    let mut session = CountingSession::new(n)?;
    prepare(&mut session)?;
    let serial = monte_carlo_with(&session, 2_000, seed, 1)?;
    let parallel = monte_carlo_with(&session, 2_000, seed, 4)?;
    let (a, b) = (
        serde_json::to_string(&serial).unwrap_or_default(),
        serde_json::to_string(&parallel).unwrap_or_default(),
    );
    Ok(CheckOutcome::new(
        "sampling independent of worker count",
        (a != b || serial != parallel).then(|| format!("1 worker: {a}\n4 workers: {b}")),
        "1 and 4 workers identical",
    ))
}

fn asymptotic_check() -> Result<CheckOutcome> {
    let mut distances = Vec::new();
    for n in [100usize, 200, 400, 800] {
        let ratio = expected_noncommuting_log_space(n)? / n as f64;
        distances.push((n, (ratio - NONCOMMUTING_SLOPE).abs()));
    }
    let decreasing = distances.windows(2).all(|w| w[1].1 < w[0].1);
    let last = distances[3].1 / NONCOMMUTING_SLOPE;
    let failure = if !decreasing {
        Some(format!("distances not decreasing: {distances:?}"))
    } else if last > 0.01 {
        Some(format!("n=800 relative distance {last:.5} > 1%"))
    } else {
        None
    };
    Ok(CheckOutcome::new(
        "noncommuting pairs grow like 128n/(9 pi^2)",
        failure,
        format!("relative distance at n=800: {last:.2e}"),
    ))
}

fn proportion_check() -> Result<CheckOutcome> {
    let n = 800;
    let ell = longest_length(n) as f64;
    let p = proportions(n);
    let noncomm = expected_noncommuting_log_space(n)? / ell;
    let rel_nc = (noncomm / p.noncommuting - 1.0).abs();
    let rel_b = ((1.0 / (ell - 2.0)) / p.braids - 1.0).abs();
    let failure = if rel_nc > 0.03 {
        Some(format!("noncommuting proportion off by {rel_nc:.4}"))
    } else if rel_b > 0.01 {
        Some(format!("braid proportion off by {rel_b:.4}"))
    } else {
        None
    };
    Ok(CheckOutcome::new(
        "proportions at n=800",
        failure,
        format!("noncommuting {rel_nc:.2e}, braids {rel_b:.2e} relative"),
    ))
}

/// `sigma` with its prefactor doubled; the verifier must reject it.
pub fn tampered_sigma(n: usize, j: usize) -> Result<ExactRational> {
    Ok(sigma(n, j)? * rat(2))
}
