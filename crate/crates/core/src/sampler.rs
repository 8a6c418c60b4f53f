//! Exactly uniform reduced words of `w0` and seeded Monte Carlo estimates.
//!
//! A word is built one letter at a time: from the current permutation `w`
//! the next letter is the left descent `i` chosen with probability
//! `R(s_i w) / R(w)`, by drawing a uniform integer below `R(w)` and walking
//! the cumulative counts of the descents in increasing order.
//!
//! Randomness: trial `t` of a run with seed `s` uses `ChaCha8Rng` seeded with
//! `seed_from_u64(s)` and switched to stream `t`. Each trial therefore owns an
//! independent keystream, and results do not depend on how trials are spread
//! across threads.

use num_bigint::RandBigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{CountingSession, ReducedWord, WordStats};
use crate::longest_length;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Counts `w0` in `session` so that [`sample_word`] can run against it.
pub fn prepare(session: &mut CountingSession) -> Result<()> {
    let w0 = Permutation::longest_element(session.n())?;
    session.count(&w0).map(|_| ())
}

/// A uniformly random reduced word of the longest element of `S_n`, where
/// `n = session.n()`. The session must already hold `w0` (see [`prepare`]).
pub fn sample_word<R: Rng + ?Sized>(session: &CountingSession, rng: &mut R) -> Result<ReducedWord> {
    let n = session.n();
    let w0 = Permutation::longest_element(n)?;
    let lookup = |w: &Permutation| {
        session
            .get(w)
            .ok_or_else(|| Error::NotPrepared(w.to_string()))
    };
    let mut letters = Vec::with_capacity(longest_length(n));
    let mut w = w0;
    loop {
        let descents = w.left_descents();
        if descents.is_empty() {
            break;
        }
        let mut r = rng.gen_biguint_below(lookup(&w)?);
        let mut chosen = None;
        for &i in &descents {
            let child = w.swap_values_unchecked(i);
            let weight = lookup(&child)?;
            if r < *weight {
                chosen = Some((i, child));
                break;
            }
            r -= weight;
        }
        let (i, child) = chosen.expect("descent weights sum to the word count");
        letters.push(i);
        w = child;
    }
    ReducedWord::new(n, letters)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Totals {
    commutations: u128,
    noncommuting: u128,
    braids: u128,
    commutations_sq: u128,
    noncommuting_sq: u128,
    braids_sq: u128,
}

impl Totals {
    fn from_stats(s: &WordStats) -> Totals {
        let (c, nc, b) = (
            u128::from(s.commutations),
            u128::from(s.noncommuting),
            u128::from(s.braids),
        );
        Totals {
            commutations: c,
            noncommuting: nc,
            braids: b,
            commutations_sq: c * c,
            noncommuting_sq: nc * nc,
            braids_sq: b * b,
        }
    }

    fn merge(self, o: Totals) -> Totals {
        Totals {
            commutations: self.commutations + o.commutations,
            noncommuting: self.noncommuting + o.noncommuting,
            braids: self.braids + o.braids,
            commutations_sq: self.commutations_sq + o.commutations_sq,
            noncommuting_sq: self.noncommuting_sq + o.noncommuting_sq,
            braids_sq: self.braids_sq + o.braids_sq,
        }
    }
}

/// Mean and standard error from exact sums. The unbiased variance is
/// `(T sum x^2 - (sum x)^2) / (T (T-1))`, whose numerator is an exact integer,
/// so the error is exactly zero iff every sample was equal. NaN for one trial.
fn mean_and_se(trials: u64, sum: u128, sum_sq: u128) -> (f64, f64) {
    let t = trials as f64;
    let mean = sum as f64 / t;
    if trials < 2 {
        return (mean, f64::NAN);
    }
    let spread = u128::from(trials) * sum_sq - sum * sum;
    let variance = spread as f64 / (t * (t - 1.0));
    (mean, (variance / t).sqrt())
}

/// Monte Carlo summary. Serialises to the fixed JSON sample schema; the exact
/// totals are carried alongside but not serialised.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleSummary {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub mean_commutations: f64,
    pub se_commutations: f64,
    pub mean_noncommuting: f64,
    pub se_noncommuting: f64,
    pub mean_braids: f64,
    pub se_braids: f64,
    pub word_length: usize,
    #[serde(skip)]
    pub total_commutations: u128,
    #[serde(skip)]
    pub total_noncommuting: u128,
    #[serde(skip)]
    pub total_braids: u128,
}

impl SampleSummary {
    /// True when the standard errors are undefined (a single trial).
    pub fn se_undefined(&self) -> bool {
        self.trials < 2
    }
}

/// Draws `trials` words on `workers` threads. Identical `(n, trials, seed)`
/// give bit-identical summaries whatever `workers` is.
pub fn monte_carlo(n: usize, trials: u64, seed: u64, workers: usize) -> Result<SampleSummary> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, min: 2 });
    }
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    let mut session = CountingSession::new(n)?;
    prepare(&mut session)?;
    monte_carlo_with(&session, trials, seed, workers)
}

/// [`monte_carlo`] against an already prepared session.
pub fn monte_carlo_with(
    session: &CountingSession,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<SampleSummary> {
    let n = session.n();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?;
    let totals = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let word = sample_word(session, &mut trial_rng(seed, t))?;
                Ok(Totals::from_stats(&word.stats()))
            })
            .try_reduce(Totals::default, |a, b| Ok(a.merge(b)))
    })?;

    let ell = longest_length(n);
    debug_assert_eq!(
        totals.commutations + totals.noncommuting,
        u128::from(trials) * ell.saturating_sub(1) as u128
    );
    let (mean_commutations, se_commutations) =
        mean_and_se(trials, totals.commutations, totals.commutations_sq);
    let (mean_noncommuting, se_noncommuting) =
        mean_and_se(trials, totals.noncommuting, totals.noncommuting_sq);
    let (mean_braids, se_braids) = mean_and_se(trials, totals.braids, totals.braids_sq);
    Ok(SampleSummary {
        n,
        trials,
        seed,
        mean_commutations,
        se_commutations,
        mean_noncommuting,
        se_noncommuting,
        mean_braids,
        se_braids,
        word_length: ell,
        total_commutations: totals.commutations,
        total_noncommuting: totals.noncommuting,
        total_braids: totals.braids,
    })
}
