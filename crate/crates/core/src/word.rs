//! Reduced words: validation, per-word statistics, enumeration and counting.
//!
//! A word `i_1 ... i_l` denotes the product `s_{i_1} ... s_{i_l}`. Removing the
//! first letter of a reduced word of `w` leaves a reduced word of `s_{i_1} w`,
//! so the reduced words of `w` hang off its left descents and
//! `R(w) = sum over left descents i of R(s_i w)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{Letter, Permutation};
use crate::{ExactRational, WordCount};

/// Default refusal threshold for [`enumerate_words`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Default refusal threshold for the number of memoised permutations.
pub const DEFAULT_MEMO_CAP: usize = 10_000_000;

/// Largest degree a [`CountingSession`] accepts (one-line keys pack 4 bits per entry).
pub const MAX_SESSION_DEGREE: usize = 16;

/// A validated reduced word together with the permutation it multiplies to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<Letter>,
    target: Permutation,
}

impl ReducedWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        let target = evaluate(n, &letters)?;
        Ok(ReducedWord { n, letters, target })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn stats(&self) -> WordStats {
        WordStats::of(&self.letters)
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord(n={}, {:?})", self.n, self.letters)
    }
}

/// Multiplies `s_{i_1} ... s_{i_l}` out from the identity, left to right.
///
/// Fails with [`Error::NotReduced`] carrying the 1-based position of the first
/// letter that does not lengthen the running product.
pub fn evaluate(n: usize, letters: &[Letter]) -> Result<Permutation> {
    let identity = Permutation::identity(n)?;
    let mut oneline = identity.oneline().to_vec();
    for (k, &i) in letters.iter().enumerate() {
        if i == 0 || i as usize >= n {
            return Err(Error::LetterOutOfRange {
                letter: i,
                max: n - 1,
            });
        }
        let (a, b) = (i as usize - 1, i as usize);
        // w s_i is longer than w exactly when w(i) < w(i+1).
        if oneline[a] > oneline[b] {
            return Err(Error::NotReduced { position: k + 1 });
        }
        oneline.swap(a, b);
    }
    Permutation::new(oneline)
}

/// Adjacent-letter statistics of a single word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct WordStats {
    /// Positions `k` with `|i_k - i_{k+1}| > 1`.
    pub commutations: u64,
    /// Positions `k` with `|i_k - i_{k+1}| = 1`.
    pub noncommuting: u64,
    /// Positions `k` with `i_k = i_{k+2}` and `|i_k - i_{k+1}| = 1`.
    pub braids: u64,
    /// Positions with `i_{k+1} = i_k + 1`.
    pub ascending_pairs: u64,
    /// Positions with `i_{k+1} = i_k - 1`.
    pub descending_pairs: u64,
}

impl WordStats {
    pub fn of(letters: &[Letter]) -> WordStats {
        let mut s = WordStats::default();
        for pair in letters.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if b == a + 1 {
                s.ascending_pairs += 1;
            } else if a == b + 1 {
                s.descending_pairs += 1;
            } else if a != b {
                s.commutations += 1;
            }
        }
        s.noncommuting = s.ascending_pairs + s.descending_pairs;
        s.braids = letters
            .windows(3)
            .filter(|t| t[0] == t[2] && t[0].abs_diff(t[1]) == 1)
            .count() as u64;
        s
    }
}

/// Memoised reduced-word counts, keyed by one-line notation.
///
/// The table only grows; entries are never evicted. Once a permutation has
/// been counted, every permutation reachable from it by stripping left
/// descents is present too, and [`CountingSession::get`] serves them through a
/// shared reference.
#[derive(Debug, Clone)]
pub struct CountingSession {
    n: usize,
    memo: HashMap<u64, WordCount>,
    cap: usize,
}

impl CountingSession {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        if n > MAX_SESSION_DEGREE {
            return Err(Error::OutOfRange(format!(
                "counting sessions support n <= {MAX_SESSION_DEGREE}, got {n}"
            )));
        }
        Ok(CountingSession {
            n,
            memo: HashMap::new(),
            cap,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn key(oneline: &[u32]) -> u64 {
        oneline
            .iter()
            .fold(0u64, |acc, &v| (acc << 4) | u64::from(v - 1))
    }

    fn check_degree(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::OutOfRange(format!(
                "session is for S_{}, permutation is in S_{}",
                self.n,
                w.n()
            )));
        }
        Ok(())
    }

    /// Number of reduced words of `w`.
    pub fn count(&mut self, w: &Permutation) -> Result<WordCount> {
        self.check_degree(w)?;
        self.count_inner(w)
    }

    fn count_inner(&mut self, w: &Permutation) -> Result<WordCount> {
        let key = Self::key(w.oneline());
        if let Some(c) = self.memo.get(&key) {
            return Ok(c.clone());
        }
        let descents = w.left_descents();
        let total = if descents.is_empty() {
            BigUint::one()
        } else {
            let mut total = BigUint::zero();
            for i in descents {
                total += self.count_inner(&w.swap_values_unchecked(i))?;
            }
            total
        };
        if self.memo.len() >= self.cap {
            return Err(Error::ResourceCap {
                what: "memo table",
                cap: self.cap as u128,
            });
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }

    /// Read-only lookup of an already counted permutation.
    pub fn get(&self, w: &Permutation) -> Option<&WordCount> {
        if w.n() != self.n {
            return None;
        }
        self.memo.get(&Self::key(w.oneline()))
    }

    /// Probability that a uniform reduced word of `w` begins with `prefix`.
    ///
    /// Zero if some letter of the prefix fails to shorten what is left.
    pub fn prefix_probability(&mut self, w: &Permutation, prefix: &[Letter]) -> Result<ExactRational> {
        self.check_degree(w)?;
        let mut rest = w.clone();
        for &i in prefix {
            let next = rest.apply_simple_left(i)?;
            if next.length() >= rest.length() {
                return Ok(ExactRational::zero());
            }
            rest = next;
        }
        let num = self.count(&rest)?;
        let den = self.count(w)?;
        Ok(ExactRational::new(num.into(), den.into()))
    }
}

/// Number of reduced words of `w`, with a throwaway session.
pub fn count_words(w: &Permutation) -> Result<WordCount> {
    CountingSession::new(w.n())?.count(w)
}

/// Every reduced word of `w`, lexicographically, after checking that there are
/// at most `cap` of them.
pub fn enumerate_words(w: &Permutation, cap: u64) -> Result<WordIter> {
    let total = count_words(w)?;
    if total > BigUint::from(cap) {
        return Err(Error::ResourceCap {
            what: "number of reduced words",
            cap: cap as u128,
        });
    }
    Ok(WordIter::new(w))
}

struct Frame {
    perm: Permutation,
    descents: Vec<Letter>,
    next: usize,
}

impl Frame {
    fn new(perm: Permutation) -> Frame {
        let descents = perm.left_descents();
        Frame {
            perm,
            descents,
            next: 0,
        }
    }
}

/// Depth-first walk over left descents; see [`enumerate_words`].
pub struct WordIter {
    n: usize,
    target: Permutation,
    prefix: Vec<Letter>,
    stack: Vec<Frame>,
}

impl WordIter {
    fn new(w: &Permutation) -> WordIter {
        WordIter {
            n: w.n(),
            target: w.clone(),
            prefix: Vec::with_capacity(w.length()),
            stack: vec![Frame::new(w.clone())],
        }
    }
}

impl Iterator for WordIter {
    type Item = ReducedWord;

    fn next(&mut self) -> Option<ReducedWord> {
        loop {
            let top = self.stack.last_mut()?;
            if top.descents.is_empty() {
                let word = ReducedWord {
                    n: self.n,
                    letters: self.prefix.clone(),
                    target: self.target.clone(),
                };
                self.stack.pop();
                self.prefix.pop();
                return Some(word);
            }
            if top.next < top.descents.len() {
                let i = top.descents[top.next];
                top.next += 1;
                let child = top.perm.swap_values_unchecked(i);
                self.prefix.push(i);
                self.stack.push(Frame::new(child));
            } else {
                self.stack.pop();
                self.prefix.pop();
            }
        }
    }
}

/// `i_1 i_2 ... i_l  ->  i_2 ... i_l (n - i_1)`, a bijection on the reduced
/// words of `w0` (because `s_i w0 = w0 s_{n-i}`).
pub fn rotate(word: &ReducedWord) -> Result<ReducedWord> {
    let n = word.n;
    if word.target != Permutation::longest_element(n)? {
        return Err(Error::NotLongestWord);
    }
    let Some((&first, rest)) = word.letters.split_first() else {
        return Ok(word.clone());
    };
    let mut letters = rest.to_vec();
    letters.push(n as Letter - first);
    debug_assert!(evaluate(n, &letters).is_ok());
    Ok(ReducedWord {
        n,
        letters,
        target: word.target.clone(),
    })
}
