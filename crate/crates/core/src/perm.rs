//! Permutations in one-line notation and the simple reflections acting on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::Shape;

/// Subscript of a simple reflection `s_i`, always in `[1, n-1]`.
pub type Letter = u32;

/// An element of `S_n` stored by its one-line notation `w(1) ... w(n)`.
///
/// Values are 1-based. The degree is part of the value: the identity of `S_3`
/// and the identity of `S_4` are different permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<u32>,
}

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        if n == 0 {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        let mut seen = vec![false; n];
        for &v in &oneline {
            let idx = (v as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::NotAPermutation(oneline));
            }
            seen[idx] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        Ok(Permutation {
            oneline: (1..=n as u32).collect(),
        })
    }

    /// `w0 = n(n-1)...21`, of length `C(n, 2)`.
    pub fn longest_element(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegreeTooSmall { n, min: 1 });
        }
        Ok(Permutation {
            oneline: (1..=n as u32).rev().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[u32] {
        &self.oneline
    }

    /// `w(position)` with 1-based position.
    pub fn at(&self, position: usize) -> u32 {
        self.oneline[position - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (pos, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation { oneline: inv }
    }

    fn check_letter(&self, i: Letter) -> Result<()> {
        if i == 0 || i as usize >= self.n() {
            return Err(Error::LetterOutOfRange {
                letter: i,
                max: self.n().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// `s_i * w`: exchanges the values `i` and `i+1`.
    pub fn apply_simple_left(&self, i: Letter) -> Result<Permutation> {
        self.check_letter(i)?;
        Ok(self.swap_values_unchecked(i))
    }

    /// `w * s_i`: exchanges the entries in positions `i` and `i+1`.
    pub fn apply_simple_right(&self, i: Letter) -> Result<Permutation> {
        self.check_letter(i)?;
        let mut oneline = self.oneline.clone();
        oneline.swap(i as usize - 1, i as usize);
        Ok(Permutation { oneline })
    }

    pub(crate) fn swap_values_unchecked(&self, i: Letter) -> Permutation {
        let oneline = self
            .oneline
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { oneline }
    }

    /// Number of inversions, which is the length of a reduced word.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        let mut inversions = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inversions += 1;
                }
            }
        }
        inversions
    }

    /// Letters `i` with `l(s_i w) < l(w)`, i.e. `i+1` appears before `i`.
    /// These are exactly the possible first letters of a reduced word. Sorted
    /// ascending.
    pub fn left_descents(&self) -> Vec<Letter> {
        let mut position = vec![0usize; self.n() + 1];
        for (pos, &v) in self.oneline.iter().enumerate() {
            position[v as usize] = pos;
        }
        (1..self.n() as u32)
            .filter(|&i| position[i as usize] > position[i as usize + 1])
            .collect()
    }

    /// True when no indices `a < b < c < d` realise the pattern 2143, i.e.
    /// `w(b) < w(a) < w(d) < w(c)`.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.oneline;
        let n = w.len();
        for a in 0..n {
            for b in a + 1..n {
                if w[b] >= w[a] {
                    continue;
                }
                for c in b + 1..n {
                    if w[c] <= w[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if w[a] < w[d] && w[d] < w[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `r_i = #{j < i : w(j) > w(i)}` for every position `i`.
    pub fn inversion_counts(&self) -> Vec<u32> {
        let w = &self.oneline;
        (0..w.len())
            .map(|i| w[..i].iter().filter(|&&x| x > w[i]).count() as u32)
            .collect()
    }

    /// The partition `lambda(w)`: the counts `r_i` sorted nonincreasing.
    pub fn shape(&self) -> Shape {
        Shape::from_unsorted(self.inversion_counts())
    }

    /// `a_n^(j) = s_{j+1} s_j w0`, the permutation left over after a reduced
    /// word of `w0` starts with `j (j+1)`.
    ///
    /// Its one-line form is `n (n-1) ... (j+3) (j+1) j (j+2) (j-1) ... 1`, and it
    /// is vexillary; both facts are checked in debug builds.
    pub fn a_permutation(n: usize, j: Letter) -> Result<Permutation> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { n, min: 3 });
        }
        if j == 0 || j as usize > n - 2 {
            return Err(Error::OutOfRange(format!("j = {j} must lie in [1, {}]", n - 2)));
        }
        let a = Permutation::longest_element(n)?
            .apply_simple_left(j)?
            .apply_simple_left(j + 1)?;
        debug_assert_eq!(a.oneline, a_permutation_oneline(n as u32, j));
        debug_assert!(a.is_vexillary());
        Ok(a)
    }
}

/// Explicit one-line form of `a_n^(j)`.
fn a_permutation_oneline(n: u32, j: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (j + 3..=n).rev().collect();
    v.extend([j + 1, j, j + 2]);
    v.extend((1..j).rev());
    v
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.oneline.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
