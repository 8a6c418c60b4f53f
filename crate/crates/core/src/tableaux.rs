//! Young diagrams, hook lengths, and exact counts of standard Young tableaux.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{ExactRational, WordCount};

/// An integer partition with zero parts dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape {
    parts: Vec<u32>,
}

impl Shape {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Shape { parts })
    }

    pub(crate) fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Shape { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Part `row` (1-based); 0 past the last row.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Shape {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Shape { parts }
    }

    /// Whether the last cell of `row` (1-based) can be removed leaving a partition.
    pub fn has_corner(&self, row: usize) -> bool {
        let here = self.part(row);
        here > 0 && here > self.part(row + 1)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The staircase `delta_n = (n-1, n-2, ..., 1)`, the shape of `w0` in `S_n`.
pub fn staircase(n: usize) -> Result<Shape> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    Ok(Shape {
        parts: (1..n as u32).rev().collect(),
    })
}

/// Removes the corner cell from each of two adjacent rows (1-based).
///
/// Both cells must be corners of `shape` itself; removing them together then
/// always leaves a partition.
pub fn delete_corners(shape: &Shape, rows: (usize, usize)) -> Result<Shape> {
    let (upper, lower) = if rows.0 <= rows.1 { rows } else { (rows.1, rows.0) };
    if upper == 0 || lower != upper + 1 {
        return Err(Error::RowsNotAdjacent(rows.0, rows.1));
    }
    for row in [upper, lower] {
        if !shape.has_corner(row) {
            return Err(Error::NotACorner { row });
        }
    }
    let mut parts = shape.parts.clone();
    parts[upper - 1] -= 1;
    parts[lower - 1] -= 1;
    Shape::new(parts)
}

/// Hook lengths `arm + leg + 1` of every cell, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    pub shape: Shape,
    pub hooks: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn new(shape: &Shape) -> HookGrid {
        let columns = shape.conjugate();
        let hooks = shape
            .parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (0..len)
                    .map(|c| {
                        let arm = len - c - 1;
                        let leg = columns.parts[c as usize] - r as u32 - 1;
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect();
        HookGrid {
            shape: shape.clone(),
            hooks,
        }
    }

    /// Hook of the cell in `row`, `col` (both 1-based), if the cell exists.
    pub fn hook(&self, row: usize, col: usize) -> Option<u32> {
        self.hooks.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn product(&self) -> BigUint {
        self.hooks
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * h)
    }
}

fn factorial(m: usize) -> BigUint {
    (2..=m as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `f^lambda = |lambda|! / prod(hooks)`, the number of standard Young tableaux.
pub fn hook_length_count(shape: &Shape) -> WordCount {
    let (count, rem) = factorial(shape.size()).div_rem(&HookGrid::new(shape).product());
    assert!(rem.is_zero(), "hook product does not divide |{shape}|!");
    count
}

/// `f^{lambda(a_n^(j))} / f^{delta_n}`: the probability that a uniform reduced
/// word of `w0` starts with `j (j+1)`.
pub fn tableau_ratio(n: usize, j: u32) -> Result<ExactRational> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { n, min: 3 });
    }
    if j == 0 || j as usize > n - 2 {
        return Err(Error::OutOfRange(format!("j = {j} must lie in [1, {}]", n - 2)));
    }
    let delta = staircase(n)?;
    let deleted = delete_corners(&delta, (j as usize, j as usize + 1))?;
    Ok(ExactRational::new(
        hook_length_count(&deleted).into(),
        hook_length_count(&delta).into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn shape(v: &[u32]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    fn ratio(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a.into(), b.into())
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![1, 2]).is_err());
        assert_eq!(shape(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(shape(&[3, 1]).size(), 4);
        assert_eq!(shape(&[3, 1]).conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(2).unwrap().parts(), &[1]);
        assert_eq!(staircase(4).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(staircase(9).unwrap().parts(), &[8, 7, 6, 5, 4, 3, 2, 1]);
        assert!(staircase(1).unwrap().parts().is_empty());
        assert_eq!(staircase(9).unwrap().size(), 36);
    }

    #[test]
    fn corner_deletion() {
        let d4 = staircase(4).unwrap();
        assert_eq!(delete_corners(&d4, (1, 2)).unwrap().parts(), &[2, 1, 1]);
        assert_eq!(delete_corners(&d4, (2, 3)).unwrap().parts(), &[3, 1]);
        let d9 = staircase(9).unwrap();
        assert_eq!(
            delete_corners(&d9, (3, 4)).unwrap(),
            Permutation::a_permutation(9, 3).unwrap().shape()
        );
        assert_eq!(
            delete_corners(&d9, (3, 4)).unwrap().parts(),
            &[8, 7, 5, 4, 4, 3, 2, 1]
        );

        assert_eq!(delete_corners(&d4, (1, 3)), Err(Error::RowsNotAdjacent(1, 3)));
        assert_eq!(delete_corners(&d4, (3, 4)), Err(Error::NotACorner { row: 4 }));
        assert_eq!(
            delete_corners(&shape(&[2, 2]), (1, 2)),
            Err(Error::NotACorner { row: 1 })
        );
    }

    #[test]
    fn hooks_and_counts() {
        let grid = HookGrid::new(&shape(&[3, 2, 1]));
        assert_eq!(grid.hooks, vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(hook_length_count(&shape(&[1])), 1u32.into());
        assert_eq!(hook_length_count(&shape(&[3, 2, 1])), 16u32.into());
        assert_eq!(HookGrid::new(&shape(&[2, 1, 1])).hooks, vec![vec![4, 1], vec![2], vec![1]]);
        assert_eq!(hook_length_count(&shape(&[2, 1, 1])), 3u32.into());
        assert_eq!(hook_length_count(&Shape::default()), 1u32.into());
    }

    #[test]
    fn hooks_strictly_decrease() {
        for n in 2..=9 {
            let grid = HookGrid::new(&staircase(n).unwrap());
            for row in &grid.hooks {
                assert!(row.windows(2).all(|w| w[0] > w[1]));
            }
            for r in 1..grid.hooks.len() {
                for c in 0..grid.hooks[r].len() {
                    assert!(grid.hooks[r - 1][c] > grid.hooks[r][c]);
                }
            }
        }
    }

    #[test]
    fn ratios() {
        assert_eq!(tableau_ratio(4, 1).unwrap(), ratio(3, 16));
        assert_eq!(tableau_ratio(4, 2).unwrap(), ratio(3, 16));
        // delta_3 = (2,1) has f = 2; the deleted shape (1) has f = 1.
        assert_eq!(tableau_ratio(3, 1).unwrap(), ratio(1, 2));
        assert!(tableau_ratio(4, 3).is_err());
        assert!(tableau_ratio(2, 1).is_err());
        for n in 3..=12 {
            for j in 1..=(n as u32 - 2) {
                assert_eq!(
                    tableau_ratio(n, j).unwrap(),
                    tableau_ratio(n, n as u32 - 1 - j).unwrap()
                );
            }
        }
    }

    #[test]
    fn hooks_differ_only_in_affected_rows_and_columns() {
        for n in 3..=10usize {
            let delta = staircase(n).unwrap();
            let full = HookGrid::new(&delta);
            for j in 1..=n - 2 {
                let cut = HookGrid::new(&delete_corners(&delta, (j, j + 1)).unwrap());
                // Cells of the smaller shape whose hook changed.
                let mut changed = Vec::new();
                for (r, row) in cut.hooks.iter().enumerate() {
                    for (c, &h) in row.iter().enumerate() {
                        if full.hooks[r][c] != h {
                            changed.push((r + 1, c + 1));
                        }
                    }
                }
                // Rows j, j+1 entirely, plus the two columns of the removed
                // cells above row j.
                let (col_a, col_b) = (n - j, n - j - 1);
                let mut expected = Vec::new();
                for (r, row) in cut.hooks.iter().enumerate() {
                    for c in 1..=row.len() {
                        let r = r + 1;
                        if r == j || r == j + 1 || (r < j && (c == col_a || c == col_b)) {
                            expected.push((r, c));
                        }
                    }
                }
                assert_eq!(changed, expected, "n={n} j={j}");
            }
        }
    }
}
