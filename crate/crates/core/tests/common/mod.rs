//! Reference implementations that share no code path with the library.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

/// All words of length C(n,2) over [1, n-1] whose product, applied as
/// position swaps to the identity, is n(n-1)...1. Exhaustive: (n-1)^C(n,2)
/// candidates, so keep n <= 5.
pub fn brute_force_longest_words(n: usize) -> Vec<Vec<u32>> {
    let ell = n * (n - 1) / 2;
    let target: Vec<u32> = (1..=n as u32).rev().collect();
    let letters = n as u64 - 1;
    let total = letters.pow(ell as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut word = Vec::with_capacity(ell);
        let mut c = code;
        for _ in 0..ell {
            word.push((c % letters) as u32 + 1);
            c /= letters;
        }
        word.reverse();
        let mut p: Vec<u32> = (1..=n as u32).collect();
        for &i in &word {
            p.swap(i as usize - 1, i as usize);
        }
        if p == target {
            out.push(word);
        }
    }
    out.sort();
    out
}

/// Commutations, noncommuting pairs and braids straight from the definitions.
pub fn naive_stats(word: &[u32]) -> (u64, u64, u64) {
    let mut c = 0;
    let mut nc = 0;
    let mut b = 0;
    for k in 0..word.len().saturating_sub(1) {
        let d = (word[k] as i64 - word[k + 1] as i64).abs();
        if d > 1 {
            c += 1;
        }
        if d == 1 {
            nc += 1;
        }
        if k + 2 < word.len() && word[k] == word[k + 2] && d == 1 {
            b += 1;
        }
    }
    (c, nc, b)
}

/// Reduced-word count through the last letter: R(w) = sum over right
/// descents i (w(i) > w(i+1)) of R(w s_i).
pub fn right_descent_count(oneline: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if let Some(c) = memo.get(oneline) {
        return c.clone();
    }
    let mut total = BigUint::default();
    let mut any = false;
    for k in 0..oneline.len().saturating_sub(1) {
        if oneline[k] > oneline[k + 1] {
            any = true;
            let mut next = oneline.to_vec();
            next.swap(k, k + 1);
            total += right_descent_count(&next, memo);
        }
    }
    if !any {
        total = BigUint::one();
    }
    memo.insert(oneline.to_vec(), total.clone());
    total
}

/// Every permutation of 1..n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// f^lambda by the branching rule f^lambda = sum over corners of f^(lambda - corner).
pub fn tableaux_by_branching(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    let parts: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    if parts.is_empty() {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&parts) {
        return c.clone();
    }
    let mut total = BigUint::default();
    for r in 0..parts.len() {
        let next_part = parts.get(r + 1).copied().unwrap_or(0);
        if parts[r] > next_part {
            let mut smaller = parts.clone();
            smaller[r] -= 1;
            total += tableaux_by_branching(&smaller, memo);
        }
    }
    memo.insert(parts, total.clone());
    total
}
