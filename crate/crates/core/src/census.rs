//! Exhaustive word census over `Σ_n`.
//!
//! Collects the σ-word of every cyclic permutation of `[n]` and compares the
//! number of distinct words against the Motzkin number `M_{n-2}`, and the
//! number of keratoid-free words against the number of elevated Dyck words of
//! length `n`. It also checks whether choosing the permutations with
//! `σ_2 = min(R̄ ∪ K)`, plus their reverses, recovers every permutation of a
//! word; for some words it does not.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::inversion::word_classes;
use crate::perm::CyclicPerm;
use crate::words::{sigma_word, Letter, SigmaWord};

pub const CENSUS_MAX_N: usize = 10;

/// `M_0, M_1, …, M_len-1` from `M_n = M_{n-1} + Σ_{k=0}^{n-2} M_k M_{n-2-k}`.
pub fn motzkin_numbers(len: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = Vec::with_capacity(len);
    for i in 0..len {
        let value = if i < 2 {
            BigUint::from(1u32)
        } else {
            let pairs: BigUint = (0..=i - 2).map(|k| &m[k] * &m[i - 2 - k]).sum();
            &m[i - 1] + pairs
        };
        m.push(value);
    }
    m
}

pub fn motzkin(n: usize) -> BigUint {
    motzkin_numbers(n + 1).pop().expect("non-empty")
}

/// `C_n` from `C_{n+1} = Σ_{k=0}^{n} C_k C_{n-k}`.
pub fn catalan(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::from(1u32)];
    for i in 1..=n {
        let next = (0..i).map(|k| &c[k] * &c[i - 1 - k]).sum();
        c.push(next);
    }
    c.pop().expect("non-empty")
}

/// Elevated Dyck words of length `n`: `r`, any Dyck word of length `n - 2`, `r̄`.
pub fn elevated_dyck_count(n: usize) -> BigUint {
    if n < 2 || n % 2 == 1 {
        BigUint::from(0u32)
    } else {
        catalan(n / 2 - 1)
    }
}

/// A word whose permutations are not all reached by the `σ_2 = min(R̄ ∪ K)`
/// selection together with reverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitFailure {
    pub word: SigmaWord,
    pub permutations: usize,
    /// Permutations with `σ_2 = min(R̄ ∪ K)`.
    pub selected: usize,
    /// Permutations neither selected nor the reverse of a selected one.
    pub missed: Vec<CyclicPerm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub permutations: usize,
    pub distinct_words: usize,
    pub expected_words: BigUint,
    pub keratoid_free_words: usize,
    pub expected_keratoid_free: BigUint,
    pub split_failures: Vec<SplitFailure>,
}

impl CensusReport {
    pub fn words_match(&self) -> bool {
        BigUint::from(self.distinct_words) == self.expected_words
    }

    pub fn keratoid_free_match(&self) -> bool {
        BigUint::from(self.keratoid_free_words) == self.expected_keratoid_free
    }
}

pub fn census(n: usize) -> Result<CensusReport> {
    if n > CENSUS_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: CENSUS_MAX_N,
        });
    }
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut by_word: BTreeMap<SigmaWord, Vec<CyclicPerm>> = BTreeMap::new();
    let mut permutations = 0;
    for p in CyclicPerm::all(n) {
        permutations += 1;
        by_word.entry(sigma_word(&p)).or_default().push(p);
    }
    let keratoid_free_words = by_word
        .keys()
        .filter(|w| !w.contains(&Letter::Keratoid))
        .count();

    let mut split_failures = Vec::new();
    for (word, perms) in &by_word {
        let cls = word_classes(word);
        let pivot = cls.rbar.iter().chain(cls.k.iter()).copied().min();
        let selected: Vec<&CyclicPerm> = perms.iter().filter(|p| Some(p.at(2)) == pivot).collect();
        let missed: Vec<CyclicPerm> = perms
            .iter()
            .filter(|p| {
                let rev = p.reverse();
                !selected.iter().any(|s| *s == *p || **s == rev)
            })
            .cloned()
            .collect();
        if !missed.is_empty() {
            split_failures.push(SplitFailure {
                word: word.clone(),
                permutations: perms.len(),
                selected: selected.len(),
                missed,
            });
        }
    }

    Ok(CensusReport {
        n,
        permutations,
        distinct_words: by_word.len(),
        expected_words: motzkin(n - 2),
        keratoid_free_words,
        expected_keratoid_free: elevated_dyck_count(n),
        split_failures,
    })
}
