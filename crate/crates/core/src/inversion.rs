//! Recovering the cyclic permutations behind a σ-word.
//!
//! Many permutations share a word. The search below walks the cycle from
//! vertex 1, only ever stepping to a vertex allowed by the candidate map `Γ`
//! and never giving a vertex more smaller or larger neighbours than its letter
//! permits.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{Classification, CyclicPerm};
use crate::words::{sigma_word, word_predicates, Letter, SigmaWord};

/// Largest `n` the brute-force filter will scan (`9!` permutations).
pub const ORACLE_MAX_N: usize = 10;

/// The candidate neighbours `Γ(i)` of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMap {
    sets: Vec<BTreeSet<usize>>,
}

impl GammaMap {
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn get(&self, v: usize) -> &BTreeSet<usize> {
        &self.sets[v - 1]
    }
}

/// Reads the vertex classes off a σ-word.
pub fn word_classes(word: &[Letter]) -> Classification {
    let mut cls = Classification::default();
    for (i, l) in word.iter().enumerate() {
        let set = match l {
            Letter::LeftRamphoid => &mut cls.r,
            Letter::RightRamphoid => &mut cls.rbar,
            _ => &mut cls.k,
        };
        set.insert(i + 1);
    }
    cls
}

/// A left ramphoid may only join larger non-left-ramphoids, a right ramphoid
/// only smaller non-right-ramphoids, and a keratoid either.
pub fn gamma(cls: &Classification) -> GammaMap {
    let n = cls.n();
    let may_end = |j: usize| cls.rbar.contains(&j) || cls.k.contains(&j);
    let may_start = |j: usize| cls.r.contains(&j) || cls.k.contains(&j);
    let sets = (1..=n)
        .map(|i| {
            let larger = (i + 1..=n).filter(|&j| may_end(j));
            let smaller = (1..i).filter(|&j| may_start(j));
            if cls.r.contains(&i) {
                larger.collect()
            } else if cls.rbar.contains(&i) {
                smaller.collect()
            } else {
                smaller.chain(larger).collect()
            }
        })
        .collect();
    GammaMap { sets }
}

struct Search<'a> {
    word: &'a [Letter],
    gamma: GammaMap,
    used: Vec<bool>,
    starts: Vec<u8>,
    ends: Vec<u8>,
    seq: Vec<usize>,
    found: Vec<CyclicPerm>,
}

impl Search<'_> {
    fn can_join(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = (a.min(b), a.max(b));
        self.starts[lo] < self.word[lo - 1].starts() && self.ends[hi] < self.word[hi - 1].ends()
    }

    fn join(&mut self, a: usize, b: usize, delta: i8) {
        let (lo, hi) = (a.min(b), a.max(b));
        self.starts[lo] = self.starts[lo].wrapping_add_signed(delta);
        self.ends[hi] = self.ends[hi].wrapping_add_signed(delta);
    }

    fn extend(&mut self) {
        let n = self.word.len();
        let last = *self.seq.last().expect("search starts at vertex 1");
        if self.seq.len() == n {
            if self.gamma.get(last).contains(&1) && self.can_join(last, 1) {
                let p = CyclicPerm::new(self.seq.clone()).expect("search builds permutations");
                if &sigma_word(&p)[..] == self.word {
                    self.found.push(p);
                }
            }
            return;
        }
        let candidates: Vec<usize> = self
            .gamma
            .get(last)
            .iter()
            .copied()
            .filter(|&v| !self.used[v])
            .collect();
        for next in candidates {
            if !self.can_join(last, next) {
                continue;
            }
            self.join(last, next, 1);
            self.used[next] = true;
            self.seq.push(next);
            self.extend();
            self.seq.pop();
            self.used[next] = false;
            self.join(last, next, -1);
        }
    }
}

/// Every cyclic permutation whose σ-word is `w`, sorted lexicographically.
///
/// The result is closed under reversal and may be empty.
pub fn perms_from_word(w: &SigmaWord) -> Result<Vec<CyclicPerm>> {
    let shape = word_predicates(w)?;
    if !shape.is_elevated {
        return Err(Error::NotAWord(format!(
            "{w} is not an elevated Motzkin word"
        )));
    }
    let n = w.len();
    let mut search = Search {
        word: w,
        gamma: gamma(&word_classes(w)),
        used: vec![false; n + 1],
        starts: vec![0; n + 1],
        ends: vec![0; n + 1],
        seq: vec![1],
        found: Vec::new(),
    };
    search.used[1] = true;
    search.extend();
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// Brute-force counterpart of [`perms_from_word`]: filters all `(n-1)!`
/// cyclic permutations of `[n]`.
pub fn perms_from_word_oracle(w: &SigmaWord) -> Result<Vec<CyclicPerm>> {
    let n = w.len();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    Ok(CyclicPerm::all(n).filter(|p| &sigma_word(p) == w).collect())
}

/// Keeps one permutation from each reverse pair: the one with `σ_2 < σ_n`.
pub fn canonical_half(perms: &[CyclicPerm]) -> Vec<CyclicPerm> {
    perms
        .iter()
        .filter(|p| p.at(2) < p.at(p.n() as isize))
        .cloned()
        .collect()
}
