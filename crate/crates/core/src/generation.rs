//! Generators of a b-diagram: the cyclic permutations whose arc set contains
//! every arc of the diagram.
//!
//! Three independent routes produce the same set:
//!
//! * [`enumerate_generators`] arranges the blocks around a circle, keeping the
//!   first block in front, and flips every non-singleton block either way.
//! * [`complete_table`] fills in the missing arcs one at a time, refusing any
//!   vertex of degree three and any cycle shorter than `n`.
//! * [`generators_oracle`] scans all of `Σ_n`.
//!
//! A diagram with `m` blocks, `ℓ` of them singletons, has exactly
//! `2^(m-ℓ) (m-1)!` generators.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::bdiagram::BDiagram;
use crate::error::{Error, Result};
use crate::perm::{Arc, CyclicPerm};

/// Default ceiling on the number of generators an enumeration may produce.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Largest `n` for the brute-force routes.
pub const ORACLE_MAX_N: usize = 10;

/// A sorted, duplicate-free list of generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    perms: Vec<CyclicPerm>,
}

impl GeneratorSet {
    fn from_set(set: BTreeSet<CyclicPerm>) -> Self {
        GeneratorSet {
            perms: set.into_iter().collect(),
        }
    }

    pub fn perms(&self) -> &[CyclicPerm] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn contains(&self, p: &CyclicPerm) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    pub fn is_closed_under_reverse(&self) -> bool {
        self.perms.iter().all(|p| self.contains(&p.reverse()))
    }
}

pub fn is_generator(p: &CyclicPerm, b: &BDiagram) -> bool {
    let sigma = p.arc_set();
    p.n() == b.n() && b.arcs().iter().all(|a| sigma.contains(a))
}

/// The blocks read one after another, rotated to start at 1.
pub fn canonical_generator(b: &BDiagram) -> CyclicPerm {
    CyclicPerm::from_rotation(&b.blocks().concat()).expect("blocks cover [n]")
}

/// `2^(m-ℓ) (m-1)!`.
pub fn count_generators(b: &BDiagram) -> BigUint {
    let m = b.m() as u64;
    let flips = (m - b.isolated_count() as u64) as u32;
    let orders: BigUint = (1..m).product();
    orders << flips
}

fn check_cap(b: &BDiagram, cap: u64) -> Result<BigUint> {
    let count = count_generators(b);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: count.to_string(),
            cap,
        });
    }
    Ok(count)
}

fn check_count(expected: &BigUint, set: &BTreeSet<CyclicPerm>) -> Result<()> {
    if *expected != BigUint::from(set.len()) {
        return Err(Error::CountMismatch {
            expected: expected.to_string(),
            found: set.len(),
        });
    }
    Ok(())
}

/// Every circular arrangement of the blocks with the first block in front,
/// times every orientation of the non-singleton blocks.
pub fn enumerate_generators(b: &BDiagram, cap: u64) -> Result<GeneratorSet> {
    let expected = check_cap(b, cap)?;
    let blocks = b.blocks();
    let flippable: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].len() > 1).collect();
    let mut found = BTreeSet::new();
    let mut seq = Vec::with_capacity(b.n());
    for rest in (1..blocks.len()).permutations(blocks.len() - 1) {
        for mask in 0u64..1 << flippable.len() {
            seq.clear();
            for idx in std::iter::once(0).chain(rest.iter().copied()) {
                let flip = flippable
                    .iter()
                    .position(|&f| f == idx)
                    .is_some_and(|bit| mask & (1 << bit) != 0);
                if flip {
                    seq.extend(blocks[idx].iter().rev());
                } else {
                    seq.extend(blocks[idx].iter());
                }
            }
            found.insert(CyclicPerm::from_rotation(&seq).expect("blocks cover [n]"));
        }
    }
    check_count(&expected, &found)?;
    Ok(GeneratorSet::from_set(found))
}

/// Brute force: every permutation of `Σ_n` whose arc set contains `arcs`.
fn scan(n: usize, arcs: &BTreeSet<Arc>) -> Result<BTreeSet<CyclicPerm>> {
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    Ok(CyclicPerm::all(n)
        .filter(|p| {
            let pos = p.inverse();
            arcs.iter().all(|a| {
                let gap = pos[a.lo - 1].abs_diff(pos[a.hi - 1]);
                gap == 1 || gap == n - 1
            })
        })
        .collect())
}

pub fn generators_oracle(b: &BDiagram) -> Result<GeneratorSet> {
    scan(b.n(), &b.arcs()).map(GeneratorSet::from_set)
}

struct Completion {
    n: usize,
    adj: Vec<Vec<usize>>,
    /// For a path end: the opposite end. Isolated vertices map to themselves.
    end_of: Vec<usize>,
    arc_count: usize,
    found: BTreeSet<CyclicPerm>,
}

impl Completion {
    fn new(b: &BDiagram) -> Self {
        let n = b.n();
        let mut adj = vec![Vec::new(); n + 1];
        let mut end_of: Vec<usize> = (0..=n).collect();
        for block in b.blocks() {
            for w in block.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
            let (first, last) = (block[0], block[block.len() - 1]);
            end_of[first] = last;
            end_of[last] = first;
        }
        Completion {
            n,
            adj,
            end_of,
            arc_count: b.n() - b.m(),
            found: BTreeSet::new(),
        }
    }

    fn open(&self, v: usize) -> bool {
        self.adj[v].len() < 2
    }

    /// Adds `(a, b)` if it keeps degrees at most two and closes no cycle
    /// shorter than `n`; returns the state needed to undo it.
    fn try_join(&mut self, a: usize, b: usize) -> Option<(usize, usize, usize, usize)> {
        if a == b || !self.open(a) || !self.open(b) || self.adj[a].contains(&b) {
            return None;
        }
        let closing = self.end_of[a] == b;
        if closing && self.arc_count != self.n - 1 {
            return None;
        }
        let (ea, eb) = (self.end_of[a], self.end_of[b]);
        let saved = (ea, self.end_of[ea], eb, self.end_of[eb]);
        if !closing {
            self.end_of[ea] = eb;
            self.end_of[eb] = ea;
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.arc_count += 1;
        Some(saved)
    }

    fn undo(&mut self, a: usize, b: usize, saved: (usize, usize, usize, usize)) {
        self.adj[a].pop();
        self.adj[b].pop();
        self.arc_count -= 1;
        let (ea, va, eb, vb) = saved;
        self.end_of[ea] = va;
        self.end_of[eb] = vb;
    }

    fn record(&mut self) {
        for &second in &self.adj[1] {
            let mut seq = vec![1, second];
            while seq.len() < self.n {
                let (prev, cur) = (seq[seq.len() - 2], seq[seq.len() - 1]);
                let next = *self.adj[cur].iter().find(|&&v| v != prev).expect("cycle");
                seq.push(next);
            }
            self.found
                .insert(CyclicPerm::new(seq).expect("completion is a cycle"));
        }
    }

    fn fill(&mut self) {
        if self.arc_count == self.n {
            self.record();
            return;
        }
        let u = (1..=self.n)
            .find(|&v| self.open(v))
            .expect("a vacant cell remains");
        let partners: Vec<usize> = (u + 1..=self.n).filter(|&v| self.open(v)).collect();
        if self.adj[u].is_empty() {
            // both of u's arcs are missing; pick them as an unordered pair
            for (v1, v2) in partners.iter().copied().tuple_combinations() {
                let Some(s1) = self.try_join(u, v1) else {
                    continue;
                };
                if let Some(s2) = self.try_join(u, v2) {
                    self.fill();
                    self.undo(u, v2, s2);
                }
                self.undo(u, v1, s1);
            }
        } else {
            for v in partners {
                if let Some(saved) = self.try_join(u, v) {
                    self.fill();
                    self.undo(u, v, saved);
                }
            }
        }
    }
}

/// Completes the diagram's arc table in every admissible way; each completion
/// is a Hamiltonian circuit, reported in both orientations.
pub fn complete_table(b: &BDiagram, cap: u64) -> Result<GeneratorSet> {
    let expected = check_cap(b, cap)?;
    let mut completion = Completion::new(b);
    completion.fill();
    check_count(&expected, &completion.found)?;
    Ok(GeneratorSet::from_set(completion.found))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonGenerators {
    pub generators: GeneratorSet,
    /// Whether one arc set contains the other (isolated vertices ignored).
    pub arcs_nested: bool,
}

/// Generators shared by `b` and `b2`, i.e. those containing both arc sets.
pub fn common_generators(b: &BDiagram, b2: &BDiagram) -> Result<CommonGenerators> {
    if b.n() != b2.n() {
        return Err(Error::SizeMismatch(b.n(), b2.n()));
    }
    let (x, y) = (b.arcs(), b2.arcs());
    let arcs_nested = x.is_subset(&y) || y.is_subset(&x);
    let union: BTreeSet<Arc> = x.union(&y).copied().collect();
    Ok(CommonGenerators {
        generators: GeneratorSet::from_set(scan(b.n(), &union)?),
        arcs_nested,
    })
}
