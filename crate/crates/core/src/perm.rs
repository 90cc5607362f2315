//! Cyclic permutations and their arc diagrams.
//!
//! A cyclic permutation of `[n]` is stored as the sequence obtained by reading
//! the cycle starting from vertex 1. Its diagram places the vertices on a line
//! and joins cyclically consecutive entries by arcs, so every vertex has
//! degree two and the arcs form one Hamiltonian circuit.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// An arc `(lo, hi)` between two vertices, always stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
}

impl Arc {
    /// Builds the arc joining `a` and `b` in either order.
    ///
    /// Panics if `a == b`; loops never occur in any diagram.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an arc needs two distinct endpoints");
        Arc {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite to `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }
}

/// Arcs print as the two endpoints run together (`13`), which is unambiguous
/// while both are single digits; larger labels fall back to `(10,12)`.
impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi < 10 {
            write!(f, "{}{}", self.lo, self.hi)
        } else {
            write!(f, "({},{})", self.lo, self.hi)
        }
    }
}

/// Formats an arc set as `{13,16,23}`.
pub fn format_arcs<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> String {
    format!("{{{}}}", arcs.into_iter().join(","))
}

pub(crate) fn format_seq(seq: &[usize]) -> String {
    seq.iter().join(" ")
}

pub(crate) fn parse_numbers(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("'{tok}' is not a positive integer")))
        })
        .collect()
}

/// Checks that `values` holds each of `1..=values.len()` exactly once.
pub(crate) fn check_permutation(values: &[usize]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v > n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("{v} is out of range"),
            });
        }
        if seen[v] {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("{v} occurs twice"),
            });
        }
        seen[v] = true;
    }
    Ok(())
}

/// A cyclic permutation `σ = σ_1 σ_2 … σ_n` of `[n]` with `σ_1 = 1` and `n ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPerm {
    seq: Vec<usize>,
}

impl CyclicPerm {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        check_permutation(&seq)?;
        if seq.len() < 3 {
            return Err(Error::TooSmall(seq.len()));
        }
        if seq[0] != 1 {
            return Err(Error::NotNormalized(seq[0]));
        }
        Ok(CyclicPerm { seq })
    }

    /// Reads any cyclic arrangement of `[n]` and rotates it to start at 1.
    pub fn from_rotation(seq: &[usize]) -> Result<Self> {
        check_permutation(seq)?;
        let start = seq.iter().position(|&v| v == 1).unwrap_or(0);
        let mut rotated = Vec::with_capacity(seq.len());
        rotated.extend_from_slice(&seq[start..]);
        rotated.extend_from_slice(&seq[..start]);
        Self::new(rotated)
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// `σ_i` with 1-based cyclic indexing, so `at(0) == at(n)` and `at(n + 1) == 1`.
    pub fn at(&self, i: isize) -> usize {
        let n = self.n() as isize;
        self.seq[(i - 1).rem_euclid(n) as usize]
    }

    /// The inverse mapping: `inverse()[v - 1]` is the 1-based position of `v`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (pos, &v) in self.seq.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        inv
    }

    /// The reverse `σ̄_i = σ_{n+2-i}`; it traverses the same circuit backwards.
    pub fn reverse(&self) -> Self {
        let n = self.n() as isize;
        let seq = (1..=n).map(|i| self.at(n + 2 - i)).collect();
        CyclicPerm { seq }
    }

    /// The two cycle neighbours of vertex `v`.
    pub fn neighbours(&self, v: usize) -> (usize, usize) {
        let pos = self.inverse()[v - 1] as isize;
        (self.at(pos - 1), self.at(pos + 1))
    }

    pub fn arc_set(&self) -> SigmaDiagram {
        let n = self.n() as isize;
        let arcs: BTreeSet<Arc> = (1..=n)
            .map(|i| Arc::new(self.at(i), self.at(i + 1)))
            .collect();
        SigmaDiagram {
            n: self.n(),
            arcs: arcs.into_iter().collect(),
        }
    }

    pub fn classify(&self) -> Classification {
        self.arc_set().classify()
    }

    /// Every cyclic permutation of `[n]` in lexicographic order; `(n-1)!` items.
    pub fn all(n: usize) -> impl Iterator<Item = CyclicPerm> {
        (2..=n).permutations(n.saturating_sub(1)).map(|tail| {
            let mut seq = Vec::with_capacity(tail.len() + 1);
            seq.push(1);
            seq.extend(tail);
            CyclicPerm { seq }
        })
    }
}

impl FromStr for CyclicPerm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let values = parse_numbers(text)?;
        if values.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Self::new(values)
    }
}

impl fmt::Display for CyclicPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_seq(&self.seq))
    }
}

/// The arc set `U_σ` of a cyclic permutation: `n` arcs forming a single
/// circuit through every vertex, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaDiagram {
    n: usize,
    arcs: Vec<Arc>,
}

impl SigmaDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    /// A vertex is a left ramphoid when it is the smaller endpoint of two
    /// arcs, a right ramphoid when it is the larger endpoint of two arcs, and
    /// a keratoid otherwise.
    pub fn classify(&self) -> Classification {
        let mut starts = vec![0u8; self.n + 1];
        for arc in &self.arcs {
            starts[arc.lo] += 1;
        }
        let mut cls = Classification::default();
        for (v, &count) in starts.iter().enumerate().skip(1) {
            match count {
                2 => cls.r.insert(v),
                0 => cls.rbar.insert(v),
                _ => cls.k.insert(v),
            };
        }
        cls
    }
}

impl fmt::Display for SigmaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_arcs(&self.arcs))
    }
}

/// Partition of the vertices of a σ-diagram into left ramphoids `R`, right
/// ramphoids `R̄` and keratoids `K`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Classification {
    pub r: BTreeSet<usize>,
    pub rbar: BTreeSet<usize>,
    pub k: BTreeSet<usize>,
}

impl Classification {
    pub fn n(&self) -> usize {
        self.r.len() + self.rbar.len() + self.k.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> CyclicPerm {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn parse_accepts_valid_input() {
        assert_eq!(perm("1 3 2 7 8 4 5 6").seq(), &[1, 3, 2, 7, 8, 4, 5, 6]);
        assert_eq!(perm("1 2 3").seq(), &[1, 2, 3]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            "1 3 2 2".parse::<CyclicPerm>(),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            "2 1 3".parse::<CyclicPerm>(),
            Err(Error::NotNormalized(2))
        ));
        assert!(matches!(
            "1 2".parse::<CyclicPerm>(),
            Err(Error::TooSmall(2))
        ));
        assert!(matches!(
            "1 x 3".parse::<CyclicPerm>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!("".parse::<CyclicPerm>(), Err(Error::Parse(_))));
        assert!(matches!(
            "1 2 5".parse::<CyclicPerm>(),
            Err(Error::NotAPermutation { .. })
        ));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(perm("1 3 2 7 8 4 5 6").reverse(), perm("1 6 5 4 8 7 2 3"));
        assert_eq!(perm("1 2 3").reverse(), perm("1 3 2"));
        assert_eq!(perm("1 4 2 3").reverse(), perm("1 3 2 4"));
    }

    #[test]
    fn arc_set_examples() {
        assert_eq!(
            perm("1 3 2 7 8 4 5 6").arc_set().to_string(),
            "{13,16,23,27,45,48,56,78}"
        );
        assert_eq!(perm("1 2 3").arc_set().to_string(), "{12,13,23}");
        assert_eq!(
            perm("1 2 3 8 7 5 4 6").arc_set().to_string(),
            "{12,16,23,38,45,46,57,78}"
        );
    }

    #[test]
    fn classify_examples() {
        let c = perm("1 3 2 7 8 4 5 6").classify();
        assert_eq!(c.r, set(&[1, 2, 4]));
        assert_eq!(c.rbar, set(&[3, 6, 8]));
        assert_eq!(c.k, set(&[5, 7]));

        let c = perm("1 3 2 7 5 6 4 8").classify();
        assert_eq!(c.r, set(&[1, 2, 4, 5]));
        assert_eq!(c.rbar, set(&[3, 6, 7, 8]));
        assert!(c.k.is_empty());

        let c = perm("1 2 3").classify();
        assert_eq!((c.r, c.rbar, c.k), (set(&[1]), set(&[3]), set(&[2])));
    }

    #[test]
    fn inverse_and_cyclic_indexing() {
        let p = perm("1 3 2 7 8 4 5 6");
        assert_eq!(p.inverse(), vec![1, 3, 2, 6, 7, 8, 4, 5]);
        assert_eq!(p.at(0), 6);
        assert_eq!(p.at(9), 1);
        assert_eq!(p.at(-1), 5);
        assert_eq!(p.neighbours(1), (6, 3));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = CyclicPerm::all(5).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            CyclicPerm::all(4)
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["1 2 3 4", "1 2 4 3", "1 3 2 4", "1 3 4 2", "1 4 2 3", "1 4 3 2"]
        );
    }

    #[test]
    fn exhaustive_class_balance() {
        for n in 3..=8 {
            for p in CyclicPerm::all(n) {
                let c = p.classify();
                assert_eq!(c.r.len(), c.rbar.len(), "{p}");
                assert_eq!(2 * c.r.len() + c.k.len(), n, "{p}");
                assert!(c.r.contains(&1) && c.rbar.contains(&n), "{p}");
                assert_eq!(p.reverse().reverse(), p);
                assert_eq!(p.arc_set(), p.reverse().arc_set());
                assert_eq!(p.arc_set().arcs().len(), n);
            }
        }
    }

    #[test]
    fn rotation_normalizes() {
        assert_eq!(
            CyclicPerm::from_rotation(&[2, 1, 3, 4, 5, 8, 7, 6]).unwrap(),
            perm("1 3 4 5 8 7 6 2")
        );
    }
}
