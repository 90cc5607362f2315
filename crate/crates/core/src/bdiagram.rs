//! Acyclic b-diagrams.
//!
//! A b-diagram on `[n]` is what remains of a σ-diagram after deleting some
//! arcs: a set of vertex-disjoint paths (blocks) and isolated vertices. It is
//! written `b_1 | b_2 | … | b_m`, each block listing its vertices in path
//! order. Blocks never span all `n` vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{check_permutation, format_arcs, format_seq, parse_numbers, Arc, CyclicPerm};
use crate::words::{path_steps, Dialect, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BDiagram {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl BDiagram {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.iter().any(Vec::is_empty) || blocks.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let all: Vec<usize> = blocks.concat();
        check_permutation(&all)?;
        let n = all.len();
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if let Some(b) = blocks.iter().find(|b| b.len() >= n) {
            return Err(Error::BlockTooLong(b.len()));
        }
        Ok(BDiagram { n, blocks })
    }

    /// Assembles the diagram spanned by `arcs` on `[n]`, with blocks in
    /// normalized form: each block runs from its smaller end to its larger
    /// end, and blocks are ordered by their smallest vertex.
    pub fn from_arcs<'a>(n: usize, arcs: impl IntoIterator<Item = &'a Arc>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for arc in arcs {
            for v in [arc.lo, arc.hi] {
                if v == 0 || v > n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
            }
            if adj[arc.lo].contains(&arc.hi) {
                continue;
            }
            adj[arc.lo].push(arc.hi);
            adj[arc.hi].push(arc.lo);
        }
        if let Some(v) = (1..=n).find(|&v| adj[v].len() > 2) {
            return Err(Error::DegreeExceeded(v));
        }
        let mut seen = vec![false; n + 1];
        let mut blocks = Vec::new();
        for v in 1..=n {
            if seen[v] {
                continue;
            }
            // collect the component, then walk it from its smaller end
            let mut component = vec![v];
            seen[v] = true;
            let mut i = 0;
            while i < component.len() {
                for &u in &adj[component[i]] {
                    if !seen[u] {
                        seen[u] = true;
                        component.push(u);
                    }
                }
                i += 1;
            }
            let start = match component
                .iter()
                .copied()
                .filter(|&u| adj[u].len() < 2)
                .min()
            {
                Some(s) => s,
                None => {
                    return Err(Error::NotRepresentable(format!(
                        "arcs close a cycle through vertex {v}"
                    )))
                }
            };
            let mut block = vec![start];
            let mut prev = 0;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&u| u != prev) {
                block.push(next);
                prev = cur;
                cur = next;
            }
            blocks.push(block);
        }
        if blocks.len() == 1 {
            return Err(Error::NotRepresentable(
                "arcs form a path through every vertex".into(),
            ));
        }
        Ok(BDiagram { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `m`.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// Number of singleton blocks `ℓ`.
    pub fn isolated_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    pub fn isolated(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect();
        v.sort_unstable();
        v
    }

    /// Arcs between consecutive vertices of each block; `n - m` of them.
    pub fn arcs(&self) -> BTreeSet<Arc> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])))
            .collect()
    }

    pub fn normalized(&self) -> BDiagram {
        BDiagram::from_arcs(self.n, &self.arcs()).expect("a valid diagram re-assembles")
    }

    /// Two diagrams are the same when they have the same vertices and arcs,
    /// regardless of block order or orientation.
    pub fn same_diagram(&self, other: &BDiagram) -> bool {
        self.n == other.n && self.arcs() == other.arcs()
    }

    fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }

    fn degree(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .find_map(|b| {
                b.iter().position(|&u| u == v).map(|i| {
                    if b.len() == 1 {
                        0
                    } else if i == 0 || i + 1 == b.len() {
                        1
                    } else {
                        2
                    }
                })
            })
            .unwrap_or(0)
    }

    pub fn classify(&self) -> BClassification {
        let mut starts = vec![0u8; self.n + 1];
        let mut ends = vec![0u8; self.n + 1];
        for arc in self.arcs() {
            starts[arc.lo] += 1;
            ends[arc.hi] += 1;
        }
        let mut cls = BClassification::default();
        for v in 1..=self.n {
            let set = match (starts[v], ends[v]) {
                (2, 0) => &mut cls.r,
                (0, 2) => &mut cls.rbar,
                (1, 1) => &mut cls.k,
                (1, 0) => &mut cls.a,
                (0, 1) => &mut cls.abar,
                _ => &mut cls.l,
            };
            set.insert(v);
        }
        cls
    }

    /// The z-word: one letter per vertex in natural order.
    pub fn word(&self) -> Word {
        let cls = self.classify();
        (1..=self.n).map(|v| cls.letter(v)).collect()
    }

    /// `U_b` written with arcs as pairs and isolated vertices bare,
    /// e.g. `{13,2,48,56,7}`.
    pub fn arc_notation(&self) -> String {
        let mut items: Vec<(usize, usize, String)> = self
            .arcs()
            .into_iter()
            .map(|a| (a.lo, a.hi, a.to_string()))
            .collect();
        items.extend(self.isolated().into_iter().map(|v| (v, 0, v.to_string())));
        items.sort();
        format!("{{{}}}", items.into_iter().map(|(_, _, s)| s).join(","))
    }

    /// Every b-diagram on `[n]`, each in normalized form.
    pub fn all(n: usize) -> Vec<BDiagram> {
        fn rec(
            n: usize,
            remaining: &[usize],
            blocks: &mut Vec<Vec<usize>>,
            out: &mut Vec<BDiagram>,
        ) {
            let Some((&first, rest)) = remaining.split_first() else {
                if blocks.len() > 1 {
                    out.push(BDiagram {
                        n,
                        blocks: blocks.clone(),
                    });
                }
                return;
            };
            for size in 0..=rest.len() {
                for others in rest.iter().copied().combinations(size) {
                    let left: Vec<usize> = rest
                        .iter()
                        .copied()
                        .filter(|v| !others.contains(v))
                        .collect();
                    let mut members = others.clone();
                    members.push(first);
                    for order in members.iter().copied().permutations(members.len()) {
                        if order.len() > 1 && order[0] > order[order.len() - 1] {
                            continue;
                        }
                        blocks.push(order);
                        rec(n, &left, blocks, out);
                        blocks.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        if n >= 3 {
            let vertices: Vec<usize> = (1..=n).collect();
            rec(n, &vertices, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for BDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let blocks = text
            .split('|')
            .map(|part| {
                let block = parse_numbers(part)?;
                if block.is_empty() {
                    Err(Error::EmptyBlock)
                } else {
                    Ok(block)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        BDiagram::new(blocks)
    }
}

impl fmt::Display for BDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.blocks.iter().map(|b| format_seq(b)).join(" | ");
        f.write_str(&text)
    }
}

/// The six vertex classes of a b-diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BClassification {
    /// Two arcs start.
    pub r: BTreeSet<usize>,
    /// Two arcs end.
    pub rbar: BTreeSet<usize>,
    /// One arc ends, one starts.
    pub k: BTreeSet<usize>,
    /// A single arc starts.
    pub a: BTreeSet<usize>,
    /// A single arc ends.
    pub abar: BTreeSet<usize>,
    /// Isolated.
    pub l: BTreeSet<usize>,
}

impl BClassification {
    pub fn letter(&self, v: usize) -> Letter {
        if self.r.contains(&v) {
            Letter::LeftRamphoid
        } else if self.rbar.contains(&v) {
            Letter::RightRamphoid
        } else if self.k.contains(&v) {
            Letter::Keratoid
        } else if self.a.contains(&v) {
            Letter::ArcStart
        } else if self.abar.contains(&v) {
            Letter::ArcEnd
        } else {
            Letter::Isolated
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    /// The running height of the word's path drops below zero.
    NegativePrefix,
    /// The degrees do not sum to zero.
    NonzeroTotal,
    /// The first or last letter needs a neighbour outside the line.
    BadEndpoints,
    /// The letters are balanced but no acyclic diagram has them.
    Unrealizable,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvalidReason::NegativePrefix => "NegativePrefix",
            InvalidReason::NonzeroTotal => "NonzeroTotal",
            InvalidReason::BadEndpoints => "BadEndpoints",
            InvalidReason::Unrealizable => "Unrealizable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid(BDiagram),
    Invalid(InvalidReason),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid(_))
    }
}

/// Decides whether some b-diagram has z-word `z`.
///
/// The degree prefix sums must stay non-negative and total zero, but that is
/// not enough (`rkR` passes and can only be drawn as a triangle), so a
/// realization search settles the rest. The witness is the first realization
/// found when every vertex, left to right, closes its pending arcs against
/// the smallest open vertices available.
pub fn validate_z(z: &[Letter]) -> Validity {
    let n = z.len();
    let mut height = 0i64;
    for (i, l) in z.iter().enumerate() {
        height += i64::from(l.degree());
        if i + 1 < n && height < 0 {
            return Validity::Invalid(InvalidReason::NegativePrefix);
        }
    }
    if height != 0 {
        return Validity::Invalid(InvalidReason::NonzeroTotal);
    }
    let first_ok = |l: &Letter| l.ends() == 0;
    let last_ok = |l: &Letter| l.starts() == 0;
    if !z.first().is_some_and(first_ok) || !z.last().is_some_and(last_ok) {
        return Validity::Invalid(InvalidReason::BadEndpoints);
    }
    let path = path_steps(z, Dialect::B).expect("every letter has a b-path");
    if path.min_height() < 0 {
        return Validity::Invalid(InvalidReason::NegativePrefix);
    }
    match realize(z) {
        Some(arcs) => {
            Validity::Valid(BDiagram::from_arcs(n, &arcs).expect("realization is a b-diagram"))
        }
        None => Validity::Invalid(InvalidReason::Unrealizable),
    }
}

struct Realizer<'a> {
    z: &'a [Letter],
    open: Vec<u8>,
    comp: Vec<usize>,
    arcs: Vec<Arc>,
}

impl Realizer<'_> {
    fn place(&mut self, j: usize) -> bool {
        let n = self.z.len();
        if j > n {
            // a single path through all n vertices is not a b-diagram
            return self.open.iter().all(|&o| o == 0) && self.arcs.len() < n - 1;
        }
        let letter = self.z[j - 1];
        let candidates: Vec<usize> = (1..j).filter(|&v| self.open[v] > 0).collect();
        for chosen in candidates.into_iter().combinations(letter.ends() as usize) {
            let mut comps: Vec<usize> = chosen.iter().map(|&v| self.comp[v]).collect();
            comps.push(self.comp[j]);
            if !comps.iter().all_unique() {
                continue;
            }
            let saved = self.comp.clone();
            for &v in &chosen {
                self.open[v] -= 1;
                self.arcs.push(Arc::new(v, j));
                let (from, to) = (self.comp[v], self.comp[j]);
                for c in self.comp.iter_mut() {
                    if *c == from {
                        *c = to;
                    }
                }
            }
            self.open[j] = letter.starts();
            if self.place(j + 1) {
                return true;
            }
            self.open[j] = 0;
            for &v in &chosen {
                self.open[v] += 1;
                self.arcs.pop();
            }
            self.comp = saved;
        }
        false
    }
}

fn realize(z: &[Letter]) -> Option<Vec<Arc>> {
    let n = z.len();
    if n < 3 {
        return None;
    }
    let mut r = Realizer {
        z,
        open: vec![0; n + 1],
        comp: (0..=n).collect(),
        arcs: Vec::new(),
    };
    r.place(1).then_some(r.arcs)
}

/// Arcs of a generator that are absent from the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSet {
    pub arcs: Vec<Arc>,
}

impl CutSet {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_arcs(&self.arcs))
    }
}

/// `U_σ \ U_b`; it always has exactly `m` arcs.
pub fn cut_set(p: &CyclicPerm, b: &BDiagram) -> Result<CutSet> {
    if p.n() != b.n() {
        return Err(Error::SizeMismatch(p.n(), b.n()));
    }
    let sigma = p.arc_set();
    let own = b.arcs();
    if let Some(missing) = own.iter().find(|a| !sigma.contains(a)) {
        return Err(Error::NotAGenerator(missing.to_string()));
    }
    Ok(CutSet {
        arcs: sigma
            .arcs()
            .iter()
            .filter(|a| !own.contains(a))
            .copied()
            .collect(),
    })
}

/// The diagram formed by the cut set of `b` in `p`, in normalized form.
pub fn complement(p: &CyclicPerm, b: &BDiagram) -> Result<BDiagram> {
    let cut = cut_set(p, b)?;
    BDiagram::from_arcs(b.n(), &cut.arcs)
}

fn crosses(x: &Arc, y: &Arc) -> bool {
    x.lo < y.lo && y.lo < x.hi && x.hi < y.hi
}

/// Size of the largest family of mutually crossing arcs
/// `i_1 < … < i_k < j_1 < … < j_k`; 0 without arcs.
///
/// The diagram is k-noncrossing for every `k` above this value.
pub fn max_crossing(b: &BDiagram) -> usize {
    let arcs: Vec<Arc> = b.arcs().into_iter().collect();
    let mut best = 0;
    for first in &arcs {
        // arcs starting under `first` and ending beyond it, by start
        let inner: Vec<&Arc> = arcs
            .iter()
            .filter(|a| first.lo < a.lo && a.lo < first.hi && a.hi > first.hi)
            .collect();
        // longest chain with strictly increasing starts and ends
        let mut chain = vec![1usize; inner.len()];
        for i in 0..inner.len() {
            for j in 0..i {
                if crosses(inner[j], inner[i]) {
                    chain[i] = chain[i].max(chain[j] + 1);
                }
            }
        }
        best = best.max(1 + chain.into_iter().max().unwrap_or(0));
    }
    best
}

pub fn is_k_noncrossing(b: &BDiagram, k: usize) -> bool {
    max_crossing(b) < k
}

fn check_vertex(b: &BDiagram, v: usize) -> Result<()> {
    if v == 0 || v > b.n() {
        return Err(Error::OutOfRange {
            vertex: v,
            n: b.n(),
        });
    }
    Ok(())
}

/// Edit: join `u` and `v` by a new arc, merging their blocks.
pub fn plato_add(b: &BDiagram, u: usize, v: usize) -> Result<BDiagram> {
    check_vertex(b, u)?;
    check_vertex(b, v)?;
    if u == v {
        return Err(Error::WouldCycle(format!("({u},{v})")));
    }
    let arc = Arc::new(u, v);
    if b.arcs().contains(&arc) {
        return Err(Error::AlreadyPresent(arc.to_string()));
    }
    for w in [u, v] {
        if b.degree(w) >= 2 {
            return Err(Error::DegreeExceeded(w));
        }
    }
    let (bu, bv) = (b.block_of(u).unwrap(), b.block_of(v).unwrap());
    if bu == bv {
        return Err(Error::WouldCycle(arc.to_string()));
    }
    let (keep, drop, tail_end, head_end) = if bu < bv {
        (bu, bv, u, v)
    } else {
        (bv, bu, v, u)
    };
    let mut head = b.blocks[keep].clone();
    if head.last() != Some(&tail_end) {
        head.reverse();
    }
    let mut tail = b.blocks[drop].clone();
    if tail.first() != Some(&head_end) {
        tail.reverse();
    }
    head.extend(tail);
    if head.len() == b.n() {
        return Err(Error::NotRepresentable(format!(
            "adding {arc} leaves a single path through every vertex"
        )));
    }
    if head[0] > head[head.len() - 1] {
        head.reverse();
    }
    let mut blocks = b.blocks.clone();
    blocks[keep] = head;
    blocks.remove(drop);
    BDiagram::new(blocks)
}

/// Edit: delete the arc `(u, v)`, splitting its block in place.
pub fn plato_remove(b: &BDiagram, u: usize, v: usize) -> Result<BDiagram> {
    check_vertex(b, u)?;
    check_vertex(b, v)?;
    if u == v {
        return Err(Error::NotPresent(format!("({u},{v})")));
    }
    let label = Arc::new(u, v).to_string();
    let Some(idx) = b.block_of(u) else {
        return Err(Error::NotPresent(label));
    };
    let block = &b.blocks[idx];
    let Some(cut) = block
        .windows(2)
        .position(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    else {
        return Err(Error::NotPresent(label));
    };
    let (left, right) = block.split_at(cut + 1);
    let mut blocks = b.blocks.clone();
    blocks.splice(idx..=idx, [left.to_vec(), right.to_vec()]);
    BDiagram::new(blocks)
}

/// Edit: swap the labels `i` and `j` everywhere, keeping block shapes.
pub fn plato_transpose(b: &BDiagram, i: usize, j: usize) -> Result<BDiagram> {
    check_vertex(b, i)?;
    check_vertex(b, j)?;
    let swap = |v: usize| {
        if v == i {
            j
        } else if v == j {
            i
        } else {
            v
        }
    };
    let blocks = b
        .blocks
        .iter()
        .map(|blk| blk.iter().map(|&v| swap(v)).collect())
        .collect();
    BDiagram::new(blocks)
}
