//! Letter encodings of diagrams.
//!
//! σ-diagrams are encoded over `{r, r̄, k}` and b-diagrams over the six letters
//! `{e, α, ᾱ, r, r̄, k}`. The ASCII spelling used for I/O is fixed:
//!
//! | letter | ASCII | degree |
//! |--------|-------|--------|
//! | r      | `r`   | 2      |
//! | r̄      | `R`   | -2     |
//! | k      | `k`   | 0      |
//! | α      | `a`   | 1      |
//! | ᾱ      | `A`   | -1     |
//! | e      | `e`   | 0      |

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::CyclicPerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `r`: two arcs start here.
    LeftRamphoid,
    /// `r̄`: two arcs end here.
    RightRamphoid,
    /// `k`: one arc ends and one starts.
    Keratoid,
    /// `α`: a single arc starts.
    ArcStart,
    /// `ᾱ`: a single arc ends.
    ArcEnd,
    /// `e`: no arc.
    Isolated,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::LeftRamphoid,
        Letter::RightRamphoid,
        Letter::Keratoid,
        Letter::ArcStart,
        Letter::ArcEnd,
        Letter::Isolated,
    ];

    pub fn ascii(self) -> char {
        match self {
            Letter::LeftRamphoid => 'r',
            Letter::RightRamphoid => 'R',
            Letter::Keratoid => 'k',
            Letter::ArcStart => 'a',
            Letter::ArcEnd => 'A',
            Letter::Isolated => 'e',
        }
    }

    pub fn from_ascii(c: char) -> Result<Self> {
        Ok(match c {
            'r' => Letter::LeftRamphoid,
            'R' => Letter::RightRamphoid,
            'k' => Letter::Keratoid,
            'a' => Letter::ArcStart,
            'A' => Letter::ArcEnd,
            'e' => Letter::Isolated,
            other => return Err(Error::AlphabetMismatch(other)),
        })
    }

    /// Net number of arcs opened at this vertex (starts minus ends).
    pub fn degree(self) -> i8 {
        match self {
            Letter::LeftRamphoid => 2,
            Letter::ArcStart => 1,
            Letter::Keratoid | Letter::Isolated => 0,
            Letter::ArcEnd => -1,
            Letter::RightRamphoid => -2,
        }
    }

    /// Arcs to larger vertices.
    pub fn starts(self) -> u8 {
        match self {
            Letter::LeftRamphoid => 2,
            Letter::ArcStart | Letter::Keratoid => 1,
            _ => 0,
        }
    }

    /// Arcs to smaller vertices.
    pub fn ends(self) -> u8 {
        match self {
            Letter::RightRamphoid => 2,
            Letter::ArcEnd | Letter::Keratoid => 1,
            _ => 0,
        }
    }

    pub fn is_sigma(self) -> bool {
        matches!(
            self,
            Letter::LeftRamphoid | Letter::RightRamphoid | Letter::Keratoid
        )
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

/// An arbitrary word over the six-letter alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.chars().map(Letter::from_ascii).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// The word of a σ-diagram: letters over `{r, r̄, k}` with
/// `w_1 = r`, `w_2 ≠ r̄`, `w_{n-1} ≠ r`, `w_n = r̄` and as many `r` as `r̄`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaWord(Word);

impl SigmaWord {
    pub fn new(word: Word) -> Result<Self> {
        if let Some(bad) = word.iter().find(|l| !l.is_sigma()) {
            return Err(Error::AlphabetMismatch(bad.ascii()));
        }
        let n = word.len();
        if n < 3 {
            return Err(Error::NotAWord(format!("length {n} is below 3")));
        }
        let fail = |why: &str| Err(Error::NotAWord(format!("{word}: {why}")));
        if word[0] != Letter::LeftRamphoid || word[n - 1] != Letter::RightRamphoid {
            return fail("must start with r and end with R");
        }
        if word[1] == Letter::RightRamphoid || word[n - 2] == Letter::LeftRamphoid {
            return fail("second letter must not be R and second to last must not be r");
        }
        if word.count(Letter::LeftRamphoid) != word.count(Letter::RightRamphoid) {
            return fail("unequal numbers of r and R");
        }
        Ok(SigmaWord(word))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for SigmaWord {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromStr for SigmaWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        SigmaWord::new(text.parse()?)
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Letter `i` gives the class of vertex `i`, in natural vertex order.
pub fn sigma_word(p: &CyclicPerm) -> SigmaWord {
    let cls = p.classify();
    let word = (1..=p.n())
        .map(|v| {
            if cls.r.contains(&v) {
                Letter::LeftRamphoid
            } else if cls.rbar.contains(&v) {
                Letter::RightRamphoid
            } else {
                Letter::Keratoid
            }
        })
        .collect();
    SigmaWord(word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordShape {
    pub is_motzkin: bool,
    pub is_dyck: bool,
    pub is_elevated: bool,
}

/// Motzkin: balanced with no prefix holding more `r̄` than `r`. Dyck: Motzkin
/// without `k`. Elevated: Motzkin and every proper non-empty prefix has
/// strictly more `r` than `r̄`.
pub fn word_predicates(letters: &[Letter]) -> Result<WordShape> {
    if let Some(bad) = letters.iter().find(|l| !l.is_sigma()) {
        return Err(Error::AlphabetMismatch(bad.ascii()));
    }
    let mut height = 0i64;
    let mut nonneg = true;
    let mut positive_inside = true;
    for (i, l) in letters.iter().enumerate() {
        height += match l {
            Letter::LeftRamphoid => 1,
            Letter::RightRamphoid => -1,
            _ => 0,
        };
        nonneg &= height >= 0;
        if i + 1 < letters.len() {
            positive_inside &= height > 0;
        }
    }
    let is_motzkin = nonneg && height == 0;
    Ok(WordShape {
        is_motzkin,
        is_dyck: is_motzkin && !letters.contains(&Letter::Keratoid),
        is_elevated: is_motzkin && !letters.is_empty() && positive_inside,
    })
}

/// Reorders `w` along the cycle: `w'_i = w_{σ_i}`.
pub fn reindex_word(w: &[Letter], p: &CyclicPerm) -> Result<Word> {
    if w.len() != p.n() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            found: w.len(),
        });
    }
    Ok(p.seq().iter().map(|&v| w[v - 1]).collect())
}

/// For a permutation without keratoids the ramphoids alternate along the
/// cycle, so vertex `i` is a left ramphoid exactly when its position in the
/// sequence is odd.
pub fn dyck_parity_word(p: &CyclicPerm) -> Result<SigmaWord> {
    let cls = p.classify();
    if !cls.k.is_empty() {
        return Err(Error::HasKeratoids(cls.k.into_iter().collect()));
    }
    let word = p
        .inverse()
        .into_iter()
        .map(|pos| {
            if pos % 2 == 1 {
                Letter::LeftRamphoid
            } else {
                Letter::RightRamphoid
            }
        })
        .collect();
    Ok(SigmaWord(word))
}

pub fn degree_vector(letters: &[Letter]) -> Vec<i8> {
    letters.iter().map(|l| l.degree()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }
}

/// How letters are drawn.
///
/// In a σ-word path `k` is a flat step. In a b-word path `r`/`r̄` are double
/// up/down steps and `k` is a down step followed by an up step, so the height
/// after each vertex counts the arcs passing over the gap to its right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    Sigma,
    B,
}

/// A lattice path of unit steps, with the steps grouped by the vertex that
/// produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepPath {
    steps: Vec<Step>,
    group_sizes: Vec<usize>,
}

impl StepPath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps contributed by each letter, in order.
    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height after each step.
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0, |h, s| {
                *h += s.delta();
                Some(*h)
            })
            .collect()
    }

    pub fn min_height(&self) -> i64 {
        self.heights().into_iter().min().unwrap_or(0).min(0)
    }

    pub fn max_height(&self) -> i64 {
        self.heights().into_iter().max().unwrap_or(0).max(0)
    }

    pub fn final_height(&self) -> i64 {
        self.heights().last().copied().unwrap_or(0)
    }
}

fn letter_steps(letter: Letter, dialect: Dialect) -> Result<&'static [Step]> {
    use Step::*;
    Ok(match (dialect, letter) {
        (Dialect::Sigma, Letter::LeftRamphoid) => &[Up],
        (Dialect::Sigma, Letter::RightRamphoid) => &[Down],
        (Dialect::Sigma, Letter::Keratoid) => &[Flat],
        (Dialect::Sigma, other) => return Err(Error::AlphabetMismatch(other.ascii())),
        (Dialect::B, Letter::LeftRamphoid) => &[Up, Up],
        (Dialect::B, Letter::RightRamphoid) => &[Down, Down],
        (Dialect::B, Letter::Keratoid) => &[Down, Up],
        (Dialect::B, Letter::ArcStart) => &[Up],
        (Dialect::B, Letter::ArcEnd) => &[Down],
        (Dialect::B, Letter::Isolated) => &[Flat],
    })
}

pub fn path_steps(letters: &[Letter], dialect: Dialect) -> Result<StepPath> {
    let mut steps = Vec::with_capacity(letters.len() * 2);
    let mut group_sizes = Vec::with_capacity(letters.len());
    for &l in letters {
        let s = letter_steps(l, dialect)?;
        steps.extend_from_slice(s);
        group_sizes.push(s.len());
    }
    Ok(StepPath { steps, group_sizes })
}

/// Expands every double-step letter into single-step letters:
/// `r → αα`, `r̄ → ᾱᾱ`, `k → ᾱα`; `α`, `ᾱ` and `e` are kept.
pub fn inflate(letters: &[Letter]) -> Word {
    use Letter::*;
    letters
        .iter()
        .flat_map(|&l| -> &'static [Letter] {
            match l {
                LeftRamphoid => &[ArcStart, ArcStart],
                RightRamphoid => &[ArcEnd, ArcEnd],
                Keratoid => &[ArcEnd, ArcStart],
                ArcStart => &[ArcStart],
                ArcEnd => &[ArcEnd],
                Isolated => &[Isolated],
            }
        })
        .copied()
        .collect()
}
