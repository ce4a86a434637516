//! Reduced words in the free group on two generators and the word tree.
//!
//! Letters are ordered `A < a < B < b`, where lowercase is the inverse.
//! The word tree is walked depth-first, so a word is visited before its
//! extensions and siblings follow the letter order. Parallel walks split
//! the tree into 16 fixed units (the four one-letter words and the twelve
//! two-letter subtrees) and always merge unit results in tree order, so the
//! outcome does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::isometry::Isometry;

/// Deepest word tree that may be walked (about 86 million words).
pub const MAX_DEPTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::AInv => 'a',
            Letter::B => 'B',
            Letter::BInv => 'b',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid letter {0:?}; expected one of A, a, B, b")]
    Letter(char),
    #[error("depth {0} outside 1..={MAX_DEPTH}")]
    Depth(usize),
}

/// A word over `{A, a, B, b}`. Not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced() && cyclic_ok(&self.0)
    }

    /// Free reduction.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Product of the generator matrices, left to right.
    pub fn evaluate(&self, gens: &Generators) -> Isometry {
        Isometry::product(self.0.iter().map(|l| gens.get(*l)))
    }
}

fn cyclic_ok(letters: &[Letter]) -> bool {
    match letters {
        [first, .., last] => *first != last.inverse(),
        _ => true,
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'A' => Ok(Letter::A),
                'a' => Ok(Letter::AInv),
                'B' => Ok(Letter::B),
                'b' => Ok(Letter::BInv),
                other => Err(WordError::Letter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The two generators together with their inverses, indexed by letter.
#[derive(Debug, Clone, Copy)]
pub struct Generators([Isometry; 4]);

impl Generators {
    pub fn new(a: Isometry, b: Isometry) -> Self {
        Generators([a, a.inverse(), b, b.inverse()])
    }

    pub fn get(&self, l: Letter) -> &Isometry {
        &self.0[l as usize]
    }
}

/// Number of freely reduced words of length `1..=depth`.
pub fn reduced_word_count(depth: usize) -> u64 {
    (1..=depth as u32).map(|k| 4 * 3u64.pow(k - 1)).sum()
}

pub fn check_depth(depth: usize) -> Result<usize, WordError> {
    if (1..=MAX_DEPTH).contains(&depth) {
        Ok(depth)
    } else {
        Err(WordError::Depth(depth))
    }
}

/// Streaming depth-first enumeration of the freely reduced words of length
/// `1..=depth`, each paired with its matrix.
pub struct WordStream {
    gens: Generators,
    depth: usize,
    word: Vec<Letter>,
    mats: Vec<Isometry>,
    started: bool,
}

impl WordStream {
    pub fn new(gens: Generators, depth: usize) -> Result<Self, WordError> {
        Ok(WordStream {
            gens,
            depth: check_depth(depth)?,
            word: Vec::with_capacity(depth),
            mats: Vec::with_capacity(depth),
            started: false,
        })
    }

    fn push(&mut self, l: Letter) {
        let m = match self.mats.last() {
            Some(prev) => prev.compose(self.gens.get(l)),
            None => *self.gens.get(l),
        };
        self.word.push(l);
        self.mats.push(m);
    }

    fn allowed_after(&self, prev: Option<Letter>, from: usize) -> Option<Letter> {
        Letter::ALL[from..]
            .iter()
            .copied()
            .find(|l| prev.is_none_or(|p| *l != p.inverse()))
    }

    fn current(&self) -> (Word, Isometry) {
        (
            Word(self.word.clone()),
            *self.mats.last().expect("nonempty"),
        )
    }
}

impl Iterator for WordStream {
    type Item = (Word, Isometry);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            self.push(Letter::A);
            return Some(self.current());
        }
        if self.word.is_empty() {
            return None;
        }
        if self.word.len() < self.depth {
            let next = self.allowed_after(self.word.last().copied(), 0)?;
            self.push(next);
            return Some(self.current());
        }
        while let Some(l) = self.word.pop() {
            self.mats.pop();
            if let Some(next) = self.allowed_after(self.word.last().copied(), l as usize + 1) {
                self.push(next);
                return Some(self.current());
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy)]
enum Unit {
    Node(Letter),
    Subtree(Letter, Letter),
}

fn units(depth: usize) -> Vec<Unit> {
    let mut out = Vec::with_capacity(16);
    for first in Letter::ALL {
        out.push(Unit::Node(first));
        if depth >= 2 {
            for second in Letter::ALL {
                if second != first.inverse() {
                    out.push(Unit::Subtree(first, second));
                }
            }
        }
    }
    out
}

fn descend<A, F>(
    gens: &Generators,
    depth: usize,
    word: &mut Vec<Letter>,
    m: &Isometry,
    acc: &mut A,
    visit: &F,
) where
    F: Fn(&mut A, &[Letter], &Isometry),
{
    visit(acc, word, m);
    if word.len() == depth {
        return;
    }
    let last = *word.last().expect("nonempty");
    for l in Letter::ALL {
        if l == last.inverse() {
            continue;
        }
        word.push(l);
        let next = m.compose(gens.get(l));
        descend(gens, depth, word, &next, acc, visit);
        word.pop();
    }
}

/// Walk every freely reduced word of length `1..=depth` in parallel.
///
/// Each of the 16 units starts from `init()`, visits its words in tree
/// order, and the unit accumulators are then folded left to right with
/// `merge`. The result is identical for any number of worker threads.
pub fn fold_tree<A, I, F, M>(
    gens: &Generators,
    depth: usize,
    init: I,
    visit: F,
    merge: M,
) -> Result<A, WordError>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[Letter], &Isometry) + Sync,
    M: Fn(A, A) -> A,
{
    let depth = check_depth(depth)?;
    let parts: Vec<A> = units(depth)
        .into_par_iter()
        .map(|unit| {
            let mut acc = init();
            let mut word = Vec::with_capacity(depth);
            match unit {
                Unit::Node(l) => {
                    word.push(l);
                    visit(&mut acc, &word, gens.get(l));
                }
                Unit::Subtree(f, s) => {
                    word.extend([f, s]);
                    let m = gens.get(f).compose(gens.get(s));
                    descend(gens, depth, &mut word, &m, &mut acc, &visit);
                }
            }
            acc
        })
        .collect();
    Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
}

/// Like [`fold_tree`] but only visits cyclically reduced words.
pub fn fold_cyclic<A, I, F, M>(
    gens: &Generators,
    depth: usize,
    init: I,
    visit: F,
    merge: M,
) -> Result<A, WordError>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[Letter], &Isometry) + Sync,
    M: Fn(A, A) -> A,
{
    fold_tree(
        gens,
        depth,
        init,
        |acc, w, m| {
            if cyclic_ok(w) {
                visit(acc, w, m)
            }
        },
        merge,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gens() -> Generators {
        Generators::new(Isometry::axial(1.0), Isometry::transverse(2.0))
    }

    #[test]
    fn counts() {
        assert_eq!(WordStream::new(gens(), 1).unwrap().count(), 4);
        assert_eq!(WordStream::new(gens(), 3).unwrap().count(), 52);
        for d in 1..=8 {
            let expected = 2 * (3u64.pow(d as u32) - 1);
            assert_eq!(reduced_word_count(d), expected);
            assert_eq!(WordStream::new(gens(), d).unwrap().count() as u64, expected);
        }
    }

    #[test]
    fn stream_is_lexicographic_and_reduced() {
        let words: Vec<Word> = WordStream::new(gens(), 4)
            .unwrap()
            .map(|(w, _)| w)
            .collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        assert!(words
            .iter()
            .all(|w| w.is_freely_reduced() && w.reduced() == *w));
        let unique: HashSet<_> = words.iter().collect();
        assert_eq!(unique.len(), words.len());
        assert_eq!(words[0].to_string(), "A");
        assert_eq!(words[1].to_string(), "AA");
    }

    #[test]
    fn stream_matrices_match_evaluation() {
        let g = gens();
        for (w, m) in WordStream::new(g, 5).unwrap() {
            let e = w.evaluate(&g);
            assert!((m.m11 - e.m11).abs() < 1e-9 * e.m11.abs().max(1.0));
            assert!((m.m21 - e.m21).abs() < 1e-9 * e.m11.abs().max(1.0));
        }
    }

    #[test]
    fn fold_tree_visits_in_stream_order() {
        let g = gens();
        let visited = fold_tree(
            &g,
            5,
            Vec::new,
            |acc: &mut Vec<Word>, w, _| acc.push(Word(w.to_vec())),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
        .unwrap();
        let streamed: Vec<Word> = WordStream::new(g, 5).unwrap().map(|(w, _)| w).collect();
        assert_eq!(visited, streamed);
    }

    #[test]
    fn cyclic_filter() {
        // brute force over all 4^k letter strings
        let mut expected = 0u64;
        for k in 1..=4u32 {
            for code in 0..4usize.pow(k) {
                let w = Word((0..k).map(|i| Letter::ALL[(code >> (2 * i)) & 3]).collect());
                if w.is_cyclically_reduced() {
                    expected += 1;
                }
            }
        }
        let n = fold_cyclic(&gens(), 4, || 0u64, |n, _, _| *n += 1, |a, b| a + b).unwrap();
        assert_eq!(n, expected);
    }

    #[test]
    fn parse_and_display() {
        let w: Word = "AbBa".parse().unwrap();
        assert_eq!(w.to_string(), "AbBa");
        assert!(!w.is_freely_reduced());
        assert_eq!(w.reduced().to_string(), "");
        assert_eq!(
            "ABab".parse::<Word>().unwrap().inverse().to_string(),
            "BAba"
        );
        assert!("AxB".parse::<Word>().is_err());
        assert!("AB".parse::<Word>().unwrap().is_cyclically_reduced());
        assert!(!"ABa".parse::<Word>().unwrap().is_cyclically_reduced());
    }

    #[test]
    fn depth_guard() {
        assert!(WordStream::new(gens(), 0).is_err());
        assert!(WordStream::new(gens(), 17).is_err());
    }
}
