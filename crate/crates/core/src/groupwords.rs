//! Elements of the right-angled Artin group as syllable words.
//!
//! A word is a sequence of syllables `v^e` with `e != 0`. Three moves preserve
//! the group element: drop a zero syllable, merge two adjacent syllables on the
//! same vertex, and swap two adjacent syllables whose vertices commute. A word
//! is fully reduced when no sequence of swaps brings two syllables on the same
//! vertex together. Fully reduced forms of one element are related by swaps
//! alone, so choosing the greedy-largest arrangement gives a normal form and
//! solves the word problem.

use std::fmt;

use thiserror::Error;

use crate::graph::{CommutationGraph, Vertex, VertexSet};
use crate::traces::{self, Trace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub vertex: Vertex,
    pub exp: i64,
}

/// A word in the generators and their inverses, kept free of zero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    syllables: Vec<Syllable>,
}

/// One of the elementary rewriting moves, applied at a position `i`
/// (acting on syllables `i` and `i + 1`). Merging drops a syllable whose
/// exponent sums to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Merge(usize),
    Swap(usize),
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(v: Vertex) -> Self {
        GroupWord { syllables: vec![Syllable { vertex: v, exp: 1 }] }
    }

    /// Builds a word from `(vertex, exponent)` pairs, dropping zero exponents.
    /// Adjacent syllables are not merged.
    pub fn from_syllables(syllables: impl IntoIterator<Item = (Vertex, i64)>) -> Self {
        GroupWord {
            syllables: syllables
                .into_iter()
                .filter(|&(_, e)| e != 0)
                .map(|(vertex, exp)| Syllable { vertex, exp })
                .collect(),
        }
    }

    /// Positive word spelling a letter sequence.
    pub fn from_letters(letters: &[Vertex]) -> Self {
        Self::from_syllables(letters.iter().map(|&v| (v, 1)))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.syllables.iter().all(|s| s.exp > 0)
    }

    /// Concatenation.
    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        GroupWord { syllables }
    }

    /// Reversed syllables with negated exponents.
    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            syllables: self.syllables.iter().rev().map(|s| Syllable { vertex: s.vertex, exp: -s.exp }).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> GroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut syllables = Vec::with_capacity(base.syllables.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            syllables.extend_from_slice(&base.syllables);
        }
        GroupWord { syllables }
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &GroupWord, y: &GroupWord) -> GroupWord {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// `x^y = y^-1 x y`.
    pub fn conjugate(&self, by: &GroupWord) -> GroupWord {
        by.inverse().mul(self).mul(by)
    }

    /// Moves that apply to this word.
    pub fn legal_moves(&self, g: &CommutationGraph) -> Vec<Move> {
        let mut moves = Vec::new();
        for (i, pair) in self.syllables.windows(2).enumerate() {
            if pair[0].vertex == pair[1].vertex {
                moves.push(Move::Merge(i));
            } else if g.adjacent(pair[0].vertex, pair[1].vertex) {
                moves.push(Move::Swap(i));
            }
        }
        moves
    }

    /// Applies a move; returns `false` and leaves the word alone if it is not legal.
    pub fn apply_move(&mut self, g: &CommutationGraph, mv: Move) -> bool {
        match mv {
            Move::Merge(i) => {
                if i + 1 >= self.syllables.len() || self.syllables[i].vertex != self.syllables[i + 1].vertex {
                    return false;
                }
                let next = self.syllables.remove(i + 1);
                self.syllables[i].exp += next.exp;
                if self.syllables[i].exp == 0 {
                    self.syllables.remove(i);
                }
                true
            }
            Move::Swap(i) => {
                if i + 1 >= self.syllables.len() || !g.adjacent(self.syllables[i].vertex, self.syllables[i + 1].vertex)
                {
                    return false;
                }
                self.syllables.swap(i, i + 1);
                true
            }
        }
    }

    /// Pairs `(i, j)`, `i < j`, of same-vertex syllables separated only by
    /// syllables that commute with that vertex.
    pub fn mergeable_pairs(&self, g: &CommutationGraph) -> Vec<(usize, usize)> {
        let s = &self.syllables;
        let mut pairs = Vec::new();
        for i in 0..s.len() {
            let v = s[i].vertex;
            let mut k = i + 1;
            while k < s.len() && g.adjacent(s[k].vertex, v) {
                k += 1;
            }
            if k < s.len() && s[k].vertex == v {
                pairs.push((i, k));
            }
        }
        pairs
    }

    pub fn is_fully_reduced(&self, g: &CommutationGraph) -> bool {
        self.mergeable_pairs(g).is_empty()
    }

    /// Letters of a positive word, each syllable `v^e` spelled as `e` copies of `v`.
    pub fn positive_letters(&self) -> Option<Vec<Vertex>> {
        if !self.is_positive() {
            return None;
        }
        Some(self.syllables.iter().flat_map(|s| std::iter::repeat_n(s.vertex, s.exp as usize)).collect())
    }

    /// The monoid element of a positive word.
    pub fn to_trace(&self, g: &CommutationGraph) -> Option<Trace> {
        self.positive_letters().map(|w| traces::canonicalize(g, &w).expect("word letters are graph vertices"))
    }

    pub fn display<'a>(&'a self, g: &'a CommutationGraph) -> WordDisplay<'a> {
        WordDisplay { word: self, graph: g }
    }
}

pub struct WordDisplay<'a> {
    word: &'a GroupWord,
    graph: &'a CommutationGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.graph.label(s.vertex))?;
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

/// A fully reduced word for the same element, obtained by merging
/// innermost-first until no mergeable pair remains.
pub fn fully_reduce(g: &CommutationGraph, w: &GroupWord) -> GroupWord {
    let mut word = w.clone();
    loop {
        let pairs = word.mergeable_pairs(g);
        let Some(&(i, j)) = pairs.iter().min_by_key(|(i, j)| (j - i, *i)) else {
            return word;
        };
        // slide syllable j left next to i (legal swaps), then merge
        let moved = word.syllables.remove(j);
        word.syllables[i].exp += moved.exp;
        if word.syllables[i].exp == 0 {
            word.syllables.remove(i);
        }
    }
}

/// Greedy-largest arrangement of the syllables of a fully reduced word: at each
/// step emit the largest syllable (by vertex, then exponent) that commutes
/// with every syllable still ahead of it.
fn arrange(g: &CommutationGraph, mut remaining: Vec<Syllable>) -> GroupWord {
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<usize> = None;
        for k in front_positions(g, &remaining) {
            let s = remaining[k];
            if best.is_none_or(|b| (s.vertex, s.exp) > (remaining[b].vertex, remaining[b].exp)) {
                best = Some(k);
            }
        }
        out.push(remaining.remove(best.expect("first syllable is always available")));
    }
    GroupWord { syllables: out }
}

// Positions of syllables that commute with everything before them.
fn front_positions(g: &CommutationGraph, s: &[Syllable]) -> Vec<usize> {
    (0..s.len()).filter(|&k| s[..k].iter().all(|t| g.adjacent(t.vertex, s[k].vertex))).collect()
}

/// Canonical fully reduced representative.
pub fn normal_form(g: &CommutationGraph, w: &GroupWord) -> GroupWord {
    arrange(g, fully_reduce(g, w).syllables)
}

pub fn is_identity(g: &CommutationGraph, w: &GroupWord) -> bool {
    fully_reduce(g, w).is_empty()
}

pub fn equal(g: &CommutationGraph, a: &GroupWord, b: &GroupWord) -> bool {
    is_identity(g, &a.mul(&b.inverse()))
}

/// Vertices that begin some fully reduced representative.
pub fn init_set(g: &CommutationGraph, w: &GroupWord) -> VertexSet {
    let reduced = fully_reduce(g, w);
    front_positions(g, &reduced.syllables).into_iter().map(|k| reduced.syllables[k].vertex).collect()
}

/// Vertices that end some fully reduced representative.
pub fn term_set(g: &CommutationGraph, w: &GroupWord) -> VertexSet {
    init_set(g, &fully_reduce(g, w).inverse())
}

/// Parses word syntax: whitespace-separated syllables `name` or `name^int`,
/// with `[x,y]` standing for the commutator `x y x^-1 y^-1`. Brackets nest and
/// may carry an exponent. A lone `1` is the identity unless a vertex has that
/// name.
pub fn parse_word(g: &CommutationGraph, text: &str) -> Result<GroupWord, WordError> {
    let mut parser = Parser { graph: g, text, pos: 0 };
    let word = parser.word()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok(word)
}

struct Parser<'a> {
    graph: &'a CommutationGraph,
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, msg: &str) -> WordError {
        WordError::Syntax { pos: self.pos, msg: msg.to_owned() }
    }

    fn expect(&mut self, c: char) -> Result<(), WordError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> Result<GroupWord, WordError> {
        let mut out = GroupWord::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(']') | Some(',') => return Ok(out),
                Some(_) => out = out.mul(&self.term()?),
            }
        }
    }

    fn term(&mut self) -> Result<GroupWord, WordError> {
        let atom = if self.peek() == Some('[') {
            self.pos += 1;
            let x = self.word()?;
            self.expect(',')?;
            let y = self.word()?;
            self.expect(']')?;
            GroupWord::commutator(&x, &y)
        } else {
            let start = self.pos;
            while let Some(c) = self.peek() {
                if c.is_whitespace() || "[],^".contains(c) {
                    break;
                }
                self.pos += c.len_utf8();
            }
            let name = &self.text[start..self.pos];
            if name.is_empty() {
                return Err(self.error("expected a vertex name or `[`"));
            }
            match self.graph.vertex_by_label(name) {
                Some(v) => GroupWord::generator(v),
                None if name == "1" => GroupWord::identity(),
                None => return Err(WordError::UnknownVertex(name.to_owned())),
            }
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            if matches!(self.peek(), Some('-') | Some('+')) {
                self.pos += 1;
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits = &self.text[start..self.pos];
            if digits.is_empty() || digits == "-" || digits == "+" {
                return Err(self.error("expected an integer exponent"));
            }
            let e: i64 = digits.parse().map_err(|_| WordError::Overflow)?;
            return Ok(if atom.syllables.len() == 1 {
                let s = atom.syllables[0];
                GroupWord::from_syllables([(s.vertex, s.exp.checked_mul(e).ok_or(WordError::Overflow)?)])
            } else {
                atom.pow(e)
            });
        }
        Ok(atom)
    }
}
