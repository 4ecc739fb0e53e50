//! Brute-force oracles and random generators shared by the integration tests.
//! Nothing here calls the library's canonicalization or reduction routines
//! unless a comment says so.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use raag::graph::{CommutationGraph, Vertex};
use raag::groupwords::{GroupWord, Move};
use raag::lyndon::LyndonTree;
use raag::tensor::Polynomial;
use raag::traces::{self, Trace};

/// The four graphs most suites run over.
pub fn test_graphs() -> Vec<(&'static str, Arc<CommutationGraph>)> {
    vec![
        ("edgeless r=2", Arc::new(CommutationGraph::edgeless(2))),
        ("edgeless r=3", Arc::new(CommutationGraph::edgeless(3))),
        ("minigraph", Arc::new(CommutationGraph::minigraph())),
        ("K3", Arc::new(CommutationGraph::complete(3))),
    ]
}

/// A few more shapes for group-word tests: a path and a square.
pub fn extra_graphs() -> Vec<(&'static str, Arc<CommutationGraph>)> {
    vec![
        ("path P4", Arc::new(CommutationGraph::new(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3)]).unwrap())),
        ("square C4", Arc::new(CommutationGraph::new(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap())),
    ]
}

/// Every word reachable from `w` by swapping adjacent commuting letters.
pub fn swap_class(g: &CommutationGraph, w: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if g.adjacent(cur[i], cur[i + 1]) {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Lexicographically largest word in the swap class.
pub fn brute_std(g: &CommutationGraph, w: &[Vertex]) -> Vec<Vertex> {
    swap_class(g, w).into_iter().next_back().unwrap()
}

/// Standard words of all traces of length `n`, by canonicalizing all `r^n` words.
pub fn brute_traces(g: &CommutationGraph, n: usize) -> BTreeSet<Vec<Vertex>> {
    all_words(g.vertex_count(), n).into_iter().map(|w| brute_std(g, &w)).collect()
}

pub fn all_words(r: usize, n: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..r).map(move |v| {
                    let mut x = w.clone();
                    x.push(v);
                    x
                })
            })
            .collect();
    }
    out
}

/// Conjugacy class of a trace: closure under transpositions `xy -> yx`,
/// where every factorization is found by splitting every representative word.
pub fn conjugacy_class(g: &CommutationGraph, std_word: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(std_word.to_vec());
    queue.push_back(std_word.to_vec());
    while let Some(cur) = queue.pop_front() {
        for rep in swap_class(g, &cur) {
            for i in 1..rep.len() {
                let mut rotated = rep[i..].to_vec();
                rotated.extend_from_slice(&rep[..i]);
                let s = brute_std(g, &rotated);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
    }
    seen
}

/// All Lyndon words over `k` letters of length `<= n`, generated by Duval's
/// algorithm (successive Lyndon words in lexicographic order).
pub fn duval_lyndon_words(k: usize, n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut w: Vec<isize> = vec![-1];
    while !w.is_empty() {
        let last = w.len() - 1;
        w[last] += 1;
        out.push(w.iter().map(|&x| x as Vertex).collect());
        let m = w.len();
        while w.len() < n {
            let x = w[w.len() - m];
            w.push(x);
        }
        while w.last().is_some_and(|&x| x == k as isize - 1) {
            w.pop();
        }
    }
    out
}

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Lyndon words of length `n` on `k` letters: `(1/n) Σ_{d|n} μ(d) k^{n/d}`.
pub fn necklace_count(k: usize, n: usize) -> usize {
    let total: i64 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mobius(d) * (k as i64).pow((n / d) as u32)).sum();
    (total / n as i64) as usize
}

/// Lyndon elements built recursively: `xy` for Lyndon `x < y` with
/// `init(y) ⊂ ζ(x)`. Uses the library's monoid product and predicates.
pub fn recursive_lyndon(g: &CommutationGraph, max_len: usize) -> Vec<BTreeSet<Trace>> {
    let mut by_len: Vec<BTreeSet<Trace>> = vec![g.vertices().map(|v| Trace::letter(g, v)).collect()];
    for n in 2..=max_len {
        let mut level = BTreeSet::new();
        for i in 1..n {
            for x in &by_len[i - 1] {
                let zeta = x.zeta(g);
                for y in &by_len[n - i - 1] {
                    if x < y && y.init(g).is_subset(zeta) {
                        level.insert(traces::multiply(g, x, y));
                    }
                }
            }
        }
        by_len.push(level);
    }
    by_len
}

/// `ℓ(t)` computed in the free associative algebra on words, then projected to
/// traces by brute-force standard forms.
pub fn word_expansion(g: &CommutationGraph, t: &LyndonTree) -> BTreeMap<Vec<Vertex>, i64> {
    fn free(t: &LyndonTree) -> BTreeMap<Vec<Vertex>, i64> {
        match t.children() {
            None => BTreeMap::from([(t.trace().word(), 1)]),
            Some((l, r)) => {
                let (a, b) = (free(l), free(r));
                let mut out = BTreeMap::new();
                for (u, cu) in &a {
                    for (v, cv) in &b {
                        let mut uv = u.clone();
                        uv.extend(v);
                        *out.entry(uv).or_insert(0) += cu * cv;
                        let mut vu = v.clone();
                        vu.extend(u);
                        *out.entry(vu).or_insert(0) -= cu * cv;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }
    let mut projected = BTreeMap::new();
    for (w, c) in free(t) {
        *projected.entry(brute_std(g, &w)).or_insert(0) += c;
    }
    projected.retain(|_, c| *c != 0);
    projected
}

/// Polynomial terms as `standard word -> coefficient`.
pub fn term_map(p: &Polynomial) -> BTreeMap<Vec<Vertex>, BigInt> {
    p.terms().map(|(m, c)| (m.word(), c.clone())).collect()
}

pub fn random_word(rng: &mut impl Rng, r: usize, len: usize) -> Vec<Vertex> {
    (0..len).map(|_| rng.gen_range(0..r)).collect()
}

pub fn random_trace(rng: &mut impl Rng, g: &CommutationGraph, max_len: usize) -> Trace {
    let len = rng.gen_range(0..=max_len);
    traces::canonicalize(g, &random_word(rng, g.vertex_count(), len)).unwrap()
}

pub fn random_group_word(rng: &mut impl Rng, g: &CommutationGraph, max_syllables: usize, max_exp: i64) -> GroupWord {
    let n = rng.gen_range(0..=max_syllables);
    GroupWord::from_syllables((0..n).map(|_| {
        let v = rng.gen_range(0..g.vertex_count());
        let mut e = rng.gen_range(1..=max_exp);
        if rng.gen_bool(0.5) {
            e = -e;
        }
        (v, e)
    }))
}

/// Random homogeneous polynomial of degree `d` with small coefficients.
pub fn random_homogeneous(
    rng: &mut impl Rng,
    g: &Arc<CommutationGraph>,
    n: usize,
    d: usize,
    terms: usize,
) -> Polynomial {
    Polynomial::from_terms(
        g,
        n,
        (0..terms).map(|_| {
            let w = random_word(rng, g.vertex_count(), d);
            (traces::canonicalize(g, &w).unwrap(), BigInt::from(rng.gen_range(-3i64..=3)))
        }),
    )
}

/// Random polynomial with zero constant term and terms of degree `1..=n`.
pub fn random_ideal_element(rng: &mut impl Rng, g: &Arc<CommutationGraph>, n: usize, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(g, n);
    for _ in 0..terms {
        let d = rng.gen_range(1..=n);
        p = p.checked_add(&random_homogeneous(rng, g, n, d, 1)).unwrap();
    }
    p
}

/// Fully reduced check written directly from the definition: any two syllables
/// on the same vertex have a non-commuting syllable strictly between them.
pub fn is_fully_reduced(g: &CommutationGraph, w: &GroupWord) -> bool {
    let s = w.syllables();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i].vertex == s[j].vertex && !s[i + 1..j].iter().any(|t| !g.adjacent(t.vertex, s[i].vertex)) {
                return false;
            }
        }
    }
    s.iter().all(|x| x.exp != 0)
}

#[derive(Debug, Clone, Copy)]
pub enum ReductionStrategy {
    /// random pair, slide the right syllable left
    SlideLeft,
    /// random pair, slide the left syllable right
    SlideRight,
    /// leftmost pair first
    Leftmost,
    /// rightmost pair first
    Rightmost,
    /// lots of random swaps between merges
    Shuffle,
}

pub const STRATEGIES: [ReductionStrategy; 5] = [
    ReductionStrategy::SlideLeft,
    ReductionStrategy::SlideRight,
    ReductionStrategy::Leftmost,
    ReductionStrategy::Rightmost,
    ReductionStrategy::Shuffle,
];

fn mergeable(g: &CommutationGraph, w: &GroupWord) -> Vec<(usize, usize)> {
    let s = w.syllables();
    let mut pairs = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i].vertex == s[j].vertex {
                if s[i + 1..j].iter().all(|t| g.adjacent(t.vertex, s[i].vertex)) {
                    pairs.push((i, j));
                }
                break;
            }
        }
    }
    pairs
}

fn random_swaps(rng: &mut impl Rng, g: &CommutationGraph, w: &mut GroupWord, count: usize) {
    for _ in 0..count {
        let swaps: Vec<Move> = w.legal_moves(g).into_iter().filter(|m| matches!(m, Move::Swap(_))).collect();
        if swaps.is_empty() {
            return;
        }
        let mv = swaps[rng.gen_range(0..swaps.len())];
        assert!(w.apply_move(g, mv));
    }
}

/// Reduces `w` using only the elementary moves, in an order chosen by the
/// strategy and the rng. Returns the final word and the syllable counts of
/// every fully reduced intermediate form encountered.
pub fn reduce_randomly(
    rng: &mut impl Rng,
    g: &CommutationGraph,
    w: &GroupWord,
    strategy: ReductionStrategy,
) -> (GroupWord, Vec<usize>) {
    let mut word = w.clone();
    let mut reduced_counts = Vec::new();
    loop {
        let shuffle = match strategy {
            ReductionStrategy::Shuffle => 6,
            _ => rng.gen_range(0..2),
        };
        random_swaps(rng, g, &mut word, shuffle);
        let pairs = mergeable(g, &word);
        if pairs.is_empty() {
            assert!(is_fully_reduced(g, &word));
            reduced_counts.push(word.syllable_count());
            random_swaps(rng, g, &mut word, 5);
            assert!(is_fully_reduced(g, &word));
            reduced_counts.push(word.syllable_count());
            return (word, reduced_counts);
        }
        let (i, j) = match strategy {
            ReductionStrategy::Leftmost => pairs[0],
            ReductionStrategy::Rightmost => *pairs.last().unwrap(),
            _ => pairs[rng.gen_range(0..pairs.len())],
        };
        let slide_left = match strategy {
            ReductionStrategy::SlideLeft => true,
            ReductionStrategy::SlideRight => false,
            _ => rng.gen_bool(0.5),
        };
        let at = if slide_left {
            for k in (i + 1..j).rev() {
                assert!(word.apply_move(g, Move::Swap(k)));
            }
            i
        } else {
            for k in i..j - 1 {
                assert!(word.apply_move(g, Move::Swap(k)));
            }
            j - 1
        };
        assert!(word.apply_move(g, Move::Merge(at)));
    }
}
