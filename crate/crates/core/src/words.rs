//! Generator alphabet, word parsing/printing, free reduction, macro
//! expansion, and the relation database used by every equality engine.
//!
//! A word is a sequence of letters over the alphabet
//! `{ s_i, s_i^-1 : 1 <= i <= n-1 } ∪ { e_i : 1 <= i <= n }` at a fixed
//! rank `n`.  The `s` letters are the crossing generators of the braid-like
//! groups, the `e` letters delete a strand and have no inverse.

use crate::error::{Error, Result};
use std::fmt;

/// A single letter of a generator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Positive crossing of strands `i`, `i+1` (1-based).
    Sigma(usize),
    /// Negative crossing of strands `i`, `i+1`.
    SigmaInv(usize),
    /// Deletion of the strand currently at position `i`.
    Eps(usize),
}

impl Letter {
    /// The inverse letter.
    ///
    /// # Panics
    /// Panics on a deletion letter: deletions are not invertible.
    pub fn inverse(self) -> Letter {
        match self {
            Letter::Sigma(i) => Letter::SigmaInv(i),
            Letter::SigmaInv(i) => Letter::Sigma(i),
            Letter::Eps(_) => panic!("deletion letters have no inverse"),
        }
    }

    /// Whether the letter is valid at the given rank.
    pub fn valid_at(self, rank: usize) -> bool {
        match self {
            Letter::Sigma(i) | Letter::SigmaInv(i) => i >= 1 && i < rank,
            Letter::Eps(i) => i >= 1 && i <= rank,
        }
    }

    /// Whether this is a deletion letter.
    pub fn is_eps(self) -> bool {
        matches!(self, Letter::Eps(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma(i) => write!(f, "s{i}"),
            Letter::SigmaInv(i) => write!(f, "s{i}^-1"),
            Letter::Eps(i) => write!(f, "e{i}"),
        }
    }
}

/// A generator word at a fixed rank.  The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word at the given rank.
    pub fn empty(rank: usize) -> Word {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Build a word, validating every letter against the rank.
    pub fn new(rank: usize, letters: Vec<Letter>) -> Result<Word> {
        for l in &letters {
            if !l.valid_at(rank) {
                return Err(Error::IndexOutOfRange {
                    token: l.to_string(),
                    rank,
                });
            }
        }
        Ok(Word { rank, letters })
    }

    /// Internal constructor for letters already known to be valid.
    pub(crate) fn new_unchecked(rank: usize, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|l| l.valid_at(rank)));
        Word { rank, letters }
    }

    /// The strand count this word lives at.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word is empty (the identity word).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether any deletion letter occurs.
    pub fn has_eps(&self) -> bool {
        self.letters.iter().any(|l| l.is_eps())
    }

    /// Concatenate two words of equal rank.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// Concatenate any number of words of equal rank.
    pub fn concat_all(rank: usize, parts: &[&Word]) -> Result<Word> {
        let mut letters = Vec::new();
        for p in parts {
            if p.rank != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: p.rank,
                });
            }
            letters.extend_from_slice(&p.letters);
        }
        Ok(Word { rank, letters })
    }

    /// The inverse word (letters reversed and inverted).
    ///
    /// # Panics
    /// Panics if the word contains a deletion letter.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Integer power; negative exponents invert.
    ///
    /// # Panics
    /// Panics on a negative exponent if the word contains a deletion letter.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::new();
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Cancel adjacent mutually inverse crossing letters until none remain.
    /// Deletion letters never participate in the cancellation.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match (out.last(), l) {
                (Some(&Letter::Sigma(i)), Letter::SigmaInv(j)) if i == j => {
                    out.pop();
                }
                (Some(&Letter::SigmaInv(i)), Letter::Sigma(j)) if i == j => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word {
            rank: self.rank,
            letters: out,
        }
    }

    /// The word with all deletion letters removed.
    pub fn without_eps(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .copied()
                .filter(|l| !l.is_eps())
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Macro words
// ---------------------------------------------------------------------------

/// The half-twist word `s_1..s_{n-1} s_1..s_{n-2} .. s_1` of length n(n-1)/2.
pub fn delta(n: usize) -> Word {
    let mut letters = Vec::new();
    for len in (1..n).rev() {
        for i in 1..=len {
            letters.push(Letter::Sigma(i));
        }
    }
    Word::new_unchecked(n, letters)
}

/// The full cycle `s_1 s_2 .. s_{n-1}`.
pub fn full_cycle(n: usize) -> Word {
    let letters = (1..n).map(Letter::Sigma).collect();
    Word::new_unchecked(n, letters)
}

/// The word expressing the `i`-th deletion generator by conjugating the
/// first one: `s_{i-1} .. s_1 e1 s_1^-1 .. s_{i-1}^-1` built iteratively.
pub fn eps_via_conjugation(i: usize, n: usize) -> Result<Word> {
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange {
            token: format!("e{i}"),
            rank: n,
        });
    }
    let mut letters = vec![Letter::Eps(1)];
    for t in 1..i {
        let mut next = vec![Letter::Sigma(t)];
        next.extend_from_slice(&letters);
        next.push(Letter::SigmaInv(t));
        letters = next;
    }
    Ok(Word::new_unchecked(n, letters))
}

/// The deletion block `e_{k+1} e_{k+2} .. e_n` (empty when `k = n`).
pub fn eps_block(k: usize, n: usize) -> Result<Word> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            token: format!("E{k}"),
            rank: n,
        });
    }
    let letters = (k + 1..=n).map(Letter::Eps).collect();
    Ok(Word::new_unchecked(n, letters))
}

/// The deletion block written with interleaved crossing runs:
/// `e_n (s_{n-1}..s_{k+1} e_n) (s_{n-1}..s_{k+2} e_n) .. (s_{n-1} e_n)`.
/// Normalizes identically to [`eps_block`]; kept as an independently
/// specified expression for coherence testing.
pub fn eps_block_marked(k: usize, n: usize) -> Result<Word> {
    if k > n {
        return Err(Error::IndexOutOfRange {
            token: format!("E{k}"),
            rank: n,
        });
    }
    if k == n {
        return Ok(Word::empty(n));
    }
    let mut letters = vec![Letter::Eps(n)];
    for t in 1..(n - k) {
        for i in (k + t..n).rev() {
            letters.push(Letter::Sigma(i));
        }
        letters.push(Letter::Eps(n));
    }
    Ok(Word::new_unchecked(n, letters))
}

/// The strand loop `s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_{j-1}^-1`
/// winding strand `i` around strand `j`.
pub fn expand_sij(i: usize, j: usize, n: usize) -> Result<Word> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange {
            token: format!("q{i},{j}"),
            rank: n,
        });
    }
    let mut letters = Vec::new();
    for t in (i + 1..j).rev() {
        letters.push(Letter::Sigma(t));
    }
    letters.push(Letter::Sigma(i));
    letters.push(Letter::Sigma(i));
    for t in i + 1..j {
        letters.push(Letter::SigmaInv(t));
    }
    Ok(Word::new_unchecked(n, letters))
}

/// The descending-transport word `s_k^-1 s_{k+1}^-1 .. s_{l-1}^-1`
/// (empty when `k = l`) carrying position `k` to position `l`.
pub fn expand_coset(k: usize, l: usize, n: usize) -> Result<Word> {
    if !(1 <= k && k <= l && l <= n) {
        return Err(Error::IndexOutOfRange {
            token: format!("c{k},{l}"),
            rank: n,
        });
    }
    let letters = (k..l).map(Letter::SigmaInv).collect();
    Ok(Word::new_unchecked(n, letters))
}

/// Dispatch a named macro: `Delta`, `sigma-big`, `eps(i)`, `eps-block(k)`.
pub fn expand_macro(name: &str, rank: usize) -> Result<Word> {
    if name == "Delta" {
        return Ok(delta(rank));
    }
    if name == "sigma-big" {
        return Ok(full_cycle(rank));
    }
    if let Some(arg) = name.strip_prefix("eps(").and_then(|s| s.strip_suffix(')')) {
        let i: usize = arg
            .parse()
            .map_err(|_| Error::UnknownToken(name.to_string()))?;
        return eps_via_conjugation(i, rank);
    }
    if let Some(arg) = name
        .strip_prefix("eps-block(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let k: usize = arg
            .parse()
            .map_err(|_| Error::UnknownToken(name.to_string()))?;
        return eps_block(k, rank);
    }
    Err(Error::UnknownToken(name.to_string()))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

enum TokenKind {
    Sigma(usize),
    Eps(usize),
    Delta,
    FullCycle,
    EpsBlock(usize),
    Sij(usize, usize),
    Coset(usize, usize),
}

impl TokenKind {
    fn is_eps_like(&self) -> bool {
        matches!(self, TokenKind::Eps(_) | TokenKind::EpsBlock(_))
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_index_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((parse_index(a)?, parse_index(b)?))
}

fn parse_name(name: &str) -> Option<TokenKind> {
    match name {
        "e" => return Some(TokenKind::Eps(1)),
        "D" => return Some(TokenKind::Delta),
        "g" => return Some(TokenKind::FullCycle),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('s') {
        return parse_index(rest).map(TokenKind::Sigma);
    }
    if let Some(rest) = name.strip_prefix('e') {
        return parse_index(rest).map(TokenKind::Eps);
    }
    if let Some(rest) = name.strip_prefix('E') {
        return parse_index(rest).map(TokenKind::EpsBlock);
    }
    if let Some(rest) = name.strip_prefix('q') {
        return parse_index_pair(rest).map(|(i, j)| TokenKind::Sij(i, j));
    }
    if let Some(rest) = name.strip_prefix('c') {
        return parse_index_pair(rest).map(|(k, l)| TokenKind::Coset(k, l));
    }
    None
}

/// Base word of a single parsed token (exponent 1).
fn token_base(kind: &TokenKind, token: &str, rank: usize) -> Result<Word> {
    let oob = || Error::IndexOutOfRange {
        token: token.to_string(),
        rank,
    };
    match *kind {
        TokenKind::Sigma(i) => {
            if i >= 1 && i < rank {
                Ok(Word::new_unchecked(rank, vec![Letter::Sigma(i)]))
            } else {
                Err(oob())
            }
        }
        TokenKind::Eps(i) => {
            if i >= 1 && i <= rank {
                Ok(Word::new_unchecked(rank, vec![Letter::Eps(i)]))
            } else {
                Err(oob())
            }
        }
        TokenKind::Delta => Ok(delta(rank)),
        TokenKind::FullCycle => Ok(full_cycle(rank)),
        TokenKind::EpsBlock(k) => eps_block(k, rank).map_err(|_| oob()),
        TokenKind::Sij(i, j) => expand_sij(i, j, rank).map_err(|_| oob()),
        TokenKind::Coset(k, l) => expand_coset(k, l, rank).map_err(|_| oob()),
    }
}

/// Parse a whitespace-separated token string into a word.
///
/// Token grammar: `name [ "^" signed-integer ]` with names
/// `s<i>`, `e<i>`, `e`, `D`, `g`, `E<k>`, `q<i>,<j>`, `c<k>,<l>`.
/// Crossing-class tokens accept any integer exponent (`0` contributes
/// nothing, negatives invert); deletion-class tokens require exponent >= 1.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            None => (token, 1i64),
            Some((name, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::UnknownToken(token.to_string()))?;
                (name, exp)
            }
        };
        let kind = parse_name(name).ok_or_else(|| Error::UnknownToken(token.to_string()))?;
        if kind.is_eps_like() && exp < 1 {
            return Err(Error::EpsExponent {
                token: token.to_string(),
            });
        }
        let base = token_base(&kind, token, rank)?;
        let expanded = base.pow(exp);
        letters.extend_from_slice(expanded.letters());
    }
    Ok(Word::new_unchecked(rank, letters))
}

// ---------------------------------------------------------------------------
// Relation sets
// ---------------------------------------------------------------------------

/// The presentation flavors whose defining relation lists this module stores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationFlavor {
    DiscBraid,
    DiscInverse,
    SphereBraid,
    SphereMcg,
    SphereInverseBraid,
    SphereInverseMcg,
    SymmetricInverse,
}

impl fmt::Display for RelationFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationFlavor::DiscBraid => "disc-braid",
            RelationFlavor::DiscInverse => "disc-inverse",
            RelationFlavor::SphereBraid => "sphere-braid",
            RelationFlavor::SphereMcg => "sphere-mcg",
            RelationFlavor::SphereInverseBraid => "sphere-inverse-braid",
            RelationFlavor::SphereInverseMcg => "sphere-inverse-mcg",
            RelationFlavor::SymmetricInverse => "symmetric-inverse",
        };
        f.write_str(s)
    }
}

/// One asserted equality between two words, with a diagnostic label.
#[derive(Debug, Clone)]
pub struct RelationPair {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// A list of defining relation pairs at a fixed rank.
#[derive(Debug, Clone)]
pub struct RelationSet {
    pub name: String,
    pub rank: usize,
    pub pairs: Vec<RelationPair>,
}

impl RelationSet {
    fn new(name: impl Into<String>, rank: usize) -> RelationSet {
        RelationSet {
            name: name.into(),
            rank,
            pairs: Vec::new(),
        }
    }

    fn push(&mut self, label: impl Into<String>, lhs: Word, rhs: Word) {
        self.pairs.push(RelationPair {
            label: label.into(),
            lhs,
            rhs,
        });
    }

    fn extend(&mut self, other: RelationSet) {
        self.pairs.extend(other.pairs);
    }
}

fn w(rank: usize, letters: &[Letter]) -> Word {
    Word::new_unchecked(rank, letters.to_vec())
}

/// Crossing relations: far commutation and the length-3 exchange.
pub fn braid_relations(n: usize) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new("braid", n);
    for i in 1..n.saturating_sub(1) {
        for j in i + 2..n {
            rels.push(
                format!("commute({i},{j})"),
                w(n, &[Sigma(i), Sigma(j)]),
                w(n, &[Sigma(j), Sigma(i)]),
            );
        }
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(
            format!("exchange({i})"),
            w(n, &[Sigma(i), Sigma(i + 1), Sigma(i)]),
            w(n, &[Sigma(i + 1), Sigma(i), Sigma(i + 1)]),
        );
    }
    rels
}

/// Crossing inverses: `s_i s_i^-1 = s_i^-1 s_i = 1`.
pub fn inversion_relations(n: usize) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new("inversion", n);
    for i in 1..n {
        rels.push(
            format!("inv-right({i})"),
            w(n, &[Sigma(i), SigmaInv(i)]),
            Word::empty(n),
        );
        rels.push(
            format!("inv-left({i})"),
            w(n, &[SigmaInv(i), Sigma(i)]),
            Word::empty(n),
        );
    }
    rels
}

/// Single-deletion relations tying `e1` to the crossings.
fn single_eps_relations(n: usize, include_square_absorption: bool) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new("single-deletion", n);
    for i in 2..n {
        rels.push(
            format!("eps-commute({i})"),
            w(n, &[Eps(1), Sigma(i)]),
            w(n, &[Sigma(i), Eps(1)]),
        );
    }
    if n >= 2 {
        rels.push(
            "eps-sandwich-a",
            w(n, &[Eps(1), Sigma(1), Eps(1)]),
            w(n, &[Sigma(1), Eps(1), Sigma(1), Eps(1)]),
        );
        rels.push(
            "eps-sandwich-b",
            w(n, &[Eps(1), Sigma(1), Eps(1)]),
            w(n, &[Eps(1), Sigma(1), Eps(1), Sigma(1)]),
        );
    }
    if n >= 1 {
        rels.push("eps-idempotent", w(n, &[Eps(1)]), w(n, &[Eps(1), Eps(1)]));
    }
    if include_square_absorption && n >= 2 {
        rels.push(
            "eps-absorb-right",
            w(n, &[Eps(1)]),
            w(n, &[Eps(1), Sigma(1), Sigma(1)]),
        );
        rels.push(
            "eps-absorb-left",
            w(n, &[Eps(1)]),
            w(n, &[Sigma(1), Sigma(1), Eps(1)]),
        );
    }
    rels
}

/// The balanced deletion relations over all deletion generators `e_i`.
pub fn balanced_eps_relations(n: usize) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new("balanced-deletion", n);
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                rels.push(
                    format!("commute(e{j},s{i})"),
                    w(n, &[Eps(j), Sigma(i)]),
                    w(n, &[Sigma(i), Eps(j)]),
                );
            }
        }
        rels.push(
            format!("transport-up({i})"),
            w(n, &[Eps(i), Sigma(i)]),
            w(n, &[Sigma(i), Eps(i + 1)]),
        );
        rels.push(
            format!("transport-down({i})"),
            w(n, &[Eps(i + 1), Sigma(i)]),
            w(n, &[Sigma(i), Eps(i)]),
        );
        rels.push(
            format!("absorb-square({i})"),
            w(n, &[Eps(i + 1), Sigma(i), Sigma(i)]),
            w(n, &[Sigma(i), Sigma(i), Eps(i + 1)]),
        );
        rels.push(
            format!("absorb-square-collapse({i})"),
            w(n, &[Eps(i + 1), Sigma(i), Sigma(i)]),
            w(n, &[Eps(i + 1)]),
        );
        rels.push(
            format!("pair-absorb-a({i})"),
            w(n, &[Eps(i), Eps(i + 1), Sigma(i)]),
            w(n, &[Sigma(i), Eps(i), Eps(i + 1)]),
        );
        rels.push(
            format!("pair-absorb-b({i})"),
            w(n, &[Eps(i), Eps(i + 1), Sigma(i)]),
            w(n, &[Eps(i), Eps(i + 1)]),
        );
    }
    for i in 1..=n {
        rels.push(
            format!("idempotent(e{i})"),
            w(n, &[Eps(i)]),
            w(n, &[Eps(i), Eps(i)]),
        );
    }
    rels
}

/// The balanced presentation of the disc inverse monoid:
/// braid + inversion + balanced deletion relations.
pub fn balanced_inverse_relations(n: usize) -> RelationSet {
    let mut rels = RelationSet::new("balanced-inverse", n);
    rels.extend(braid_relations(n));
    rels.extend(inversion_relations(n));
    rels.extend(balanced_eps_relations(n));
    rels
}

/// The one-crossing-plus-cycle presentation of the braid group.
pub fn two_generator_braid_relations(n: usize) -> RelationSet {
    let mut rels = RelationSet::new("two-generator-braid", n);
    if n < 2 {
        return rels; // no crossings exist below two strands
    }
    let g = full_cycle(n);
    let s1 = w(n, &[Letter::Sigma(1)]);
    for i in 2..=n / 2 {
        let conj = Word::concat_all(n, &[&g.pow(i as i64), &s1, &g.pow(-(i as i64))]).unwrap();
        rels.push(
            format!("cycle-commute({i})"),
            Word::concat_all(n, &[&s1, &conj]).unwrap(),
            Word::concat_all(n, &[&conj, &s1]).unwrap(),
        );
    }
    if n >= 2 {
        let lhs = g.pow(n as i64);
        let gs1 = Word::concat_all(n, &[&g, &s1]).unwrap();
        rels.push("cycle-power", lhs, gs1.pow(n as i64 - 1));
    }
    rels
}

/// The one-crossing-plus-cycle presentation of the disc inverse monoid.
pub fn two_generator_inverse_relations(n: usize) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new("two-generator-inverse", n);
    if n < 2 {
        rels.extend(single_eps_relations(n, true));
        return rels;
    }
    let g = full_cycle(n);
    let s1 = w(n, &[Sigma(1)]);
    let e1 = w(n, &[Eps(1)]);
    rels.push(
        "inv-s1-right",
        w(n, &[Sigma(1), SigmaInv(1)]),
        Word::empty(n),
    );
    rels.push(
        "inv-s1-left",
        w(n, &[SigmaInv(1), Sigma(1)]),
        Word::empty(n),
    );
    rels.push(
        "inv-cycle-right",
        Word::concat_all(n, &[&g, &g.inverse()]).unwrap(),
        Word::empty(n),
    );
    rels.push(
        "inv-cycle-left",
        Word::concat_all(n, &[&g.inverse(), &g]).unwrap(),
        Word::empty(n),
    );
    for i in 1..=n.saturating_sub(2) {
        let conj = Word::concat_all(n, &[&g.pow(i as i64), &s1, &g.pow(-(i as i64))]).unwrap();
        rels.push(
            format!("eps-cycle-commute({i})"),
            Word::concat_all(n, &[&e1, &conj]).unwrap(),
            Word::concat_all(n, &[&conj, &e1]).unwrap(),
        );
    }
    rels.extend(single_eps_relations(n, true));
    rels.extend(two_generator_braid_relations(n));
    rels
}

/// The round-trip word `s_1 .. s_{n-2} s_{n-1}^2 s_{n-2} .. s_1` that
/// collapses on the sphere.
pub fn sphere_relation_word(n: usize) -> Word {
    let mut letters = Vec::new();
    for i in 1..n.saturating_sub(1) {
        letters.push(Letter::Sigma(i));
    }
    if n >= 2 {
        letters.push(Letter::Sigma(n - 1));
        letters.push(Letter::Sigma(n - 1));
    }
    for i in (1..n.saturating_sub(1)).rev() {
        letters.push(Letter::Sigma(i));
    }
    Word::new_unchecked(n, letters)
}

/// Two-generator sphere relations; `mcg` selects the mapping-class variant.
pub fn two_generator_sphere_relations(n: usize, mcg: bool) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new(
        if mcg {
            "two-generator-sphere-mcg"
        } else {
            "two-generator-sphere-braid"
        },
        n,
    );
    if n < 2 {
        return rels; // no crossings exist below two strands
    }
    let g = full_cycle(n);
    let twist = Word::concat_all(n, &[&w(n, &[SigmaInv(1)]), &g]).unwrap();
    if mcg {
        rels.push("cycle-collapse", g.pow(n as i64), Word::empty(n));
        rels.push("twist-collapse", twist.pow(n as i64 - 1), Word::empty(n));
    } else {
        rels.push(
            "cycle-twist-balance",
            g.pow(n as i64),
            twist.pow(n as i64 - 1),
        );
    }
    rels
}

/// The loop-generator relations presenting the pure braid group.
pub fn pure_braid_relations(n: usize) -> RelationSet {
    let mut rels = RelationSet::new("pure-braid", n);
    let s = |i: usize, j: usize| expand_sij(i, j, n).unwrap();
    // Disjoint and nested pairs commute.
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    rels.push(
                        format!("commute-disjoint({i},{j};{k},{l})"),
                        Word::concat_all(n, &[&s(i, j), &s(k, l)]).unwrap(),
                        Word::concat_all(n, &[&s(k, l), &s(i, j)]).unwrap(),
                    );
                }
            }
        }
    }
    for i in 1..=n {
        for k in i + 1..=n {
            for l in k + 1..=n {
                for j in l + 1..=n {
                    rels.push(
                        format!("commute-nested({i},{j};{k},{l})"),
                        Word::concat_all(n, &[&s(i, j), &s(k, l)]).unwrap(),
                        Word::concat_all(n, &[&s(k, l), &s(i, j)]).unwrap(),
                    );
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                rels.push(
                    format!("triple-a({i},{j},{k})"),
                    Word::concat_all(n, &[&s(i, j), &s(i, k), &s(j, k)]).unwrap(),
                    Word::concat_all(n, &[&s(i, k), &s(j, k), &s(i, j)]).unwrap(),
                );
                rels.push(
                    format!("triple-b({i},{j},{k})"),
                    Word::concat_all(n, &[&s(i, k), &s(j, k), &s(i, j)]).unwrap(),
                    Word::concat_all(n, &[&s(j, k), &s(i, j), &s(i, k)]).unwrap(),
                );
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let lhs =
                        Word::concat_all(n, &[&s(i, k), &s(j, k), &s(j, l), &s(j, k).inverse()])
                            .unwrap();
                    let rhs =
                        Word::concat_all(n, &[&s(j, k), &s(j, l), &s(j, k).inverse(), &s(i, k)])
                            .unwrap();
                    rels.push(format!("conjugate-slide({i},{j},{k},{l})"), lhs, rhs);
                }
            }
        }
    }
    rels
}

/// The defining relation list of a presentation flavor.
pub fn relations(flavor: RelationFlavor, n: usize) -> RelationSet {
    use Letter::*;
    let mut rels = RelationSet::new(flavor.to_string(), n);
    match flavor {
        RelationFlavor::DiscBraid => {
            rels.extend(braid_relations(n));
        }
        RelationFlavor::DiscInverse => {
            rels.extend(braid_relations(n));
            rels.extend(inversion_relations(n));
            rels.extend(single_eps_relations(n, true));
        }
        RelationFlavor::SphereBraid => {
            rels.extend(braid_relations(n));
            rels.push("sphere", sphere_relation_word(n), Word::empty(n));
        }
        RelationFlavor::SphereMcg => {
            rels.extend(braid_relations(n));
            rels.push("sphere", sphere_relation_word(n), Word::empty(n));
            rels.push(
                "full-cycle-power",
                full_cycle(n).pow(n as i64),
                Word::empty(n),
            );
        }
        RelationFlavor::SphereInverseBraid => {
            rels.extend(braid_relations(n));
            rels.extend(inversion_relations(n));
            rels.extend(single_eps_relations(n, true));
            rels.push("sphere", sphere_relation_word(n), Word::empty(n));
        }
        RelationFlavor::SphereInverseMcg => {
            rels.extend(braid_relations(n));
            rels.extend(inversion_relations(n));
            rels.extend(single_eps_relations(n, true));
            rels.push("sphere", sphere_relation_word(n), Word::empty(n));
            rels.push(
                "full-cycle-power",
                full_cycle(n).pow(n as i64),
                Word::empty(n),
            );
        }
        RelationFlavor::SymmetricInverse => {
            for i in 1..n {
                rels.push(
                    format!("involution({i})"),
                    w(n, &[Sigma(i), Sigma(i)]),
                    Word::empty(n),
                );
            }
            rels.extend(braid_relations(n));
            rels.extend(single_eps_relations(n, false));
        }
    }
    rels
}

/// Outcome of checking one relation set against an equality oracle.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub name: String,
    pub rank: usize,
    pub results: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(label, _)| label.as_str())
            .collect()
    }
}

/// Evaluate every pair of a relation set under an equality oracle.
pub fn check_relations<F>(rels: &RelationSet, mut eq: F) -> RelationReport
where
    F: FnMut(&Word, &Word) -> bool,
{
    let results = rels
        .pairs
        .iter()
        .map(|p| (p.label.clone(), eq(&p.lhs, &p.rhs)))
        .collect();
    RelationReport {
        name: rels.name.clone(),
        rank: rels.rank,
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    #[test]
    fn parse_empty_is_identity() {
        let word = parse_word("", 3).unwrap();
        assert!(word.is_empty());
        assert_eq!(word.rank(), 3);
    }

    #[test]
    fn parse_direct_letters() {
        let word = parse_word("s1 s2^-1 e3", 4).unwrap();
        assert_eq!(word.letters(), &[Sigma(1), SigmaInv(2), Eps(3)]);
    }

    #[test]
    fn parse_rejects_inverted_deletion() {
        assert_eq!(
            parse_word("e1^-1", 2),
            Err(Error::EpsExponent {
                token: "e1^-1".into()
            })
        );
        assert_eq!(
            parse_word("e^0", 2),
            Err(Error::EpsExponent {
                token: "e^0".into()
            })
        );
        assert_eq!(
            parse_word("E1^-2", 3),
            Err(Error::EpsExponent {
                token: "E1^-2".into()
            })
        );
    }

    #[test]
    fn parse_rejects_unknown_and_out_of_range() {
        assert_eq!(parse_word("zz", 3), Err(Error::UnknownToken("zz".into())));
        assert_eq!(
            parse_word("s1^x", 3),
            Err(Error::UnknownToken("s1^x".into()))
        );
        assert_eq!(
            parse_word("s9", 3),
            Err(Error::IndexOutOfRange {
                token: "s9".into(),
                rank: 3
            })
        );
        assert_eq!(
            parse_word("e0", 3),
            Err(Error::IndexOutOfRange {
                token: "e0".into(),
                rank: 3
            })
        );
        assert_eq!(
            parse_word("E4", 3),
            Err(Error::IndexOutOfRange {
                token: "E4".into(),
                rank: 3
            })
        );
        assert_eq!(
            parse_word("q1,1", 3),
            Err(Error::IndexOutOfRange {
                token: "q1,1".into(),
                rank: 3
            })
        );
    }

    #[test]
    fn parse_exponents_and_macros() {
        assert_eq!(
            parse_word("s1^3", 2).unwrap().letters(),
            &[Sigma(1), Sigma(1), Sigma(1)]
        );
        assert_eq!(
            parse_word("s1^-2", 2).unwrap().letters(),
            &[SigmaInv(1), SigmaInv(1)]
        );
        assert!(parse_word("s1^0", 2).unwrap().is_empty());
        assert_eq!(parse_word("e", 2).unwrap().letters(), &[Eps(1)]);
        assert_eq!(
            parse_word("D", 3).unwrap().letters(),
            &[Sigma(1), Sigma(2), Sigma(1)]
        );
        assert_eq!(
            parse_word("g", 4).unwrap().letters(),
            &[Sigma(1), Sigma(2), Sigma(3)]
        );
        assert_eq!(parse_word("E1", 3).unwrap().letters(), &[Eps(2), Eps(3)]);
        assert_eq!(
            parse_word("E0^2", 2).unwrap().letters(),
            &[Eps(1), Eps(2), Eps(1), Eps(2)]
        );
        assert_eq!(
            parse_word("q1,3", 3).unwrap().letters(),
            &[Sigma(2), Sigma(1), Sigma(1), SigmaInv(2)]
        );
        assert_eq!(
            parse_word("c1,3", 3).unwrap().letters(),
            &[SigmaInv(1), SigmaInv(2)]
        );
        assert_eq!(
            parse_word("D^-1", 3).unwrap().letters(),
            &[SigmaInv(1), SigmaInv(2), SigmaInv(1)]
        );
    }

    #[test]
    fn print_parse_round_trip() {
        let samples = ["", "s1 s2^-1 e3", "s3 s3 e1 e4 s2^-1", "e2 e2 s1"];
        for text in samples {
            let word = parse_word(text, 4).unwrap();
            let reparsed = parse_word(&word.to_string(), 4).unwrap();
            assert_eq!(word, reparsed);
        }
    }

    #[test]
    fn free_reduce_examples() {
        let word = Word::new(2, vec![Sigma(1), SigmaInv(1)]).unwrap();
        assert!(word.free_reduce().is_empty());
        let word = Word::new(2, vec![Eps(1), Eps(1)]).unwrap();
        assert_eq!(word.free_reduce().letters(), &[Eps(1), Eps(1)]);
        let word = Word::new(3, vec![Sigma(1), Sigma(2), SigmaInv(2), SigmaInv(1)]).unwrap();
        assert!(word.free_reduce().is_empty());
        let word = Word::new(3, vec![Sigma(1), Eps(2), SigmaInv(1)]).unwrap();
        assert_eq!(word.free_reduce().len(), 3);
    }

    #[test]
    fn delta_length_formula() {
        for n in 2..=7 {
            assert_eq!(delta(n).len(), n * (n - 1) / 2);
        }
        assert_eq!(delta(3).letters(), &[Sigma(1), Sigma(2), Sigma(1)]);
    }

    #[test]
    fn eps_conjugation_macro() {
        let word = eps_via_conjugation(2, 3).unwrap();
        assert_eq!(word.letters(), &[Sigma(1), Eps(1), SigmaInv(1)]);
        let word = eps_via_conjugation(1, 3).unwrap();
        assert_eq!(word.letters(), &[Eps(1)]);
        let word = eps_via_conjugation(3, 3).unwrap();
        assert_eq!(
            word.letters(),
            &[Sigma(2), Sigma(1), Eps(1), SigmaInv(1), SigmaInv(2)]
        );
    }

    #[test]
    fn eps_block_examples() {
        assert_eq!(eps_block(1, 3).unwrap().letters(), &[Eps(2), Eps(3)]);
        assert!(eps_block(3, 3).unwrap().is_empty());
        assert_eq!(eps_block(0, 2).unwrap().letters(), &[Eps(1), Eps(2)]);
    }

    #[test]
    fn eps_block_marked_shape() {
        // k = 0, n = 3: e3 s2 s1 e3 s2 e3
        let word = eps_block_marked(0, 3).unwrap();
        assert_eq!(
            word.letters(),
            &[Eps(3), Sigma(2), Sigma(1), Eps(3), Sigma(2), Eps(3)]
        );
        // k = n-1 degenerates to a single deletion letter.
        assert_eq!(eps_block_marked(2, 3).unwrap().letters(), &[Eps(3)]);
        assert!(eps_block_marked(3, 3).unwrap().is_empty());
    }

    #[test]
    fn strand_loop_examples() {
        assert_eq!(
            expand_sij(1, 2, 3).unwrap().letters(),
            &[Sigma(1), Sigma(1)]
        );
        assert_eq!(
            expand_sij(2, 4, 4).unwrap().letters(),
            &[Sigma(3), Sigma(2), Sigma(2), SigmaInv(3)]
        );
    }

    #[test]
    fn coset_word_examples() {
        assert!(expand_coset(2, 2, 3).unwrap().is_empty());
        assert_eq!(
            expand_coset(1, 3, 3).unwrap().letters(),
            &[SigmaInv(1), SigmaInv(2)]
        );
        assert_eq!(expand_coset(1, 2, 4).unwrap().letters(), &[SigmaInv(1)]);
    }

    #[test]
    fn expand_macro_dispatch() {
        assert_eq!(expand_macro("Delta", 3).unwrap(), delta(3));
        assert_eq!(expand_macro("sigma-big", 4).unwrap(), full_cycle(4));
        assert_eq!(
            expand_macro("eps(2)", 3).unwrap(),
            eps_via_conjugation(2, 3).unwrap()
        );
        assert_eq!(
            expand_macro("eps-block(1)", 3).unwrap(),
            eps_block(1, 3).unwrap()
        );
        assert!(expand_macro("nope", 3).is_err());
    }

    #[test]
    fn relation_set_shapes() {
        let rels = relations(RelationFlavor::DiscBraid, 3);
        assert_eq!(rels.pairs.len(), 1);
        assert_eq!(rels.pairs[0].lhs, parse_word("s1 s2 s1", 3).unwrap());
        assert_eq!(rels.pairs[0].rhs, parse_word("s2 s1 s2", 3).unwrap());

        let rels = relations(RelationFlavor::SphereMcg, 3);
        let labels: Vec<&str> = rels.pairs.iter().map(|p| p.label.as_str()).collect();
        assert_eq!(labels, vec!["exchange(1)", "sphere", "full-cycle-power"]);
        assert_eq!(rels.pairs[1].lhs, parse_word("s1 s2 s2 s1", 3).unwrap());
        assert_eq!(rels.pairs[2].lhs, parse_word("g^3", 3).unwrap());

        // Symmetric-inverse at rank 2: involution, sandwich pair, idempotent;
        // the crossing-square absorption lines are dropped.
        let rels = relations(RelationFlavor::SymmetricInverse, 2);
        let labels: Vec<&str> = rels.pairs.iter().map(|p| p.label.as_str()).collect();
        assert_eq!(
            labels,
            vec![
                "involution(1)",
                "eps-sandwich-a",
                "eps-sandwich-b",
                "eps-idempotent"
            ]
        );
    }

    #[test]
    fn check_relations_reports_labels() {
        let rels = relations(RelationFlavor::DiscBraid, 3);
        let report = check_relations(&rels, |a, b| a.len() == b.len());
        assert!(report.all_pass());
        let report = check_relations(&rels, |_, _| false);
        assert_eq!(report.failures(), vec!["exchange(1)"]);
    }

    #[test]
    fn sphere_word_small_ranks() {
        assert_eq!(sphere_relation_word(2), parse_word("s1 s1", 2).unwrap());
        assert_eq!(
            sphere_relation_word(4),
            parse_word("s1 s2 s3 s3 s2 s1", 4).unwrap()
        );
    }
}
