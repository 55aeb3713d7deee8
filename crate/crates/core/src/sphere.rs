//! Strand surgery and the canonical form for braids of the sphere and
//! for mapping classes of the punctured sphere.
//!
//! The canonical form of a crossing word has three parts:
//! * a tuple of coset indices recording the induced permutation;
//! * a list of combed pure layers after the last strand has been
//!   eliminated through the sphere relation (layer `j` is a free word in
//!   the loops of strand `j` around the later strands);
//! * a residual half-twist-square bit (absent in the mapping-class kind,
//!   where the full twist is trivial).

use crate::error::{Error, Result};
use crate::free_rep::{phi_of_word, FreeWord};
use crate::pinj::{tau_of_word, PartialInjection};
use crate::words::{delta, expand_coset, expand_sij, Letter, Word};
use std::fmt;

/// One combed layer: signed loop letters `(k, ±1)` read left to right,
/// each denoting the loop of the layer's strand around strand `k`.
pub type Layer = Vec<(usize, i8)>;

/// Which sphere quotient a canonical form lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphereKind {
    /// Braids of the sphere (the full twist has order two).
    Braid,
    /// Mapping classes of the punctured sphere (the full twist is trivial).
    Mcg,
}

// ---------------------------------------------------------------------------
// Strand surgery
// ---------------------------------------------------------------------------

/// Remove the strands that START at the given positions, renumbering the
/// survivors order-preservingly.  Crossings between two surviving strands
/// are kept (at their shifted index); crossings involving a removed
/// strand are dropped.  The input must be free of deletion letters.
pub fn strand_delete(word: &Word, dead: &[usize]) -> Result<Word> {
    let n = word.rank();
    for &d in dead {
        if d < 1 || d > n {
            return Err(Error::Invalid {
                what: "strand index",
                detail: format!("{d} out of range at rank {n}"),
            });
        }
    }
    let is_dead = |id: usize| dead.contains(&id);
    let mut slots: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for &l in word.letters() {
        let p = match l {
            Letter::Eps(_) => {
                return Err(Error::EpsLetterPresent {
                    op: "strand deletion",
                })
            }
            Letter::Sigma(p) | Letter::SigmaInv(p) => p,
        };
        let a = slots[p - 1];
        let b = slots[p];
        if !is_dead(a) && !is_dead(b) {
            let shift = slots[..p - 1].iter().filter(|&&id| is_dead(id)).count();
            let q = p - shift;
            out.push(match l {
                Letter::Sigma(_) => Letter::Sigma(q),
                Letter::SigmaInv(_) => Letter::SigmaInv(q),
                Letter::Eps(_) => unreachable!(),
            });
        }
        slots.swap(p - 1, p);
    }
    let dead_count = (1..=n).filter(|&id| is_dead(id)).count();
    Word::new(n - dead_count, out)
}

/// Reinterpret a word at a higher rank without renaming crossings
/// (the extra strands sit past the old ones and are never touched).
pub fn rerank(word: &Word, rank: usize) -> Word {
    debug_assert!(rank >= word.rank());
    Word::new_unchecked(rank, word.letters().to_vec())
}

/// Shift every crossing index up by one and add a fresh first strand.
fn shift_up(word: &Word, rank: usize) -> Word {
    debug_assert_eq!(word.rank() + 1, rank);
    let letters = word
        .letters()
        .iter()
        .map(|&l| match l {
            Letter::Sigma(i) => Letter::Sigma(i + 1),
            Letter::SigmaInv(i) => Letter::SigmaInv(i + 1),
            Letter::Eps(i) => Letter::Eps(i + 1),
        })
        .collect();
    Word::new_unchecked(rank, letters)
}

/// Signed count of crossings between two named strands, halved: the
/// winding number of one strand around the other.  Deletion-free input.
pub fn linking_number(word: &Word, a: usize, b: usize) -> Result<i32> {
    let n = word.rank();
    if a < 1 || a > n || b < 1 || b > n || a == b {
        return Err(Error::Invalid {
            what: "strand pair",
            detail: format!("({a}, {b}) at rank {n}"),
        });
    }
    let mut slots: Vec<usize> = (1..=n).collect();
    let mut total: i32 = 0;
    for &l in word.letters() {
        let (p, sign) = match l {
            Letter::Eps(_) => {
                return Err(Error::EpsLetterPresent {
                    op: "linking number",
                })
            }
            Letter::Sigma(p) => (p, 1),
            Letter::SigmaInv(p) => (p, -1),
        };
        let (u, v) = (slots[p - 1], slots[p]);
        if (u == a && v == b) || (u == b && v == a) {
            total += sign;
        }
        slots.swap(p - 1, p);
    }
    Ok(total.div_euclid(2))
}

// ---------------------------------------------------------------------------
// Combing
// ---------------------------------------------------------------------------

/// Conjugator extraction: a pure word sends generator `gen` to a reduced
/// word `d^-1 x_gen d`; return the signed letters of `d`.
fn conjugator_of(image: &FreeWord, gen: usize) -> Result<Vec<i32>> {
    let ls = image.letters();
    let len = ls.len();
    let bad = || Error::Invalid {
        what: "pure-strand image",
        detail: format!("expected a conjugate of generator {gen}, got {image}"),
    };
    if len % 2 != 1 {
        return Err(bad());
    }
    let mid = len / 2;
    if ls[mid] != gen as i32 {
        return Err(bad());
    }
    for t in 0..mid {
        if ls[t] != -ls[len - 1 - t] {
            return Err(bad());
        }
    }
    Ok(ls[mid + 1..].to_vec())
}

/// Basis conversion for the first-strand kernel: the image of `x_k`
/// under the loop basis of strand 1.
fn x_to_loop_first(k: usize) -> FreeWord {
    let mut v: Vec<i32> = (2..k as i32).map(|t| -t).collect();
    v.push(k as i32);
    v.extend((2..k as i32).rev());
    FreeWord::from_letters(&v)
}

/// Basis conversion for the last-strand kernel at rank `n`.
fn x_to_loop_last(i: usize, n: usize) -> FreeWord {
    let mut v: Vec<i32> = Vec::new();
    for t in (i + 1..n).rev() {
        v.push(t as i32);
    }
    v.push(i as i32);
    for t in i + 1..n {
        v.push(-(t as i32));
    }
    FreeWord::from_letters(&v)
}

/// Express a word lying in the free kernel of first-strand deletion as a
/// reduced sequence of loops of strand 1 around strands `k >= 2`.
fn express_first_strand(a: &Word) -> Result<Layer> {
    let pfa = phi_of_word(a);
    let img = pfa.image(1).ok_or(Error::NotPure { op: "combing" })?;
    let d = conjugator_of(img, 1)?;
    // Delete the letters of the peeled strand, then convert to the loop basis.
    let killed = FreeWord::from_letters(&d).map_letters(|k| {
        if k == 1 {
            None
        } else {
            Some(FreeWord::generator(k))
        }
    });
    let in_loops = killed.map_letters(|k| Some(x_to_loop_first(k)));
    // The conversion is order-reversing; reversal with signs kept undoes it.
    Ok(in_loops
        .letters()
        .iter()
        .rev()
        .map(|&l| (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 }))
        .collect())
}

/// Express a word lying in the free kernel of last-strand deletion as a
/// reduced sequence of loop letters `(i, ±1)`, loop of strand `i`
/// around the last strand.
fn express_last_strand(t: &Word) -> Result<Vec<(usize, i8)>> {
    let n = t.rank();
    let pfa = phi_of_word(t);
    let img = pfa.image(n).ok_or(Error::NotPure {
        op: "strand peeling",
    })?;
    let d = conjugator_of(img, n)?;
    let killed = FreeWord::from_letters(&d).map_letters(|k| {
        if k == n {
            None
        } else {
            Some(FreeWord::generator(k))
        }
    });
    let in_loops = killed.map_letters(|k| Some(x_to_loop_last(k, n)));
    Ok(in_loops
        .letters()
        .iter()
        .rev()
        .map(|&l| (l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 }))
        .collect())
}

/// Factor a pure word as `lift(rest) * t` where `rest` forgets the last
/// strand and `t` lies in the free kernel of last-strand deletion;
/// return `rest` (one rank down) and the loop letters of `t`.
pub fn peel_last_strand(word: &Word) -> Result<(Word, Vec<(usize, i8)>)> {
    let n = word.rank();
    if n == 0 {
        return Ok((word.clone(), Vec::new()));
    }
    let rest = strand_delete(word, &[n])?;
    let lifted = rerank(&rest, n);
    let t = lifted.inverse().concat(word)?;
    let basis = express_last_strand(&t)?;
    Ok((rest, basis))
}

/// Comb a pure word into layers: layer `j` collects the loops of strand
/// `j` around strands `k > j`, layer 1 leftmost.
pub fn comb_pure(word: &Word) -> Result<Vec<Layer>> {
    let r = word.rank();
    if tau_of_word(word) != PartialInjection::identity(r) {
        return Err(Error::NotPure { op: "combing" });
    }
    let mut layers: Vec<Layer> = Vec::new();
    let mut cur = word.clone();
    while cur.rank() > 1 {
        let r_cur = cur.rank();
        let rest = strand_delete(&cur, &[1])?;
        let lifted = shift_up(&rest, r_cur);
        let a = cur.concat(&lifted.inverse())?;
        layers.push(express_first_strand(&a)?);
        cur = rest;
    }
    for (depth, layer) in layers.iter_mut().enumerate() {
        for entry in layer.iter_mut() {
            entry.0 += depth;
        }
    }
    Ok(layers)
}

/// Rebuild the crossing word of a list of combed layers at a given rank.
pub fn expand_layers(layers: &[Layer], rank: usize) -> Result<Word> {
    let mut word = Word::empty(rank);
    for (depth, layer) in layers.iter().enumerate() {
        let j = depth + 1;
        for &(k, sign) in layer {
            let s = expand_sij(j, k, rank)?;
            word = word.concat(&if sign > 0 { s } else { s.inverse() })?;
        }
    }
    Ok(word)
}

/// The `j`-th factor of the full twist at rank `m`: the loops of strand
/// `j` around every later strand.
pub fn full_twist_factor(j: usize, m: usize) -> Result<Word> {
    let mut word = Word::empty(m);
    for k in j + 1..=m {
        word = word.concat(&expand_sij(j, k, m)?)?;
    }
    Ok(word)
}

// ---------------------------------------------------------------------------
// Coset factorization
// ---------------------------------------------------------------------------

/// Factor a crossing word as `R * pure` where `R` is the canonical coset
/// word chain realizing the induced permutation.  Returns the coset
/// indices `(i_2, .., i_n)` and the pure remainder.
pub fn coset_factor(word: &Word) -> Result<(Vec<usize>, Word)> {
    if word.has_eps() {
        return Err(Error::EpsLetterPresent {
            op: "coset factorization",
        });
    }
    let n = word.rank();
    let tau = tau_of_word(word);
    let mut perm: Vec<usize> = (1..=n)
        .map(|i| {
            tau.apply(i)
                .expect("crossing-only words induce permutations")
        })
        .collect();
    let mut cosets = vec![0usize; n.saturating_sub(1)];
    let mut r_word = Word::empty(n);
    for l in (2..=n).rev() {
        let i_l = (1..=l)
            .find(|&y| perm[y - 1] == l)
            .expect("permutation restricted to 1..l is onto");
        cosets[l - 2] = i_l;
        r_word = r_word.concat(&expand_coset(i_l, l, n)?)?;
        // Peel the level: remaining permutation fixes position l.
        let old = perm.clone();
        for (z, slot) in perm.iter_mut().enumerate().take(l) {
            let z = z + 1;
            let pre = if z == l {
                i_l
            } else if z >= i_l && z < l {
                z + 1
            } else {
                z
            };
            *slot = old[pre - 1];
        }
        debug_assert_eq!(perm[l - 1], l);
    }
    let pure = r_word.inverse().concat(word)?;
    debug_assert_eq!(tau_of_word(&r_word), tau);
    debug_assert_eq!(
        tau_of_word(&pure),
        PartialInjection::identity(n),
        "remainder must be pure"
    );
    Ok((cosets, pure))
}

// ---------------------------------------------------------------------------
// The canonical form
// ---------------------------------------------------------------------------

/// Canonical form of a crossing word on the sphere: coset indices, combed
/// layers one rank down, and the residual half-twist-square bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkovNormalForm {
    pub rank: usize,
    pub kind: SphereKind,
    /// `(i_2, .., i_n)`: level-by-level coset indices of the permutation.
    pub cosets: Vec<usize>,
    /// Layers `1..=n-3`; layer `j` is a reduced loop word over `k` in
    /// `j+1..=n-1`.
    pub layers: Vec<Layer>,
    /// Exponent of the full twist, modulo two; always 0 for the
    /// mapping-class kind.
    pub delta: u8,
}

/// The word in the kernel-elimination identity for loop `(i, n)`: on the
/// sphere the loop of strand `i` around the last strand equals the
/// inverse round trip around everything else, one rank down.
fn last_loop_rewrite(i: usize, n: usize) -> Result<Word> {
    let m = n - 1;
    let mut first = Word::empty(m);
    for k in i + 1..=m {
        first = first.concat(&expand_sij(i, k, m)?)?;
    }
    let mut second = Word::empty(m);
    for j in 1..i {
        second = second.concat(&expand_sij(j, i, m)?)?;
    }
    first.inverse().concat(&second.inverse())
}

/// Comb at one rank down and collapse the final layer through the full
/// twist; returns the surviving layers and the twist exponent.
fn collapse_pure(v1: &Word, kind: SphereKind) -> Result<(Vec<Layer>, u8)> {
    let m = v1.rank();
    if m <= 1 {
        return Ok((Vec::new(), 0));
    }
    let layers = comb_pure(v1)?;
    debug_assert_eq!(layers.len(), m - 1);
    let c: i64 = layers[m - 2].iter().map(|&(_, s)| s as i64).sum();
    debug_assert_eq!(c as i32, linking_number(v1, m - 1, m)?);
    let (kept, twist) = if c == 0 {
        (layers[..m - 2].to_vec(), 0i64)
    } else {
        let mut v2 = expand_layers(&layers[..m - 2], m)?;
        let mut f = Word::empty(m);
        for j in 1..=m.saturating_sub(2) {
            f = f.concat(&full_twist_factor(j, m)?)?;
        }
        v2 = v2.concat(&f.pow(-c))?;
        let relayers = comb_pure(&v2)?;
        assert!(
            relayers[m - 2].is_empty(),
            "twist collapse must clear the final layer"
        );
        (relayers[..m - 2].to_vec(), c)
    };
    let delta = match kind {
        SphereKind::Mcg => 0,
        SphereKind::Braid => twist.rem_euclid(2) as u8,
    };
    Ok((kept, delta))
}

/// Canonical form of a crossing word under the chosen sphere kind.
pub fn normal_form(word: &Word, kind: SphereKind) -> Result<MarkovNormalForm> {
    if word.has_eps() {
        return Err(Error::EpsLetterPresent {
            op: "sphere canonical form",
        });
    }
    let n = word.rank();
    if n <= 1 {
        return Ok(MarkovNormalForm {
            rank: n,
            kind,
            cosets: Vec::new(),
            layers: Vec::new(),
            delta: 0,
        });
    }
    let (cosets, pure) = coset_factor(word)?;
    let (rest, t_basis) = peel_last_strand(&pure)?;
    let mut v1 = rest;
    for &(i, sign) in &t_basis {
        let rw = last_loop_rewrite(i, n)?;
        v1 = v1.concat(&if sign > 0 { rw } else { rw.inverse() })?;
    }
    let (layers, delta) = collapse_pure(&v1, kind)?;
    Ok(MarkovNormalForm {
        rank: n,
        kind,
        cosets,
        layers,
        delta,
    })
}

/// A crossing word reconstructing a canonical form exactly.
pub fn nf_to_word(nf: &MarkovNormalForm) -> Result<Word> {
    let n = nf.rank;
    let mut word = Word::empty(n);
    for l in (2..=n).rev() {
        word = word.concat(&expand_coset(nf.cosets[l - 2], l, n)?)?;
    }
    word = word.concat(&expand_layers(&nf.layers, n)?)?;
    if nf.delta == 1 {
        word = word.concat(&delta(n).pow(2))?;
    }
    Ok(word)
}

/// Decide equality of two crossing words under a sphere kind.
pub fn equal_sphere(a: &Word, b: &Word, kind: SphereKind) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(normal_form(a, kind)? == normal_form(b, kind)?)
}

/// Every element at a small rank (guarded at 3), as canonical forms.
pub fn enumerate_sphere(n: usize, kind: SphereKind) -> Result<Vec<MarkovNormalForm>> {
    const MAX: usize = 3;
    if n > MAX {
        return Err(Error::EnumerationGuard {
            what: "sphere elements",
            max: MAX,
            got: n,
        });
    }
    if n <= 1 {
        return Ok(vec![normal_form(&Word::empty(n), kind)?]);
    }
    let deltas: &[u8] = if kind == SphereKind::Braid && n >= 3 {
        &[0, 1]
    } else {
        &[0]
    };
    let mut cosets = vec![vec![]];
    for l in 2..=n {
        let mut next = Vec::new();
        for tuple in &cosets {
            for i in 1..=l {
                let mut t: Vec<usize> = tuple.clone();
                t.push(i);
                next.push(t);
            }
        }
        cosets = next;
    }
    let mut out = Vec::new();
    for tuple in &cosets {
        for &d in deltas {
            let mut word = Word::empty(n);
            for l in (2..=n).rev() {
                word = word.concat(&expand_coset(tuple[l - 2], l, n)?)?;
            }
            if d == 1 {
                word = word.concat(&delta(n).pow(2))?;
            }
            out.push(normal_form(&word, kind)?);
        }
    }
    Ok(out)
}

fn layer_text(layer: &Layer, j: usize) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut idx = 0;
    while idx < layer.len() {
        let (k, _) = layer[idx];
        let mut exp: i64 = 0;
        while idx < layer.len() && layer[idx].0 == k {
            exp += layer[idx].1 as i64;
            idx += 1;
        }
        match exp {
            1 => parts.push(format!("q{j},{k}")),
            e => parts.push(format!("q{j},{k}^{e}")),
        }
    }
    parts.join(" ")
}

impl fmt::Display for MarkovNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cosets=(")?;
        for (t, i) in self.cosets.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ") layers=[")?;
        for (depth, layer) in self.layers.iter().enumerate() {
            if depth > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}", layer_text(layer, depth + 1))?;
        }
        write!(f, "]")?;
        if self.kind == SphereKind::Braid {
            write!(f, " delta={}", self.delta)?;
        }
        Ok(())
    }
}
