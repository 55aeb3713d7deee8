//! Free-group representations deciding word equality.
//!
//! Disc flavor: each word acts by a partial automorphism of the free
//! group on strand generators `x_1..x_n`; two words are equal exactly
//! when their actions (and underlying injections) agree.
//!
//! Sphere flavor: the strand generators satisfy `u_1 u_2 .. u_n = 1`,
//! so the action is taken in quotient coordinates that eliminate the
//! highest surviving generator; equality holds up to a global
//! conjugation, decided by a bounded search.

use crate::error::{Error, Result};
use crate::pinj::PartialInjection;
use crate::words::{Letter, Word};
use std::fmt;

// ---------------------------------------------------------------------------
// Free words
// ---------------------------------------------------------------------------

/// A freely reduced word in a free group, stored as signed generator
/// indices: `+i` for `x_i`, `-i` for `x_i^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    /// Build from signed indices, reducing cancellations.
    pub fn from_letters(letters: &[i32]) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in letters {
            out.push(l);
        }
        out
    }

    pub fn generator(i: usize) -> FreeWord {
        FreeWord(vec![i as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// Concatenate and reduce.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// `c^-1 self c`.
    pub fn conjugate(&self, c: &FreeWord) -> FreeWord {
        c.inverse().mul(self).mul(c)
    }

    /// Strip matching inverse prefix/suffix pairs.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let mut v = self.0.clone();
        while v.len() >= 2 && v[0] == -v[v.len() - 1] {
            v.pop();
            v.remove(0);
        }
        FreeWord(v)
    }

    /// Apply a letter map; `None` deletes the letter.  The result is reduced.
    pub fn map_letters<F>(&self, mut f: F) -> FreeWord
    where
        F: FnMut(usize) -> Option<FreeWord>,
    {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let idx = l.unsigned_abs() as usize;
            match f(idx) {
                None => {}
                Some(img) => {
                    let img = if l > 0 { img } else { img.inverse() };
                    for &m in &img.0 {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Whether two words are conjugate in the free group (their cyclic
    /// reductions are rotations of one another).
    pub fn conjugate_in_free_group(&self, other: &FreeWord) -> bool {
        let a = self.cyclic_reduce().0;
        let b = other.cyclic_reduce().0;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let doubled: Vec<i32> = a.iter().chain(a.iter()).copied().collect();
        doubled.windows(b.len()).any(|win| win == b.as_slice())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &l in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Disc flavor: partial free automorphisms
// ---------------------------------------------------------------------------

/// The action of a word on the free group `F(x_1..x_n)`, defined only on
/// the generators whose strand survives.  Equality of these objects is
/// the disc word problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFreeAutomorphism {
    pub n: usize,
    pub shadow: PartialInjection,
    /// `images[i]` is the image of `x_{i+1}` when strand `i+1` survives.
    pub images: Vec<Option<FreeWord>>,
}

impl PartialFreeAutomorphism {
    pub fn identity(n: usize) -> PartialFreeAutomorphism {
        PartialFreeAutomorphism {
            n,
            shadow: PartialInjection::identity(n),
            images: (1..=n).map(|i| Some(FreeWord::generator(i))).collect(),
        }
    }

    /// Generator actions: a crossing braids two adjacent generators, a
    /// deletion forgets one.
    pub fn of_letter(l: Letter, n: usize) -> PartialFreeAutomorphism {
        let mut pfa = PartialFreeAutomorphism::identity(n);
        match l {
            Letter::Sigma(i) => {
                pfa.images[i - 1] = Some(FreeWord::generator(i + 1));
                pfa.images[i] = Some(FreeWord::from_letters(&[
                    -((i + 1) as i32),
                    i as i32,
                    (i + 1) as i32,
                ]));
            }
            Letter::SigmaInv(i) => {
                pfa.images[i - 1] = Some(FreeWord::from_letters(&[
                    i as i32,
                    (i + 1) as i32,
                    -(i as i32),
                ]));
                pfa.images[i] = Some(FreeWord::generator(i));
            }
            Letter::Eps(j) => {
                pfa.images[j - 1] = None;
            }
        }
        pfa.shadow = crate::pinj::tau_of_letter(l, n);
        pfa
    }

    /// Image of one generator, if defined.
    pub fn image(&self, i: usize) -> Option<&FreeWord> {
        self.images.get(i - 1).and_then(|v| v.as_ref())
    }
}

impl fmt::Display for PartialFreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            if i > 1 {
                writeln!(f)?;
            }
            match &self.images[i - 1] {
                Some(word) => write!(f, "{i} -> {word}")?,
                None => write!(f, "{i} -> _")?,
            }
        }
        Ok(())
    }
}

/// Left-to-right composition of partial free automorphisms.
///
/// For each surviving generator: take the first action's image, delete
/// the letters the second action kills, substitute the second action's
/// images, then project onto the generators surviving the composite.
pub fn compose_pfa(
    f: &PartialFreeAutomorphism,
    g: &PartialFreeAutomorphism,
) -> Result<PartialFreeAutomorphism> {
    if f.n != g.n {
        return Err(Error::RankMismatch {
            left: f.n,
            right: g.n,
        });
    }
    let n = f.n;
    let shadow = f.shadow.compose(&g.shadow)?;
    let image_alive: Vec<bool> = {
        let mut alive = vec![false; n];
        for j in shadow.image() {
            alive[j - 1] = true;
        }
        alive
    };
    let mut images = vec![None; n];
    for i in 1..=n {
        if shadow.apply(i).is_none() {
            continue;
        }
        let base = f.images[i - 1]
            .as_ref()
            .expect("shadow defined implies image defined");
        let substituted = base.map_letters(|k| g.images[k - 1].clone());
        let projected = substituted.map_letters(|k| {
            if image_alive[k - 1] {
                Some(FreeWord::generator(k))
            } else {
                None
            }
        });
        images[i - 1] = Some(projected);
    }
    Ok(PartialFreeAutomorphism { n, shadow, images })
}

/// The action of a whole word (left-to-right fold over its letters).
pub fn phi_of_word(word: &Word) -> PartialFreeAutomorphism {
    let n = word.rank();
    let mut acc = PartialFreeAutomorphism::identity(n);
    for &l in word.letters() {
        acc = compose_pfa(&acc, &PartialFreeAutomorphism::of_letter(l, n)).expect("ranks match");
    }
    acc
}

/// Decide disc equality of two words of the same rank: equal exactly
/// when their free-group actions coincide.
pub fn ib_equal_disc(a: &Word, b: &Word) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(phi_of_word(a) == phi_of_word(b))
}

/// Apply a totally defined action to a free word.
///
/// # Panics
/// Panics if the free word uses a generator the action has deleted.
pub fn apply_total(pfa: &PartialFreeAutomorphism, word: &FreeWord) -> FreeWord {
    word.map_letters(|k| {
        Some(
            pfa.images[k - 1]
                .clone()
                .expect("generator must survive the action"),
        )
    })
}

// ---------------------------------------------------------------------------
// Sphere flavor: quotient action and bounded conjugacy verifier
// ---------------------------------------------------------------------------

/// The action of a word on the sphere quotient, where the surviving
/// generators multiply to 1.  With surviving set `J` (of the image),
/// the top generator `max(J)` is eliminated:
/// `u_{max} = (u_{j_1} .. u_{j_{r-1}})^-1` over the rest of `J` ascending,
/// and images are stored over the remaining free coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePartialAutomorphism {
    pub n: usize,
    pub shadow: PartialInjection,
    pub images: Vec<Option<FreeWord>>,
}

/// Rewrite a free word over the coordinates of the surviving set `J`:
/// letters outside `J` are deleted, then the top survivor is replaced by
/// the inverse ascending product of the others, and the result reduced.
pub fn project_to_quotient(word: &FreeWord, surviving: &[usize]) -> FreeWord {
    let alive: Vec<usize> = surviving.to_vec();
    let top = alive.last().copied();
    let killed = word.map_letters(|k| {
        if alive.contains(&k) {
            Some(FreeWord::generator(k))
        } else {
            None
        }
    });
    match top {
        None => FreeWord::identity(),
        Some(top) => killed.map_letters(|k| {
            if k == top {
                let others: Vec<i32> = alive
                    .iter()
                    .filter(|&&j| j != top)
                    .map(|&j| j as i32)
                    .collect();
                Some(FreeWord::from_letters(&others).inverse())
            } else {
                Some(FreeWord::generator(k))
            }
        }),
    }
}

impl SpherePartialAutomorphism {
    pub fn identity(n: usize) -> SpherePartialAutomorphism {
        let surviving: Vec<usize> = (1..=n).collect();
        let images = (1..=n)
            .map(|i| Some(project_to_quotient(&FreeWord::generator(i), &surviving)))
            .collect();
        SpherePartialAutomorphism {
            n,
            shadow: PartialInjection::identity(n),
            images,
        }
    }

    /// Generator actions obtained from the disc action followed by
    /// projection to the quotient coordinates of the image.
    pub fn of_letter(l: Letter, n: usize) -> SpherePartialAutomorphism {
        let disc = PartialFreeAutomorphism::of_letter(l, n);
        let surviving = disc.shadow.image();
        let images = disc
            .images
            .iter()
            .map(|v| v.as_ref().map(|word| project_to_quotient(word, &surviving)))
            .collect();
        SpherePartialAutomorphism {
            n,
            shadow: disc.shadow,
            images,
        }
    }
}

impl fmt::Display for SpherePartialAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            if i > 1 {
                writeln!(f)?;
            }
            match &self.images[i - 1] {
                Some(word) => write!(f, "{i} -> {word}")?,
                None => write!(f, "{i} -> _")?,
            }
        }
        Ok(())
    }
}

/// Left-to-right composition in quotient coordinates.
pub fn compose_spa(
    f: &SpherePartialAutomorphism,
    g: &SpherePartialAutomorphism,
) -> Result<SpherePartialAutomorphism> {
    if f.n != g.n {
        return Err(Error::RankMismatch {
            left: f.n,
            right: g.n,
        });
    }
    let n = f.n;
    let shadow = f.shadow.compose(&g.shadow)?;
    let surviving = shadow.image();
    let g_dom: Vec<usize> = g.shadow.domain();
    let mut images = vec![None; n];
    for i in 1..=n {
        if shadow.apply(i).is_none() {
            continue;
        }
        let base = f.images[i - 1]
            .as_ref()
            .expect("shadow defined implies image defined");
        let killed = base.map_letters(|k| {
            if g_dom.contains(&k) {
                Some(FreeWord::generator(k))
            } else {
                None
            }
        });
        let substituted = killed.map_letters(|k| g.images[k - 1].clone());
        images[i - 1] = Some(project_to_quotient(&substituted, &surviving));
    }
    Ok(SpherePartialAutomorphism { n, shadow, images })
}

/// The sphere-quotient action of a whole word.
pub fn psi_of_word(word: &Word) -> SpherePartialAutomorphism {
    let n = word.rank();
    let mut acc = SpherePartialAutomorphism::identity(n);
    for &l in word.letters() {
        acc = compose_spa(&acc, &SpherePartialAutomorphism::of_letter(l, n)).expect("ranks match");
    }
    acc
}

/// Verdict of the bounded outer-equality verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterVerdict {
    Equal,
    Distinct,
    Inconclusive,
}

/// Decide whether two sphere-quotient actions agree up to conjugation by
/// a single free word of length at most `bound` over the target free
/// coordinates.  Sound on Distinct (a necessary invariant differs) and
/// on Equal (an explicit conjugator is produced); Inconclusive means the
/// search bound was exhausted.
pub fn iout_equal_verifier(
    a1: &SpherePartialAutomorphism,
    a2: &SpherePartialAutomorphism,
    bound: usize,
) -> OuterVerdict {
    if a1.n != a2.n || a1.shadow != a2.shadow {
        return OuterVerdict::Distinct;
    }
    let surviving = a1.shadow.image();
    let k = surviving.len();
    if k <= 1 {
        // At most one survivor: the quotient group is trivial.
        return OuterVerdict::Equal;
    }
    let domain = a1.shadow.domain();
    // Necessary condition: images must be conjugate individually.
    for &i in &domain {
        let w1 = a1.images[i - 1].as_ref().expect("defined on domain");
        let w2 = a2.images[i - 1].as_ref().expect("defined on domain");
        if !w1.conjugate_in_free_group(w2) {
            return OuterVerdict::Distinct;
        }
    }
    // Free coordinates of the target quotient (top survivor eliminated).
    let free_coords: Vec<i32> = surviving[..k - 1].iter().map(|&j| j as i32).collect();
    // Breadth-first search over reduced conjugator words.
    let mut frontier: Vec<FreeWord> = vec![FreeWord::identity()];
    for _depth in 0..=bound {
        for c in &frontier {
            let ok = domain.iter().all(|&i| {
                let w1 = a1.images[i - 1].as_ref().unwrap();
                let w2 = a2.images[i - 1].as_ref().unwrap();
                &w1.conjugate(c) == w2
            });
            if ok {
                return OuterVerdict::Equal;
            }
        }
        let mut next = Vec::new();
        for c in &frontier {
            for &j in &free_coords {
                for s in [j, -j] {
                    if c.letters().last() == Some(&-s) {
                        continue;
                    }
                    let mut ext = c.clone();
                    ext.push(s);
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    OuterVerdict::Inconclusive
}
