//! Partial elements at every rank: words mixing crossings and deletions
//! normalize to a triple (surviving sources, surviving targets, core),
//! where the core is a canonical full-rank object one per flavor.
//! Multiplication, inversion, idempotent/group factorization, the
//! triviality-after-forgetting test, abelianization, and the central
//! family all live here.

use crate::error::{Error, Result};
use crate::free_rep::{phi_of_word, PartialFreeAutomorphism};
use crate::pinj::tau_of_word;
use crate::sphere::{nf_to_word, normal_form, rerank, strand_delete, MarkovNormalForm, SphereKind};
use crate::words::{delta, eps_block, Letter, Word};
use std::fmt;

/// Which equality theory the core of an element is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementFlavor {
    /// Partial braids of the disc.
    Disc,
    /// Partial braids of the sphere.
    SphereBraid,
    /// Partial mapping classes of the punctured sphere.
    SphereMcg,
}

impl fmt::Display for ElementFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementFlavor::Disc => "disc",
            ElementFlavor::SphereBraid => "sphere-braid",
            ElementFlavor::SphereMcg => "sphere-mcg",
        })
    }
}

/// Canonical full-rank core of a partial element.
#[derive(Debug, Clone)]
pub enum Core {
    /// Disc core: the free-group action is the canonical object; the
    /// witness word reconstructs it and carries no identity of its own.
    Disc {
        pfa: PartialFreeAutomorphism,
        witness: Word,
    },
    /// Sphere core: the canonical form is the object.
    Sphere(MarkovNormalForm),
}

/// A partial element: `dom` lists the surviving source positions
/// (ascending), `img` the surviving target positions (ascending), and
/// `core` the induced full-rank element on the survivors.
#[derive(Debug, Clone)]
pub struct PartialMCElement {
    pub n: usize,
    pub flavor: ElementFlavor,
    pub dom: Vec<usize>,
    pub img: Vec<usize>,
    pub core: Core,
}

impl PartialEq for PartialMCElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.flavor == other.flavor
            && self.dom == other.dom
            && self.img == other.img
            && match (&self.core, &other.core) {
                (Core::Disc { pfa: a, .. }, Core::Disc { pfa: b, .. }) => a == b,
                (Core::Sphere(a), Core::Sphere(b)) => a == b,
                _ => false,
            }
    }
}

impl Eq for PartialMCElement {}

impl PartialMCElement {
    /// Number of surviving strands.
    pub fn map_rank(&self) -> usize {
        self.dom.len()
    }

    /// Whether the element is an idempotent (a restriction of the identity).
    pub fn is_idempotent(&self) -> bool {
        if self.dom != self.img {
            return false;
        }
        let k = self.dom.len();
        match &self.core {
            Core::Disc { pfa, .. } => *pfa == PartialFreeAutomorphism::identity(k),
            Core::Sphere(nf) => nf == &normal_form(&Word::empty(k), nf.kind).expect("trivial form"),
        }
    }

    fn core_word(&self) -> Result<Word> {
        match &self.core {
            Core::Disc { witness, .. } => Ok(witness.clone()),
            Core::Sphere(nf) => nf_to_word(nf),
        }
    }
}

fn sphere_kind(flavor: ElementFlavor) -> Option<SphereKind> {
    match flavor {
        ElementFlavor::Disc => None,
        ElementFlavor::SphereBraid => Some(SphereKind::Braid),
        ElementFlavor::SphereMcg => Some(SphereKind::Mcg),
    }
}

fn core_of_word(word: &Word, flavor: ElementFlavor) -> Result<Core> {
    Ok(match sphere_kind(flavor) {
        None => Core::Disc {
            pfa: phi_of_word(word),
            witness: word.clone(),
        },
        Some(kind) => Core::Sphere(normal_form(word, kind)?),
    })
}

/// Normalize a word into its canonical partial element.
pub fn normalize(word: &Word, flavor: ElementFlavor) -> Result<PartialMCElement> {
    let n = word.rank();
    let t = tau_of_word(word);
    let dom = t.domain();
    let img = t.image();
    let dead: Vec<usize> = (1..=n).filter(|i| !dom.contains(i)).collect();
    let core_word = strand_delete(&word.without_eps(), &dead)?;
    debug_assert_eq!(core_word.rank(), dom.len());
    #[cfg(debug_assertions)]
    {
        let ct = tau_of_word(&core_word);
        for (a, &ia) in dom.iter().enumerate() {
            let j = t.apply(ia).expect("defined on its domain");
            let b = img.iter().position(|&x| x == j).expect("target in image") + 1;
            assert_eq!(ct.apply(a + 1), Some(b), "core permutation mismatch");
        }
    }
    let core = core_of_word(&core_word, flavor)?;
    Ok(PartialMCElement {
        n,
        flavor,
        dom,
        img,
        core,
    })
}

fn prefix_word(dom: &[usize], n: usize) -> Word {
    // Block a carries source i_a down to position a; live strands never
    // cross each other here.
    let mut letters = Vec::new();
    for (a0, &ia) in dom.iter().enumerate() {
        let a = a0 + 1;
        for t in (a..ia).rev() {
            letters.push(Letter::Sigma(t));
        }
    }
    Word::new_unchecked(n, letters)
}

fn suffix_word(img: &[usize], n: usize) -> Word {
    // Block b carries position b up to target j_b, highest block first.
    let mut letters = Vec::new();
    for (b0, &jb) in img.iter().enumerate().rev() {
        let b = b0 + 1;
        for t in b..jb {
            letters.push(Letter::Sigma(t));
        }
    }
    Word::new_unchecked(n, letters)
}

/// A word at full rank whose normalization reproduces the element.
pub fn embed(e: &PartialMCElement) -> Result<Word> {
    let n = e.n;
    let k = e.dom.len();
    let block = eps_block(k, n)?;
    Word::concat_all(
        n,
        &[
            &prefix_word(&e.dom, n),
            &block,
            &rerank(&e.core_word()?, n),
            &block,
            &suffix_word(&e.img, n),
        ],
    )
}

/// Build the canonical element with the given survivors and core word.
/// `dom` and `img` must be strictly ascending position lists of equal
/// length `k`, and `core_word` a deletion-free word at rank `k`.
pub fn assemble(
    dom: &[usize],
    img: &[usize],
    core_word: &Word,
    n: usize,
    flavor: ElementFlavor,
) -> Result<PartialMCElement> {
    let k = dom.len();
    let ascending_in_range =
        |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&i| 1 <= i && i <= n);
    if img.len() != k || !ascending_in_range(dom) || !ascending_in_range(img) {
        return Err(Error::Invalid {
            what: "survivor lists",
            detail: format!("dom {dom:?} img {img:?} at rank {n}"),
        });
    }
    if core_word.rank() != k {
        return Err(Error::RankMismatch {
            left: core_word.rank(),
            right: k,
        });
    }
    let block = eps_block(k, n)?;
    let word = Word::concat_all(
        n,
        &[
            &prefix_word(dom, n),
            &block,
            &rerank(core_word, n),
            &block,
            &suffix_word(img, n),
        ],
    )?;
    normalize(&word, flavor)
}

/// Product of two partial elements of the same rank and flavor.
pub fn multiply(a: &PartialMCElement, b: &PartialMCElement) -> Result<PartialMCElement> {
    if a.n != b.n {
        return Err(Error::RankMismatch {
            left: a.n,
            right: b.n,
        });
    }
    if a.flavor != b.flavor {
        return Err(Error::Invalid {
            what: "element flavors",
            detail: format!("{} vs {}", a.flavor, b.flavor),
        });
    }
    let word = embed(a)?.concat(&embed(b)?)?;
    normalize(&word, a.flavor)
}

/// The generalized inverse: swap sources and targets, invert the core.
pub fn inverse_elt(e: &PartialMCElement) -> Result<PartialMCElement> {
    let core = match &e.core {
        Core::Disc { witness, .. } => {
            let w = witness.inverse();
            Core::Disc {
                pfa: phi_of_word(&w),
                witness: w,
            }
        }
        Core::Sphere(nf) => {
            let w = nf_to_word(nf)?.inverse();
            Core::Sphere(normal_form(&w, nf.kind)?)
        }
    };
    Ok(PartialMCElement {
        n: e.n,
        flavor: e.flavor,
        dom: e.img.clone(),
        img: e.dom.clone(),
        core,
    })
}

/// The identity element at a rank.
pub fn identity_elt(n: usize, flavor: ElementFlavor) -> PartialMCElement {
    normalize(&Word::empty(n), flavor).expect("identity normalizes")
}

/// The idempotent deleting exactly the given positions.
pub fn idempotent_on(kept: &[usize], n: usize, flavor: ElementFlavor) -> Result<PartialMCElement> {
    let letters: Vec<Letter> = (1..=n)
        .filter(|i| !kept.contains(i))
        .map(Letter::Eps)
        .collect();
    normalize(&Word::new(n, letters)?, flavor)
}

/// The single-deletion element at position `i`.
pub fn eps_elt(i: usize, n: usize, flavor: ElementFlavor) -> Result<PartialMCElement> {
    normalize(&Word::new(n, vec![Letter::Eps(i)])?, flavor)
}

/// Factor an element as (idempotent on its domain) * (full-rank part).
/// The full-rank part extends the element's strand motion by moving the
/// dead positions order-preservingly.
pub fn factorize(e: &PartialMCElement) -> Result<(PartialMCElement, PartialMCElement)> {
    let idem = idempotent_on(&e.dom, e.n, e.flavor)?;
    let group_word = Word::concat_all(
        e.n,
        &[
            &prefix_word(&e.dom, e.n),
            &rerank(&e.core_word()?, e.n),
            &suffix_word(&e.img, e.n),
        ],
    )?;
    let group = normalize(&group_word, e.flavor)?;
    debug_assert_eq!(group.map_rank(), e.n);
    Ok((idem, group))
}

/// Whether forgetting strand `i` trivializes the element: deleting `i`
/// first and then applying the element equals deleting `i` alone.
pub fn is_brunnian(e: &PartialMCElement, i: usize) -> Result<bool> {
    let eps = eps_elt(i, e.n, e.flavor)?;
    Ok(multiply(&eps, e)? == eps)
}

/// Whether the element trivializes under forgetting any single strand.
pub fn is_brunnian_all(e: &PartialMCElement) -> Result<bool> {
    for i in 1..=e.n {
        if !is_brunnian(e, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The half-twist transport law: deleting position `i` before the
/// half twist equals deleting position `n+1-i` after it.
pub fn delta_shift_check(n: usize, flavor: ElementFlavor) -> Result<bool> {
    let d = delta(n);
    for i in 1..=n {
        let lhs = Word::new(n, vec![Letter::Eps(i)])?.concat(&d)?;
        let rhs = d.concat(&Word::new(n, vec![Letter::Eps(n + 1 - i)])?)?;
        if normalize(&lhs, flavor)? != normalize(&rhs, flavor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Abelianization
// ---------------------------------------------------------------------------

/// Image of a word in the abelianized partial mapping-class monoid: a
/// deletion flag joined with a residue class of the crossing exponent
/// sum.  Any deletion absorbs the residue (canonically stored as 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbelianImage {
    pub eps: bool,
    pub residue: u64,
    pub modulus: u64,
}

/// The order of the abelianized crossing class at a rank.
pub fn abelian_modulus(n: usize) -> u64 {
    if n <= 1 {
        1
    } else if n.is_multiple_of(2) {
        2 * (n as u64 - 1)
    } else {
        n as u64 - 1
    }
}

/// Abelianize a word at its rank.
pub fn abelianize(word: &Word) -> AbelianImage {
    let n = word.rank();
    let modulus = abelian_modulus(n);
    let eps = word.has_eps();
    let sum: i64 = word
        .letters()
        .iter()
        .map(|l| match l {
            Letter::Sigma(_) => 1,
            Letter::SigmaInv(_) => -1,
            Letter::Eps(_) => 0,
        })
        .sum();
    let residue = if eps {
        0
    } else {
        sum.rem_euclid(modulus as i64) as u64
    };
    AbelianImage {
        eps,
        residue,
        modulus,
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.eps { "e" } else { "1" };
        write!(f, "({head}, {} mod {})", self.residue, self.modulus)
    }
}

// ---------------------------------------------------------------------------
// The central family
// ---------------------------------------------------------------------------

/// Membership in the distinguished central family: at rank at least 3,
/// the elements surviving on at most two strands; at rank 2, the
/// identity and the everywhere-deleted element; trivially everything at
/// rank at most 1.
pub fn in_center(e: &PartialMCElement) -> bool {
    let n = e.n;
    if n <= 1 {
        return true;
    }
    if n == 2 {
        return e.map_rank() == 0 || *e == identity_elt(2, e.flavor);
    }
    e.map_rank() <= 2
}

impl fmt::Display for PartialMCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} dom=(", self.map_rank())?;
        for (t, i) in self.dom.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ") img=(")?;
        for (t, i) in self.img.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ") core=")?;
        match &self.core {
            Core::Disc { pfa, .. } => {
                write!(f, "{{")?;
                for i in 1..=pfa.n {
                    if i > 1 {
                        write!(f, "; ")?;
                    }
                    match pfa.image(i) {
                        Some(word) => write!(f, "{i} -> {word}")?,
                        None => write!(f, "{i} -> _")?,
                    }
                }
                write!(f, "}}")
            }
            Core::Sphere(nf) => write!(f, "{nf}"),
        }
    }
}
