//! Partial injections on `{1, .., n}` and the strand-tracking
//! homomorphism sending a word to the injection it induces.

use crate::error::{Error, Result};
use crate::words::{Letter, Word};
use std::fmt;

/// A partial injection on `{1, .., n}`: an injective map defined on a
/// subset of positions.  `map[i]` holds the (1-based) image of position
/// `i + 1`, or `None` where undefined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    n: usize,
    map: Vec<Option<usize>>,
}

impl PartialInjection {
    /// The identity injection (all positions fixed).
    pub fn identity(n: usize) -> PartialInjection {
        PartialInjection {
            n,
            map: (1..=n).map(Some).collect(),
        }
    }

    /// The nowhere-defined injection.
    pub fn empty(n: usize) -> PartialInjection {
        PartialInjection {
            n,
            map: vec![None; n],
        }
    }

    /// Build from `(source, target)` pairs, validating injectivity and range.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<PartialInjection> {
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        for &(a, b) in pairs {
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::Invalid {
                    what: "injection pair",
                    detail: format!("({a}, {b}) out of range at rank {n}"),
                });
            }
            if map[a - 1].is_some() {
                return Err(Error::Invalid {
                    what: "injection pair",
                    detail: format!("source {a} repeated"),
                });
            }
            if used[b - 1] {
                return Err(Error::Invalid {
                    what: "injection pair",
                    detail: format!("target {b} repeated"),
                });
            }
            map[a - 1] = Some(b);
            used[b - 1] = true;
        }
        Ok(PartialInjection { n, map })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Image of a 1-based position, if defined.
    pub fn apply(&self, i: usize) -> Option<usize> {
        if i < 1 || i > self.n {
            return None;
        }
        self.map[i - 1]
    }

    /// Sorted list of positions where the map is defined.
    pub fn domain(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.map[i - 1].is_some())
            .collect()
    }

    /// Sorted list of values taken.
    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.map.iter().flatten().copied().collect();
        img.sort_unstable();
        img
    }

    /// Number of positions where the map is defined.
    pub fn map_rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// Left-to-right composition: `(f.compose(g))(i) = g(f(i))`.
    pub fn compose(&self, g: &PartialInjection) -> Result<PartialInjection> {
        if self.n != g.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: g.n,
            });
        }
        let map = self
            .map
            .iter()
            .map(|v| v.and_then(|j| g.map[j - 1]))
            .collect();
        Ok(PartialInjection { n: self.n, map })
    }

    /// The inverse injection (swap sources and targets).
    pub fn inverse(&self) -> PartialInjection {
        let mut map = vec![None; self.n];
        for (i, v) in self.map.iter().enumerate() {
            if let Some(j) = v {
                map[j - 1] = Some(i + 1);
            }
        }
        PartialInjection { n: self.n, map }
    }

    /// Whether composing with itself reproduces the map (restriction of
    /// the identity to a subset).
    pub fn is_idempotent(&self) -> bool {
        self.compose(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// All partial injections at a small rank, in a stable order.
    ///
    /// Guarded at rank 5: counts grow as 1, 2, 7, 34, 209, 1546.
    pub fn enumerate(n: usize) -> Result<Vec<PartialInjection>> {
        const MAX: usize = 5;
        if n > MAX {
            return Err(Error::EnumerationGuard {
                what: "partial injections",
                max: MAX,
                got: n,
            });
        }
        let mut out = Vec::new();
        let mut map = vec![None; n];
        fn rec(
            pos: usize,
            n: usize,
            map: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            out: &mut Vec<PartialInjection>,
        ) {
            if pos == n {
                out.push(PartialInjection {
                    n,
                    map: map.clone(),
                });
                return;
            }
            map[pos] = None;
            rec(pos + 1, n, map, used, out);
            for b in 1..=n {
                if !used[b - 1] {
                    used[b - 1] = true;
                    map[pos] = Some(b);
                    rec(pos + 1, n, map, used, out);
                    map[pos] = None;
                    used[b - 1] = false;
                }
            }
        }
        let mut used = vec![false; n];
        rec(0, n, &mut map, &mut used, &mut out);
        Ok(out)
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for i in 1..=self.n {
            if let Some(j) = self.map[i - 1] {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{i}->{j}")?;
                first = false;
            }
        }
        write!(f, "]")
    }
}

/// The injection induced by a single letter: a crossing swaps two adjacent
/// positions, a deletion kills the strand currently at its position.
pub fn tau_of_letter(l: Letter, n: usize) -> PartialInjection {
    let mut p = PartialInjection::identity(n);
    match l {
        Letter::Sigma(i) | Letter::SigmaInv(i) => {
            p.map[i - 1] = Some(i + 1);
            p.map[i] = Some(i);
        }
        Letter::Eps(i) => {
            p.map[i - 1] = None;
        }
    }
    p
}

/// The injection induced by a word (left-to-right product of its letters).
pub fn tau_of_word(word: &Word) -> PartialInjection {
    let mut acc = PartialInjection::identity(word.rank());
    for &l in word.letters() {
        acc = acc
            .compose(&tau_of_letter(l, word.rank()))
            .expect("letter rank matches word rank");
    }
    acc
}
