//! Exhaustive small-rank structures: multiplication tables, a generic
//! table-isomorphism checker, and the rank-one torus monoid whose empty
//! part is the group of integral 2x2 matrices of determinant one.

use crate::error::{Error, Result};
use crate::free_rep::{phi_of_word, PartialFreeAutomorphism};
use crate::pinj::PartialInjection;
use crate::sphere::{enumerate_sphere, nf_to_word, normal_form, SphereKind};
use crate::tower::{assemble, identity_elt, multiply, ElementFlavor, PartialMCElement};
use crate::words::{parse_word, Letter, Word};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Cap on exhaustive table sizes.
pub const TABLE_MAX: usize = 40;

/// A finite multiplication table.  `products[i][j]` is the index of the
/// product of element `i` by element `j` (left-to-right).
#[derive(Debug, Clone)]
pub struct MultiplicationTable {
    pub names: Vec<String>,
    pub products: Vec<Vec<usize>>,
    pub identity: usize,
    /// Surviving-strand counts, for monoid tables that have them.
    pub ranks: Option<Vec<usize>>,
}

impl MultiplicationTable {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Exhaustive associativity check.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                let ij = self.products[i][j];
                for k in 0..n {
                    if self.products[ij][k] != self.products[i][self.products[j][k]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The identity index really is two-sided neutral.
    pub fn identity_is_neutral(&self) -> bool {
        let e = self.identity;
        (0..self.len()).all(|i| self.products[e][i] == i && self.products[i][e] == i)
    }

    /// Indices commuting with every element.
    pub fn central_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| self.products[i][j] == self.products[j][i]))
            .collect()
    }

    /// Index whose name matches, if any.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Stable text rendering: a legend naming every element, then every
    /// product line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            out.push_str(&format!("m{i}: {name}\n"));
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                out.push_str(&format!("m{i} * m{j} = m{}\n", self.products[i][j]));
            }
        }
        out
    }
}

fn table_from<T, FName, FMul>(
    elements: &[T],
    identity_index: usize,
    ranks: Option<Vec<usize>>,
    name_of: FName,
    mul: FMul,
) -> Result<MultiplicationTable>
where
    FName: Fn(&T) -> String,
    FMul: Fn(&T, &T) -> Result<T>,
{
    if elements.len() > TABLE_MAX {
        return Err(Error::EnumerationGuard {
            what: "table elements",
            max: TABLE_MAX,
            got: elements.len(),
        });
    }
    let names: Vec<String> = elements.iter().map(&name_of).collect();
    let mut index: HashMap<String, usize> = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::Invalid {
                what: "table elements",
                detail: format!("duplicate canonical form `{name}`"),
            });
        }
    }
    let mut products = Vec::with_capacity(elements.len());
    for a in elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in elements {
            let p = mul(a, b)?;
            let key = name_of(&p);
            let idx = *index.get(&key).ok_or_else(|| Error::Invalid {
                what: "table closure",
                detail: format!("product `{key}` escapes the element list"),
            })?;
            row.push(idx);
        }
        products.push(row);
    }
    Ok(MultiplicationTable {
        names,
        products,
        identity: identity_index,
        ranks,
    })
}

// ---------------------------------------------------------------------------
// Concrete tables
// ---------------------------------------------------------------------------

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn full_rank_core_words(k: usize) -> Vec<Word> {
    let texts: &[&str] = match k {
        0 | 1 => &[""],
        2 => &["", "s1"],
        3 => &["", "s1", "s2", "s1 s2", "s2 s1", "s1 s2 s1"],
        _ => unreachable!("guarded by caller"),
    };
    texts.iter().map(|t| parse_word(t, k).unwrap()).collect()
}

/// Every partial mapping class of the sphere at rank `n <= 3`.
pub fn enumerate_im0n(n: usize) -> Result<Vec<PartialMCElement>> {
    const MAX: usize = 3;
    if n > MAX {
        return Err(Error::EnumerationGuard {
            what: "partial sphere elements",
            max: MAX,
            got: n,
        });
    }
    let flavor = ElementFlavor::SphereMcg;
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for dom in subsets_of_size(n, k) {
            for img in subsets_of_size(n, k) {
                for core in full_rank_core_words(k) {
                    out.push(assemble(&dom, &img, &core, n, flavor)?);
                }
            }
        }
    }
    Ok(out)
}

/// Multiplication table of the partial sphere monoid at rank `n <= 3`.
pub fn im0n_table(n: usize) -> Result<MultiplicationTable> {
    let elements = enumerate_im0n(n)?;
    let id = identity_elt(n, ElementFlavor::SphereMcg);
    let identity = elements
        .iter()
        .position(|e| *e == id)
        .expect("identity enumerated");
    let ranks = Some(elements.iter().map(|e| e.map_rank()).collect());
    table_from(&elements, identity, ranks, |e| e.to_string(), multiply)
}

/// Multiplication table of all partial injections at rank `n`.
pub fn symmetric_inverse_table(n: usize) -> Result<MultiplicationTable> {
    let elements = PartialInjection::enumerate(n)?;
    let id = PartialInjection::identity(n);
    let identity = elements
        .iter()
        .position(|p| *p == id)
        .expect("identity enumerated");
    let ranks = Some(elements.iter().map(|p| p.map_rank()).collect());
    table_from(
        &elements,
        identity,
        ranks,
        |p| p.to_string(),
        |a, b| a.compose(b),
    )
}

/// Multiplication table of the permutations at rank `n` (full-rank
/// partial injections).
pub fn symmetric_group_table(n: usize) -> Result<MultiplicationTable> {
    let elements: Vec<PartialInjection> = PartialInjection::enumerate(n)?
        .into_iter()
        .filter(|p| p.map_rank() == n)
        .collect();
    let id = PartialInjection::identity(n);
    let identity = elements
        .iter()
        .position(|p| *p == id)
        .expect("identity enumerated");
    table_from(
        &elements,
        identity,
        None,
        |p| p.to_string(),
        |a, b| a.compose(b),
    )
}

/// Multiplication table of a sphere group at rank `n <= 3`.
pub fn sphere_group_table(n: usize, kind: SphereKind) -> Result<MultiplicationTable> {
    let elements = enumerate_sphere(n, kind)?;
    let trivial = normal_form(&Word::empty(n), kind)?;
    let identity = elements
        .iter()
        .position(|nf| *nf == trivial)
        .expect("identity enumerated");
    table_from(
        &elements,
        identity,
        None,
        |nf| nf.to_string(),
        |a, b| {
            let w = nf_to_word(a)?.concat(&nf_to_word(b)?)?;
            normal_form(&w, kind)
        },
    )
}

// ---------------------------------------------------------------------------
// Isomorphism checking
// ---------------------------------------------------------------------------

/// Smallest `(p, c)` with the `p+c`-th power equal to the `p`-th.
fn power_pair(products: &[Vec<usize>], i: usize) -> (usize, usize) {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut cur = i;
    let mut step = 1;
    loop {
        if let Some(&first) = seen.get(&cur) {
            return (first, step - first);
        }
        seen.insert(cur, step);
        cur = products[cur][i];
        step += 1;
    }
}

/// Refinement key: own class plus the sorted multiset of
/// (other class, left-product class, right-product class) triples.
type RefinementKey = (u32, Vec<(u32, u32, u32)>);

/// Stable class labels refined by multiplication profiles.
fn refine_classes(t: &MultiplicationTable) -> Vec<u32> {
    let n = t.len();
    let mut classes: Vec<u32> = {
        let mut key_of: BTreeMap<(bool, bool, usize, usize), u32> = BTreeMap::new();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let idem = t.products[i][i] == i;
            let is_id = i == t.identity;
            let (p, c) = power_pair(&t.products, i);
            let next = key_of.len() as u32;
            let label = *key_of.entry((is_id, idem, p, c)).or_insert(next);
            out.push(label);
        }
        out
    };
    loop {
        let mut key_of: BTreeMap<RefinementKey, u32> = BTreeMap::new();
        let mut next_classes = Vec::with_capacity(n);
        for i in 0..n {
            let mut profile: Vec<(u32, u32, u32)> = (0..n)
                .map(|j| {
                    (
                        classes[j],
                        classes[t.products[i][j]],
                        classes[t.products[j][i]],
                    )
                })
                .collect();
            profile.sort_unstable();
            let next = key_of.len() as u32;
            let label = *key_of.entry((classes[i], profile)).or_insert(next);
            next_classes.push(label);
        }
        let old_count = classes
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let new_count = next_classes
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        classes = next_classes;
        if new_count == old_count {
            return classes;
        }
    }
}

fn class_histogram(classes: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in classes {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Decide whether two finite multiplication tables are isomorphic
/// (identity mapped to identity), by invariant refinement plus
/// backtracking with full final verification.
pub fn iso_check(a: &MultiplicationTable, b: &MultiplicationTable) -> Result<bool> {
    let n = a.len();
    if n != b.len() {
        return Ok(false);
    }
    if n > TABLE_MAX {
        return Err(Error::EnumerationGuard {
            what: "isomorphism search",
            max: TABLE_MAX,
            got: n,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let ca = refine_classes(a);
    let cb = refine_classes(b);
    // Class labels are not canonical across tables, so the only cheap
    // necessary condition is that the class-size multisets agree.
    let mut sa: Vec<usize> = class_histogram(&ca).values().copied().collect();
    let mut sb: Vec<usize> = class_histogram(&cb).values().copied().collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    // Candidate targets per element of A: same-signature elements of B.
    // Signatures are canonical labels, but the label spaces of A and B
    // may be permuted; match classes by their full sorted invariant
    // instead: group B elements by class, and pair classes greedily via
    // compatibility during search.
    let order: Vec<usize> = {
        let hist = class_histogram(&ca);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (hist[&ca[i]], i));
        // identity first
        idx.retain(|&i| i != a.identity);
        let mut v = vec![a.identity];
        v.extend(idx);
        v
    };
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    // Class pairing is discovered on the fly: a map from A-classes to
    // B-classes, required to be consistent.
    let mut class_map: HashMap<u32, u32> = HashMap::new();
    fn consistent(
        a: &MultiplicationTable,
        b: &MultiplicationTable,
        assignment: &[Option<usize>],
        x: usize,
    ) -> bool {
        let fx = assignment[x].unwrap();
        for (u, fu) in assignment.iter().enumerate() {
            let Some(fu) = *fu else { continue };
            let pairs = [(x, u, fx, fu), (u, x, fu, fx)];
            for (p, q, fp, fq) in pairs {
                let prod = a.products[p][q];
                let bprod = b.products[fp][fq];
                if let Some(fprod) = assignment[prod] {
                    if fprod != bprod {
                        return false;
                    }
                }
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn search(
        pos: usize,
        order: &[usize],
        a: &MultiplicationTable,
        b: &MultiplicationTable,
        ca: &[u32],
        cb: &[u32],
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        class_map: &mut HashMap<u32, u32>,
    ) -> bool {
        if pos == order.len() {
            let n = a.len();
            for i in 0..n {
                for j in 0..n {
                    let fi = assignment[i].unwrap();
                    let fj = assignment[j].unwrap();
                    if assignment[a.products[i][j]].unwrap() != b.products[fi][fj] {
                        return false;
                    }
                }
            }
            return true;
        }
        let x = order[pos];
        for y in 0..b.len() {
            if used[y] {
                continue;
            }
            // The first slot in `order` is A's identity; pin it to B's.
            if pos == 0 && y != b.identity {
                continue;
            }
            match class_map.get(&ca[x]) {
                Some(&mapped) if mapped != cb[y] => continue,
                _ => {}
            }
            let inserted = if class_map.contains_key(&ca[x]) {
                false
            } else {
                if class_map.values().any(|&v| v == cb[y]) {
                    continue; // class already taken by another A-class
                }
                class_map.insert(ca[x], cb[y]);
                true
            };
            assignment[x] = Some(y);
            used[y] = true;
            if consistent(a, b, assignment, x)
                && search(pos + 1, order, a, b, ca, cb, assignment, used, class_map)
            {
                return true;
            }
            assignment[x] = None;
            used[y] = false;
            if inserted {
                class_map.remove(&ca[x]);
            }
        }
        false
    }
    Ok(search(
        0,
        &order,
        a,
        b,
        &ca,
        &cb,
        &mut assignment,
        &mut used,
        &mut class_map,
    ))
}

// ---------------------------------------------------------------------------
// 2x2 integral matrices and the rank-one torus monoid
// ---------------------------------------------------------------------------

/// Row-major 2x2 integer matrix.
pub type Mat2 = [[i64; 2]; 2];

pub const MAT_ID: Mat2 = [[1, 0], [0, 1]];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0i64; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

pub fn mat_det(m: &Mat2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn mat_text(m: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

/// The crossing representation by determinant-one matrices (rank 3).
pub fn rho_letter(l: Letter) -> Result<Mat2> {
    match l {
        Letter::Sigma(1) => Ok([[1, 1], [0, 1]]),
        Letter::SigmaInv(1) => Ok([[1, -1], [0, 1]]),
        Letter::Sigma(2) => Ok([[1, 0], [-1, 1]]),
        Letter::SigmaInv(2) => Ok([[1, 0], [1, 1]]),
        Letter::Eps(_) => Err(Error::EpsLetterPresent {
            op: "matrix representation",
        }),
        _ => Err(Error::Invalid {
            what: "crossing index",
            detail: format!("`{l}` has no matrix image"),
        }),
    }
}

/// Left-to-right product of the letter matrices of a rank-3 word.
pub fn rho(word: &Word) -> Result<Mat2> {
    if word.rank() != 3 {
        return Err(Error::RankMismatch {
            left: word.rank(),
            right: 3,
        });
    }
    let mut acc = MAT_ID;
    for &l in word.letters() {
        acc = mat_mul(&acc, &rho_letter(l)?);
    }
    Ok(acc)
}

/// The rank-one torus monoid: a full part (rank-3 crossing words up to
/// disc equality) glued to an empty part (determinant-one matrices),
/// with the matrix representation carrying full into empty.
#[derive(Debug, Clone)]
pub enum IM11Element {
    Full {
        pfa: PartialFreeAutomorphism,
        witness: Word,
    },
    Empty(Mat2),
}

impl PartialEq for IM11Element {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (IM11Element::Full { pfa: a, .. }, IM11Element::Full { pfa: b, .. }) => a == b,
            (IM11Element::Empty(a), IM11Element::Empty(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for IM11Element {}

impl IM11Element {
    pub fn identity() -> IM11Element {
        im11_full(&Word::empty(3)).expect("identity word is valid")
    }
}

/// A full element from a deletion-free rank-3 word.
pub fn im11_full(word: &Word) -> Result<IM11Element> {
    if word.rank() != 3 {
        return Err(Error::RankMismatch {
            left: word.rank(),
            right: 3,
        });
    }
    if word.has_eps() {
        return Err(Error::EpsLetterPresent {
            op: "full torus element",
        });
    }
    Ok(IM11Element::Full {
        pfa: phi_of_word(word),
        witness: word.clone(),
    })
}

/// An empty element from a determinant-one matrix.
pub fn im11_empty(m: Mat2) -> Result<IM11Element> {
    if mat_det(&m) != 1 {
        return Err(Error::Invalid {
            what: "matrix",
            detail: format!("determinant {} (need 1)", mat_det(&m)),
        });
    }
    Ok(IM11Element::Empty(m))
}

/// Product in the rank-one torus monoid: full*full stays full, and any
/// empty factor pushes everything through the matrix representation.
pub fn im11_mul(a: &IM11Element, b: &IM11Element) -> Result<IM11Element> {
    use IM11Element::*;
    Ok(match (a, b) {
        (Full { witness: u, .. }, Full { witness: v, .. }) => im11_full(&u.concat(v)?)?,
        (Empty(m), Full { witness: v, .. }) => Empty(mat_mul(m, &rho(v)?)),
        (Full { witness: u, .. }, Empty(m)) => Empty(mat_mul(&rho(u)?, m)),
        (Empty(m1), Empty(m2)) => Empty(mat_mul(m1, m2)),
    })
}

impl fmt::Display for IM11Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IM11Element::Full { pfa, .. } => {
                write!(f, "full{{")?;
                for i in 1..=3 {
                    if i > 1 {
                        write!(f, "; ")?;
                    }
                    match pfa.image(i) {
                        Some(w) => write!(f, "{i} -> {w}")?,
                        None => write!(f, "{i} -> _")?,
                    }
                }
                write!(f, "}}")
            }
            IM11Element::Empty(m) => write!(f, "empty{}", mat_text(m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_word, Rng64};

    #[test]
    fn im0n_counts() {
        let expected = [1usize, 2, 7, 34];
        for (n, &count) in expected.iter().enumerate() {
            let elements = enumerate_im0n(n).unwrap();
            assert_eq!(elements.len(), count, "rank {n}");
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    assert!(i == j || a != b, "duplicates at rank {n}: {i} {j}");
                }
            }
        }
        assert!(enumerate_im0n(4).is_err());
    }

    #[test]
    fn im0n_tables_are_monoids() {
        for n in 0..=3 {
            let t = im0n_table(n).unwrap();
            assert!(t.is_associative(), "rank {n}");
            assert!(t.identity_is_neutral(), "rank {n}");
        }
    }

    #[test]
    fn symmetric_inverse_tables() {
        for n in 0..=3 {
            let t = symmetric_inverse_table(n).unwrap();
            assert_eq!(t.len(), [1, 2, 7, 34][n]);
            assert!(t.is_associative());
            assert!(t.identity_is_neutral());
        }
    }

    #[test]
    fn iso_small_monoids() {
        for n in 0..=3 {
            let a = im0n_table(n).unwrap();
            let b = symmetric_inverse_table(n).unwrap();
            assert!(iso_check(&a, &b).unwrap(), "rank {n}");
        }
        // Non-isomorphic: different sizes, and same-size non-groups.
        let a = symmetric_inverse_table(2).unwrap();
        let b = symmetric_inverse_table(3).unwrap();
        assert!(!iso_check(&a, &b).unwrap());
    }

    #[test]
    fn iso_distinguishes_same_size() {
        // The two groups of order 6: permutations vs the cyclic table.
        let sym = symmetric_group_table(3).unwrap();
        let cyclic = {
            let elements: Vec<usize> = (0..6).collect();
            MultiplicationTable {
                names: elements.iter().map(|i| format!("c{i}")).collect(),
                products: (0..6)
                    .map(|i| (0..6).map(|j| (i + j) % 6).collect())
                    .collect(),
                identity: 0,
                ranks: None,
            }
        };
        assert!(cyclic.is_associative());
        assert!(!iso_check(&sym, &cyclic).unwrap());
        let mcg = sphere_group_table(3, SphereKind::Mcg).unwrap();
        assert!(iso_check(&mcg, &sym).unwrap());
    }

    #[test]
    fn matrix_representation_anchors() {
        let a = rho(&parse_word("s1", 3).unwrap()).unwrap();
        let b = rho(&parse_word("s2", 3).unwrap()).unwrap();
        let aba = mat_mul(&mat_mul(&a, &b), &a);
        let bab = mat_mul(&mat_mul(&b, &a), &b);
        assert_eq!(aba, bab);
        assert_eq!(aba, [[0, 1], [-1, 0]]);
        let d2 = rho(&crate::words::delta(3).pow(2)).unwrap();
        assert_eq!(d2, [[-1, 0], [0, -1]]);
        let d4 = rho(&crate::words::delta(3).pow(4)).unwrap();
        assert_eq!(d4, MAT_ID);
        assert_eq!(mat_det(&aba), 1);
        assert_eq!(mat_text(&aba), "[[0,1],[-1,0]]");
    }

    #[test]
    fn rho_respects_inversion() {
        let mut rng = Rng64::new(53);
        for _ in 0..30 {
            let len_w = rng.gen_range(10);
            let w = random_word(&mut rng, 3, len_w, false);
            let m = rho(&w).unwrap();
            let mi = rho(&w.inverse()).unwrap();
            assert_eq!(mat_mul(&m, &mi), MAT_ID);
            assert_eq!(mat_det(&m), 1);
        }
    }

    #[test]
    fn im11_mixed_products() {
        let mut rng = Rng64::new(59);
        let id = IM11Element::identity();
        for _ in 0..40 {
            let pick = |rng: &mut Rng64| -> IM11Element {
                let len_w = rng.gen_range(8);
                let w = random_word(rng, 3, len_w, false);
                if rng.gen_bool() {
                    im11_full(&w).unwrap()
                } else {
                    im11_empty(rho(&w).unwrap()).unwrap()
                }
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            let c = pick(&mut rng);
            let ab_c = im11_mul(&im11_mul(&a, &b).unwrap(), &c).unwrap();
            let a_bc = im11_mul(&a, &im11_mul(&b, &c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(im11_mul(&id, &a).unwrap(), a);
            assert_eq!(im11_mul(&a, &id).unwrap(), a);
        }
    }

    #[test]
    fn table_rendering_shape() {
        let t = symmetric_inverse_table(1).unwrap();
        let text = t.render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2 + 4);
        assert!(lines[0].starts_with("m0: "));
        assert!(lines.iter().any(|l| l.contains(" * ")));
    }
}
