//! Acceptance gate: twelve checks, one test function each, covering
//! exact small-case tables, relation certification under each equality
//! engine, randomized soundness properties, and cross-engine agreement.
//! Each test prints a single summary line on success; a failure panics
//! with the offending case.

use std::time::{Duration, Instant};

use imcm_core::free_rep::{ib_equal_disc, iout_equal_verifier, psi_of_word, OuterVerdict};
use imcm_core::parse_word;
use imcm_core::pinj::tau_of_word;
use imcm_core::sampling::{random_word, Rng64};
use imcm_core::small_cases::{
    enumerate_im0n, im0n_table, im11_empty, im11_full, im11_mul, iso_check, mat_mul, rho,
    sphere_group_table, symmetric_group_table, symmetric_inverse_table, IM11Element, MAT_ID,
};
use imcm_core::sphere::{equal_sphere, nf_to_word, normal_form, SphereKind};
use imcm_core::tower::{
    abelianize, delta_shift_check, embed, factorize, inverse_elt, multiply, normalize,
    ElementFlavor,
};
use imcm_core::words::{
    balanced_inverse_relations, braid_relations, delta, eps_block, eps_block_marked,
    pure_braid_relations, relations, two_generator_braid_relations,
    two_generator_inverse_relations, two_generator_sphere_relations, RelationFlavor, RelationSet,
    Word,
};

const FLAVORS: [ElementFlavor; 3] = [
    ElementFlavor::Disc,
    ElementFlavor::SphereBraid,
    ElementFlavor::SphereMcg,
];

fn assert_within(start: Instant, bound: Duration, what: &str) -> Duration {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= bound,
        "{what} took {elapsed:?}, over the {bound:?} budget"
    );
    elapsed
}

#[test]
fn acceptance_01_small_monoid_tables() {
    let start = Instant::now();
    let sizes: Vec<usize> = (0..=3).map(|n| enumerate_im0n(n).unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 2, 7, 34]);
    for n in [2usize, 3] {
        let ours = im0n_table(n).unwrap();
        let rook = symmetric_inverse_table(n).unwrap();
        assert!(
            iso_check(&ours, &rook).unwrap(),
            "rank-{n} table is not isomorphic to the partial-map table"
        );
    }
    let elapsed = assert_within(start, Duration::from_secs(5), "criterion 1");
    println!(
        "acceptance 01: pass - partial mapping-class monoid sizes 1,2,7,34; \
         ranks 2 and 3 isomorphic to the partial-injection monoids ({elapsed:?})"
    );
}

#[test]
fn acceptance_02_finite_sphere_groups() {
    let start = Instant::now();

    let braid = sphere_group_table(3, SphereKind::Braid).unwrap();
    assert_eq!(braid.len(), 12);
    assert!(braid.is_associative());
    assert!(braid.identity_is_neutral());
    let twist = normal_form(&delta(3).pow(2), SphereKind::Braid).unwrap();
    let twist_idx = braid
        .find(&twist.to_string())
        .expect("full twist appears among the twelve");
    assert_ne!(twist_idx, braid.identity, "full twist is not the identity");
    assert_eq!(
        braid.products[twist_idx][twist_idx], braid.identity,
        "full twist squares to the identity"
    );
    assert!(
        braid.central_indices().contains(&twist_idx),
        "full twist is central"
    );

    let mcg = sphere_group_table(3, SphereKind::Mcg).unwrap();
    assert_eq!(mcg.len(), 6);
    let symmetric = symmetric_group_table(3).unwrap();
    assert!(iso_check(&mcg, &symmetric).unwrap());

    let elapsed = assert_within(start, Duration::from_secs(5), "criterion 2");
    println!(
        "acceptance 02: pass - twelve-element sphere braid group with central \
         order-two full twist; six-element mapping-class group isomorphic to \
         the symmetric group ({elapsed:?})"
    );
}

#[test]
fn acceptance_03_relation_certification() {
    let start = Instant::now();
    let mut pairs_checked = 0usize;

    let mut certify = |set: &RelationSet, eq: &mut dyn FnMut(&Word, &Word) -> bool| {
        for pair in &set.pairs {
            assert!(
                eq(&pair.lhs, &pair.rhs),
                "relation {} of set {} at rank {} failed",
                pair.label,
                set.name,
                set.rank
            );
            pairs_checked += 1;
        }
    };

    for n in 0..=5usize {
        // Disc group presentations under the free-group action.
        let mut phi = |l: &Word, r: &Word| ib_equal_disc(l, r).unwrap();
        certify(&braid_relations(n), &mut phi);
        certify(&two_generator_braid_relations(n), &mut phi);
        certify(&pure_braid_relations(n), &mut phi);

        // Disc inverse-monoid presentations under the element tower.
        let mut disc = |l: &Word, r: &Word| {
            normalize(l, ElementFlavor::Disc).unwrap() == normalize(r, ElementFlavor::Disc).unwrap()
        };
        certify(&relations(RelationFlavor::DiscInverse, n), &mut disc);
        certify(&balanced_inverse_relations(n), &mut disc);
        certify(&two_generator_inverse_relations(n), &mut disc);

        // Sphere group presentations under the layered normal form.
        let mut braid_nf = |l: &Word, r: &Word| equal_sphere(l, r, SphereKind::Braid).unwrap();
        certify(&relations(RelationFlavor::SphereBraid, n), &mut braid_nf);
        certify(&two_generator_sphere_relations(n, false), &mut braid_nf);
        let mut mcg_nf = |l: &Word, r: &Word| equal_sphere(l, r, SphereKind::Mcg).unwrap();
        certify(&relations(RelationFlavor::SphereMcg, n), &mut mcg_nf);
        certify(&two_generator_sphere_relations(n, true), &mut mcg_nf);

        // Sphere inverse-monoid presentations under the element tower.
        let mut sb = |l: &Word, r: &Word| {
            normalize(l, ElementFlavor::SphereBraid).unwrap()
                == normalize(r, ElementFlavor::SphereBraid).unwrap()
        };
        certify(&relations(RelationFlavor::SphereInverseBraid, n), &mut sb);
        let mut sm = |l: &Word, r: &Word| {
            normalize(l, ElementFlavor::SphereMcg).unwrap()
                == normalize(r, ElementFlavor::SphereMcg).unwrap()
        };
        certify(&relations(RelationFlavor::SphereInverseMcg, n), &mut sm);

        // Partial-map presentation under the strand map itself.
        let mut tau = |l: &Word, r: &Word| tau_of_word(l) == tau_of_word(r);
        certify(&relations(RelationFlavor::SymmetricInverse, n), &mut tau);
    }

    let elapsed = assert_within(start, Duration::from_secs(30), "criterion 3");
    println!(
        "acceptance 03: pass - {pairs_checked} defining relation pairs hold \
         under their engines for all ranks up to 5 ({elapsed:?})"
    );
}

#[test]
fn acceptance_04_free_engine_agreement() {
    let mut rng = Rng64::new(404);
    let total = 10_000usize;
    for trial in 0..total {
        let n = 2 + rng.gen_range(4);
        let len_u = rng.gen_range(9);
        let u = random_word(&mut rng, n, len_u, true);
        let len_v = rng.gen_range(9);
        let v = random_word(&mut rng, n, len_v, true);
        let by_phi = ib_equal_disc(&u, &v).unwrap();
        let by_tower = normalize(&u, ElementFlavor::Disc).unwrap()
            == normalize(&v, ElementFlavor::Disc).unwrap();
        assert_eq!(
            by_phi, by_tower,
            "trial {trial}: engines disagree on {u} vs {v} at rank {n}"
        );
    }
    println!(
        "acceptance 04: pass - free-group action and element tower agree on \
         {total} random disc pairs with zero discrepancies"
    );
}

#[test]
fn acceptance_05_roundtrip_and_associativity() {
    // Exhaustive round trip at ranks 2 and 3.
    let mut exhaustive = 0usize;
    for n in [2usize, 3] {
        for e in enumerate_im0n(n).unwrap() {
            let back = normalize(&embed(&e).unwrap(), e.flavor).unwrap();
            assert_eq!(back, e, "round trip failed on {e} at rank {n}");
            exhaustive += 1;
        }
    }

    // Randomized round trip at ranks 4 and 5.
    let mut rng = Rng64::new(505);
    let random_total = 1_000usize;
    for _ in 0..random_total {
        let n = 4 + rng.gen_range(2);
        let len = rng.gen_range(10);
        let w = random_word(&mut rng, n, len, true);
        let e = normalize(&w, ElementFlavor::SphereMcg).unwrap();
        let back = normalize(&embed(&e).unwrap(), e.flavor).unwrap();
        assert_eq!(back, e, "round trip failed on {w} at rank {n}");
    }

    // Randomized associativity across flavors.
    let triple_total = 1_000usize;
    for trial in 0..triple_total {
        let n = 2 + rng.gen_range(4);
        let flavor = FLAVORS[rng.gen_range(3)];
        let draw = |rng: &mut Rng64| {
            let len = rng.gen_range(8);
            let w = random_word(rng, n, len, true);
            normalize(&w, flavor).unwrap()
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
        let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right, "associativity failed at trial {trial}");
    }

    println!(
        "acceptance 05: pass - round trip exact on {exhaustive} small elements \
         and {random_total} random elements; {triple_total} random triples associate"
    );
}

#[test]
fn acceptance_06_inverse_axioms() {
    let mut rng = Rng64::new(606);
    let per_flavor = 1_000usize;
    for flavor in FLAVORS {
        for _ in 0..per_flavor {
            let n = 2 + rng.gen_range(4);
            let len = rng.gen_range(9);
            let w = random_word(&mut rng, n, len, true);
            let a = normalize(&w, flavor).unwrap();
            let a_inv = inverse_elt(&a).unwrap();
            let aba = multiply(&multiply(&a, &a_inv).unwrap(), &a).unwrap();
            assert_eq!(aba, a, "a a' a != a for {w} under {flavor}");
            let bab = multiply(&multiply(&a_inv, &a).unwrap(), &a_inv).unwrap();
            assert_eq!(bab, a_inv, "a' a a' != a' for {w} under {flavor}");
        }
    }
    println!(
        "acceptance 06: pass - inverse axioms hold on {per_flavor} random \
         elements in each of the three flavors"
    );
}

#[test]
fn acceptance_07_factorization() {
    let elements = enumerate_im0n(3).unwrap();
    assert_eq!(elements.len(), 34);
    for e in &elements {
        let (idem, group) = factorize(e).unwrap();
        assert!(idem.is_idempotent(), "left factor of {e} is not idempotent");
        assert_eq!(
            group.map_rank(),
            3,
            "right factor of {e} does not survive everywhere"
        );
        let product = multiply(&idem, &group).unwrap();
        assert_eq!(product, *e, "factorization does not reconstruct {e}");
    }
    println!(
        "acceptance 07: pass - all 34 rank-3 elements factor exactly as \
         idempotent times full-rank element"
    );
}

#[test]
fn acceptance_08_delta_shift() {
    for flavor in FLAVORS {
        for n in 0..=6usize {
            assert!(
                delta_shift_check(n, flavor).unwrap(),
                "half-twist conjugation shift failed at rank {n} under {flavor}"
            );
        }
    }
    println!(
        "acceptance 08: pass - deletions slide through the half twist onto \
         the mirrored strand for all ranks up to 6, all flavors"
    );
}

#[test]
fn acceptance_09_deletion_block_coherence() {
    let mut checked = 0usize;
    for flavor in FLAVORS {
        for n in 1..=6usize {
            for k in 0..n {
                let plain = eps_block(k, n).unwrap();
                let marked = eps_block_marked(k, n).unwrap();
                let a = normalize(&plain, flavor).unwrap();
                let b = normalize(&marked, flavor).unwrap();
                assert_eq!(
                    a, b,
                    "deletion-block expressions disagree at k={k}, n={n} under {flavor}"
                );
                checked += 1;
            }
        }
    }
    println!(
        "acceptance 09: pass - both deletion-block expressions normalize \
         identically in {checked} (k, n, flavor) cases"
    );
}

#[test]
fn acceptance_10_abelianization() {
    // The map must be constant on every defining relation pair.
    let mut pairs = 0usize;
    for n in 0..=5usize {
        let rels = relations(RelationFlavor::SphereInverseMcg, n);
        for pair in &rels.pairs {
            assert_eq!(
                abelianize(&pair.lhs),
                abelianize(&pair.rhs),
                "abelianization split on {} at rank {n}",
                pair.label
            );
            pairs += 1;
        }
    }

    // Order of the crossing class: 2, 6, 4 at ranks 3, 4, 5.
    let mut orders = Vec::new();
    for n in [3usize, 4, 5] {
        let s1 = parse_word("s1", n).unwrap();
        let mut order = 0u64;
        for t in 1..=16u64 {
            if abelianize(&s1.pow(t as i64)).residue == 0 {
                order = t;
                break;
            }
        }
        orders.push(order);
    }
    assert_eq!(orders, vec![2, 6, 4]);

    println!(
        "acceptance 10: pass - abelianization respects {pairs} relation pairs; \
         crossing-class orders are 2, 6, 4 at ranks 3, 4, 5"
    );
}

#[test]
fn acceptance_11_torus_monoid() {
    // The full-rank/empty monoid built over three strands and a torus
    // matrix part: the half twist maps to an order-four matrix.
    let d = delta(3);
    assert_eq!(rho(&d.pow(2)).unwrap(), [[-1, 0], [0, -1]]);
    assert_eq!(rho(&d.pow(4)).unwrap(), MAT_ID);

    for set in [braid_relations(3), two_generator_braid_relations(3)] {
        for pair in &set.pairs {
            assert_eq!(
                rho(&pair.lhs).unwrap(),
                rho(&pair.rhs).unwrap(),
                "matrix representation broke relation {}",
                pair.label
            );
        }
    }

    let mut rng = Rng64::new(1111);
    let total = 1_000usize;
    let draw = |rng: &mut Rng64| -> IM11Element {
        let len = rng.gen_range(8);
        let w = random_word(rng, 3, len, false);
        if rng.gen_bool() {
            im11_full(&w).unwrap()
        } else {
            im11_empty(rho(&w).unwrap()).unwrap()
        }
    };
    for trial in 0..total {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let left = im11_mul(&im11_mul(&a, &b).unwrap(), &c).unwrap();
        let right = im11_mul(&a, &im11_mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right, "mixed associativity failed at trial {trial}");
    }

    // The matrix product is reached through the representation.
    let m = rho(&parse_word("s1 s2^-1", 3).unwrap()).unwrap();
    let via_mul = im11_mul(
        &im11_empty(MAT_ID).unwrap(),
        &im11_full(&parse_word("s1 s2^-1", 3).unwrap()).unwrap(),
    )
    .unwrap();
    assert_eq!(via_mul, im11_empty(mat_mul(&MAT_ID, &m)).unwrap());

    println!(
        "acceptance 11: pass - matrix part has the order-four half twist and \
         respects the braid relations; {total} mixed triples associate"
    );
}

#[test]
fn acceptance_12_cross_engine_agreement() {
    let n = 3usize;
    let bound = 6usize;
    let mut rng = Rng64::new(1212);
    let mut pairs: Vec<(Word, Word)> = Vec::new();

    // All pairs drawn from the six-element enumeration, for guaranteed
    // equal and distinct coverage.
    let forms = sphere_group_table(n, SphereKind::Mcg).unwrap();
    let words: Vec<Word> = {
        let mut ws = Vec::new();
        for nf in imcm_core::sphere::enumerate_sphere(n, SphereKind::Mcg).unwrap() {
            ws.push(nf_to_word(&nf).unwrap());
        }
        ws
    };
    assert_eq!(forms.len(), words.len());
    for a in &words {
        for b in &words {
            pairs.push((a.clone(), b.clone()));
        }
    }

    // Random crossing-only pairs on top.
    for _ in 0..120 {
        let len_u = rng.gen_range(8);
        let u = random_word(&mut rng, n, len_u, false);
        let len_v = rng.gen_range(8);
        let v = random_word(&mut rng, n, len_v, false);
        pairs.push((u, v));
    }

    let mut conclusive = 0usize;
    let mut inconclusive = 0usize;
    for (u, v) in &pairs {
        let by_form = equal_sphere(u, v, SphereKind::Mcg).unwrap();
        let verdict = iout_equal_verifier(&psi_of_word(u), &psi_of_word(v), bound);
        match verdict {
            OuterVerdict::Equal => {
                assert!(
                    by_form,
                    "verifier says equal, form says distinct: {u} vs {v}"
                );
                conclusive += 1;
            }
            OuterVerdict::Distinct => {
                assert!(
                    !by_form,
                    "verifier says distinct, form says equal: {u} vs {v}"
                );
                conclusive += 1;
            }
            OuterVerdict::Inconclusive => inconclusive += 1,
        }
    }
    assert!(
        conclusive >= pairs.len() / 2,
        "verifier was conclusive on too few pairs ({conclusive}/{})",
        pairs.len()
    );

    println!(
        "acceptance 12: pass - normal form and action verifier agree on all \
         {conclusive} conclusive pairs ({inconclusive} inconclusive) with zero \
         contradictions"
    );
}
