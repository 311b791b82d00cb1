//! Seeded random-walk properties over the group algebra: whenever a walk
//! from the identity lands in the center, its step word uses every
//! generator an even number of times.

use cubecover::{even_occurrence_check, ExtraspecialGroup, GroupElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn central_closed_walks_have_even_words() {
    let mut checked_total = 0usize;
    for r in 1..=3usize {
        let group = ExtraspecialGroup::from_symmetric_generators(r).unwrap();
        let gens = group.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE + r as u64);
        let mut central_hits = 0usize;
        let mut attempts = 0usize;
        while central_hits < 10_000 {
            attempts += 1;
            assert!(attempts < 5_000_000, "r={r}: walk sampling starved");
            let len = 2 * rng.gen_range(1..=6usize);
            let word: Vec<GroupElement> = (0..len)
                .map(|_| gens[rng.gen_range(0..gens.len())])
                .collect();
            let mut at = group.identity();
            for s in &word {
                at = group.multiply(s, &at).unwrap();
            }
            if at.is_central() {
                central_hits += 1;
                assert!(
                    even_occurrence_check(&group, &word).unwrap(),
                    "r={r}: central product with an odd word {word:?}"
                );
            }
        }
        checked_total += central_hits;
    }
    assert_eq!(checked_total, 30_000);
}

#[test]
fn odd_length_walks_never_reach_the_center() {
    for r in 1..=3usize {
        let group = ExtraspecialGroup::from_symmetric_generators(r).unwrap();
        let gens = group.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(7 * r as u64 + 1);
        for _ in 0..2_000 {
            let len = 2 * rng.gen_range(0..=5usize) + 1;
            let mut at = group.identity();
            for _ in 0..len {
                at = group
                    .multiply(&gens[rng.gen_range(0..gens.len())], &at)
                    .unwrap();
            }
            assert!(!at.is_central());
        }
    }
}
