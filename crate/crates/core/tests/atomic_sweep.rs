//! Atomic pairs over every pair with n <= 6.

use std::collections::BTreeSet;

use poslab::atomic::{
    atomic_witness, canonical_rotation, children, generate_atomic, is_atomic, pair_in_max_rect,
    structural_atomic_check,
};
use poslab::permcore::{all_pairs, grassmann_dual, PositroidPair};
use poslab::pipedream::bottom_pd;
use poslab::smooth::{smooth_at, Status};

fn status(p: &PositroidPair) -> Status {
    smooth_at(&p.f, &p.lambda).unwrap().status
}

fn sweep() -> Vec<PositroidPair> {
    (2..=6).flat_map(|n| (1..n).flat_map(move |k| all_pairs(n, k))).collect()
}

#[test]
fn witnesses_exist_exactly_for_singular_pairs() {
    for p in sweep() {
        let w = atomic_witness(&p).unwrap();
        assert_eq!(w.is_none(), status(&p) == Status::Smooth, "{p}");
        if let Some(a) = w {
            assert!(is_atomic(&a).unwrap(), "{p} -> {a}");
        }
    }
}

#[test]
fn singular_children_have_singular_parents() {
    for p in sweep() {
        let s = status(&p);
        for c in children(&p).unwrap() {
            if status(&c.pair) == Status::Singular {
                assert_eq!(s, Status::Singular, "{p} -> {}", c.pair);
            }
        }
    }
}

#[test]
fn atomic_pairs_have_the_square_form() {
    let mut generated = BTreeSet::new();
    for k in 2..=3 {
        for p in generate_atomic(k).unwrap() {
            generated.insert(canonical_rotation(&p));
        }
    }
    let mut found = BTreeSet::new();
    for p in sweep() {
        let atomic = is_atomic(&p).unwrap();
        let pd = bottom_pd(&p.f, &p.lambda).unwrap();
        assert_eq!(atomic, structural_atomic_check(&pd), "{p}");
        if atomic {
            assert_eq!(p.n(), 2 * p.k(), "{p}");
            assert!(p.lambda.is_cyclic_run(), "{p}");
            let canon = canonical_rotation(&p);
            assert!(generated.contains(&canon), "{p} not generated");
            found.insert(canon);
            let dual = PositroidPair::new(grassmann_dual(&p.f), p.lambda.complement_set()).unwrap();
            assert!(is_atomic(&dual).unwrap(), "dual of {p}");
        }
    }
    assert_eq!(found, generated);
}

#[test]
fn witness_paths_stay_in_one_rectangle() {
    for p in sweep() {
        if status(&p) == Status::Singular {
            assert!(pair_in_max_rect(&p).unwrap(), "{p}");
        }
    }
}
