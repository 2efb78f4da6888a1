//! Exhaustive pipe dream checks over every pair with n <= 6.

use poslab::permcore::{all_pairs, all_siteswaps, contains_point, ColumnSet};
use poslab::pipedream::{
    brute_enumerate, contract_pd, enumerate, greedy_bottom, greedy_top, is_reduced, moves, readout, word_readout,
};
use poslab::word::Group;

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=6 {
        for k in 0..=n {
            for p in all_pairs(n, k) {
                let e = enumerate(&p.f, &p.lambda).unwrap();
                let b = brute_enumerate(&p.f, &p.lambda).unwrap();
                assert_eq!(e, b, "{p}");
                let len = Group::Affine(n).length(p.f.window().window());
                for pd in &e {
                    assert_eq!(pd.num_crosses(), len, "{p}");
                    assert!(is_reduced(pd));
                    assert_eq!(readout(pd).unwrap().window(), word_readout(pd).as_slice(), "{p}");
                }
            }
        }
    }
}

#[test]
fn off_variety_pairs_have_no_pipe_dreams() {
    for n in 1..=5 {
        for k in 0..=n {
            for f in all_siteswaps(n, k) {
                for lam in ColumnSet::all(n, k) {
                    if !contains_point(&f, &lam).unwrap() {
                        assert!(enumerate(&f, &lam).is_err());
                    }
                }
            }
        }
    }
}

#[test]
fn greedy_scans_hit_the_lexicographic_extremes() {
    for n in 1..=6 {
        for k in 0..=n {
            for p in all_pairs(n, k) {
                let e = enumerate(&p.f, &p.lambda).unwrap();
                assert_eq!(&greedy_bottom(&p.f, &p.lambda).unwrap(), e.first().unwrap(), "{p}");
                assert_eq!(&greedy_top(&p.f, &p.lambda).unwrap(), e.last().unwrap(), "{p}");
            }
        }
    }
}

#[test]
fn moves_are_symmetric() {
    for n in 2..=6 {
        for k in 1..n {
            for p in all_pairs(n, k) {
                for pd in enumerate(&p.f, &p.lambda).unwrap() {
                    for m in moves(&pd) {
                        let next = pd.apply_move(&m);
                        assert!(moves(&next).iter().any(|b| b.from == m.to && b.to == m.from), "{p}");
                    }
                }
            }
        }
    }
}

#[test]
fn unique_pipe_dreams_stay_unique_under_reduction() {
    for n in 2..=6 {
        for k in 1..n {
            for p in all_pairs(n, k) {
                if enumerate(&p.f, &p.lambda).unwrap().len() != 1 {
                    continue;
                }
                for i in 1..=n {
                    let r = if p.lambda.contains(i) {
                        contract_pd(&p.f, &p.lambda, i)
                    } else {
                        poslab::pipedream::delete_pd(&p.f, &p.lambda, i)
                    };
                    if let Some(r) = r.unwrap() {
                        let c = enumerate(&r.pair.f, &r.pair.lambda).unwrap();
                        assert_eq!(c.len(), 1, "{p} -> {}", r.pair);
                    }
                }
            }
        }
    }
}
