//! Randomized round trips. Seeds come from proptest's config; failures
//! print the shrunk input.

use std::sync::Arc;

use proptest::prelude::*;

use poslab::io::{parse_any_siteswap, parse_column_set};
use poslab::permcore::{all_siteswaps, siteswap_from_window, window_from_siteswap, ColumnSet};
use poslab::pipedream::{enumerate, from_json, to_json, PipeDream};
use poslab::render::{parse_text, to_text};
use poslab::shape::strip;

fn pair_strategy() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..n)).prop_flat_map(|(n, k)| (Just(n), Just(k), 0..1000usize, 0..1000usize))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn siteswap_window_round_trip((n, k, a, _) in pair_strategy()) {
        let all = all_siteswaps(n, k);
        let f = &all[a % all.len()];
        let g = window_from_siteswap(f);
        prop_assert_eq!(&siteswap_from_window(g.window()).unwrap(), f);
        prop_assert_eq!(&parse_any_siteswap(&format!("g:{}", g)).unwrap(), f);
        prop_assert_eq!(&parse_any_siteswap(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn column_set_text_round_trip((n, k, a, _) in pair_strategy()) {
        let sets = ColumnSet::all(n, k);
        let lam = &sets[a % sets.len()];
        prop_assert_eq!(&parse_column_set(&lam.to_string(), n).unwrap(), lam);
    }

    #[test]
    fn text_and_json_round_trip((n, k, a, b) in pair_strategy(), bits in any::<u64>()) {
        let sets = ColumnSet::all(n, k);
        let lam = &sets[b % sets.len()];
        let shape = Arc::new(strip(k, n, lam).unwrap());
        let crosses = (0..shape.len()).map(|i| bits >> (i % 64) & 1 == 1).collect();
        let any = PipeDream::new(shape, crosses).unwrap();
        prop_assert_eq!(parse_text(&to_text(&any).unwrap()).unwrap(), any.clone());
        let all = all_siteswaps(n, k);
        let f = &all[a % all.len()];
        if let Ok(pds) = enumerate(f, lam) {
            for pd in pds {
                prop_assert_eq!(from_json(&to_json(&pd).unwrap()).unwrap(), pd);
            }
        }
    }
}
