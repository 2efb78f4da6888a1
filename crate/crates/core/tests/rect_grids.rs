//! Exhaustive checks of the rectangle tests on small grids.

use poslab::smooth::{reduces_to_nw_se, reduces_to_nw_se_iterated, rect_rigid_le, standalone_move_free, TileGrid};

#[test]
fn rectangle_tests_agree_on_all_small_grids() {
    for h in 1..=4 {
        for w in 1..=4 {
            let mut bad = Vec::new();
            for bits in 0u64..(1 << (h * w)) {
                let g = TileGrid::from_bits(h, w, bits);
                let a = reduces_to_nw_se(&g);
                let b = rect_rigid_le(&g);
                let c = standalone_move_free(&g);
                let d = reduces_to_nw_se_iterated(&g);
                if !(a == b && b == c && c == d) {
                    bad.push((g.to_string(), a, b, c, d));
                }
            }
            assert!(bad.is_empty(), "{h}x{w}: {} mismatches, first {:?}", bad.len(), bad.first());
        }
    }
}
