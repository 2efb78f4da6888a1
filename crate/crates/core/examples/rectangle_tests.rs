//! The rectangle tests on a few tile grids.

use poslab::smooth::{reduces_to_nw_se, rect_rigid_le, standalone_move_free, TileGrid};

fn main() {
    for rows in [vec!["+·", "··"], vec!["··", "·+"], vec!["·+", "··"], vec!["++·", "+··", "··+"], vec!["·+·", "+·+", "·+·"]] {
        let g = TileGrid::parse(&rows);
        println!("{g}");
        println!("splits: {}, rigid: {}, no moves: {}\n", reduces_to_nw_se(&g), rect_rigid_le(&g), standalone_move_free(&g));
    }
}
