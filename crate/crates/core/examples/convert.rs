//! Siteswap and window forms of a bounded affine permutation.
//!
//! `cargo run --example convert -- g:4,6,3,7,11,8`

use poslab::io::parse_any_siteswap;
use poslab::permcore::window_from_siteswap;

fn main() -> poslab::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "g:4,6,3,7,11,8".into());
    let f = parse_any_siteswap(&input)?;
    println!("siteswap {f}");
    println!("window   {}", window_from_siteswap(&f));
    println!("k={} n={}", f.k(), f.n());
    Ok(())
}
