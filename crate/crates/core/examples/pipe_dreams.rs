//! Every reduced pipe dream of a pair, with its moves.

use poslab::io::{parse_column_set, parse_siteswap};
use poslab::pipedream::{enumerate, moves};
use poslab::render::to_text;

fn main() -> poslab::Result<()> {
    let f = parse_siteswap("342333")?;
    let lambda = parse_column_set("{1,2,5}", 6)?;
    for (i, pd) in enumerate(&f, &lambda)?.iter().enumerate() {
        println!("# {} crosses at {:?}", i + 1, pd.key());
        print!("{}", to_text(pd)?);
        for m in moves(pd) {
            println!("move {} -> {}", m.from, m.to);
        }
    }
    Ok(())
}
