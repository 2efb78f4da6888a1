//! Deleting and contracting columns, on siteswaps and on pipe dreams.

use poslab::io::{parse_column_set, parse_siteswap};
use poslab::pipedream::{contract_pd, delete_pd};

fn main() -> poslab::Result<()> {
    let f = parse_siteswap("342333")?;
    let lambda = parse_column_set("{1,2,5}", 6)?;
    for i in 1..=6 {
        let r = if lambda.contains(i) { contract_pd(&f, &lambda, i)? } else { delete_pd(&f, &lambda, i)? };
        match r {
            None => println!("column {i}: empty"),
            Some(r) => println!("{}: {} before reindexing, child {} with crosses {:?}", r.op, r.unreindexed, r.pair, r.child.key()),
        }
    }
    Ok(())
}
