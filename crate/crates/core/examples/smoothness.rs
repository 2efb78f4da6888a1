//! Smoothness at a fixed point by each method, and across all fixed points.

use poslab::io::{parse_column_set, parse_siteswap};
use poslab::smooth::{smooth_everywhere, smooth_with, Method};

fn main() -> poslab::Result<()> {
    let f = parse_siteswap("342333")?;
    for lam in ["{1,2,5}", "{1,2,4}"] {
        let lambda = parse_column_set(lam, 6)?;
        for method in [Method::Rect, Method::Count, Method::TopBottom, Method::All] {
            let v = smooth_with(&f, &lambda, method)?;
            println!("{lam} {method:?}: {} (multiplicity {:?})", v.status, v.multiplicity);
        }
    }
    let (ok, singular) = smooth_everywhere(&f)?;
    println!("smooth everywhere: {ok}; singular at {}", singular.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}
