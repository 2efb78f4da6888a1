//! Atomic pairs: the witness below a singular pair and the generated families.

use poslab::atomic::{atomic_path, canonical_rotation, generate_atomic, trace_to_rectangle};
use poslab::io::{parse_column_set, parse_siteswap};
use poslab::permcore::PositroidPair;

fn main() -> poslab::Result<()> {
    let pair = PositroidPair::new(parse_siteswap("342333")?, parse_column_set("{1,2,5}", 6)?)?;
    if let Some((ops, atomic)) = atomic_path(&pair)? {
        let ops: Vec<String> = ops.iter().map(|o| o.to_string()).collect();
        println!("{pair} -> {atomic} by [{}]", ops.join(", "));
    }
    let t = trace_to_rectangle(&pair)?;
    println!("surviving cells {:?} lie in the rectangle at {:?}", t.surviving, t.rectangle);
    for k in 2..=3 {
        let all = generate_atomic(k)?;
        let mut orbits: Vec<PositroidPair> = all.iter().map(canonical_rotation).collect();
        orbits.sort();
        orbits.dedup();
        println!("k={k}: {} atomic pairs at {{1..{k}}}, {} up to rotation", all.len(), orbits.len());
        for p in &all {
            println!("  {p}");
        }
    }
    Ok(())
}
