//! Equivariant class at a fixed point, from cell labels and from roots.

use poslab::equiv::{ajs_class_cells, ajs_class_roots, roots, specialize};
use poslab::io::{parse_column_set, parse_siteswap};

fn main() -> poslab::Result<()> {
    let f = parse_siteswap("342333")?;
    let lambda = parse_column_set("{1,2,5}", 6)?;
    let cells = ajs_class_cells(&f, &lambda)?;
    print!("{cells}");
    println!("same polynomial from roots: {}", cells.expand() == ajs_class_roots(&f, &lambda)?.expand());
    let (m, l) = specialize(&cells, &lambda)?;
    println!("specialized: {m}·h^{l}");
    let b = roots(10, &[6, 7, 8, 3, 4, 5, 6]);
    println!("last root of 6783456 in n=10: {}", b[6]);
    Ok(())
}
