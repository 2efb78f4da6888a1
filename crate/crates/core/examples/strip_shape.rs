//! Cells and reading word of the strip for a fixed point.

use poslab::permcore::ColumnSet;
use poslab::render::shape_text;
use poslab::shape::build_shape;

fn main() -> poslab::Result<()> {
    let lambda = ColumnSet::new(7, vec![2, 5, 7])?;
    let shape = build_shape(3, 7, &lambda)?;
    println!("{} cells, reading word {:?}", shape.len(), shape.word());
    print!("{}", shape_text(&shape));
    for rect in shape.maximal_rectangles() {
        println!("maximal rectangle {}x{} with SW corner {:?}", rect.height, rect.width, rect.sw);
    }
    Ok(())
}
