//! SVG pictures of the bottom and top pipe dreams.

use poslab::io::{parse_column_set, parse_siteswap};
use poslab::pipedream::{bottom_pd, top_pd};
use poslab::render::to_svg;

fn main() -> poslab::Result<()> {
    let f = parse_siteswap("342333")?;
    let lambda = parse_column_set("{1,2,5}", 6)?;
    let dir = std::env::temp_dir();
    for (name, pd) in [("bottom", bottom_pd(&f, &lambda)?), ("top", top_pd(&f, &lambda)?)] {
        let path = dir.join(format!("poslab-{name}.svg"));
        std::fs::write(&path, to_svg(&pd)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
