//! Write clock diagrams for a few rhythms into a directory (default: current).

use std::path::PathBuf;

use euclidean_rhythms::svg::render_svg;
use euclidean_rhythms::Rhythm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for (name, text) in [
        ("tresillo", "x..x..x."),
        ("son", "x..x..x...x.x..."),
        ("bembe", "x.x.xx.x.x.x"),
    ] {
        let r: Rhythm = text.parse()?;
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, render_svg(&r))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
