//! Run every exhaustive theorem check at a modest size.

use euclidean_rhythms::verify::Theorem;

fn main() -> euclidean_rhythms::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    for t in Theorem::ALL {
        println!("{}", t.run(max_n)?);
    }
    Ok(())
}
