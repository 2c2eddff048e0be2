//! Aksak and Euclidean-string classes of the Euclidean rhythms.

use euclidean_rhythms::bjorklund;
use euclidean_rhythms::classify::{aksak_class, string_class, tau};

fn main() -> euclidean_rhythms::Result<()> {
    for (k, n) in [(2, 5), (4, 9), (3, 8), (5, 8), (5, 12), (7, 12)] {
        let r = bjorklund(k, n)?;
        println!(
            "{:<8} {:<13} {:<16} aksak {:<9} string {}",
            format!("E({k},{n})"),
            r.to_box().as_str(),
            r.distance_seq()?.to_string(),
            aksak_class(&r)?.name(),
            string_class(&r)?
        );
    }
    println!("tau(2,2,2,3) = {:?}", tau(&[2, 2, 2, 3])?);
    Ok(())
}
