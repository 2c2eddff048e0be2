//! Every even-rhythm algorithm lands on the same necklace.

use euclidean_rhythms::generators::{generated, snap};
use euclidean_rhythms::{bjorklund, euclidean_recursive, EvenAlgorithm};

fn main() -> euclidean_rhythms::Result<()> {
    for (k, n) in [(3, 8), (5, 8), (5, 13), (7, 16)] {
        println!("E({k},{n})");
        for algo in EvenAlgorithm::ALL {
            let r = algo.generate(k, n)?;
            println!(
                "  {:<9} {}  necklace {}",
                algo.name(),
                r.to_box(),
                r.necklace()?
            );
        }
    }

    println!();
    println!("bits of bjorklund(5,13): {}", bjorklund(5, 13)?.to_bits());
    println!("recursive gaps for (13,5): {}", euclidean_recursive(13, 5)?);
    println!("snap(16,4): {}", snap(16, 4)?);
    println!("D(7,16,5): {}", generated(7, 16, 5)?.to_box());
    Ok(())
}
