//! Distance histograms, deepness tests, witnesses and shellings.

use euclidean_rhythms::deepness::{
    characterize_deep, histogram, is_erdos_deep, is_winograd_deep, shelling,
};
use euclidean_rhythms::Rhythm;

fn main() -> euclidean_rhythms::Result<()> {
    let examples = [
        ("Bossa-Nova", "x..x..x...x..x.."),
        ("Bembé", "x.x.xx.x.x.x"),
        ("F", "xxx.x."),
        ("scaled F", "{0,2,4,8}/12"),
        ("not deep", "{0,1,4}/9"),
    ];
    for (name, text) in examples {
        let r: Rhythm = text.parse()?;
        println!("{name}: {}", r.to_box());
        println!("  histogram {}", histogram(&r));
        println!(
            "  erdos-deep {}, winograd-deep {}",
            is_erdos_deep(&r),
            is_winograd_deep(&r)
        );
        if let Some(form) = characterize_deep(&r) {
            println!("  witness {form}");
            println!("  shelling {:?}", shelling(&r)?);
        }
    }
    Ok(())
}
