//! Browse the bundled corpus.

use euclidean_rhythms::classify::AksakClass;
use euclidean_rhythms::corpus::{load_corpus, CorpusFilter};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = load_corpus()?;
    println!("{} entries", corpus.len());

    let authentic = corpus.query(&CorpusFilter {
        aksak: Some(AksakClass::Authentic),
        ..Default::default()
    });
    println!("authentic aksak:");
    for e in authentic {
        println!("  {:<8} {}", e.id, e.pattern);
    }

    let tresillo = corpus.get("E(3,8)").expect("bundled entry");
    println!("{}:", tresillo.id);
    for name in &tresillo.names {
        println!("  {name}");
    }
    Ok(())
}
