//! Evenness of the six clave timelines and the maximum-evenness oracle.

use euclidean_rhythms::corpus::{load_corpus, CorpusFilter, EntryKind};
use euclidean_rhythms::evenness::{
    brute_force_max_evenness, has_property_star, EvennessReport, Metric,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = load_corpus()?;
    let claves = corpus.query(&CorpusFilter {
        kind: Some(EntryKind::Clave),
        ..Default::default()
    });
    let mut rows: Vec<_> = claves
        .iter()
        .map(|e| {
            (
                e.id.as_str(),
                e.pattern.as_str(),
                EvennessReport::of(&e.rhythm),
            )
        })
        .collect();
    rows.sort_by(|a, b| b.2.chordal_sum.total_cmp(&a.2.chordal_sum));
    println!(
        "{:<11} {:<16} {:>9} {:>8}",
        "clave", "pattern", "chordal", "geodesic"
    );
    for (id, pattern, rep) in &rows {
        println!(
            "{id:<11} {pattern:<16} {:>9.4} {:>8}",
            rep.chordal_sum, rep.geodesic_sum
        );
    }

    let best = brute_force_max_evenness(16, 5, Metric::Chordal)?;
    println!();
    println!(
        "{} rhythms of 5 onsets in 16 pulses maximize chordal evenness:",
        best.len()
    );
    for r in best.iter().take(4) {
        println!("  {}  property star: {}", r.to_box(), has_property_star(r)?);
    }
    println!("  ...");
    Ok(())
}
