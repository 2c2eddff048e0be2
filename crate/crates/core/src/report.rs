//! A full analysis of one rhythm, rendered as aligned text.

use std::fmt::{self, Write as _};

use crate::classify::{aksak_class, string_class, AksakClass, StringClass};
use crate::deepness::{
    characterize_deep, histogram, is_erdos_deep, is_winograd_deep, shelling, DeepForm,
    MultiplicityHistogram,
};
use crate::evenness::{
    evenness_chordal, evenness_geodesic, evenness_squared_geodesic, has_property_star,
};
use crate::rhythm::{DistanceSeq, Rhythm};

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub rhythm: Rhythm,
    pub box_notation: String,
    pub subset_notation: String,
    /// Absent for the empty rhythm.
    pub distance_seq: Option<DistanceSeq>,
    pub necklace: Option<DistanceSeq>,
    pub period: Option<usize>,
    pub chordal: f64,
    pub geodesic: usize,
    pub squared_geodesic: usize,
    pub histogram: MultiplicityHistogram,
    pub erdos_deep: bool,
    pub winograd_deep: bool,
    pub deep_form: Option<DeepForm>,
    pub shelling: Option<Vec<usize>>,
    pub aksak: Option<AksakClass>,
    pub string_class: Option<StringClass>,
    /// Absent when the rhythm has fewer than two onsets.
    pub property_star: Option<bool>,
}

impl AnalysisReport {
    pub fn of(r: &Rhythm) -> AnalysisReport {
        let erdos_deep = is_erdos_deep(r);
        AnalysisReport {
            rhythm: r.clone(),
            box_notation: r.to_box().0,
            subset_notation: r.to_subset_string(),
            distance_seq: r.distance_seq().ok(),
            necklace: r.necklace().ok().map(|c| c.canonical),
            period: r.period().ok(),
            chordal: evenness_chordal(r),
            geodesic: evenness_geodesic(r),
            squared_geodesic: evenness_squared_geodesic(r),
            histogram: histogram(r),
            erdos_deep,
            winograd_deep: is_winograd_deep(r),
            deep_form: if erdos_deep {
                characterize_deep(r)
            } else {
                None
            },
            shelling: shelling(r).ok(),
            aksak: aksak_class(r).ok(),
            string_class: string_class(r).ok(),
            property_star: has_property_star(r).ok(),
        }
    }

    pub fn render(&self) -> String {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref()
                .map_or_else(|| "-".to_string(), |x| x.to_string())
        }
        fn yes(b: bool) -> &'static str {
            if b {
                "yes"
            } else {
                "no"
            }
        }
        let rows: Vec<(&str, String)> = vec![
            ("box", self.box_notation.clone()),
            ("subset", self.subset_notation.clone()),
            ("distances", opt(&self.distance_seq)),
            ("necklace", opt(&self.necklace)),
            ("period", opt(&self.period)),
            ("evenness chordal", format!("{:.6}", self.chordal)),
            ("evenness geodesic", self.geodesic.to_string()),
            ("evenness squared", self.squared_geodesic.to_string()),
            (
                "property star",
                self.property_star
                    .map_or("-".into(), |b| yes(b).to_string()),
            ),
            ("histogram", self.histogram.to_string()),
            ("erdos-deep", yes(self.erdos_deep).to_string()),
            ("winograd-deep", yes(self.winograd_deep).to_string()),
            ("deep form", opt(&self.deep_form)),
            (
                "shelling",
                self.shelling.as_ref().map_or("-".into(), |s| {
                    s.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }),
            ),
            ("aksak", opt(&self.aksak)),
            ("string class", opt(&self.string_class)),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in rows {
            let _ = writeln!(out, "{key:<width$}  {value}");
        }
        out
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bossa_report() {
        let r: Rhythm = "x..x..x...x..x..".parse().unwrap();
        let rep = AnalysisReport::of(&r);
        assert_eq!(rep.histogram.to_string(), "{3:4,4:1,6:3,7:2}");
        assert!(rep.erdos_deep);
        assert!(!rep.winograd_deep);
        assert_eq!(rep.geodesic, 48);
        let text = rep.render();
        assert!(
            text.contains("histogram          {3:4,4:1,6:3,7:2}"),
            "{text}"
        );
        assert!(text.contains("winograd-deep      no"));
    }

    #[test]
    fn single_onset_report() {
        let rep = AnalysisReport::of(&"x.".parse().unwrap());
        assert_eq!(rep.chordal, 0.0);
        assert_eq!(rep.geodesic, 0);
        assert!(rep.erdos_deep);
        assert_eq!(rep.property_star, None);
        assert_eq!(rep.shelling, Some(vec![0]));
    }

    #[test]
    fn empty_rhythm_report() {
        let rep = AnalysisReport::of(&"....".parse().unwrap());
        assert_eq!(rep.distance_seq, None);
        assert_eq!(rep.aksak, None);
        assert_eq!(rep.shelling, Some(vec![]));
        assert!(rep.render().contains("distances"));
    }
}
