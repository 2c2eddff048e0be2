//! Bundled dataset of Euclidean rhythms from traditional music and six clave timelines.
//!
//! One entry per line, pipe separated:
//! `id|k|n|pattern|distance_seq|aksak|stringclass|names|notes`.
//! Lines starting with `#` and blank lines are ignored. Every stored
//! classification is recomputed on load and must match.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::classify::{aksak_class, string_class, AksakClass, StringClass};
use crate::evenness::evenness_geodesic;
use crate::generators::bjorklund;
use crate::numtheory::gcd;
use crate::rhythm::{BoxPattern, DistanceSeq, Rhythm};

const BUNDLED: &str = include_str!("../data/corpus.txt");

/// Geodesic evenness shared by all six clave timelines.
pub const CLAVE_GEODESIC_SUM: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("entry {id} (line {line}): {message}")]
    Invariant {
        id: String,
        line: usize,
        message: String,
    },
    #[error("cannot read corpus {path}: {message}")]
    Io { path: String, message: String },
}

/// Which rotation a traditional name refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameStart {
    /// The stored pattern as printed.
    Printed,
    /// The stored pattern started on its `N`-th onset (1-based).
    Onset(usize),
    /// The rotation class as a whole.
    Necklace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NameRef {
    pub name: String,
    pub region: String,
    pub start: NameStart,
}

impl NameRef {
    fn parse(text: &str) -> Result<NameRef, String> {
        let (body, start) = match text.rsplit_once('@') {
            Some((body, "necklace")) => (body, NameStart::Necklace),
            Some((body, num)) => {
                let i: usize = num
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad start marker {num:?} in {text:?}"))?;
                if i == 0 {
                    return Err(format!("start marker must be at least 1 in {text:?}"));
                }
                let start = if i == 1 {
                    NameStart::Printed
                } else {
                    NameStart::Onset(i)
                };
                (body, start)
            }
            None => (text, NameStart::Printed),
        };
        let (name, region) = body
            .split_once(':')
            .ok_or_else(|| format!("name {text:?} lacks a ':region' part"))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(format!("empty name in {text:?}"));
        }
        Ok(NameRef {
            name: name.to_string(),
            region: region.trim().to_string(),
            start,
        })
    }

    /// The rhythm this name refers to, when it names a single rotation.
    pub fn rotation_of(&self, r: &Rhythm) -> Option<Rhythm> {
        let onset = match self.start {
            NameStart::Printed => 1,
            NameStart::Onset(i) => i,
            NameStart::Necklace => return None,
        };
        let shift = r.onsets().get(onset - 1)?;
        Some(r.rotate(-(*shift as i64)))
    }
}

impl fmt::Display for NameRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name, self.region)?;
        match self.start {
            NameStart::Printed => Ok(()),
            NameStart::Onset(i) => write!(f, " from onset {i}"),
            NameStart::Necklace => write!(f, " as a necklace"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// An `E(k,n)` rhythm.
    Euclidean,
    Clave,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub id: String,
    pub kind: EntryKind,
    pub k: usize,
    pub n: usize,
    pub pattern: BoxPattern,
    pub rhythm: Rhythm,
    pub distance_seq: DistanceSeq,
    pub aksak: AksakClass,
    pub string_class: StringClass,
    pub names: Vec<NameRef>,
    pub notes: String,
    /// No listed name refers to the printed rotation itself.
    pub is_necklace_only: bool,
    /// Line in the source file.
    pub line: usize,
}

impl CorpusEntry {
    /// Every problem with this entry, empty when all invariants hold.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let r = &self.rhythm;
        if r.timespan() != self.n {
            out.push(format!(
                "pattern has timespan {}, expected {}",
                r.timespan(),
                self.n
            ));
        }
        if r.len() != self.k {
            out.push(format!(
                "pattern has {} onsets, expected {}",
                r.len(),
                self.k
            ));
        }
        match r.distance_seq() {
            Ok(seq) if seq == self.distance_seq => {}
            Ok(seq) => out.push(format!(
                "distance sequence {} does not match pattern {}",
                self.distance_seq, seq
            )),
            Err(e) => out.push(e.to_string()),
        }
        match aksak_class(r) {
            Ok(c) if c == self.aksak => {}
            Ok(c) => out.push(format!(
                "stored aksak class {} but computed {c}",
                self.aksak
            )),
            Err(e) => out.push(e.to_string()),
        }
        match string_class(r) {
            Ok(c) if c == self.string_class => {}
            Ok(c) => out.push(format!(
                "stored string class {} but computed {c}",
                self.string_class
            )),
            Err(e) => out.push(e.to_string()),
        }
        for name in &self.names {
            if let NameStart::Onset(i) = name.start {
                if i > self.k {
                    out.push(format!(
                        "name {:?} starts on onset {i} of {}",
                        name.name, self.k
                    ));
                }
            }
        }
        match self.kind {
            EntryKind::Euclidean => {
                let expected_id = format!("E({},{})", self.k, self.n);
                if self.id != expected_id {
                    out.push(format!("id should be {expected_id}"));
                }
                if gcd(self.k, self.n) != 1 {
                    out.push(format!("k={} and n={} are not coprime", self.k, self.n));
                }
                match bjorklund(self.k, self.n) {
                    Ok(e) if e.necklace() == r.necklace() => {}
                    Ok(e) => out.push(format!("not a rotation of bjorklund output {}", e.to_box())),
                    Err(err) => out.push(err.to_string()),
                }
            }
            EntryKind::Clave => {
                if (self.k, self.n) != (5, 16) {
                    out.push("clave timelines have five onsets in sixteen pulses".into());
                }
                let g = evenness_geodesic(r);
                if g != CLAVE_GEODESIC_SUM {
                    out.push(format!(
                        "geodesic evenness {g}, expected {CLAVE_GEODESIC_SUM}"
                    ));
                }
            }
        }
        out
    }

    pub fn matches(&self, filter: &CorpusFilter) -> bool {
        let needle = filter.name.as_ref().map(|s| s.to_lowercase());
        filter.k.is_none_or(|k| k == self.k)
            && filter.n.is_none_or(|n| n == self.n)
            && filter.aksak.is_none_or(|a| a == self.aksak)
            && filter.string_class.is_none_or(|s| s == self.string_class)
            && filter.kind.is_none_or(|t| t == self.kind)
            && needle.is_none_or(|needle| {
                self.id.to_lowercase().contains(&needle)
                    || self
                        .names
                        .iter()
                        .any(|nm| nm.name.to_lowercase().contains(&needle))
            })
    }
}

/// Conjunctive filter; `None` fields match everything.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusFilter {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub aksak: Option<AksakClass>,
    pub string_class: Option<StringClass>,
    pub kind: Option<EntryKind>,
    /// Case-insensitive substring of the id or any traditional name.
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Look up an entry by id, ignoring case and spaces.
    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        let key = normalize_id(id);
        self.entries.iter().find(|e| normalize_id(&e.id) == key)
    }

    /// Matching entries ordered by `n`, then `k`, then id.
    pub fn query(&self, filter: &CorpusFilter) -> Vec<&CorpusEntry> {
        let mut out: Vec<&CorpusEntry> =
            self.entries.iter().filter(|e| e.matches(filter)).collect();
        out.sort_by(|a, b| (a.n, a.k, &a.id).cmp(&(b.n, b.k, &b.id)));
        out
    }

    /// Every invariant violation in the corpus as `(id, problem)` pairs.
    pub fn check(&self) -> Vec<(String, String)> {
        self.entries
            .iter()
            .flat_map(|e| e.problems().into_iter().map(move |p| (e.id.clone(), p)))
            .collect()
    }
}

fn normalize_id(id: &str) -> String {
    id.chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_lowercase()
}

/// The bundled corpus, validated.
pub fn load_corpus() -> Result<Corpus, CorpusError> {
    load_corpus_from_str(BUNDLED)
}

pub fn load_corpus_from_path(path: &Path) -> Result<Corpus, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    load_corpus_from_str(&text)
}

/// Parse and validate corpus text. Fails on the first malformed line or broken invariant.
pub fn load_corpus_from_str(text: &str) -> Result<Corpus, CorpusError> {
    let mut entries = Vec::new();
    let mut ids = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry = parse_line(trimmed, line)?;
        if !ids.insert(normalize_id(&entry.id)) {
            return Err(CorpusError::Invariant {
                id: entry.id,
                line,
                message: "duplicate id".into(),
            });
        }
        if let Some(problem) = entry.problems().into_iter().next() {
            return Err(CorpusError::Invariant {
                id: entry.id,
                line,
                message: problem,
            });
        }
        entries.push(entry);
    }
    Ok(Corpus { entries })
}

fn parse_line(text: &str, line: usize) -> Result<CorpusEntry, CorpusError> {
    let err = |message: String| CorpusError::Parse { line, message };
    let fields: Vec<&str> = text.split('|').collect();
    if fields.len() != 9 {
        return Err(err(format!("expected 9 fields, found {}", fields.len())));
    }
    let id = fields[0].trim().to_string();
    if id.is_empty() {
        return Err(err("empty id".into()));
    }
    let k: usize = fields[1]
        .trim()
        .parse()
        .map_err(|_| err(format!("bad k {:?}", fields[1])))?;
    let n: usize = fields[2]
        .trim()
        .parse()
        .map_err(|_| err(format!("bad n {:?}", fields[2])))?;
    let pattern = BoxPattern(fields[3].trim().to_string());
    let rhythm = pattern.parse().map_err(|e| err(format!("pattern: {e}")))?;
    let distance_seq: DistanceSeq = fields[4].parse().map_err(|e| err(format!("{e}")))?;
    let aksak: AksakClass = fields[5].parse().map_err(|e| err(format!("{e}")))?;
    let string_class: StringClass = fields[6].parse().map_err(|e| err(format!("{e}")))?;
    let names = fields[7]
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(NameRef::parse)
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let is_necklace_only = !names.iter().any(|nm| nm.start == NameStart::Printed);
    let kind = if id.starts_with("E(") {
        EntryKind::Euclidean
    } else {
        EntryKind::Clave
    };
    Ok(CorpusEntry {
        id,
        kind,
        k,
        n,
        pattern,
        rhythm,
        distance_seq,
        aksak,
        string_class,
        names,
        notes: fields[8].trim().to_string(),
        is_necklace_only,
        line,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_loads() {
        let c = load_corpus().unwrap();
        let euclid = c.query(&CorpusFilter {
            kind: Some(EntryKind::Euclidean),
            ..Default::default()
        });
        assert_eq!(euclid.len(), 41);
        assert_eq!(c.len(), 47);
        assert!(c.check().is_empty());
    }

    #[test]
    fn spec_entries() {
        let c = load_corpus().unwrap();
        let bossa = c.get("E(5,16)").unwrap();
        assert_eq!(bossa.pattern.as_str(), "x..x..x..x..x...");
        assert!(bossa.notes.contains("third onset"));
        assert!(bossa.is_necklace_only);
        assert_eq!(
            c.get("e(7, 12)").unwrap().string_class,
            StringClass::Neither
        );
        assert!(!c.get("E(3,8)").unwrap().is_necklace_only);
    }

    #[test]
    fn queries() {
        let c = load_corpus().unwrap();
        let by = |a| {
            c.query(&CorpusFilter {
                aksak: Some(a),
                ..Default::default()
            })
            .len()
        };
        assert_eq!(by(AksakClass::Authentic), 10);
        assert_eq!(by(AksakClass::QuasiAksak), 2);
        assert_eq!(by(AksakClass::PseudoAksak), 7);
        let tres = c.query(&CorpusFilter {
            name: Some("TRESILLO".into()),
            ..Default::default()
        });
        assert_eq!(tres.len(), 1);
        assert_eq!(tres[0].id, "E(3,8)");
        let all = c.query(&CorpusFilter::default());
        assert_eq!(all.len(), c.len());
        assert!(all.windows(2).all(|w| (w[0].n, w[0].k) <= (w[1].n, w[1].k)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "# header\n\nE(3,8)|3|8|x..x..x.|(3,3,2)|pseudo|reverse|Tresillo:Cuba\n";
        assert_eq!(
            load_corpus_from_str(text),
            Err(CorpusError::Parse {
                line: 3,
                message: "expected 9 fields, found 8".into()
            })
        );
        let bad = "E(3,8)|3|8|x..x..x.|(3,3,2)|pseudo|euclidean|Tresillo:Cuba|\n";
        match load_corpus_from_str(bad) {
            Err(CorpusError::Invariant { id, line, message }) => {
                assert_eq!((id.as_str(), line), ("E(3,8)", 1));
                assert!(message.contains("string class"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let wrong = "E(3,8)|3|8|x.x.x...|(2,2,4)|none|neither|X:Y|\n";
        assert!(matches!(
            load_corpus_from_str(wrong),
            Err(CorpusError::Invariant { .. })
        ));
    }

    #[test]
    fn name_rotations() {
        let c = load_corpus().unwrap();
        let e = c.get("E(5,16)").unwrap();
        assert_eq!(e.names[0].rotation_of(&e.rhythm), None);
        let e = c.get("E(7,16)").unwrap();
        let samba = e
            .names
            .iter()
            .find(|n| n.start == NameStart::Onset(7))
            .unwrap();
        assert_eq!(
            samba.rotation_of(&e.rhythm).unwrap().to_box().as_str(),
            "x.x..x.x.x..x.x."
        );
    }
}
