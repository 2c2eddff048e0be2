//! Exhaustive checks of the structural theorems over small timespans.
//!
//! Each check walks its parameter space in a fixed order and reports the
//! number of cases examined and the first counterexample, if any.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::applications::{digital_line_runs, Side};
use crate::classify::{is_euclidean_string, string_class};
use crate::corpus::{load_corpus, EntryKind};
use crate::deepness::{
    characterize_deep, is_erdos_deep, is_winograd_deep, shelling, validate_shelling,
};
use crate::error::{Result, RhythmError};
use crate::evenness::{
    brute_force_max_evenness_capped, enumeration_cap, has_property_star, k_subsets, rotation_orbit,
    Metric,
};
use crate::generators::{bjorklund, euclidean_recursive, EvenAlgorithm};
use crate::numtheory::gcd;
use crate::rhythm::{least_rotation, Rhythm};

/// Longest strings examined by the Euclidean-string existence check.
pub const ELLIS_MAX_LEN: usize = 8;
/// Largest entry in strings examined by the Euclidean-string existence check.
pub const ELLIS_MAX_ENTRY: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// All even-rhythm algorithms produce the same necklace.
    EvenEquivalence,
    /// The chordal maximizers, and the rhythms with property star, form exactly
    /// the rotation orbit of the algorithmic output.
    EvenUniqueness,
    /// Erdős-deep rhythms are exactly the reconstructible deep forms, and each has a shelling.
    DeepCharacterization,
    /// Winograd-deep rhythms are Erdős-deep.
    WinogradErdos,
    /// A maximally even rhythm with `2 <= k <= n/2 + 1` is Erdős-deep iff `gcd(k, n) = 1`.
    ErdDeepGcd,
    /// Stored corpus string classes match recomputation, and Euclidean strings
    /// exist exactly for coprime length and sum, uniquely.
    StringLists,
    /// Upper digital-line runs are a rotation of the Euclidean distance sequence.
    DigitalLine,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::EvenEquivalence,
        Theorem::EvenUniqueness,
        Theorem::DeepCharacterization,
        Theorem::WinogradErdos,
        Theorem::ErdDeepGcd,
        Theorem::StringLists,
        Theorem::DigitalLine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::EvenEquivalence => "even-equivalence",
            Theorem::EvenUniqueness => "even-uniqueness",
            Theorem::DeepCharacterization => "deep-characterization",
            Theorem::WinogradErdos => "winograd-erdos",
            Theorem::ErdDeepGcd => "erd-deep-gcd",
            Theorem::StringLists => "string-lists",
            Theorem::DigitalLine => "digital-line",
        }
    }

    /// Whether the check enumerates subsets and is bounded by the enumeration cap.
    pub fn enumerates_subsets(self) -> bool {
        matches!(
            self,
            Theorem::EvenUniqueness | Theorem::DeepCharacterization | Theorem::WinogradErdos
        )
    }

    pub fn run(self, max_n: usize) -> Result<VerifyReport> {
        if self.enumerates_subsets() {
            let cap = enumeration_cap().min(63);
            if max_n > cap {
                return Err(RhythmError::EnumerationCap { n: max_n, cap });
            }
        }
        let (checked, counterexample) = match self {
            Theorem::EvenEquivalence => even_equivalence(max_n),
            Theorem::EvenUniqueness => even_uniqueness(max_n),
            Theorem::DeepCharacterization => deep_characterization(max_n),
            Theorem::WinogradErdos => winograd_erdos(max_n),
            Theorem::ErdDeepGcd => erd_deep_gcd(max_n),
            Theorem::StringLists => string_lists(max_n),
            Theorem::DigitalLine => digital_line(max_n),
        };
        Ok(VerifyReport {
            theorem: self,
            max_n,
            checked,
            counterexample,
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| RhythmError::Malformed {
                what: "theorem name",
                detail: format!("unknown theorem {s:?}"),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub max_n: usize,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "{}: pass ({} cases, n <= {})",
                self.theorem, self.checked, self.max_n
            ),
            Some(c) => write!(
                f,
                "{}: FAIL after {} cases, n <= {}; first counterexample: {c}",
                self.theorem, self.checked, self.max_n
            ),
        }
    }
}

type Outcome = (usize, Option<String>);

/// Walk `cases` in order, stopping at the first failure.
fn first_failure<I, F>(cases: I, mut check: F) -> Outcome
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<String>,
{
    let mut checked = 0;
    for case in cases {
        checked += 1;
        if let Some(msg) = check(case) {
            return (checked, Some(msg));
        }
    }
    (checked, None)
}

fn pairs(min_k: usize, max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(move |n| (min_k..=n).map(move |k| (k, n)))
}

fn even_equivalence(max_n: usize) -> Outcome {
    first_failure(pairs(2, max_n), |(k, n)| {
        let reference = bjorklund(k, n).ok()?.necklace().ok()?;
        EvenAlgorithm::ALL.into_iter().find_map(|algo| {
            let r = algo.generate(k, n).ok()?;
            (r.necklace().ok()? != reference)
                .then(|| format!("k={k} n={n}: {} gives {}", algo.name(), r.to_box()))
        })
    })
}

fn even_uniqueness(max_n: usize) -> Outcome {
    first_failure(pairs(2, max_n), |(k, n)| {
        let orbit = rotation_orbit(&bjorklund(k, n).ok()?);
        let winners = brute_force_max_evenness_capped(n, k, Metric::Chordal, 63).ok()?;
        if winners != orbit {
            return Some(format!(
                "k={k} n={n}: {} chordal maximizers, orbit has {}",
                winners.len(),
                orbit.len()
            ));
        }
        let starred: Vec<Rhythm> = k_subsets(n, k)
            .into_par_iter()
            .map(|m| Rhythm::from_mask(n, m).expect("mask within timespan"))
            .filter(|r| has_property_star(r).unwrap_or(false))
            .collect();
        let mut starred = starred;
        starred.sort_by(|a, b| a.onsets().cmp(b.onsets()));
        (starred != orbit).then(|| {
            format!(
                "k={k} n={n}: {} rhythms with property star, orbit has {}",
                starred.len(),
                orbit.len()
            )
        })
    })
}

/// All rhythms of timespan `n`, in mask order, checked in parallel; returns the
/// lowest failing mask.
fn sweep_subsets<F>(max_n: usize, check: F) -> Outcome
where
    F: Fn(&Rhythm) -> Option<String> + Sync,
{
    let mut checked = 0;
    for n in 1..=max_n {
        let total = 1u64 << n;
        let found = (0..total).into_par_iter().find_map_first(|mask| {
            let r = Rhythm::from_mask(n, mask).expect("mask within timespan");
            check(&r).map(|msg| (mask, msg))
        });
        match found {
            Some((mask, msg)) => return (checked + mask as usize + 1, Some(msg)),
            None => checked += total as usize,
        }
    }
    (checked, None)
}

fn deep_characterization(max_n: usize) -> Outcome {
    sweep_subsets(max_n, |r| {
        let deep = is_erdos_deep(r);
        let witnessed = characterize_deep(r)
            .map(|form| form.reconstruct().as_ref() == Ok(r))
            .unwrap_or(false);
        if deep != witnessed {
            return Some(format!(
                "{r}: erdos-deep={deep} but witness reconstructs={witnessed}"
            ));
        }
        if deep {
            let order = shelling(r).ok()?;
            if validate_shelling(r, &order) != Ok(true) {
                return Some(format!("{r}: shelling {order:?} is invalid"));
            }
        }
        None
    })
}

fn winograd_erdos(max_n: usize) -> Outcome {
    sweep_subsets(max_n, |r| {
        (is_winograd_deep(r) && !is_erdos_deep(r))
            .then(|| format!("{r} is Winograd-deep but not Erdős-deep"))
    })
}

fn erd_deep_gcd(max_n: usize) -> Outcome {
    let cases = (2..=max_n).flat_map(|n| (2..=n / 2 + 1).map(move |k| (k, n)));
    first_failure(cases, |(k, n)| {
        let r = bjorklund(k, n).ok()?;
        let deep = is_erdos_deep(&r);
        let coprime = gcd(k, n) == 1;
        (deep != coprime).then(|| format!("k={k} n={n}: {r} deep={deep}, gcd={}", gcd(k, n)))
    })
}

/// For each length and sum, the Euclidean strings with entries in `0..=max_entry`.
pub fn euclidean_strings(len: usize, sum: usize, max_entry: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(cur: &mut Vec<usize>, len: usize, left: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            if left == 0 && is_euclidean_string(cur) {
                out.push(cur.clone());
            }
            return;
        }
        let slots = len - cur.len();
        for v in 0..=max.min(left) {
            if left - v <= max * (slots - 1) {
                cur.push(v);
                rec(cur, len, left - v, max, out);
                cur.pop();
            }
        }
    }
    if len > 0 {
        rec(&mut cur, len, sum, max_entry, &mut out);
    }
    out
}

/// Euclidean strings exist iff `gcd(len, sum) = 1`, and then there is exactly one.
fn ellis_property(max_len: usize) -> Outcome {
    let cases = (1..=max_len).flat_map(|len| (0..=ELLIS_MAX_ENTRY * len).map(move |s| (len, s)));
    first_failure(cases, |(len, sum)| {
        let found = euclidean_strings(len, sum, ELLIS_MAX_ENTRY);
        let expected = usize::from(gcd(len, sum) == 1);
        (found.len() != expected).then(|| {
            format!(
                "length {len}, sum {sum}: {} Euclidean strings {:?}, expected {expected}",
                found.len(),
                found
            )
        })
    })
}

fn string_lists(max_n: usize) -> Outcome {
    let corpus = match load_corpus() {
        Ok(c) => c,
        Err(e) => return (0, Some(e.to_string())),
    };
    let entries: Vec<_> = corpus
        .entries()
        .iter()
        .filter(|e| e.kind == EntryKind::Euclidean && e.n <= max_n)
        .collect();
    let (checked, bad) = first_failure(entries, |e| match string_class(&e.rhythm) {
        Ok(c) if c == e.string_class => None,
        Ok(c) => Some(format!(
            "{}: stored {} but computed {c}",
            e.id, e.string_class
        )),
        Err(err) => Some(format!("{}: {err}", e.id)),
    });
    if bad.is_some() {
        return (checked, bad);
    }
    let (more, bad) = ellis_property(max_n.min(ELLIS_MAX_LEN));
    (checked + more, bad)
}

fn digital_line(max_n: usize) -> Outcome {
    first_failure(pairs(1, max_n), |(k, n)| {
        let runs = digital_line_runs(n, k, Side::Upper).ok()?;
        let euclid = euclidean_recursive(n, k).ok()?;
        (least_rotation(&runs.runs) != least_rotation(euclid.gaps()))
            .then(|| format!("k={k} n={n}: runs {runs} vs {euclid}"))
    })
}
