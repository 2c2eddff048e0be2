//! Aksak classes and Euclidean-string classes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, RhythmError};
use crate::numtheory::is_prime;
use crate::rhythm::{DistanceSeq, Rhythm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AksakClass {
    NotAksak,
    Authentic,
    QuasiAksak,
    PseudoAksak,
}

impl AksakClass {
    pub const ALL: [AksakClass; 4] = [
        AksakClass::NotAksak,
        AksakClass::Authentic,
        AksakClass::QuasiAksak,
        AksakClass::PseudoAksak,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AksakClass::NotAksak => "none",
            AksakClass::Authentic => "authentic",
            AksakClass::QuasiAksak => "quasi",
            AksakClass::PseudoAksak => "pseudo",
        }
    }
}

impl fmt::Display for AksakClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AksakClass {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self> {
        AksakClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RhythmError::Malformed {
                what: "aksak class",
                detail: format!("unknown class {s:?}"),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StringClass {
    EuclideanString,
    ReverseEuclideanString,
    Both,
    Neither,
}

impl StringClass {
    pub const ALL: [StringClass; 4] = [
        StringClass::EuclideanString,
        StringClass::ReverseEuclideanString,
        StringClass::Both,
        StringClass::Neither,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StringClass::EuclideanString => "euclidean",
            StringClass::ReverseEuclideanString => "reverse",
            StringClass::Both => "both",
            StringClass::Neither => "neither",
        }
    }

    fn from_flags(forward: bool, backward: bool) -> StringClass {
        match (forward, backward) {
            (true, true) => StringClass::Both,
            (true, false) => StringClass::EuclideanString,
            (false, true) => StringClass::ReverseEuclideanString,
            (false, false) => StringClass::Neither,
        }
    }
}

impl fmt::Display for StringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StringClass {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self> {
        StringClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RhythmError::Malformed {
                what: "string class",
                detail: format!("unknown class {s:?}"),
            })
    }
}

/// Aksak class of a rhythm from its inter-onset durations and timespan.
pub fn aksak_class(r: &Rhythm) -> Result<AksakClass> {
    let seq = r.distance_seq()?;
    Ok(aksak_class_of_gaps(&seq))
}

/// Aksak class of a bare duration sequence; the timespan is its sum.
pub fn aksak_class_of_gaps(seq: &DistanceSeq) -> AksakClass {
    let gaps = seq.gaps();
    let only_2_3 = gaps.iter().all(|&g| g == 2 || g == 3);
    if !only_2_3 || !gaps.contains(&2) || !gaps.contains(&3) {
        return AksakClass::NotAksak;
    }
    let n = seq.sum();
    if n.is_multiple_of(2) {
        AksakClass::PseudoAksak
    } else if is_prime(n) {
        AksakClass::Authentic
    } else {
        AksakClass::QuasiAksak
    }
}

/// `E(k,n)` is aksak exactly when `2k < n < 3k`.
pub fn euclidean_aksak_condition(k: usize, n: usize) -> bool {
    2 * k < n && n < 3 * k
}

/// Increment the first entry and decrement the last. Singletons are returned unchanged.
pub fn tau(p: &[usize]) -> Result<Vec<usize>> {
    match p.len() {
        0 => Err(RhythmError::EmptyString),
        1 => Ok(p.to_vec()),
        len => {
            if p[len - 1] == 0 {
                return Err(RhythmError::TrailingZero);
            }
            let mut out = p.to_vec();
            out[0] += 1;
            out[len - 1] -= 1;
            Ok(out)
        }
    }
}

/// Whether `tau(p)` is a rotation of `p`.
pub fn is_euclidean_string(p: &[usize]) -> bool {
    match tau(p) {
        Ok(t) => DistanceSeq(t).is_rotation_of(&DistanceSeq(p.to_vec())),
        Err(_) => false,
    }
}

pub fn string_class_of(p: &[usize]) -> StringClass {
    let reversed: Vec<usize> = p.iter().rev().copied().collect();
    StringClass::from_flags(is_euclidean_string(p), is_euclidean_string(&reversed))
}

/// String class of a rhythm's clockwise distance sequence, read from its first onset.
pub fn string_class(r: &Rhythm) -> Result<StringClass> {
    Ok(string_class_of(r.distance_seq()?.gaps()))
}
