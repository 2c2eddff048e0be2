//! Rhythms on the discrete circle and their notations.
//!
//! A [`Rhythm`] is a timespan `n` together with a sorted set of onset pulses
//! in `0..n`. Three text notations are supported:
//!
//! * box notation, `x..x..x.` (brackets and whitespace are tolerated on input),
//! * clockwise distance sequences, `(3,3,2)`,
//! * subset notation, `{0,3,6}/8`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, RhythmError};
use crate::numtheory::divisors;

/// Onset mark emitted by [`Rhythm::to_box`].
pub const ONSET_MARK: char = 'x';
/// Rest mark emitted by [`Rhythm::to_box`].
pub const REST_MARK: char = '.';

/// A cyclic rhythm: `k` onsets among `n` equally spaced pulses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rhythm {
    n: usize,
    onsets: Vec<usize>,
}

impl Rhythm {
    /// Builds a rhythm from onsets in any order. Onsets must be distinct and in `0..n`.
    pub fn new(n: usize, onsets: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(RhythmError::ZeroTimespan);
        }
        let mut onsets: Vec<usize> = onsets.into_iter().collect();
        onsets.sort_unstable();
        for w in onsets.windows(2) {
            if w[0] == w[1] {
                return Err(RhythmError::DuplicateOnset(w[0]));
            }
        }
        if let Some(&last) = onsets.last() {
            if last >= n {
                return Err(RhythmError::OnsetOutOfRange { onset: last, n });
            }
        }
        Ok(Rhythm { n, onsets })
    }

    /// The rhythm with no onsets.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Every pulse is an onset.
    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, 0..n)
    }

    /// Builds a rhythm from a bitmask where bit `i` marks pulse `i`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 64 {
            return Err(RhythmError::Malformed {
                what: "bitmask",
                detail: format!("timespan {n} does not fit in 64 bits"),
            });
        }
        Self::new(n, (0..n).filter(|i| mask >> i & 1 == 1))
    }

    pub fn timespan(&self) -> usize {
        self.n
    }

    pub fn onsets(&self) -> &[usize] {
        &self.onsets
    }

    /// Number of onsets `k`.
    pub fn len(&self) -> usize {
        self.onsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.onsets.is_empty()
    }

    pub fn contains(&self, pulse: usize) -> bool {
        self.onsets.binary_search(&pulse).is_ok()
    }

    /// Bitmask with bit `i` set for each onset `i`. Panics if `n > 64`.
    pub fn mask(&self) -> u64 {
        assert!(self.n <= 64, "timespan {} does not fit in 64 bits", self.n);
        self.onsets.iter().fold(0, |m, &i| m | 1 << i)
    }

    fn require(&self, required: usize) -> Result<()> {
        if self.len() < required {
            Err(RhythmError::TooFewOnsets {
                required,
                found: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Onset `i`, with the index taken modulo `k`. Panics on an empty rhythm.
    pub fn onset(&self, i: usize) -> usize {
        self.onsets[i % self.len()]
    }

    /// Clockwise distance from onset `i` to onset `j` (indices modulo `k`).
    pub fn clockwise_dist(&self, i: usize, j: usize) -> usize {
        clockwise(self.onset(i), self.onset(j), self.n)
    }

    /// Geodesic (shortest-arc) distance between onsets `i` and `j`.
    pub fn geodesic_dist(&self, i: usize, j: usize) -> usize {
        geodesic(self.onset(i), self.onset(j), self.n)
    }

    /// Geodesic distances over all unordered onset pairs, in index order.
    pub fn pairwise_geodesics(&self) -> impl Iterator<Item = usize> + '_ {
        let k = self.len();
        (0..k).flat_map(move |i| {
            (i + 1..k).map(move |j| geodesic(self.onsets[i], self.onsets[j], self.n))
        })
    }

    /// Shift every onset clockwise by `delta` pulses (reduced modulo `n`).
    pub fn rotate(&self, delta: i64) -> Rhythm {
        let n = self.n as i64;
        let shift = delta.rem_euclid(n);
        let mut onsets: Vec<usize> = self
            .onsets
            .iter()
            .map(|&i| ((i as i64 + shift) % n) as usize)
            .collect();
        onsets.sort_unstable();
        Rhythm { n: self.n, onsets }
    }

    /// Multiply every onset and the timespan by `alpha`.
    pub fn scale(&self, alpha: usize) -> Result<Rhythm> {
        if alpha == 0 {
            return Err(RhythmError::Malformed {
                what: "scale factor",
                detail: "must be at least 1".into(),
            });
        }
        Ok(Rhythm {
            n: self.n * alpha,
            onsets: self.onsets.iter().map(|&i| i * alpha).collect(),
        })
    }

    /// The rhythm played backwards: its distance sequence reversed, anchored at pulse 0.
    pub fn reverse(&self) -> Result<Rhythm> {
        let seq = self.distance_seq()?;
        Rhythm::from_distance_seq(&seq.reversed(), 0, self.n)
    }

    /// Clockwise distance sequence starting at the smallest onset.
    pub fn distance_seq(&self) -> Result<DistanceSeq> {
        self.require(1)?;
        let k = self.len();
        let gaps = (0..k)
            .map(|i| {
                let d = self.clockwise_dist(i, i + 1);
                if d == 0 {
                    self.n
                } else {
                    d
                }
            })
            .collect();
        Ok(DistanceSeq(gaps))
    }

    /// Inverse of [`Rhythm::distance_seq`]: prefix sums of `gaps` offset by `start`.
    pub fn from_distance_seq(gaps: &DistanceSeq, start: usize, n: usize) -> Result<Rhythm> {
        if n == 0 {
            return Err(RhythmError::ZeroTimespan);
        }
        if start >= n {
            return Err(RhythmError::StartOutOfRange { start, n });
        }
        if gaps.0.contains(&0) {
            return Err(RhythmError::NonPositiveGap);
        }
        let sum = gaps.sum();
        if sum != n {
            return Err(RhythmError::SumMismatch { sum, n });
        }
        let mut pos = start;
        let mut onsets = Vec::with_capacity(gaps.len());
        for &g in &gaps.0 {
            onsets.push(pos % n);
            pos += g;
        }
        Rhythm::new(n, onsets)
    }

    /// Necklace class: the lexicographically least rotation of the distance sequence.
    pub fn necklace(&self) -> Result<NecklaceClass> {
        let seq = self.distance_seq()?;
        Ok(NecklaceClass {
            canonical: seq.least_rotation(),
            n: self.n,
            k: self.len(),
        })
    }

    /// Smallest `p` dividing `n` with `rotate(p) == self`. Equals `n` for aperiodic rhythms.
    pub fn period(&self) -> Result<usize> {
        self.require(1)?;
        Ok(divisors(self.n)
            .into_iter()
            .find(|&p| self.rotate(p as i64) == *self)
            .unwrap_or(self.n))
    }

    /// Box notation without brackets or padding, e.g. `x..x..x.`.
    pub fn to_box(&self) -> BoxPattern {
        let mut text = vec![REST_MARK; self.n];
        for &i in &self.onsets {
            text[i] = ONSET_MARK;
        }
        BoxPattern(text.into_iter().collect())
    }

    /// Binary-string form, e.g. `10010010`.
    pub fn to_bits(&self) -> String {
        (0..self.n)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    /// Subset notation, e.g. `{0,3,6}/8`.
    pub fn to_subset_string(&self) -> String {
        let items: Vec<String> = self.onsets.iter().map(|i| i.to_string()).collect();
        format!("{{{}}}/{}", items.join(","), self.n)
    }

    /// Parses box notation. Accepts `x`/`X` onsets, `.` rests, whitespace and brackets.
    pub fn parse_box(text: &str) -> Result<Rhythm> {
        let mut onsets = Vec::new();
        let mut n = 0;
        for (index, ch) in text.chars().enumerate() {
            match ch {
                'x' | 'X' => {
                    onsets.push(n);
                    n += 1;
                }
                '.' => n += 1,
                '[' | ']' => {}
                c if c.is_whitespace() => {}
                ch => return Err(RhythmError::UnexpectedChar { ch, index }),
            }
        }
        if n == 0 {
            return Err(RhythmError::EmptyPattern);
        }
        Rhythm::new(n, onsets)
    }

    /// Parses subset notation `{0,3,6}/8`.
    pub fn parse_subset(text: &str) -> Result<Rhythm> {
        let malformed = |detail: &str| RhythmError::Malformed {
            what: "subset notation",
            detail: detail.to_string(),
        };
        let text = text.trim();
        let (set, n) = text
            .rsplit_once('/')
            .ok_or_else(|| malformed("missing '/n' timespan suffix"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| malformed("timespan is not an integer"))?;
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| malformed("onsets must be wrapped in braces"))?;
        let onsets = parse_list(inner).map_err(|_| malformed("onset is not an integer"))?;
        Rhythm::new(n, onsets)
    }

    /// Parses any of the three notations: box, subset `{..}/n`, or distance sequence `(..)`.
    pub fn parse_any(text: &str) -> Result<Rhythm> {
        let t = text.trim();
        if t.starts_with('{') {
            Rhythm::parse_subset(t)
        } else if t.starts_with('(') {
            let seq: DistanceSeq = t.parse()?;
            let n = seq.sum();
            Rhythm::from_distance_seq(&seq, 0, n)
        } else {
            Rhythm::parse_box(t)
        }
    }
}

impl fmt::Display for Rhythm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_subset_string())
    }
}

impl FromStr for Rhythm {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self> {
        Rhythm::parse_any(s)
    }
}

pub(crate) fn clockwise(from: usize, to: usize, n: usize) -> usize {
    (to + n - from) % n
}

pub(crate) fn geodesic(a: usize, b: usize, n: usize) -> usize {
    let d = clockwise(a, b, n);
    d.min(n - d)
}

fn parse_list(inner: &str) -> std::result::Result<Vec<usize>, std::num::ParseIntError> {
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|s| s.trim().parse()).collect()
}

/// Circular sequence of positive inter-onset gaps.
///
/// Two sequences that are rotations of each other describe the same necklace
/// but compare unequal as values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceSeq(pub Vec<usize>);

impl DistanceSeq {
    pub fn gaps(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> DistanceSeq {
        DistanceSeq(self.0.iter().rev().copied().collect())
    }

    /// Left rotation by `r` positions: `(d_r, d_{r+1}, ...)`.
    pub fn rotated(&self, r: usize) -> DistanceSeq {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let r = r % v.len();
            v.rotate_left(r);
        }
        DistanceSeq(v)
    }

    /// Lexicographically least rotation.
    pub fn least_rotation(&self) -> DistanceSeq {
        DistanceSeq(least_rotation(&self.0))
    }

    pub fn is_rotation_of(&self, other: &DistanceSeq) -> bool {
        self.len() == other.len() && least_rotation(&self.0) == least_rotation(&other.0)
    }
}

/// Lexicographically least rotation of a slice.
pub fn least_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let k = s.len();
    if k == 0 {
        return Vec::new();
    }
    let cmp_rot = |a: usize, b: usize| -> Ordering {
        (0..k)
            .map(|i| s[(a + i) % k].cmp(&s[(b + i) % k]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    };
    let best = (1..k).fold(0, |best, r| if cmp_rot(r, best).is_lt() { r } else { best });
    s[best..].iter().chain(&s[..best]).cloned().collect()
}

impl fmt::Display for DistanceSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for DistanceSeq {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = |detail: &str| RhythmError::Malformed {
            what: "distance sequence",
            detail: detail.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| malformed("must be wrapped in parentheses"))?;
        let gaps = parse_list(inner).map_err(|_| malformed("entry is not an integer"))?;
        if gaps.is_empty() {
            return Err(malformed("no entries"));
        }
        if gaps.contains(&0) {
            return Err(RhythmError::NonPositiveGap);
        }
        Ok(DistanceSeq(gaps))
    }
}

/// A rhythm necklace: its canonical (least) rotation plus `n` and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceClass {
    pub canonical: DistanceSeq,
    pub n: usize,
    pub k: usize,
}

impl fmt::Display for NecklaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

/// Box-notation text, e.g. `x..x..x.`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxPattern(pub String);

impl BoxPattern {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn parse(&self) -> Result<Rhythm> {
        Rhythm::parse_box(&self.0)
    }
}

impl fmt::Display for BoxPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize, onsets: &[usize]) -> Rhythm {
        Rhythm::new(n, onsets.iter().copied()).unwrap()
    }

    fn seq(gaps: &[usize]) -> DistanceSeq {
        DistanceSeq(gaps.to_vec())
    }

    const SON: &[usize] = &[0, 3, 6, 10, 12];
    const BEMBE: &[usize] = &[0, 2, 4, 5, 7, 9, 11];

    #[test]
    fn construction_rejects_bad_onsets() {
        assert_eq!(Rhythm::new(0, []), Err(RhythmError::ZeroTimespan));
        assert_eq!(
            Rhythm::new(4, [1, 4]),
            Err(RhythmError::OnsetOutOfRange { onset: 4, n: 4 })
        );
        assert_eq!(Rhythm::new(4, [1, 1]), Err(RhythmError::DuplicateOnset(1)));
        assert_eq!(r(8, &[6, 0, 3]).onsets(), &[0, 3, 6]);
    }

    #[test]
    fn parse_box_examples() {
        assert_eq!(
            Rhythm::parse_box("[x . . x . . x .]").unwrap(),
            r(8, &[0, 3, 6])
        );
        assert_eq!(Rhythm::parse_box(".").unwrap(), r(1, &[]));
        assert_eq!(
            Rhythm::parse_box("x.xx.xx.").unwrap(),
            r(8, &[0, 2, 3, 5, 6])
        );
        assert_eq!(Rhythm::parse_box("X.x").unwrap(), r(3, &[0, 2]));
    }

    #[test]
    fn parse_box_errors() {
        assert_eq!(Rhythm::parse_box(""), Err(RhythmError::EmptyPattern));
        assert_eq!(Rhythm::parse_box("[ ]"), Err(RhythmError::EmptyPattern));
        assert_eq!(
            Rhythm::parse_box("x.o."),
            Err(RhythmError::UnexpectedChar { ch: 'o', index: 2 })
        );
    }

    #[test]
    fn to_box_examples() {
        assert_eq!(r(8, &[0, 3, 6]).to_box().as_str(), "x..x..x.");
        assert_eq!(r(1, &[]).to_box().as_str(), ".");
        assert_eq!(r(16, SON).to_box().as_str(), "x..x..x...x.x...");
    }

    #[test]
    fn distance_sequences() {
        assert_eq!(r(16, SON).distance_seq().unwrap(), seq(&[3, 3, 4, 2, 4]));
        assert_eq!(r(9, &[0]).distance_seq().unwrap(), seq(&[9]));
        assert_eq!(
            r(13, &[0, 3, 5, 8, 10]).distance_seq().unwrap(),
            seq(&[3, 2, 3, 2, 3])
        );
        assert_eq!(
            r(5, &[]).distance_seq(),
            Err(RhythmError::TooFewOnsets {
                required: 1,
                found: 0
            })
        );
    }

    #[test]
    fn from_distance_seq_examples() {
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[3, 3, 2]), 0, 8).unwrap(),
            r(8, &[0, 3, 6])
        );
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[2, 3, 3, 2, 3]), 0, 13).unwrap(),
            r(13, &[0, 2, 5, 8, 10])
        );
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[16]), 5, 16).unwrap(),
            r(16, &[5])
        );
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[3, 3]), 0, 8),
            Err(RhythmError::SumMismatch { sum: 6, n: 8 })
        );
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[4, 4]), 8, 8),
            Err(RhythmError::StartOutOfRange { start: 8, n: 8 })
        );
        // wraps past the end of the cycle
        assert_eq!(
            Rhythm::from_distance_seq(&seq(&[3, 3, 2]), 6, 8).unwrap(),
            r(8, &[1, 4, 6])
        );
    }

    #[test]
    fn distances() {
        let son = r(16, SON);
        assert_eq!(son.clockwise_dist(2, 3), 4);
        assert_eq!(son.clockwise_dist(3, 3), 0);
        assert_eq!(r(6, &[0, 1, 2, 4]).clockwise_dist(3, 0), 2);
        let bossa = r(16, &[0, 3, 6, 10, 13]);
        assert_eq!(bossa.geodesic_dist(4, 0), 3);
        assert_eq!(bossa.geodesic_dist(1, 1), 0);
        assert_eq!(r(16, &[0, 8]).geodesic_dist(0, 1), 8);
        // indices wrap modulo k
        assert_eq!(son.clockwise_dist(4, 5), 4);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(r(8, &[0, 3, 6]).rotate(0), r(8, &[0, 3, 6]));
        assert_eq!(r(12, BEMBE).rotate(7), r(12, &[0, 2, 4, 6, 7, 9, 11]));
        assert_eq!(r(4, &[0]).rotate(6), r(4, &[2]));
        assert_eq!(r(4, &[0]).rotate(-1), r(4, &[3]));
    }

    #[test]
    fn scaling_examples() {
        let f = r(6, &[0, 1, 2, 4]);
        assert_eq!(f.scale(1).unwrap(), f);
        assert_eq!(f.scale(2).unwrap(), r(12, &[0, 2, 4, 8]));
        assert_eq!(r(5, &[]).scale(3).unwrap(), r(15, &[]));
        assert!(f.scale(0).is_err());
    }

    #[test]
    fn reversal_examples() {
        let rev = |g: &[usize]| {
            let n = g.iter().sum();
            Rhythm::from_distance_seq(&seq(g), 0, n)
                .unwrap()
                .reverse()
                .unwrap()
                .distance_seq()
                .unwrap()
        };
        assert_eq!(rev(&[2, 2, 1]), seq(&[1, 2, 2]));
        assert_eq!(rev(&[2, 1, 2, 1, 2, 1, 1]), seq(&[1, 1, 2, 1, 2, 1, 2]));
        assert_eq!(rev(&[2, 2]), seq(&[2, 2]));
        assert!(r(4, &[]).reverse().is_err());
    }

    #[test]
    fn necklaces() {
        let bembe = r(12, BEMBE);
        assert_eq!(
            bembe.necklace().unwrap(),
            bembe.rotate(7).necklace().unwrap()
        );
        assert_eq!(
            bembe.necklace().unwrap(),
            bembe.rotate(1).necklace().unwrap()
        );
        let a = Rhythm::from_distance_seq(&seq(&[3, 2, 3, 2, 3]), 0, 13).unwrap();
        let b = Rhythm::from_distance_seq(&seq(&[2, 3, 2, 3, 3]), 0, 13).unwrap();
        assert_eq!(a.necklace().unwrap().canonical, seq(&[2, 3, 2, 3, 3]));
        assert_eq!(a.necklace().unwrap(), b.necklace().unwrap());
        assert_eq!(r(7, &[3]).necklace().unwrap().canonical, seq(&[7]));
    }

    #[test]
    fn periods() {
        assert_eq!(r(12, &[0, 3, 6, 9]).period().unwrap(), 3);
        assert_eq!(r(8, &[0, 3, 6]).period().unwrap(), 8);
        assert_eq!(r(4, &[0, 2]).period().unwrap(), 2);
        assert!(r(4, &[]).period().is_err());
    }

    #[test]
    fn text_forms() {
        let son = r(16, SON);
        assert_eq!(son.to_string(), "{0,3,6,10,12}/16");
        assert_eq!(son.distance_seq().unwrap().to_string(), "(3,3,4,2,4)");
        assert_eq!(Rhythm::parse_any("{0,3,6,10,12}/16").unwrap(), son);
        assert_eq!(Rhythm::parse_any("(3,3,4,2,4)").unwrap(), son);
        assert_eq!(Rhythm::parse_any("{}/5").unwrap(), r(5, &[]));
        assert!(Rhythm::parse_any("{0,3/16").is_err());
        assert!(Rhythm::parse_any("(3,0,2)").is_err());
        assert_eq!(son.to_bits(), "1001001000101000");
    }
}
