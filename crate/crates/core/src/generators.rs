//! Rhythm generators.
//!
//! The four even-rhythm algorithms (Bjorklund's folding, the recursive
//! Euclidean construction, Clough-Douthett and Snap) produce the same necklace
//! for every `(k, n)`; each returns its own concrete rotation. The module also
//! builds generated rhythms `{0, m, 2m, ...}` and the exceptional deep rhythm
//! `{0,1,2,4}/6`.

use crate::error::{Result, RhythmError};
use crate::rhythm::{DistanceSeq, Rhythm};

/// Parameters of a generator call: `k` onsets in `n` pulses, optional step `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub k: usize,
    pub n: usize,
    pub m: Option<usize>,
}

impl GeneratorSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        check_counts(k, n)?;
        Ok(GeneratorSpec { k, n, m: None })
    }

    pub fn with_step(k: usize, n: usize, m: usize) -> Result<Self> {
        check_counts(k, n)?;
        if m >= n {
            return Err(RhythmError::GeneratorOutOfRange { m, n });
        }
        Ok(GeneratorSpec { k, n, m: Some(m) })
    }
}

fn check_counts(k: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(RhythmError::ZeroTimespan);
    }
    if k == 0 {
        return Err(RhythmError::TooFewOnsets {
            required: 1,
            found: 0,
        });
    }
    if k > n {
        return Err(RhythmError::TooManyOnsets { k, n });
    }
    Ok(())
}

/// Bjorklund's folding procedure for `k` ones among `n` bits.
///
/// Starts from `k` one-bit sequences `[1]` and `n - k` sequences `[0]`, then
/// repeatedly appends one remainder sequence to each leading sequence until
/// at most one remainder sequence is left. The result starts with an onset.
pub fn bjorklund(k: usize, n: usize) -> Result<Rhythm> {
    check_counts(k, n)?;
    let mut heads: Vec<Vec<bool>> = vec![vec![true]; k];
    let mut tail: Vec<Vec<bool>> = vec![vec![false]; n - k];
    while tail.len() > 1 {
        let paired = heads.len().min(tail.len());
        let leftover = if heads.len() > paired {
            heads.split_off(paired)
        } else {
            tail.split_off(paired)
        };
        for (head, t) in heads.iter_mut().zip(tail) {
            head.extend(t);
        }
        tail = leftover;
    }
    let bits = heads.into_iter().chain(tail).flatten();
    Rhythm::new(n, bits.enumerate().filter(|&(_, b)| b).map(|(i, _)| i))
}

/// Recursive Euclidean construction of a distance sequence with `k` gaps summing to `n`.
///
/// If `k` divides `n` all gaps are `n / k`. Otherwise, with `a = n mod k`, each
/// term `x` of the `(k, a)` sequence expands into `x - 1` copies of `floor(n/k)`
/// followed by one `ceil(n/k)`.
pub fn euclidean_recursive(n: usize, k: usize) -> Result<DistanceSeq> {
    check_counts(k, n)?;
    Ok(DistanceSeq(euclidean_gaps(n, k)))
}

fn euclidean_gaps(n: usize, k: usize) -> Vec<usize> {
    if n.is_multiple_of(k) {
        return vec![n / k; k];
    }
    let (lo, hi) = (n / k, n.div_ceil(k));
    euclidean_gaps(k, n % k)
        .into_iter()
        .flat_map(|x| std::iter::repeat_n(lo, x - 1).chain(std::iter::once(hi)))
        .collect()
}

/// The recursive Euclidean rhythm anchored at pulse 0.
pub fn euclidean_rhythm(n: usize, k: usize) -> Result<Rhythm> {
    Rhythm::from_distance_seq(&euclidean_recursive(n, k)?, 0, n)
}

/// Clough-Douthett: onsets `floor(i n / k)` for `i` in `0..k`.
pub fn clough_douthett(n: usize, k: usize) -> Result<Rhythm> {
    check_counts(k, n)?;
    Rhythm::new(n, (0..k).map(|i| i * n / k))
}

/// Snap: `k` evenly spaced points at `i n / k + 1/(2k)`, each moved clockwise to the next pulse.
///
/// The offset keeps every point off the pulse lattice; all arithmetic is exact.
pub fn snap(n: usize, k: usize) -> Result<Rhythm> {
    check_counts(k, n)?;
    // point i sits at (2 i n + 1) / (2k)
    Rhythm::new(n, (0..k).map(|i| (2 * i * n + 1).div_ceil(2 * k) % n))
}

/// Generated rhythm `{i m mod n : i in 0..k}`.
pub fn generated(k: usize, n: usize, m: usize) -> Result<Rhythm> {
    let spec = GeneratorSpec::with_step(k, n, m)?;
    generated_from(&spec)
}

/// Same as [`generated`] but also allows `k = 0` (the empty rhythm).
pub(crate) fn generated_allow_empty(k: usize, n: usize, m: usize) -> Result<Rhythm> {
    if k == 0 {
        return Rhythm::empty(n);
    }
    generated(k, n, m)
}

fn generated_from(spec: &GeneratorSpec) -> Result<Rhythm> {
    let m = spec.m.unwrap_or(1);
    let onsets: Vec<usize> = (0..spec.k).map(|i| i * m % spec.n).collect();
    Rhythm::new(spec.n, onsets).map_err(|e| match e {
        RhythmError::DuplicateOnset(_) => RhythmError::GeneratorCollision {
            k: spec.k,
            n: spec.n,
            m,
        },
        e => e,
    })
}

/// Generation order of `{i m mod n}`: onset positions for `i = 0, 1, ..., k-1`.
pub fn generation_order(k: usize, n: usize, m: usize) -> Vec<usize> {
    (0..k).map(|i| i * m % n).collect()
}

/// The exceptional deep rhythm `{0,1,2,4}/6`.
pub fn exceptional_f() -> Rhythm {
    Rhythm::new(6, [0, 1, 2, 4]).expect("constant rhythm is valid")
}

/// Even-rhythm algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenAlgorithm {
    Bjorklund,
    Euclidean,
    CloughDouthett,
    Snap,
}

impl EvenAlgorithm {
    pub const ALL: [EvenAlgorithm; 4] = [
        EvenAlgorithm::Bjorklund,
        EvenAlgorithm::Euclidean,
        EvenAlgorithm::CloughDouthett,
        EvenAlgorithm::Snap,
    ];

    pub fn generate(self, k: usize, n: usize) -> Result<Rhythm> {
        match self {
            EvenAlgorithm::Bjorklund => bjorklund(k, n),
            EvenAlgorithm::Euclidean => euclidean_rhythm(n, k),
            EvenAlgorithm::CloughDouthett => clough_douthett(n, k),
            EvenAlgorithm::Snap => snap(n, k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EvenAlgorithm::Bjorklund => "bjorklund",
            EvenAlgorithm::Euclidean => "euclid",
            EvenAlgorithm::CloughDouthett => "clough",
            EvenAlgorithm::Snap => "snap",
        }
    }
}
