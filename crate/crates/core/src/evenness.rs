//! Evenness metrics and the maximum-evenness characterization.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Result, RhythmError};
use crate::rhythm::Rhythm;

/// Tolerance used when comparing real-valued evenness totals.
pub const EVENNESS_TOLERANCE: f64 = 1e-9;

/// Default timespan cap for exhaustive subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_CAP`].
pub const ENUMERATION_CAP_ENV: &str = "EUCLID_ENUM_CAP";

/// Chord length subtending an arc of `d` pulses on a circle of `n` pulses with unit radius.
///
/// Arcs longer than half the circle are measured the short way round, so the
/// result is exactly symmetric and never negative.
pub fn chord(d: usize, n: usize) -> f64 {
    let d = d.min(n.saturating_sub(d));
    2.0 * (PI * d as f64 / n as f64).sin()
}

/// Sum of chordal distances over all onset pairs.
pub fn evenness_chordal(r: &Rhythm) -> f64 {
    // fold from +0.0: an empty f64 sum would be -0.0
    r.pairwise_geodesics()
        .map(|d| chord(d, r.timespan()))
        .fold(0.0, |a, b| a + b)
}

/// Sum of geodesic (arc-length) distances over all onset pairs.
pub fn evenness_geodesic(r: &Rhythm) -> usize {
    r.pairwise_geodesics().sum()
}

/// Sum of squared geodesic distances over all onset pairs.
pub fn evenness_squared_geodesic(r: &Rhythm) -> usize {
    r.pairwise_geodesics().map(|d| d * d).sum()
}

/// Level-`l` view of a rhythm: the clockwise distances of the `k` pairs
/// `(r_i, r_{i+l})` and their chordal total.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSum {
    pub level: usize,
    pub clockwise: Vec<usize>,
    pub chordal: f64,
}

/// Clockwise distances and chordal sum for the pairs `(r_i, r_{i+level})`, `level` in `1..=k`.
///
/// At `level == k` every pair wraps the whole circle and has clockwise distance `n`.
pub fn level_sum(r: &Rhythm, level: usize) -> Result<LevelSum> {
    let k = r.len();
    if level == 0 || level > k {
        return Err(RhythmError::LevelOutOfRange { level, k });
    }
    let clockwise = level_distances(r, level);
    let chordal = clockwise
        .iter()
        .map(|&d| chord(d, r.timespan()))
        .fold(0.0, |a, b| a + b);
    Ok(LevelSum {
        level,
        clockwise,
        chordal,
    })
}

fn level_distances(r: &Rhythm, level: usize) -> Vec<usize> {
    let (k, n) = (r.len(), r.timespan());
    (0..k)
        .map(|i| {
            // a full loop (level == k) wraps to n rather than 0
            if level == k {
                n
            } else {
                r.clockwise_dist(i, i + level)
            }
        })
        .collect()
}

fn within_level_bounds(d: usize, level: usize, n: usize, k: usize) -> bool {
    let lo = level * n / k;
    let hi = (level * n).div_ceil(k);
    d == lo || d == hi
}

/// Every level-`l` clockwise distance equals `floor(l n / k)` or `ceil(l n / k)`.
pub fn has_property_star(r: &Rhythm) -> Result<bool> {
    let k = r.len();
    if k < 2 {
        return Err(RhythmError::TooFewOnsets {
            required: 2,
            found: k,
        });
    }
    let n = r.timespan();
    Ok((1..=k).all(|l| {
        level_distances(r, l)
            .into_iter()
            .all(|d| within_level_bounds(d, l, n, k))
    }))
}

/// The same condition phrased on the distance sequence: every window of `l`
/// consecutive gaps sums to `floor(l n / k)` or `ceil(l n / k)`.
pub fn has_property_star_star(r: &Rhythm) -> Result<bool> {
    let k = r.len();
    if k < 2 {
        return Err(RhythmError::TooFewOnsets {
            required: 2,
            found: k,
        });
    }
    let n = r.timespan();
    let gaps = r.distance_seq()?;
    let gaps = gaps.gaps();
    Ok((1..=k).all(|l| {
        (0..k).all(|start| {
            let s: usize = (0..l).map(|j| gaps[(start + j) % k]).sum();
            within_level_bounds(s, l, n, k)
        })
    }))
}

/// Whether all level-`l` clockwise distances lie within one of each other.
pub fn level_is_balanced(r: &Rhythm, level: usize) -> Result<bool> {
    let ls = level_sum(r, level)?;
    let n = r.timespan();
    Ok(ls
        .clockwise
        .iter()
        .all(|&d| within_level_bounds(d, level, n, r.len())))
}

/// Evenness measure used by [`brute_force_max_evenness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Chordal,
    Geodesic,
    SquaredGeodesic,
}

impl Metric {
    pub fn evaluate(self, r: &Rhythm) -> f64 {
        match self {
            Metric::Chordal => evenness_chordal(r),
            Metric::Geodesic => evenness_geodesic(r) as f64,
            Metric::SquaredGeodesic => evenness_squared_geodesic(r) as f64,
        }
    }

    fn tolerance(self) -> f64 {
        match self {
            Metric::Chordal => EVENNESS_TOLERANCE,
            // integer-valued metrics compare exactly
            Metric::Geodesic | Metric::SquaredGeodesic => 0.0,
        }
    }
}

/// Full evenness profile of a rhythm.
#[derive(Debug, Clone, PartialEq)]
pub struct EvennessReport {
    pub chordal_sum: f64,
    pub geodesic_sum: usize,
    pub squared_geodesic_sum: usize,
    /// `S(R, l)` for `l` in `1..=k`.
    pub per_level: Vec<f64>,
}

impl EvennessReport {
    pub fn of(r: &Rhythm) -> EvennessReport {
        let per_level = (1..=r.len())
            .map(|l| level_sum(r, l).expect("level in range").chordal)
            .collect();
        EvennessReport {
            chordal_sum: evenness_chordal(r),
            geodesic_sum: evenness_geodesic(r),
            squared_geodesic_sum: evenness_squared_geodesic(r),
            per_level,
        }
    }
}

/// The enumeration cap in effect: [`ENUMERATION_CAP_ENV`] if set and valid, else the default.
pub fn enumeration_cap() -> usize {
    std::env::var(ENUMERATION_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63, "subset enumeration is limited to n <= 63");
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut out = Vec::new();
    let mut v: u64 = (1u64 << k) - 1;
    while v < limit {
        out.push(v);
        // Gosper's hack: next integer with the same popcount
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// Every `k`-onset rhythm of timespan `n` maximizing `metric`, sorted by onset set.
///
/// Uses [`enumeration_cap`] as the timespan limit.
pub fn brute_force_max_evenness(n: usize, k: usize, metric: Metric) -> Result<Vec<Rhythm>> {
    brute_force_max_evenness_capped(n, k, metric, enumeration_cap())
}

/// As [`brute_force_max_evenness`] with an explicit timespan cap (at most 63).
pub fn brute_force_max_evenness_capped(
    n: usize,
    k: usize,
    metric: Metric,
    cap: usize,
) -> Result<Vec<Rhythm>> {
    if n == 0 {
        return Err(RhythmError::ZeroTimespan);
    }
    if n > cap.min(63) {
        return Err(RhythmError::EnumerationCap {
            n,
            cap: cap.min(63),
        });
    }
    if k > n {
        return Err(RhythmError::TooManyOnsets { k, n });
    }
    let scored: Vec<(u64, f64)> = k_subsets(n, k)
        .into_par_iter()
        .map(|mask| {
            let r = Rhythm::from_mask(n, mask).expect("mask within timespan");
            (mask, metric.evaluate(&r))
        })
        .collect();
    let best = scored
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::NEG_INFINITY, f64::max);
    let tol = metric.tolerance();
    let mut winners: Vec<Rhythm> = scored
        .into_iter()
        .filter(|&(_, v)| v >= best - tol)
        .map(|(mask, _)| Rhythm::from_mask(n, mask).expect("mask within timespan"))
        .collect();
    winners.sort_by(|a, b| a.onsets().cmp(b.onsets()));
    Ok(winners)
}

/// All distinct rotations of a rhythm, sorted by onset set.
pub fn rotation_orbit(r: &Rhythm) -> Vec<Rhythm> {
    let mut orbit: Vec<Rhythm> = (0..r.timespan()).map(|d| r.rotate(d as i64)).collect();
    orbit.sort_by(|a, b| a.onsets().cmp(b.onsets()));
    orbit.dedup();
    orbit
}
