//! Distance multiplicities, Erdős and Winograd deepness, the structural
//! characterization of deep rhythms, and shellings.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Result, RhythmError};
use crate::generators::{exceptional_f, generated_allow_empty};
use crate::numtheory::gcd;
use crate::rhythm::Rhythm;

/// Multiplicity of each geodesic distance present in a rhythm.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityHistogram {
    pub counts: BTreeMap<usize, usize>,
}

impl MultiplicityHistogram {
    /// Multiplicity of `d` (zero when absent).
    pub fn get(&self, d: usize) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Distances sorted by ascending multiplicity (ties broken by distance).
    pub fn by_multiplicity(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.counts.iter().map(|(&d, &c)| (d, c)).collect();
        v.sort_by_key(|&(d, c)| (c, d));
        v
    }
}

impl fmt::Display for MultiplicityHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn histogram(r: &Rhythm) -> MultiplicityHistogram {
    let mut counts = BTreeMap::new();
    for d in r.pairwise_geodesics() {
        *counts.entry(d).or_insert(0) += 1;
    }
    MultiplicityHistogram { counts }
}

/// Nonzero multiplicities are exactly `1..k-1`, one distance each.
pub fn is_erdos_deep(r: &Rhythm) -> bool {
    let k = r.len();
    if k <= 2 {
        return true;
    }
    let mut mults: Vec<usize> = histogram(r).counts.into_values().collect();
    mults.sort_unstable();
    mults.len() == k - 1 && mults.iter().enumerate().all(|(i, &m)| m == i + 1)
}

/// Every distance in `1..=n/2`, absent ones included, has its own multiplicity.
pub fn is_winograd_deep(r: &Rhythm) -> bool {
    let h = histogram(r);
    let mut mults: Vec<usize> = (1..=r.timespan() / 2).map(|d| h.get(d)).collect();
    mults.sort_unstable();
    mults.windows(2).all(|w| w[0] != w[1])
}

/// Witness that a rhythm is a rotation of a scaling of `D_{k,n',m'}` or of `{0,1,2,4}/6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeepForm {
    Generated {
        k: usize,
        base_n: usize,
        generator: usize,
        scale: usize,
        rotation: usize,
    },
    ExceptionalF {
        scale: usize,
        rotation: usize,
    },
}

impl DeepForm {
    pub fn scale(&self) -> usize {
        match *self {
            DeepForm::Generated { scale, .. } | DeepForm::ExceptionalF { scale, .. } => scale,
        }
    }

    pub fn rotation(&self) -> usize {
        match *self {
            DeepForm::Generated { rotation, .. } | DeepForm::ExceptionalF { rotation, .. } => {
                rotation
            }
        }
    }

    /// The unscaled, unrotated base rhythm.
    pub fn base(&self) -> Result<Rhythm> {
        match *self {
            DeepForm::Generated {
                k,
                base_n,
                generator,
                ..
            } => generated_allow_empty(k, base_n, generator),
            DeepForm::ExceptionalF { .. } => Ok(exceptional_f()),
        }
    }

    /// `rotate(scale(base, alpha), delta)`.
    pub fn reconstruct(&self) -> Result<Rhythm> {
        Ok(self
            .base()?
            .scale(self.scale())?
            .rotate(self.rotation() as i64))
    }

    /// Onsets in reverse generation order; removing them in this order keeps
    /// the rhythm deep at every step.
    pub fn shelling_order(&self) -> Vec<usize> {
        match *self {
            DeepForm::Generated {
                k,
                base_n,
                generator,
                scale,
                rotation,
            } => {
                let n = base_n * scale;
                (0..k)
                    .rev()
                    .map(|i| (rotation + scale * (i * generator % base_n)) % n)
                    .collect()
            }
            DeepForm::ExceptionalF { scale, rotation } => [4, 2, 1, 0]
                .iter()
                .map(|&x| (rotation + scale * x) % (6 * scale))
                .collect(),
        }
    }
}

impl fmt::Display for DeepForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DeepForm::Generated {
                k,
                base_n,
                generator,
                scale,
                rotation,
            } => write!(
                f,
                "rotate(scale(D(k={k}, n={base_n}, m={generator}), {scale}), {rotation})"
            ),
            DeepForm::ExceptionalF { scale, rotation } => {
                write!(f, "rotate(scale(F, {scale}), {rotation})")
            }
        }
    }
}

/// A witness for an Erdős-deep rhythm, or `None` when the rhythm is not deep.
///
/// The scale is forced to the gcd of `n` and all onset differences. Among
/// generated forms the smallest generator wins, then the smallest rotation.
/// Every candidate is confirmed by reconstruction.
pub fn characterize_deep(r: &Rhythm) -> Option<DeepForm> {
    let n = r.timespan();
    let k = r.len();
    if k <= 1 {
        let form = DeepForm::Generated {
            k,
            base_n: n,
            generator: if n == 1 { 0 } else { 1 },
            scale: 1,
            rotation: r.onsets().first().copied().unwrap_or(0),
        };
        return Some(form);
    }
    let first = r.onsets()[0];
    let alpha = r.onsets().iter().fold(n, |g, &x| gcd(g, x - first));
    let base_n = n / alpha;
    if k <= base_n / 2 + 1 {
        for m in (1..=base_n / 2).filter(|&m| gcd(m, base_n) == 1) {
            for &delta in r.onsets() {
                let form = DeepForm::Generated {
                    k,
                    base_n,
                    generator: m,
                    scale: alpha,
                    rotation: delta,
                };
                if form.reconstruct().as_ref() == Ok(r) {
                    return Some(form);
                }
            }
        }
    }
    if k == 4 && base_n == 6 {
        for &delta in r.onsets() {
            let form = DeepForm::ExceptionalF {
                scale: alpha,
                rotation: delta,
            };
            if form.reconstruct().as_ref() == Ok(r) {
                return Some(form);
            }
        }
    }
    None
}

/// A canonical shelling: an onset removal order that keeps every remainder deep.
pub fn shelling(r: &Rhythm) -> Result<Vec<usize>> {
    if !is_erdos_deep(r) {
        return Err(RhythmError::NotDeep(r.to_string()));
    }
    let form = characterize_deep(r).ok_or_else(|| RhythmError::NotDeep(r.to_string()))?;
    Ok(form.shelling_order())
}

/// Whether removing `order` one onset at a time leaves a deep rhythm after every step.
///
/// The starting rhythm itself must also be deep.
pub fn validate_shelling(r: &Rhythm, order: &[usize]) -> Result<bool> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != r.onsets() {
        return Err(RhythmError::NotPermutation);
    }
    if !is_erdos_deep(r) {
        return Ok(false);
    }
    let mut remaining: Vec<usize> = r.onsets().to_vec();
    for &s in order {
        remaining.retain(|&x| x != s);
        let rest = Rhythm::new(r.timespan(), remaining.iter().copied())?;
        if !is_erdos_deep(&rest) {
            return Ok(false);
        }
    }
    Ok(true)
}
