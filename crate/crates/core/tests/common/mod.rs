//! Independent reference implementations used to cross-check the library.
//! Deliberately naive: plain loops over onset lists, no shared helpers.
#![allow(dead_code)]

use std::collections::BTreeMap;

pub fn onsets_of_mask(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn geodesic(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

pub fn chordal_sum(n: usize, on: &[usize]) -> f64 {
    let mut s = 0.0;
    for i in 0..on.len() {
        for j in i + 1..on.len() {
            let d = geodesic(on[i], on[j], n) as f64;
            s += 2.0 * (std::f64::consts::PI * d / n as f64).sin();
        }
    }
    s
}

pub fn geodesic_sum(n: usize, on: &[usize]) -> usize {
    let mut s = 0;
    for i in 0..on.len() {
        for j in i + 1..on.len() {
            s += geodesic(on[i], on[j], n);
        }
    }
    s
}

pub fn hist(n: usize, on: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for i in 0..on.len() {
        for j in i + 1..on.len() {
            *h.entry(geodesic(on[i], on[j], n)).or_insert(0) += 1;
        }
    }
    h
}

pub fn erdos(n: usize, on: &[usize]) -> bool {
    let k = on.len();
    if k <= 2 {
        return true;
    }
    let h = hist(n, on);
    let mut seen = vec![false; k];
    for &m in h.values() {
        if m >= k || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    h.len() == k - 1
}

pub fn winograd(n: usize, on: &[usize]) -> bool {
    let h = hist(n, on);
    let ms: Vec<usize> = (1..=n / 2).map(|d| *h.get(&d).unwrap_or(&0)).collect();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if ms[i] == ms[j] {
                return false;
            }
        }
    }
    true
}

/// Every level-l clockwise distance is floor(ln/k) or ceil(ln/k).
pub fn star(n: usize, on: &[usize]) -> bool {
    let k = on.len();
    for l in 1..=k {
        let lo = l * n / k;
        let hi = (l * n).div_ceil(k);
        for i in 0..k {
            let a = on[i];
            let b = on[(i + l) % k];
            let d = if l == k { n } else { (b + n - a) % n };
            if d != lo && d != hi {
                return false;
            }
        }
    }
    true
}

pub fn bits(n: usize, on: &[usize]) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for &i in on {
        v[i] = 1;
    }
    v
}

/// Lexicographically least rotation, by trying every shift.
pub fn min_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    (0..s.len().max(1))
        .map(|r| {
            s[r.min(s.len())..]
                .iter()
                .chain(&s[..r.min(s.len())])
                .cloned()
                .collect::<Vec<T>>()
        })
        .min()
        .unwrap_or_default()
}

pub fn same_necklace(n: usize, a: &[usize], b: &[usize]) -> bool {
    min_rotation(&bits(n, a)) == min_rotation(&bits(n, b))
}

/// All rotations of an onset set, each sorted.
pub fn orbit(n: usize, on: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..n)
        .map(|d| {
            let mut v: Vec<usize> = on.iter().map(|x| (x + d) % n).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_rotation(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && (0..a.len().max(1)).any(|r| a.iter().cycle().skip(r).take(a.len()).eq(b.iter()))
}

/// tau(p) is a rotation of p, with singletons fixed.
pub fn euclidean_string(p: &[usize]) -> bool {
    if p.len() == 1 {
        return true;
    }
    if *p.last().unwrap() == 0 {
        return false;
    }
    let mut t = p.to_vec();
    t[0] += 1;
    *t.last_mut().unwrap() -= 1;
    is_rotation(&t, p)
}
