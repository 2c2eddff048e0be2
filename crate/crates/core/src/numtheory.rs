//! Elementary number theory used throughout the crate.

/// Greatest common divisor by the division form of Euclid's recursion.
///
/// `gcd(0, n) = n`, so the function is total on non-negative integers.
pub fn gcd(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

/// Multiplicative inverse of `x` modulo `m`, in `1..m`.
///
/// Returns `None` when `x` and `m` share a factor (or `m < 2`).
pub fn mod_inverse(x: usize, m: usize) -> Option<usize> {
    if m < 2 {
        return None;
    }
    // extended Euclid on (x mod m, m)
    let (mut old_r, mut r) = ((x % m) as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i64) as usize)
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(5, 13), 1);
        assert_eq!(gcd(7, 7), 7);
        assert_eq!(gcd(4, 12), 4);
        assert_eq!(gcd(0, 9), 9);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(12 % 7, 7), Some(3));
        assert_eq!(mod_inverse(1, 9), Some(1));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(0, 5), None);
    }

    #[test]
    fn inverse_exists_iff_coprime() {
        for m in 2..40 {
            for x in 0..m {
                match mod_inverse(x, m) {
                    Some(y) => {
                        assert!((1..m).contains(&y));
                        assert_eq!(x * y % m, 1);
                    }
                    None => assert_ne!(gcd(x, m), 1),
                }
            }
        }
    }

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(9));
        assert!(!is_prime(15));
    }
}
