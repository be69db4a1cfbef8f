//! Modular-inverse identities and the position of `±2` in `f_43`.

use crate::arith::{gcd, is_prime, residue_ratio};
use crate::error::{Error, Result};

/// `{num/den; m}` for arguments already known to be coprime.
fn ratio(num: i64, den: u64, m: u64) -> i128 {
    residue_ratio(num, den, m).expect("coprime by construction") as i128
}

fn check_coprime(a: u64, b: u64) -> Result<()> {
    if a <= 1 || b <= 1 {
        return Err(Error::InvalidArgument(format!(
            "expected a, b > 1, got ({a}, {b})"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok(())
}

fn check_prime_pair(p: u64, q: u64) -> Result<()> {
    for r in [p, q] {
        if !is_prime(r) {
            return Err(Error::NotPrime(r));
        }
    }
    if p == q {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    Ok(())
}

/// The four quantities compared against `p^2 q` in the `f_43` conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeckerSums {
    pub r1: i128,
    pub s1: i128,
    pub r2: i128,
    pub s2: i128,
}

pub fn decker_sums(p: u64, q: u64) -> Result<DeckerSums> {
    check_prime_pair(p, q)?;
    let p2 = p * p;
    let (pi, qi, p2i) = (p as i128, q as i128, p2 as i128);
    Ok(DeckerSums {
        r1: ratio(1, q, p2) * qi + ratio(1, p, q) * p2i,
        s1: ratio(-1, q, p) * pi * qi + ratio(-1, p2, q) * p2i + pi + 1,
        r2: ratio(-1, q, p2) * qi + ratio(-1, p, q) * p2i + pi + 1,
        s2: ratio(1, q, p) * pi * qi + ratio(1, p2, q) * p2i,
    })
}

/// Checks `(a - {1/b; a}, {1/a; b}) = ({1/b; a}, b - {1/a; b}) = 1` and, when
/// both arguments are prime, `r_1 = s_1` and `r_2 = s_2`.
pub fn mod_inverse_reciprocity(a: u64, b: u64) -> Result<bool> {
    check_coprime(a, b)?;
    let inv_b = residue_ratio(1, b, a).expect("coprime");
    let inv_a = residue_ratio(1, a, b).expect("coprime");
    let mut holds = gcd(a - inv_b, inv_a) == 1 && gcd(inv_b, b - inv_a) == 1;
    if is_prime(a) && is_prime(b) {
        let s = decker_sums(a, b)?;
        holds &= s.r1 == s.s1 && s.r2 == s.s2;
    }
    Ok(holds)
}

/// `{1/a; b} ≡ {1/b; a} (mod 2)` for odd coprime `a, b > 1`.
pub fn reciprocity_parity(a: u64, b: u64) -> Result<bool> {
    check_coprime(a, b)?;
    if a.is_multiple_of(2) || b.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "expected odd a, b, got ({a}, {b})"
        )));
    }
    let inv_b = residue_ratio(1, b, a).expect("coprime");
    let inv_a = residue_ratio(1, a, b).expect("coprime");
    Ok(inv_a % 2 == inv_b % 2)
}

/// Where `f_43 = (x - 1) f_42` attains `2`, and the mirrored `-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F43Positions {
    /// Which of the two candidate positions qualified (1 or 2).
    pub part: u8,
    pub position: u64,
    pub mirror_position: u64,
}

pub fn f43_two_positions(p: u64, q: u64) -> Result<F43Positions> {
    let s = decker_sums(p, q)?;
    let p2 = p * p;
    let n = (p2 * q) as i128;
    let k1 = 1 + residue_ratio(p as i64 - 1, p2, q).expect("coprime") * p2;
    let k2 = 1 + residue_ratio(p as i64 - 1, q, p2).expect("coprime") * q;
    let deg42 = p2 * (q - 1) + p - q;
    let part1 = 1 < k1 && k1 <= deg42 && s.r1 > n && s.s1 > n;
    let part2 = k2 <= deg42 && s.r2 > n && s.s2 > n;
    let (part, k) = match (part1, part2) {
        (true, false) => (1, k1),
        (false, true) => (2, k2),
        _ => return Err(Error::NoUniquePosition { p, q }),
    };
    Ok(F43Positions {
        part,
        position: k,
        mirror_position: deg42 - k + 1,
    })
}
