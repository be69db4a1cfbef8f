//! Extremal heights over all monic divisors of `x^n - 1`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cyclotomic::FactoredIndex;
use crate::error::Result;
use crate::lattice::{enumerate_divisors, DEFAULT_ENUMERATION_BUDGET};

/// All height aggregates for one `n`, gathered in a single enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightSummary {
    pub n: u64,
    pub divisor_total: u64,
    /// `B(n)`: largest height of a monic divisor.
    pub b: BigInt,
    /// `B_+(n)`: largest `H_+`.
    pub b_plus: BigInt,
    /// `B_-(n)`: largest `|H_-|`.
    pub b_minus: BigInt,
    /// `B'(n)`: `B(n)` restricted to balanced divisors.
    pub b_prime: BigInt,
    /// `C(n)`: largest `|C_0(f)| - 1` over balanced divisors.
    pub balanced_c: u64,
    /// Number of flat monic divisors.
    pub flat_count: u64,
}

pub fn survey(n: &FactoredIndex, budget: u64) -> Result<HeightSummary> {
    let stream = enumerate_divisors(n, budget)?;
    let mut s = HeightSummary {
        n: n.n(),
        divisor_total: stream.len() as u64,
        b: BigInt::zero(),
        b_plus: BigInt::zero(),
        b_minus: BigInt::zero(),
        b_prime: BigInt::zero(),
        balanced_c: 0,
        flat_count: 0,
    };
    for (_, f) in stream {
        let set = f.coeff_set()?;
        let lo = set.min().expect("nonzero").clone();
        let hi = set.max().expect("nonzero").clone();
        let h = lo.abs().max(hi.abs());
        if set.is_flat() {
            s.flat_count += 1;
        }
        if lo.is_negative() && hi.is_positive() {
            s.b_prime = s.b_prime.max(h.clone());
            s.balanced_c = s.balanced_c.max(set.with_zero().len() as u64 - 1);
        }
        s.b = s.b.max(h);
        s.b_plus = s.b_plus.max(hi);
        s.b_minus = s.b_minus.max(lo.abs());
    }
    Ok(s)
}

fn default_survey(n: u64) -> Result<HeightSummary> {
    survey(&FactoredIndex::new(n)?, DEFAULT_ENUMERATION_BUDGET)
}

pub fn big_b(n: u64) -> Result<BigInt> {
    Ok(default_survey(n)?.b)
}

pub fn big_b_plus(n: u64) -> Result<BigInt> {
    Ok(default_survey(n)?.b_plus)
}

pub fn big_b_minus(n: u64) -> Result<BigInt> {
    Ok(default_survey(n)?.b_minus)
}

pub fn big_b_prime(n: u64) -> Result<BigInt> {
    Ok(default_survey(n)?.b_prime)
}

pub fn balanced_c(n: u64) -> Result<u64> {
    Ok(default_survey(n)?.balanced_c)
}

pub fn count_flat_divisors(n: u64) -> Result<u64> {
    Ok(default_survey(n)?.flat_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_cases() {
        assert_eq!(big_b(15).unwrap(), b(3));
        assert_eq!(big_b(32).unwrap(), b(1));
        assert_eq!(big_b(12).unwrap(), b(3));
        assert_eq!(big_b(18).unwrap(), b(2));
        assert_eq!(big_b_minus(45).unwrap(), b(5));
        assert_eq!(big_b_prime(15).unwrap(), b(2));
        assert_eq!(balanced_c(15).unwrap(), 4);
        assert_eq!(big_b_prime(45).unwrap(), b(5));
        assert_eq!(balanced_c(45).unwrap(), 10);
    }

    #[test]
    fn flat_counts() {
        assert_eq!(count_flat_divisors(15).unwrap(), 14);
        assert_eq!(count_flat_divisors(27).unwrap(), 16);
        assert!(count_flat_divisors(12).unwrap() >= 35);
    }

    #[test]
    fn budget_is_enforced() {
        let n = FactoredIndex::new(720720).unwrap();
        assert!(survey(&n, 1 << 20).is_err());
    }
}
