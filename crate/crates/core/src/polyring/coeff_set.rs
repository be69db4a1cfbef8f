use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The set of coefficients of a polynomial: `C(f)`, or `C_0(f) = C(f) ∪ {0}`
/// when `includes_zero_pad` is set. Equality compares the values only.
#[derive(Clone, Debug)]
pub struct CoeffSet {
    values: Vec<BigInt>,
    includes_zero_pad: bool,
}

impl PartialEq for CoeffSet {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for CoeffSet {}

impl std::hash::Hash for CoeffSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl CoeffSet {
    /// Builds a `C(f)`-style set from arbitrary values.
    pub fn from_values<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let set: BTreeSet<BigInt> = values.into_iter().map(Into::into).collect();
        CoeffSet {
            values: set.into_iter().collect(),
            includes_zero_pad: false,
        }
    }

    /// `[lo, hi]` as a set; empty when `lo > hi`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self::from_values(lo..=hi)
    }

    pub(crate) fn from_small(coeffs: &[i64]) -> Self {
        let (Some(&lo), Some(&hi)) = (coeffs.iter().min(), coeffs.iter().max()) else {
            return Self::from_values(std::iter::empty::<i64>());
        };
        let values = match hi.checked_sub(lo) {
            Some(span) if span < 1 << 16 => {
                let mut seen = vec![false; span as usize + 1];
                for &c in coeffs {
                    seen[(c - lo) as usize] = true;
                }
                seen.iter()
                    .enumerate()
                    .filter(|(_, &s)| s)
                    .map(|(i, _)| BigInt::from(lo + i as i64))
                    .collect()
            }
            _ => {
                let set: BTreeSet<i64> = coeffs.iter().copied().collect();
                set.into_iter().map(BigInt::from).collect()
            }
        };
        CoeffSet {
            values,
            includes_zero_pad: false,
        }
    }

    /// Adjoins 0 and marks the set as `C_0`.
    pub fn with_zero(mut self) -> Self {
        let zero = BigInt::zero();
        if let Err(pos) = self.values.binary_search(&zero) {
            self.values.insert(pos, zero);
        }
        self.includes_zero_pad = true;
        self
    }

    /// Removes 0 if present. The result is a `C(f)`-style set.
    pub fn without_zero(mut self) -> Self {
        self.values.retain(|v| !v.is_zero());
        self.includes_zero_pad = false;
        self
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn includes_zero_pad(&self) -> bool {
        self.includes_zero_pad
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<&BigInt> {
        self.values.first()
    }

    pub fn max(&self) -> Option<&BigInt> {
        self.values.last()
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        self.values.binary_search(v).is_ok()
    }

    pub fn contains_i64(&self, v: i64) -> bool {
        self.contains(&BigInt::from(v))
    }

    /// Whether the values are consecutive integers. The empty set is not an
    /// interval.
    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + BigInt::one() == BigInt::from(self.values.len()),
            _ => false,
        }
    }

    /// `(min, max)` when the set is an interval.
    pub fn as_interval(&self) -> Option<(&BigInt, &BigInt)> {
        if self.is_interval() {
            Some((self.min()?, self.max()?))
        } else {
            None
        }
    }

    /// Integers in `[min, max]` absent from the set.
    pub fn missing(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for w in self.values.windows(2) {
            let mut v: BigInt = &w[0] + 1;
            while v < w[1] {
                out.push(v.clone());
                v += 1;
            }
        }
        out
    }

    /// Whether every value lies in `[-1, 1]`.
    pub fn is_flat(&self) -> bool {
        let one = BigInt::one();
        self.values.iter().all(|v| *v >= -&one && *v <= one)
    }

    /// Element-wise negation, i.e. the set of `-f`.
    pub fn negated(&self) -> Self {
        let mut values: Vec<BigInt> = self.values.iter().rev().map(|v| -v).collect();
        values.dedup();
        CoeffSet {
            values,
            includes_zero_pad: self.includes_zero_pad,
        }
    }

    pub fn union(&self, other: &CoeffSet) -> CoeffSet {
        let mut out = CoeffSet::from_values(self.values.iter().chain(&other.values).cloned());
        out.includes_zero_pad = self.includes_zero_pad || other.includes_zero_pad;
        out
    }
}

/// Brace list, e.g. `{-2,-1,1,2}`.
impl fmt::Display for CoeffSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_missing() {
        let s = CoeffSet::from_values([-7i64, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5]);
        assert!(!s.is_interval());
        assert_eq!(s.missing(), vec![BigInt::from(-6)]);
        let t = CoeffSet::from_values([-1i64, 1]);
        assert!(!t.is_interval());
        assert!(t.clone().with_zero().is_interval());
        assert!(t.is_flat());
        assert_eq!(CoeffSet::interval(1, 3).to_string(), "{1,2,3}");
    }

    #[test]
    fn small_path_agrees_with_generic_path() {
        let coeffs = [3i64, -2, 0, 3, 7, -2, 1 << 40, -(1 << 40)];
        assert_eq!(CoeffSet::from_small(&coeffs), CoeffSet::from_values(coeffs));
        assert_eq!(
            CoeffSet::from_small(&coeffs[..6]),
            CoeffSet::from_values(coeffs[..6].to_vec())
        );
    }

    #[test]
    fn negation_reverses() {
        let s = CoeffSet::from_values([-2i64, 0, 1, 2]);
        assert_eq!(s.negated(), CoeffSet::from_values([-2i64, -1, 0, 2]));
    }
}
