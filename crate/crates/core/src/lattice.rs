//! Monic divisors of `x^n - 1` as subsets of `{Φ_d : d | n}`.
//!
//! A divisor is addressed by a bitmask over the divisors of `n` in canonical
//! order. For `n = p^2 q` that order is `1, p, q, pq, p^2, p^2 q`, so the mask
//! is exactly the index `k` of `f_k`.

use std::sync::Arc;

use crate::arith::mobius;
use crate::cyclotomic::{CyclotomicCache, FactoredIndex};
use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// Default cap on the number of divisors an enumeration may produce.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

/// Divisors of `n` in mask-bit order.
pub fn canonical_divisor_order(n: &FactoredIndex) -> Vec<u64> {
    match n.as_p2q() {
        Some((p, q)) => vec![1, p, q, p * q, p * p, p * p * q],
        None => n.divisors(),
    }
}

/// A monic divisor of `x^n - 1`: bit `i` of `mask` selects the `i`-th divisor
/// in [`canonical_divisor_order`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorIndex {
    n: FactoredIndex,
    mask: u64,
}

impl DivisorIndex {
    pub fn new(n: FactoredIndex, mask: u64) -> Result<Self> {
        let count = n.divisor_count();
        if count > 64 {
            return Err(Error::TooManyDivisors {
                n: n.n(),
                divisor_count: count,
            });
        }
        if count < 64 && mask >> count != 0 {
            return Err(Error::InvalidArgument(format!(
                "mask {mask:#b} has bits beyond the {count} divisors of {}",
                n.n()
            )));
        }
        Ok(DivisorIndex { n, mask })
    }

    /// The mask selecting every factor, i.e. `x^n - 1` itself.
    pub fn full(n: FactoredIndex) -> Result<Self> {
        let count = n.divisor_count();
        let mask = if count >= 64 {
            u64::MAX
        } else {
            (1 << count) - 1
        };
        Self::new(n, mask)
    }

    pub fn n(&self) -> &FactoredIndex {
        &self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn complement(&self) -> Self {
        let full = Self::full(self.n.clone()).expect("valid index").mask;
        DivisorIndex {
            n: self.n.clone(),
            mask: full & !self.mask,
        }
    }

    /// The selected `d` with `Φ_d` a factor, in canonical order.
    pub fn selected(&self) -> Vec<u64> {
        canonical_divisor_order(&self.n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, d)| d)
            .collect()
    }
}

/// Precomputed Möbius expansions `Φ_d = ∏_{e | d} (x^e - 1)^{μ(d/e)}` for
/// every divisor of `n`, so any mask materializes as a short sequence of
/// binomial multiplications and exact divisions.
#[derive(Clone, Debug)]
pub struct DivisorLattice {
    n: FactoredIndex,
    order: Vec<u64>,
    /// For each canonical position: `(e, μ(d/e))` with `μ != 0`.
    expansions: Vec<Vec<(u64, i32)>>,
}

impl DivisorLattice {
    pub fn new(n: &FactoredIndex) -> Result<Self> {
        let count = n.divisor_count();
        if count > 64 {
            return Err(Error::TooManyDivisors {
                n: n.n(),
                divisor_count: count,
            });
        }
        let order = canonical_divisor_order(n);
        let ascending = n.divisors();
        let expansions = order
            .iter()
            .map(|&d| {
                ascending
                    .iter()
                    .filter(|&&e| d % e == 0)
                    .map(|&e| (e, mobius(d / e)))
                    .filter(|&(_, mu)| mu != 0)
                    .collect()
            })
            .collect();
        Ok(DivisorLattice {
            n: n.clone(),
            order,
            expansions,
        })
    }

    pub fn n(&self) -> &FactoredIndex {
        &self.n
    }

    pub fn order(&self) -> &[u64] {
        &self.order
    }

    /// Number of monic divisors, `2^{d(n)}`.
    pub fn divisor_total(&self) -> u128 {
        1u128 << self.order.len()
    }

    pub fn index(&self, mask: u64) -> DivisorIndex {
        DivisorIndex {
            n: self.n.clone(),
            mask,
        }
    }

    /// The divisor selected by `mask`.
    pub fn materialize(&self, mask: u64) -> IntPoly {
        let mut exponents: Vec<(u64, i32)> = Vec::new();
        for (pos, expansion) in self.expansions.iter().enumerate() {
            if mask >> pos & 1 == 0 {
                continue;
            }
            for &(e, mu) in expansion {
                match exponents.iter_mut().find(|(b, _)| *b == e) {
                    Some((_, acc)) => *acc += mu,
                    None => exponents.push((e, mu)),
                }
            }
        }
        exponents.sort_unstable();
        let mut f = IntPoly::one();
        for &(e, k) in exponents.iter().filter(|(_, k)| *k > 0) {
            let binomial = IntPoly::x_pow_minus_one(e as usize);
            for _ in 0..k {
                f = f.mul(&binomial);
            }
        }
        for &(e, k) in exponents.iter().rev().filter(|(_, k)| *k < 0) {
            let binomial = IntPoly::x_pow_minus_one(e as usize);
            for _ in 0..-k {
                f = f
                    .div_exact(&binomial)
                    .expect("a product of cyclotomic factors is a polynomial");
            }
        }
        f
    }
}

/// Product of the selected `Φ_d`.
pub fn materialize(d: &DivisorIndex) -> IntPoly {
    DivisorLattice::new(&d.n)
        .expect("DivisorIndex guarantees at most 64 divisors")
        .materialize(d.mask)
}

/// Reference route for [`materialize`]: multiplies cached `Φ_d` directly.
pub fn materialize_by_product(d: &DivisorIndex, cache: &CyclotomicCache) -> IntPoly {
    d.selected()
        .into_iter()
        .map(|e| (*cache.phi(&FactoredIndex::new(e).expect("divisor >= 1"))).clone())
        .product()
}

/// Lazily yields every monic divisor of `x^n - 1` in ascending mask order.
#[derive(Clone, Debug)]
pub struct DivisorStream {
    lattice: Arc<DivisorLattice>,
    next: u64,
    end: u64,
}

impl DivisorStream {
    pub fn lattice(&self) -> &Arc<DivisorLattice> {
        &self.lattice
    }
}

impl Iterator for DivisorStream {
    type Item = (DivisorIndex, IntPoly);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some((self.lattice.index(mask), self.lattice.materialize(mask)))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DivisorStream {}

/// All `2^{d(n)}` monic divisors, refusing when that exceeds `budget`.
pub fn enumerate_divisors(n: &FactoredIndex, budget: u64) -> Result<DivisorStream> {
    let count = n.divisor_count();
    if count >= 64 || (1u64 << count) > budget {
        return Err(Error::BudgetExceeded {
            n: n.n(),
            divisor_count: count,
            budget,
        });
    }
    Ok(DivisorStream {
        lattice: Arc::new(DivisorLattice::new(n)?),
        next: 0,
        end: 1 << count,
    })
}

/// `f_k = Φ_1^{k_0} Φ_p^{k_1} Φ_q^{k_2} Φ_{pq}^{k_3} Φ_{p^2}^{k_4} Φ_{p^2 q}^{k_5}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FkIndex {
    pub p: u64,
    pub q: u64,
    pub k: u8,
}

impl FkIndex {
    pub fn new(p: u64, q: u64, k: u8) -> Result<Self> {
        for r in [p, q] {
            if !crate::arith::is_prime(r) {
                return Err(Error::NotPrime(r));
            }
        }
        if p == q {
            return Err(Error::InvalidArgument(format!(
                "p and q must differ, got {p}"
            )));
        }
        if k > 63 {
            return Err(Error::InvalidArgument(format!(
                "k must lie in [0, 63], got {k}"
            )));
        }
        Ok(FkIndex { p, q, k })
    }

    pub fn n(&self) -> FactoredIndex {
        FactoredIndex::new(self.p * self.p * self.q).expect("positive")
    }

    pub fn divisor_index(&self) -> DivisorIndex {
        DivisorIndex {
            n: self.n(),
            mask: self.k as u64,
        }
    }
}

pub fn fk(i: &FkIndex) -> IntPoly {
    materialize(&i.divisor_index())
}
