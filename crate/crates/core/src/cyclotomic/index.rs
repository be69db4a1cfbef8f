use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// A positive integer together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredIndex {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredIndex {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(n));
        }
        Ok(FactoredIndex {
            n,
            factors: factorize(n),
        })
    }

    /// Builds the index from `(prime, exponent)` pairs, verifying primality
    /// and ordering.
    pub fn from_factors(factors: &[(u64, u32)]) -> Result<Self> {
        let mut n = 1u64;
        let mut prev = 1u64;
        for &(p, e) in factors {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p <= prev || e == 0 {
                return Err(Error::InvalidArgument(
                    "factors must have increasing primes and positive exponents".into(),
                ));
            }
            prev = p;
            n = p
                .checked_pow(e)
                .and_then(|pe| n.checked_mul(pe))
                .ok_or_else(|| Error::InvalidArgument("index overflows u64".into()))?;
        }
        Ok(FactoredIndex {
            n,
            factors: factors.to_vec(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn odd_omega(&self) -> usize {
        self.primes().filter(|&p| p != 2).count()
    }

    /// Squarefree kernel: the product of the distinct primes dividing n.
    pub fn kernel(&self) -> u64 {
        self.primes().product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// `d(n)`, the number of positive divisors.
    pub fn divisor_count(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e + 1).product()
    }

    /// All positive divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Euler's totient, the degree of the n-th cyclotomic polynomial.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    /// `(p, e)` when `n = p^e` with `e >= 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }

    /// `(p, q)` with `p < q` when `n = pq`.
    pub fn as_pq(&self) -> Option<(u64, u64)> {
        match self.factors.as_slice() {
            [(p, 1), (q, 1)] => Some((*p, *q)),
            _ => None,
        }
    }

    /// `(p, q)` when `n = p^2 q` with distinct primes (either order).
    pub fn as_p2q(&self) -> Option<(u64, u64)> {
        match self.factors.as_slice() {
            [(a, 2), (b, 1)] => Some((*a, *b)),
            [(a, 1), (b, 2)] => Some((*b, *a)),
            _ => None,
        }
    }
}
