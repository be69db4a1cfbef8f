//! Coefficient-by-coefficient construction of binary cyclotomic polynomials.
//!
//! Deliberately independent of [`super::phi`]: nothing here divides or
//! multiplies polynomials, so agreement between the two is real evidence.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// The unique `rho, sigma >= 0` with `1 + pq = (rho + 1) p + (sigma + 1) q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryDecomposition {
    pub p: u64,
    pub q: u64,
    pub rho: u64,
    pub sigma: u64,
}

impl BinaryDecomposition {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        for r in [p, q] {
            if !is_prime(r) {
                return Err(Error::NotPrime(r));
            }
        }
        if p == q {
            return Err(Error::InvalidArgument(format!(
                "primes must be distinct, got {p} twice"
            )));
        }
        let target = 1 + p * q;
        (0..q)
            .find_map(|rho| {
                let rest = target.checked_sub((rho + 1) * p)?;
                (rest % q == 0 && rest / q >= 1 && rest / q <= p).then(|| BinaryDecomposition {
                    p,
                    q,
                    rho,
                    sigma: rest / q - 1,
                })
            })
            .ok_or_else(|| Error::InvalidArgument(format!("no decomposition for ({p}, {q})")))
    }

    /// `a_{pq}(m)` for `0 <= m < pq`.
    pub fn coefficient(&self, m: u64) -> i64 {
        let (p, q) = (self.p, self.q);
        // (rho + 1) p ≡ 1 (mod q) and (sigma + 1) q ≡ 1 (mod p), so these are
        // the unique alpha < q with alpha p ≡ m (mod q) and beta < p with beta q ≡ m (mod p).
        let alpha = (m % q) * (self.rho + 1) % q;
        let beta = (m % p) * (self.sigma + 1) % p;
        let combo = alpha * p + beta * q;
        if combo == m && alpha <= self.rho && beta <= self.sigma {
            1
        } else if combo == m + p * q && alpha > self.rho && beta > self.sigma {
            -1
        } else {
            0
        }
    }
}

/// `Φ_{pq}` for distinct odd primes from the explicit coefficient rule.
pub fn phi_binary_explicit(p: u64, q: u64) -> Result<IntPoly> {
    if p == 2 || q == 2 {
        return Err(Error::InvalidArgument(
            "explicit binary rule needs odd primes; use phi for 2q".into(),
        ));
    }
    let dec = BinaryDecomposition::new(p, q)?;
    let coeffs: Vec<i64> = (0..p * q).map(|m| dec.coefficient(m)).collect();
    Ok(IntPoly::from_i64(&coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{phi, FactoredIndex};

    #[test]
    fn decomposition_identity() {
        for (p, q) in [(3, 5), (5, 3), (3, 7), (11, 13), (2, 7)] {
            let d = BinaryDecomposition::new(p, q).unwrap();
            assert_eq!(1 + p * q, (d.rho + 1) * p + (d.sigma + 1) * q);
            assert!(d.rho < q && d.sigma < p);
        }
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(
            phi_binary_explicit(3, 7).unwrap(),
            IntPoly::from_i64(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1])
        );
        assert_eq!(
            phi_binary_explicit(3, 5).unwrap(),
            IntPoly::from_i64(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
        assert_eq!(
            phi_binary_explicit(5, 7).unwrap(),
            phi(&FactoredIndex::new(35).unwrap())
        );
    }

    #[test]
    fn rejects_two_and_bad_input() {
        assert!(matches!(
            phi_binary_explicit(2, 5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            phi_binary_explicit(5, 2),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(phi_binary_explicit(9, 5), Err(Error::NotPrime(9)));
        assert!(phi_binary_explicit(5, 5).is_err());
    }
}
