//! Closed-form coefficient sets for the monic divisors of `x^{p^e} - 1`,
//! `x^{pq} - 1` and `x^{p^2 q} - 1`.

use crate::arith::{is_prime, mod_inverse};
use crate::error::{Error, Result};
use crate::polyring::CoeffSet;

/// Derived parameters of a prime pair `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PQParams {
    pub p: u64,
    pub q: u64,
    /// Inverse of `p` modulo `q`, in `[1, q - 1]`.
    pub p_star: u64,
    /// `min(floor((q - 1)/p) + 1, p)`.
    pub alpha: u64,
    /// `min(p, q, q mod p^2, p^2 - (q mod p^2))`.
    pub beta: u64,
    /// `min(p, p*) + min(p, q - p*)`.
    pub gamma: u64,
}

impl PQParams {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        for r in [p, q] {
            if !is_prime(r) {
                return Err(Error::NotPrime(r));
            }
        }
        if p == q {
            return Err(Error::InvalidArgument(format!(
                "p and q must differ, got {p}"
            )));
        }
        let p_star = mod_inverse(p % q, q).expect("distinct primes are coprime");
        let p2 = p * p;
        Ok(PQParams {
            p,
            q,
            p_star,
            alpha: ((q - 1) / p + 1).min(p),
            beta: p.min(q).min(q % p2).min(p2 - q % p2),
            gamma: p.min(p_star) + p.min(q - p_star),
        })
    }
}

/// A predicted coefficient set: the interval `[lo, hi]`, optionally with 0
/// removed, unless an explicit override applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub interval: (i64, i64),
    pub remove_zero: bool,
    pub override_set: Option<CoeffSet>,
}

impl Prediction {
    fn interval(lo: i64, hi: i64) -> Self {
        Prediction {
            interval: (lo, hi),
            remove_zero: false,
            override_set: None,
        }
    }

    fn zero_free(lo: i64, hi: i64) -> Self {
        Prediction {
            remove_zero: true,
            ..Self::interval(lo, hi)
        }
    }

    /// The predicted `C(f)`.
    pub fn coeff_set(&self) -> CoeffSet {
        if let Some(set) = &self.override_set {
            return set.clone();
        }
        let set = CoeffSet::interval(self.interval.0, self.interval.1);
        if self.remove_zero {
            set.without_zero()
        } else {
            set
        }
    }
}

/// Divisors of `x^{p^e} - 1`; bit `j` of `mask` selects `Φ_{p^j}`.
pub fn predict_prime_power(p: u64, e: u32, mask: u64) -> Result<Prediction> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 || e >= 63 || mask >> (e + 1) != 0 {
        return Err(Error::InvalidArgument(format!(
            "mask {mask:#b} does not address a divisor of x^({p}^{e}) - 1"
        )));
    }
    // (x^{p^j} - 1)/(x - 1) = Φ_p ... Φ_{p^j}
    let repunit = (0..=e).any(|j| mask == (1u64 << (j + 1)) - 2);
    // (x - 1)(x^{2^j} - 1)/(x^2 - 1) = Φ_1 Φ_4 ... Φ_{2^j}. The bare x - 1
    // has no zero coefficient for any p, although the general rule would
    // assign it [-1, 1].
    let two_special = mask == 1 || p == 2 && (1..=e).any(|j| mask == 1 | ((1u64 << (j + 1)) - 4));
    Ok(if repunit {
        Prediction::interval(1, 1)
    } else if two_special {
        Prediction::zero_free(-1, 1)
    } else if mask & 1 == 0 {
        Prediction::interval(0, 1)
    } else {
        Prediction::interval(-1, 1)
    })
}

/// Divisors of `x^{pq} - 1`; bits select `Φ_1, Φ_p, Φ_q, Φ_{pq}` with `p < q`
/// after sorting the pair.
pub fn predict_pq(p: u64, q: u64, mask: u64) -> Result<Prediction> {
    if mask >= 16 {
        return Err(Error::InvalidArgument(format!(
            "mask {mask} exceeds the 16 divisors of x^pq - 1"
        )));
    }
    let (small, large) = (p.min(q), p.max(q));
    let params = PQParams::new(small, large)?;
    let m = small as i64;
    Ok(match mask {
        // (x - 1) Φ_pq
        9 => Prediction {
            remove_zero: m <= 3,
            ..Prediction::interval(-2, 2)
        },
        // Φ_p Φ_q
        6 => Prediction::interval(1, m),
        k => predict_p2q(&params, k as u8),
    })
}

/// `C(f_k)` for the divisors of `x^{p^2 q} - 1`.
pub fn predict_p2q(params: &PQParams, k: u8) -> Prediction {
    let p = params.p as i64;
    let q = params.q as i64;
    let p_star = params.p_star as i64;
    let gamma = params.gamma as i64;
    let beta = params.beta as i64;
    let m = p.min(q);

    if k == 38 && q == 2 {
        return Prediction {
            interval: (-2, 2),
            remove_zero: false,
            override_set: Some(CoeffSet::from_values([-2i64, 0, 1, 2])),
        };
    }

    let interval = match k {
        0 | 2 | 4 | 14 | 18 | 62 => (1, 1),
        10 | 12 | 16 | 26 | 44 | 46 | 48 | 50 | 52 | 58 | 60 => (0, 1),
        9 | 35 | 39 | 41 | 43 | 57 => (-2, 2),
        6 | 30 => (1, m),
        28 | 54 => (0, m),
        20 => ((q / p).min(1), ((q - 1) / p + 1).min(p)),
        22 => (1, (p * p).min(q)),
        24 => (-p.min(q - p_star), p.min(p_star)),
        25 => (-gamma, gamma),
        29 => (-m, m),
        38 => (-beta, m),
        _ => (-1, 1),
    };
    let remove_zero = match k {
        1 => true,
        13 | 17 | 29 | 33 | 61 => p == 2,
        11 | 40 | 43 | 59 => q == 2,
        8 | 24 | 34 => m == 2,
        9 => m <= 3,
        25 => p <= 3 && q != 2,
        38 => p == 2 && q == 3,
        41 => q <= 3,
        _ => false,
    };
    Prediction {
        interval,
        remove_zero,
        override_set: None,
    }
}
