//! Cyclotomic and inverse cyclotomic polynomials, plus the auxiliary
//! closed-form families used to pin down coefficient sets.

mod binary;
mod cache;
mod families;
mod index;

pub use binary::{phi_binary_explicit, BinaryDecomposition};
pub use cache::CyclotomicCache;
pub use families::{
    abc_peak, gabc, gbar, inclusion_exclusion, inclusion_exclusion_rational, sigma, tau,
};
pub use index::FactoredIndex;

use crate::polyring::IntPoly;

/// `∏_{d | m} (x^d - 1)^{sign * μ(m/d)}` for squarefree `m = ∏ primes`,
/// skipping `d = m` when `skip_top` is set. Multiplies the numerator
/// binomials first, then divides out the denominator ones exactly.
fn squarefree_mobius_product(primes: &[u64], sign: i32, skip_top: bool) -> IntPoly {
    let k = primes.len();
    let mut numer = Vec::new();
    let mut denom = Vec::new();
    for subset in 0u32..(1 << k) {
        if skip_top && subset == (1 << k) - 1 {
            continue;
        }
        let d: u64 = (0..k)
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| primes[i])
            .product();
        let mu = if (k - subset.count_ones() as usize).is_multiple_of(2) {
            1
        } else {
            -1
        };
        if mu * sign > 0 {
            numer.push(d as usize);
        } else {
            denom.push(d as usize);
        }
    }
    numer.sort_unstable();
    denom.sort_unstable_by(|a, b| b.cmp(a));
    let mut f = IntPoly::one();
    for d in numer {
        f = f.mul(&IntPoly::x_pow_minus_one(d));
    }
    for d in denom {
        f = f
            .div_exact(&IntPoly::x_pow_minus_one(d))
            .expect("Möbius quotient of binomials is a polynomial");
    }
    f
}

/// The n-th cyclotomic polynomial.
///
/// Builds `Φ` over the odd squarefree kernel by exact binomial division,
/// then applies `Φ_{2m}(x) = Φ_m(-x)` and `Φ_{pm}(x) = Φ_m(x^p)` for `p | m`.
pub fn phi(n: &FactoredIndex) -> IntPoly {
    let odd: Vec<u64> = n.primes().filter(|&p| p != 2).collect();
    let even = n.n().is_multiple_of(2);
    let base = squarefree_mobius_product(&odd, 1, false);
    let base = match (even, odd.is_empty()) {
        (false, _) => base,
        (true, true) => IntPoly::from_i64(&[1, 1]),
        (true, false) => base.negate_variable(),
    };
    base.substitute_power((n.n() / n.kernel()) as usize)
}

/// The n-th inverse cyclotomic polynomial `(x^n - 1) / Φ_n(x)`.
pub fn psi(n: &FactoredIndex) -> IntPoly {
    let primes: Vec<u64> = n.primes().collect();
    squarefree_mobius_product(&primes, -1, true).substitute_power((n.n() / n.kernel()) as usize)
}
