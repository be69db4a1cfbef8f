//! Closed-form auxiliary polynomials built from binomials and geometric sums.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::polyring::IntPoly;

use super::{CyclotomicCache, FactoredIndex};

fn binomial(d: u64) -> IntPoly {
    IntPoly::x_pow_minus_one(d as usize)
}

/// `(x - 1)(x^{uv} - 1) / ((x^u - 1)(x^v - 1))` for coprime `u, v > 1`.
pub fn tau(u: u64, v: u64) -> Result<IntPoly> {
    if u < 2 || v < 2 {
        return Err(Error::InvalidArgument(format!(
            "tau needs u, v > 1, got ({u}, {v})"
        )));
    }
    if gcd(u, v) != 1 {
        return Err(Error::NotCoprime { a: u, b: v });
    }
    (binomial(1) * binomial(u * v))
        .div_exact(&binomial(u))?
        .div_exact(&binomial(v))
}

/// `((x^u - 1)/(x - 1)) ((x^v - 1)/(x - 1))` from its trapezoid coefficients.
pub fn sigma(u: u64, v: u64) -> Result<IntPoly> {
    if u == 0 || v == 0 {
        return Err(Error::InvalidArgument("sigma needs u, v >= 1".into()));
    }
    let (s, l) = (u.min(v) as i64, u.max(v) as i64);
    let coeffs: Vec<i64> = (0..s + l - 1)
        .map(|j| {
            if j < s {
                j + 1
            } else if j < l {
                s
            } else {
                l + s - j - 1
            }
        })
        .collect();
    Ok(IntPoly::from_i64(&coeffs))
}

/// `(1 + ... + x^{a-1} + 2x^a + ... + 2x^{a+b-1})(1 + x + ... + x^{c-1})`.
pub fn gabc(a: u64, b: u64, c: u64) -> Result<IntPoly> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::InvalidArgument(
            "g_{a,b,c} needs a, b, c >= 1".into(),
        ));
    }
    let step: Vec<i64> = (0..a + b).map(|j| if j < a { 1 } else { 2 }).collect();
    Ok(IntPoly::from_i64(&step) * IntPoly::geometric(c as usize, 1))
}

/// Reciprocal of [`gabc`].
pub fn gbar(a: u64, b: u64, c: u64) -> Result<IntPoly> {
    Ok(gabc(a, b, c)?.reciprocal())
}

/// Largest coefficient of `g_{a,b,c}` for odd `a`: `2c` if `c <= b`, else
/// `min(b + c, a + 2b)`.
pub fn abc_peak(a: u64, b: u64, c: u64) -> u64 {
    if c <= b {
        2 * c
    } else {
        (b + c).min(a + 2 * b)
    }
}

fn check_pairwise_coprime(r: &[u64]) -> Result<()> {
    if r.is_empty() || r.iter().any(|&ri| ri < 2) {
        return Err(Error::InvalidArgument(
            "inclusion-exclusion parameters must be a nonempty set of integers > 1".into(),
        ));
    }
    for (i, &a) in r.iter().enumerate() {
        if r[i + 1..].iter().any(|&b| gcd(a, b) != 1) {
            return Err(Error::NotPairwiseCoprime);
        }
    }
    Ok(())
}

/// Inclusion-exclusion polynomial: the product of `Φ_d` over divisors `d` of
/// `∏ r_i` sharing a factor with every `r_i`.
pub fn inclusion_exclusion(r: &[u64]) -> Result<IntPoly> {
    check_pairwise_coprime(r)?;
    let n0 = FactoredIndex::new(r.iter().product())?;
    let cache = CyclotomicCache::global();
    Ok(n0
        .divisors()
        .into_iter()
        .filter(|&d| r.iter().all(|&ri| gcd(d, ri) > 1))
        .map(|d| (*cache.phi(&FactoredIndex::new(d).expect("d >= 1"))).clone())
        .product())
}

/// The same polynomial from its rational form: `x^{n_0/∏_{i∈S} r_i} - 1`
/// raised to `(-1)^{|S|}` over all subsets `S`.
pub fn inclusion_exclusion_rational(r: &[u64]) -> Result<IntPoly> {
    check_pairwise_coprime(r)?;
    let n0: u64 = r.iter().product();
    let s = r.len();
    let mut numer = IntPoly::one();
    let mut denom = IntPoly::one();
    for subset in 0u32..(1 << s) {
        let removed: u64 = (0..s)
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| r[i])
            .product();
        let factor = binomial(n0 / removed);
        if subset.count_ones() % 2 == 0 {
            numer = numer * factor;
        } else {
            denom = denom * factor;
        }
    }
    numer.div_exact(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::phi;
    use crate::polyring::CoeffSet;

    fn idx(n: u64) -> FactoredIndex {
        FactoredIndex::new(n).unwrap()
    }

    #[test]
    fn tau_examples() {
        for v in [3u64, 5, 7, 9, 11] {
            let expected = IntPoly::from_i64(&[1, 1])
                .substitute_power(v as usize)
                .div_exact(&IntPoly::from_i64(&[1, 1]))
                .unwrap();
            assert_eq!(tau(2, v).unwrap(), expected);
        }
        assert_eq!(tau(6, 4), Err(Error::NotCoprime { a: 6, b: 4 }));
        assert!(tau(1, 4).is_err());
        for (u, v) in [(3, 7), (4, 9), (5, 12), (7, 10)] {
            assert_eq!(
                tau(u, v).unwrap().degree(),
                Some(((u - 1) * (v - 1)) as usize)
            );
        }
    }

    #[test]
    fn tau_of_primes_is_binary_cyclotomic() {
        assert_eq!(tau(3, 5).unwrap(), phi(&idx(15)));
        assert_eq!(tau(5, 7).unwrap(), phi(&idx(35)));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma(3, 5).unwrap(),
            IntPoly::from_i64(&[1, 2, 3, 3, 3, 2, 1])
        );
        assert_eq!(sigma(5, 3).unwrap(), sigma(3, 5).unwrap());
        assert_eq!(sigma(1, 6).unwrap(), IntPoly::geometric(6, 1));
        assert_eq!(
            sigma(4, 9).unwrap().coeff_set().unwrap(),
            CoeffSet::interval(1, 4)
        );
        assert_eq!(sigma(3, 5).unwrap(), phi(&idx(3)) * phi(&idx(5)));
    }

    #[test]
    fn gabc_examples() {
        assert_eq!(gabc(1, 1, 1).unwrap(), IntPoly::from_i64(&[1, 2]));
        let g = gabc(3, 2, 7).unwrap();
        assert_eq!(abc_peak(3, 2, 7), 7);
        assert_eq!(g.coeff_set().unwrap(), CoeffSet::interval(1, 7));
        assert_eq!(gbar(3, 2, 7).unwrap(), g.reciprocal());
    }

    #[test]
    fn gbar_closed_form() {
        // ((x^{a+b} + x^b - 2)/(x - 1)) ((x^c - 1)/(x - 1))
        for (a, b, c) in [(1, 1, 1), (3, 2, 7), (5, 4, 2), (2, 3, 3)] {
            let mut top = vec![0i64; (a + b + 1) as usize];
            top[0] -= 2;
            top[b as usize] += 1;
            top[(a + b) as usize] += 1;
            let expected = IntPoly::from_i64(&top)
                .div_exact(&IntPoly::x_pow_minus_one(1))
                .unwrap()
                * IntPoly::geometric(c as usize, 1);
            assert_eq!(gbar(a, b, c).unwrap(), expected, "({a},{b},{c})");
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        assert_eq!(inclusion_exclusion(&[3, 5]).unwrap(), phi(&idx(15)));
        // D = {6, 12}: both 6 and 12 share a factor with 4 and with 3
        let q43 = phi(&idx(6)) * phi(&idx(12));
        assert_eq!(inclusion_exclusion(&[4, 3]).unwrap(), q43);
        assert_eq!(inclusion_exclusion_rational(&[4, 3]).unwrap(), q43);
        assert_eq!(q43, tau(3, 4).unwrap());
        let q = inclusion_exclusion(&[3, 5, 7]).unwrap();
        assert_eq!(q, inclusion_exclusion_rational(&[3, 5, 7]).unwrap());
        assert!(q.coeff_set0().is_interval());
        assert_eq!(inclusion_exclusion(&[6, 4]), Err(Error::NotPairwiseCoprime));
        assert!(inclusion_exclusion(&[]).is_err());
    }

    #[test]
    fn ternary_inclusion_exclusion_convex() {
        let sets: [&[u64]; 6] = [
            &[4, 9, 5],
            &[8, 3, 5],
            &[3, 4, 5],
            &[2, 9, 25],
            &[7, 8, 9],
            &[5, 6, 7],
        ];
        for r in sets {
            let q = inclusion_exclusion(r).unwrap();
            assert_eq!(q, inclusion_exclusion_rational(r).unwrap(), "{r:?}");
            assert!(q.coeff_set0().is_interval(), "{r:?}");
        }
    }
}
