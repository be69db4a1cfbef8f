use cyclodiv::analysis::classify;
use cyclodiv::arith::{gcd, primes_up_to};
use cyclodiv::cyclotomic::{
    abc_peak, gabc, gbar, inclusion_exclusion, inclusion_exclusion_rational, phi_binary_explicit,
    sigma, tau, CyclotomicCache,
};
use cyclodiv::{phi, psi, CoeffSet, FactoredIndex, IntPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn idx(n: u64) -> FactoredIndex {
    FactoredIndex::new(n).unwrap()
}

fn nonzero_signs_alternate(f: &IntPoly) -> bool {
    let signs: Vec<bool> = f
        .to_bigints()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).all(|w| w[0] != w[1])
}

fn is_self_reciprocal(f: &IntPoly) -> bool {
    f.reciprocal() == *f
}

#[test]
fn divisor_product_is_binomial() {
    let cache = CyclotomicCache::new(4096);
    for n in 1..=2000u64 {
        let product: IntPoly = idx(n)
            .divisors()
            .into_iter()
            .map(|d| (*cache.phi(&idx(d))).clone())
            .product();
        assert_eq!(product, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
    }
}

#[test]
fn phi_is_self_reciprocal() {
    for n in 2..=2000u64 {
        assert!(is_self_reciprocal(&phi(&idx(n))), "n = {n}");
    }
}

#[test]
fn flat_below_105() {
    for n in 1..105u64 {
        assert!(phi(&idx(n)).coeff_set().unwrap().is_flat(), "n = {n}");
    }
    assert_eq!(phi(&idx(105)).height().unwrap(), BigInt::from(2));
}

#[test]
fn binary_oracle_and_alternation() {
    let primes = primes_up_to(1500);
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q > 3000 {
                break;
            }
            let f = phi(&idx(p * q));
            assert!(nonzero_signs_alternate(&f), "pq = {}", p * q);
            assert_eq!(f.coeff(0), BigInt::from(1));
            if p > 2 {
                assert_eq!(phi_binary_explicit(p, q).unwrap(), f, "({p}, {q})");
                assert_eq!(phi_binary_explicit(q, p).unwrap(), f, "({q}, {p})");
            }
        }
    }
}

#[test]
fn tau_suite() {
    for u in 2..=40u64 {
        for v in u + 1..=40 {
            if gcd(u, v) != 1 {
                continue;
            }
            let t = tau(u, v).unwrap();
            assert_eq!(t.degree(), Some(((u - 1) * (v - 1)) as usize));
            assert!(is_self_reciprocal(&t));
            assert!(nonzero_signs_alternate(&t), "({u}, {v})");
            IntPoly::x_pow_minus_one((u * v) as usize)
                .div_exact(&t)
                .unwrap();
            let expected = if u == 2 {
                CoeffSet::from_values([-1i64, 1])
            } else {
                CoeffSet::interval(-1, 1)
            };
            assert_eq!(t.coeff_set().unwrap(), expected, "({u}, {v})");

            let c = t.to_bigints();
            let distinct = c.windows(2).all(|w| w[0] != w[1]);
            assert_eq!(
                distinct,
                u <= 3,
                "consecutive coefficients of tau({u}, {v})"
            );

            let shifted = IntPoly::x_pow_minus_one(1) * t;
            let expected = if u <= 3 {
                CoeffSet::from_values([-2i64, -1, 1, 2])
            } else {
                CoeffSet::interval(-2, 2)
            };
            assert_eq!(
                shifted.coeff_set().unwrap(),
                expected,
                "(x-1) tau({u}, {v})"
            );
        }
    }
}

#[test]
fn sigma_closed_form() {
    for u in 1..=25u64 {
        for v in 1..=25u64 {
            let direct = IntPoly::geometric(u as usize, 1) * IntPoly::geometric(v as usize, 1);
            let s = sigma(u, v).unwrap();
            assert_eq!(s, direct, "({u}, {v})");
            assert_eq!(
                s.coeff_set().unwrap(),
                CoeffSet::interval(1, u.min(v) as i64)
            );
            if u > 1 && v > 1 && gcd(u, v) == 1 {
                IntPoly::x_pow_minus_one((u * v) as usize)
                    .div_exact(&s)
                    .unwrap();
            }
            if u < v {
                let shifted = IntPoly::x_pow_minus_one(1) * s;
                assert_eq!(shifted.coeff_set().unwrap(), CoeffSet::interval(-1, 1));
            }
        }
    }
}

#[test]
fn abc_peak_formula() {
    for a in (1..=9u64).step_by(2) {
        for b in 1..=12u64 {
            for c in 1..=12u64 {
                let mu = abc_peak(a, b, c) as i64;
                let g = gabc(a, b, c).unwrap();
                let brute = *g.to_bigints().iter().max().unwrap() == BigInt::from(mu);
                assert!(brute, "peak of g({a},{b},{c})");
                assert_eq!(
                    g.coeff_set().unwrap(),
                    CoeffSet::interval(1, mu),
                    "g({a},{b},{c})"
                );
                assert_eq!(
                    gbar(a, b, c).unwrap().coeff_set().unwrap(),
                    CoeffSet::interval(1, mu)
                );
            }
        }
    }
}

#[test]
fn psi_flat_and_convex() {
    for n in 1..=5000u64 {
        let i = idx(n);
        let verdict = classify(&psi(&i)).unwrap();
        match i.odd_omega() {
            0..=2 => assert!(verdict.is_flat, "Psi_{n} should be flat"),
            3 => assert!(verdict.is_convex, "Psi_{n} should be convex"),
            _ => {}
        }
    }
}

#[test]
fn ternary_neighbour_bound() {
    let odd: Vec<u64> = primes_up_to(1700).into_iter().filter(|&p| p > 2).collect();
    let mut checked = 0;
    for (i, &p) in odd.iter().enumerate() {
        for (j, &q) in odd.iter().enumerate().skip(i + 1) {
            for &r in &odd[j + 1..] {
                let n = p * q * r;
                if n > 5000 {
                    break;
                }
                let c = phi(&idx(n)).to_bigints();
                for w in c.windows(2) {
                    assert!((&w[1] - &w[0]).abs() <= BigInt::from(1), "n = {n}");
                }
                assert!(classify(&phi(&idx(n))).unwrap().is_strongly_convex);
                checked += 1;
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn extremal_ternary_inverse() {
    let odd: Vec<u64> = primes_up_to(80).into_iter().filter(|&p| p > 2).collect();
    let mut extremal_seen = 0;
    for (i, &p) in odd.iter().enumerate().take(3) {
        for (j, &q) in odd.iter().enumerate().skip(i + 1) {
            for &r in &odd[j + 1..] {
                let f = psi(&idx(p * q * r));
                let h = f.height().unwrap();
                extremal_seen += usize::from(h == BigInt::from(p - 1));
                let same_residue = (q % p == 1 && r % p == 1) || (q % p == p - 1 && r % p == p - 1);
                let extremal = same_residue && (r * (p - 2)) < (p - 1) * (q - 1);
                assert_eq!(h == BigInt::from(p - 1), extremal, "({p}, {q}, {r})");
                if extremal {
                    assert_eq!(
                        f.coeff_set().unwrap(),
                        CoeffSet::interval(1 - p as i64, p as i64 - 1)
                    );
                }
            }
        }
    }
    assert!(extremal_seen > 0);
}

#[test]
fn inclusion_exclusion_routes_agree() {
    let sets: [&[u64]; 6] = [
        &[3, 5],
        &[4, 3],
        &[3, 5, 7],
        &[4, 5, 9],
        &[2, 3, 5, 7],
        &[8, 9, 5],
    ];
    for r in sets {
        assert_eq!(
            inclusion_exclusion(r).unwrap(),
            inclusion_exclusion_rational(r).unwrap(),
            "{r:?}"
        );
    }
    assert!(
        classify(&inclusion_exclusion(&[3, 5, 7]).unwrap())
            .unwrap()
            .is_convex
    );
    assert!(inclusion_exclusion(&[6, 9]).is_err());
}

#[test]
fn psi_of_prime_and_semiprime() {
    for p in primes_up_to(200) {
        assert_eq!(psi(&idx(p)), IntPoly::x_pow_minus_one(1));
    }
}
