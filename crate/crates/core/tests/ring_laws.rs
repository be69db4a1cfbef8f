use cyclodiv::{CoeffSet, IntPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-40i64..=40, 0..40).prop_map(|v| IntPoly::from_i64(&v))
}

fn nonzero_poly() -> impl Strategy<Value = IntPoly> {
    small_poly().prop_filter("nonzero", |f| !f.is_zero())
}

/// Coefficients near the i64 limit so products overflow machine words.
fn wide_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(
        prop_oneof![-5i64..=5, Just(i64::MAX / 3), Just(i64::MIN / 3)],
        1..12,
    )
    .prop_map(|v| IntPoly::from_i64(&v))
}

fn naive_mul(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let (a, b) = (f.to_bigints(), g.to_bigints());
    if a.is_empty() || b.is_empty() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntPoly::from_coeffs(out)
}

proptest! {
    #[test]
    fn mul_commutes(f in small_poly(), g in small_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn mul_associates(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn mul_distributes(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn mul_matches_naive_on_wide_coefficients(f in wide_poly(), g in wide_poly()) {
        prop_assert_eq!(&f * &g, naive_mul(&f, &g));
    }

    #[test]
    fn karatsuba_threshold_is_invisible(
        a in prop::collection::vec(-9i64..=9, 0..300),
        b in prop::collection::vec(-9i64..=9, 0..300),
    ) {
        let (f, g) = (IntPoly::from_i64(&a), IntPoly::from_i64(&b));
        prop_assert_eq!(f.mul_with_threshold(&g, 2), f.mul_with_threshold(&g, usize::MAX));
    }

    #[test]
    fn division_round_trips(f in small_poly(), g in nonzero_poly()) {
        prop_assert_eq!((&f * &g).div_exact(&g).unwrap(), f);
    }

    #[test]
    fn height_of_product_is_bounded(f in nonzero_poly(), g in nonzero_poly()) {
        let (f, g) = if f.degree() <= g.degree() { (f, g) } else { (g, f) };
        let bound = BigInt::from(1 + f.degree().unwrap()) * f.height().unwrap() * g.height().unwrap();
        prop_assert!((&f * &g).height().unwrap() <= bound);
    }

    #[test]
    fn binomial_at_most_doubles_height(f in nonzero_poly(), k in 1usize..30) {
        let h = (IntPoly::x_pow_minus_one(k) * f.clone()).height().unwrap();
        prop_assert!(h <= f.height().unwrap() * 2);
    }

    #[test]
    fn sparse_geometric_factor_keeps_coefficients(f in nonzero_poly(), gap in 1usize..5, m in 1usize..5) {
        let deg = f.degree().unwrap();
        let k = deg + gap;
        let product = &f * &IntPoly::geometric(m + 1, k);
        prop_assert_eq!(product.coeff_set0(), f.coeff_set0());
        if k > deg + 1 {
            prop_assert_eq!(product.coeff_set().unwrap(), f.coeff_set().unwrap().with_zero());
        }
    }

    #[test]
    fn repetition_by_phi_p(f in nonzero_poly(), p in prop::sample::select(vec![2usize, 3, 5, 7])) {
        let phi_p = IntPoly::geometric(p, 1);
        let product = &phi_p * &f.substitute_power(p);
        prop_assert_eq!(product.coeff_set().unwrap(), f.coeff_set().unwrap());
    }

    #[test]
    fn reciprocal_is_an_involution(v in prop::collection::vec(-40i64..=40, 1..40), c0 in 1i64..9) {
        let mut v = v;
        v[0] = c0;
        let f = IntPoly::from_i64(&v);
        prop_assert_eq!(f.reciprocal().reciprocal(), f);
    }

    #[test]
    fn coeff_set_is_negated_by_negation(f in nonzero_poly()) {
        prop_assert_eq!((-&f).coeff_set().unwrap(), f.coeff_set().unwrap().negated());
    }
}

#[test]
fn coefficient_set_reads_interior_zeros() {
    let f = IntPoly::from_i64(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1]);
    assert_eq!(f.coeff_set().unwrap(), CoeffSet::interval(-1, 1));
    assert_eq!(
        IntPoly::x_pow_minus_one(1).coeff_set().unwrap(),
        CoeffSet::from_values([-1i64, 1])
    );
}
