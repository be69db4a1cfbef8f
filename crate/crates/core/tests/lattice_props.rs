use cyclodiv::cyclotomic::CyclotomicCache;
use cyclodiv::lattice::{
    enumerate_divisors, fk, materialize, materialize_by_product, DivisorIndex, DivisorLattice,
    FkIndex, DEFAULT_ENUMERATION_BUDGET,
};
use cyclodiv::{FactoredIndex, IntPoly};
use proptest::prelude::*;

fn idx(n: u64) -> FactoredIndex {
    FactoredIndex::new(n).unwrap()
}

#[test]
fn full_mask_is_the_binomial() {
    for n in 1..=1000u64 {
        let full = DivisorIndex::full(idx(n)).unwrap();
        assert_eq!(
            materialize(&full),
            IntPoly::x_pow_minus_one(n as usize),
            "n = {n}"
        );
    }
}

#[test]
fn every_divisor_divides_and_pairs_with_its_complement() {
    for n in [12u64, 18, 30, 36, 45, 60, 72, 105] {
        let binomial = IntPoly::x_pow_minus_one(n as usize);
        let stream = enumerate_divisors(&idx(n), DEFAULT_ENUMERATION_BUDGET).unwrap();
        let lattice = stream.lattice().clone();
        for (d, f) in stream {
            assert!(
                binomial.div_exact(&f).is_ok(),
                "n = {n}, mask = {}",
                d.mask()
            );
            let g = lattice.materialize(d.complement().mask());
            assert_eq!(&f * &g, binomial, "n = {n}, mask = {}", d.mask());
        }
    }
}

#[test]
fn fk_matches_lattice_indexing() {
    for (p, q) in [(2u64, 3u64), (3, 2), (5, 3), (2, 7)] {
        let lattice = DivisorLattice::new(&idx(p * p * q)).unwrap();
        for k in 0..64u8 {
            let f = fk(&FkIndex::new(p, q, k).unwrap());
            assert_eq!(f, lattice.materialize(k as u64));
            // bit j of k selects the j-th factor of 1, p, q, pq, p^2, p^2 q
            let expected: Vec<u64> = [1, p, q, p * q, p * p, p * p * q]
                .into_iter()
                .enumerate()
                .filter(|(j, _)| k >> j & 1 == 1)
                .map(|(_, d)| d)
                .collect();
            let mut selected = lattice.index(k as u64).selected();
            selected.sort_unstable();
            let mut expected = expected;
            expected.sort_unstable();
            assert_eq!(selected, expected);
        }
    }
}

proptest! {
    #[test]
    fn binomial_route_matches_product_route(n in 1u64..400, seed in any::<u64>()) {
        let n = idx(n);
        let d = n.divisor_count();
        let mask = if d >= 64 { seed } else { seed & ((1u64 << d) - 1) };
        let index = DivisorIndex::new(n, mask).unwrap();
        prop_assert_eq!(materialize(&index), materialize_by_product(&index, CyclotomicCache::global()));
    }
}
