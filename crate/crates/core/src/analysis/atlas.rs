//! Predicted versus computed coefficient sets for all 64 divisors of
//! `x^{p^2 q} - 1`.

use num_bigint::BigInt;

use super::predict::{predict_p2q, PQParams};
use super::ConvexityVerdict;
use crate::cyclotomic::FactoredIndex;
use crate::error::Result;
use crate::lattice::DivisorLattice;
use crate::polyring::CoeffSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasRow {
    pub k: u8,
    pub predicted: CoeffSet,
    pub computed: CoeffSet,
    pub matches: bool,
    pub height: BigInt,
    pub height_plus: BigInt,
    pub height_minus: BigInt,
    pub verdict: ConvexityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasReport {
    pub params: PQParams,
    pub rows: Vec<AtlasRow>,
}

impl AtlasReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.matches).count()
    }
}

/// One row; `lattice` must be the divisor lattice of `p^2 q`.
pub fn atlas_row(params: &PQParams, lattice: &DivisorLattice, k: u8) -> Result<AtlasRow> {
    let f = lattice.materialize(k as u64);
    let computed = f.coeff_set()?;
    let predicted = predict_p2q(params, k).coeff_set();
    let lo = computed.min().expect("nonzero").clone();
    let hi = computed.max().expect("nonzero").clone();
    Ok(AtlasRow {
        k,
        matches: predicted == computed,
        height: lo.magnitude().max(hi.magnitude()).clone().into(),
        height_plus: hi,
        height_minus: lo,
        verdict: ConvexityVerdict::of_set(&computed),
        predicted,
        computed,
    })
}

pub fn build_atlas(p: u64, q: u64) -> Result<AtlasReport> {
    let params = PQParams::new(p, q)?;
    let lattice = DivisorLattice::new(&FactoredIndex::new(p * p * q)?)?;
    let rows = (0..64u8)
        .map(|k| atlas_row(&params, &lattice, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(AtlasReport { params, rows })
}
