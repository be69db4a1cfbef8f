//! Coefficient-generic dense kernels.
//!
//! Every kernel runs over either checked `i64` or `BigInt`. The `i64`
//! instantiation reports [`KernelError::Overflow`] instead of wrapping, and
//! the caller re-runs the kernel over `BigInt`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Operand length (in terms) below which multiplication is schoolbook.
pub const KARATSUBA_THRESHOLD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum KernelError {
    Overflow,
    NotDivisible(usize),
}

pub(crate) type Checked<T> = Result<T, KernelError>;

pub(crate) trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Checked<Self>;
    fn sub(&self, rhs: &Self) -> Checked<Self>;
    fn mul(&self, rhs: &Self) -> Checked<Self>;
    fn neg(&self) -> Checked<Self>;
    /// `Ok(None)` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Checked<Option<Self>>;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn add(&self, rhs: &Self) -> Checked<Self> {
        self.checked_add(*rhs).ok_or(KernelError::Overflow)
    }
    fn sub(&self, rhs: &Self) -> Checked<Self> {
        self.checked_sub(*rhs).ok_or(KernelError::Overflow)
    }
    fn mul(&self, rhs: &Self) -> Checked<Self> {
        self.checked_mul(*rhs).ok_or(KernelError::Overflow)
    }
    fn neg(&self) -> Checked<Self> {
        self.checked_neg().ok_or(KernelError::Overflow)
    }
    fn div_exact(&self, rhs: &Self) -> Checked<Option<Self>> {
        match self.checked_rem(*rhs) {
            None => Err(KernelError::Overflow),
            Some(0) => self
                .checked_div(*rhs)
                .map(Some)
                .ok_or(KernelError::Overflow),
            Some(_) => Ok(None),
        }
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Checked<Self> {
        Ok(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Checked<Self> {
        Ok(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Checked<Self> {
        Ok(self * rhs)
    }
    fn neg(&self) -> Checked<Self> {
        Ok(-self)
    }
    fn div_exact(&self, rhs: &Self) -> Checked<Option<Self>> {
        if Zero::is_zero(&(self % rhs)) {
            Ok(Some(self / rhs))
        } else {
            Ok(None)
        }
    }
}

pub(crate) fn trim<C: Coeff>(v: &mut Vec<C>) {
    while v.last().is_some_and(Coeff::is_zero) {
        v.pop();
    }
}

pub(crate) fn add<C: Coeff>(a: &[C], b: &[C]) -> Checked<Vec<C>> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.add(s)?;
    }
    trim(&mut out);
    Ok(out)
}

pub(crate) fn sub<C: Coeff>(a: &[C], b: &[C]) -> Checked<Vec<C>> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), C::zero());
    for (o, s) in out.iter_mut().zip(b) {
        *o = o.sub(s)?;
    }
    trim(&mut out);
    Ok(out)
}

pub(crate) fn neg<C: Coeff>(a: &[C]) -> Checked<Vec<C>> {
    a.iter().map(Coeff::neg).collect()
}

fn nonzero_terms<C: Coeff>(a: &[C]) -> Vec<(usize, &C)> {
    a.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Accumulates `a * b` into `acc` starting at `offset`. Iterates only the
/// nonzero terms of `a`.
fn schoolbook_into<C: Coeff>(acc: &mut [C], offset: usize, a: &[C], b: &[C]) -> Checked<()> {
    for (i, ai) in nonzero_terms(a) {
        let row = &mut acc[offset + i..];
        for (slot, bj) in row.iter_mut().zip(b) {
            if bj.is_zero() {
                continue;
            }
            *slot = slot.add(&ai.mul(bj)?)?;
        }
    }
    Ok(())
}

fn add_into<C: Coeff>(acc: &mut [C], offset: usize, src: &[C]) -> Checked<()> {
    for (slot, s) in acc[offset..].iter_mut().zip(src) {
        if !s.is_zero() {
            *slot = slot.add(s)?;
        }
    }
    Ok(())
}

fn sub_into<C: Coeff>(acc: &mut [C], src: &[C]) -> Checked<()> {
    for (slot, s) in acc.iter_mut().zip(src) {
        if !s.is_zero() {
            *slot = slot.sub(s)?;
        }
    }
    Ok(())
}

fn padded_sum<C: Coeff>(a: &[C], b: &[C]) -> Checked<Vec<C>> {
    let mut out = vec![C::zero(); a.len().max(b.len())];
    add_into(&mut out, 0, a)?;
    add_into(&mut out, 0, b)?;
    Ok(out)
}

/// Untrimmed product of two nonempty operands, length `a.len() + b.len() - 1`.
fn karatsuba<C: Coeff>(a: &[C], b: &[C], threshold: usize) -> Checked<Vec<C>> {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    if short.len() < threshold {
        schoolbook_into(&mut out, 0, short, long)?;
        return Ok(out);
    }
    if long.len() >= 2 * short.len() {
        for (chunk_idx, chunk) in long.chunks(short.len()).enumerate() {
            let part = karatsuba(short, chunk, threshold)?;
            add_into(&mut out, chunk_idx * short.len(), &part)?;
        }
        return Ok(out);
    }
    let m = short.len() / 2;
    let (s0, s1) = short.split_at(m);
    let (l0, l1) = long.split_at(m);
    let z0 = karatsuba(s0, l0, threshold)?;
    let z2 = karatsuba(s1, l1, threshold)?;
    let mut z1 = karatsuba(&padded_sum(s0, s1)?, &padded_sum(l0, l1)?, threshold)?;
    sub_into(&mut z1, &z0)?;
    sub_into(&mut z1, &z2)?;
    add_into(&mut out, 0, &z0)?;
    let z1_len = z1.len().min(out.len() - m);
    add_into(&mut out, m, &z1[..z1_len])?;
    add_into(&mut out, 2 * m, &z2)?;
    Ok(out)
}

#[cfg(test)]
pub(crate) fn mul<C: Coeff>(a: &[C], b: &[C]) -> Checked<Vec<C>> {
    mul_with_threshold(a, b, KARATSUBA_THRESHOLD)
}

pub(crate) fn mul_with_threshold<C: Coeff>(a: &[C], b: &[C], threshold: usize) -> Checked<Vec<C>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let nnz_a = a.iter().filter(|c| !c.is_zero()).count();
    let nnz_b = b.iter().filter(|c| !c.is_zero()).count();
    // A sparse operand (binomials, geometric series in x^k) makes the
    // zero-skipping schoolbook loop linear in the dense operand.
    let sparse = nnz_a * 8 < a.len() || nnz_b * 8 < b.len() || nnz_a.min(nnz_b) < threshold;
    let mut out = if sparse {
        let mut out = vec![C::zero(); a.len() + b.len() - 1];
        if nnz_a <= nnz_b {
            schoolbook_into(&mut out, 0, a, b)?;
        } else {
            schoolbook_into(&mut out, 0, b, a)?;
        }
        out
    } else {
        karatsuba(a, b, threshold.max(2))?
    };
    trim(&mut out);
    Ok(out)
}

/// Exact long division. Walks from the top degree down and fails on the first
/// coefficient that cannot be cleared.
pub(crate) fn div_exact<C: Coeff>(f: &[C], g: &[C]) -> Checked<Vec<C>> {
    debug_assert!(g.last().is_some_and(|c| !c.is_zero()));
    if f.is_empty() {
        return Ok(Vec::new());
    }
    let dg = g.len() - 1;
    if f.len() < g.len() {
        let top = f.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        return Err(KernelError::NotDivisible(top));
    }
    let lead = &g[dg];
    let unit_lead = lead.is_one();
    let lower: Vec<(usize, &C)> = nonzero_terms(&g[..dg]);
    let mut rem = f.to_vec();
    let mut quot = vec![C::zero(); f.len() - dg];
    for i in (0..quot.len()).rev() {
        let top = std::mem::replace(&mut rem[i + dg], C::zero());
        if top.is_zero() {
            continue;
        }
        let c = if unit_lead {
            top
        } else {
            top.div_exact(lead)?
                .ok_or(KernelError::NotDivisible(i + dg))?
        };
        for &(j, gj) in &lower {
            rem[i + j] = rem[i + j].sub(&c.mul(gj)?)?;
        }
        quot[i] = c;
    }
    if let Some(idx) = rem[..dg].iter().rposition(|c| !c.is_zero()) {
        return Err(KernelError::NotDivisible(idx));
    }
    trim(&mut quot);
    Ok(quot)
}

pub(crate) fn substitute_power<C: Coeff>(f: &[C], p: usize) -> Vec<C> {
    if f.is_empty() || p == 1 {
        return f.to_vec();
    }
    let mut out = vec![C::zero(); (f.len() - 1) * p + 1];
    for (j, c) in f.iter().enumerate() {
        out[j * p] = c.clone();
    }
    out
}

pub(crate) fn negate_variable<C: Coeff>(f: &[C]) -> Checked<Vec<C>> {
    f.iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { c.neg() } else { Ok(c.clone()) })
        .collect()
}

pub(crate) fn fits_i64(c: &BigInt) -> bool {
    c.bits() < 64 || (c.is_negative() && *c == BigInt::from(i64::MIN))
}
