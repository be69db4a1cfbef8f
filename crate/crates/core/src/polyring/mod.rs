//! Exact dense polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored as `i64` whenever every one of them fits; each
//! operation first runs over checked `i64` and re-runs over `BigInt` if any
//! intermediate overflows. The representation is canonical, so structural
//! equality is polynomial equality.

mod coeff_set;
pub(crate) mod kernel;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub use coeff_set::CoeffSet;
pub use kernel::KARATSUBA_THRESHOLD;

use crate::error::{Error, Result};
use kernel::{Checked, KernelError};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// A polynomial in one variable over the integers, lowest degree first.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    repr: Repr,
}

trait Binary {
    fn run<C: kernel::Coeff>(&self, a: &[C], b: &[C]) -> Checked<Vec<C>>;
}

trait Unary {
    fn run<C: kernel::Coeff>(&self, a: &[C]) -> Checked<Vec<C>>;
}

struct AddOp;
struct SubOp;
struct MulOp(usize);
struct DivOp;
struct NegOp;
struct NegVarOp;

impl Binary for AddOp {
    fn run<C: kernel::Coeff>(&self, a: &[C], b: &[C]) -> Checked<Vec<C>> {
        kernel::add(a, b)
    }
}
impl Binary for SubOp {
    fn run<C: kernel::Coeff>(&self, a: &[C], b: &[C]) -> Checked<Vec<C>> {
        kernel::sub(a, b)
    }
}
impl Binary for MulOp {
    fn run<C: kernel::Coeff>(&self, a: &[C], b: &[C]) -> Checked<Vec<C>> {
        kernel::mul_with_threshold(a, b, self.0)
    }
}
impl Binary for DivOp {
    fn run<C: kernel::Coeff>(&self, a: &[C], b: &[C]) -> Checked<Vec<C>> {
        kernel::div_exact(a, b)
    }
}
impl Unary for NegOp {
    fn run<C: kernel::Coeff>(&self, a: &[C]) -> Checked<Vec<C>> {
        kernel::neg(a)
    }
}
impl Unary for NegVarOp {
    fn run<C: kernel::Coeff>(&self, a: &[C]) -> Checked<Vec<C>> {
        kernel::negate_variable(a)
    }
}

fn not_divisible(e: KernelError) -> Error {
    match e {
        KernelError::NotDivisible(index) => Error::NotDivisible { index },
        KernelError::Overflow => unreachable!("BigInt kernels never overflow"),
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly {
            repr: Repr::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^j`.
    pub fn monomial(c: i64, j: usize) -> Self {
        let mut v = vec![0; j + 1];
        v[j] = c;
        Self::from_small(v)
    }

    /// `x^d - 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[0] -= 1;
        v[d] += 1;
        Self::from_small(v)
    }

    /// `1 + x^step + x^{2 step} + ... + x^{(terms-1) step}`.
    pub fn geometric(terms: usize, step: usize) -> Self {
        if terms == 0 {
            return Self::zero();
        }
        let mut v = vec![0; (terms - 1) * step + 1];
        for j in 0..terms {
            v[j * step] += 1;
        }
        Self::from_small(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_small(coeffs.to_vec())
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_big(coeffs.into_iter().map(Into::into).collect())
    }

    fn from_small(mut v: Vec<i64>) -> Self {
        kernel::trim(&mut v);
        IntPoly {
            repr: Repr::Small(v),
        }
    }

    fn from_big(mut v: Vec<BigInt>) -> Self {
        kernel::trim(&mut v);
        if v.iter().all(kernel::fits_i64) {
            let small = v.iter().map(|c| c.to_i64().expect("checked fit")).collect();
            IntPoly {
                repr: Repr::Small(small),
            }
        } else {
            IntPoly { repr: Repr::Big(v) }
        }
    }

    fn big_coeffs(&self) -> std::borrow::Cow<'_, [BigInt]> {
        match &self.repr {
            Repr::Small(v) => v
                .iter()
                .map(|&c| BigInt::from(c))
                .collect::<Vec<_>>()
                .into(),
            Repr::Big(v) => v.as_slice().into(),
        }
    }

    fn binary<Op: Binary>(&self, rhs: &Self, op: Op) -> Result<Self> {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.repr, &rhs.repr) {
            match op.run(a, b) {
                Ok(v) => return Ok(Self::from_small(v)),
                Err(KernelError::NotDivisible(index)) => return Err(Error::NotDivisible { index }),
                Err(KernelError::Overflow) => {}
            }
        }
        op.run(&self.big_coeffs(), &rhs.big_coeffs())
            .map(Self::from_big)
            .map_err(not_divisible)
    }

    fn unary<Op: Unary>(&self, op: Op) -> Self {
        if let Repr::Small(a) = &self.repr {
            if let Ok(v) = op.run(a) {
                return Self::from_small(v);
            }
        }
        Self::from_big(
            op.run(&self.big_coeffs())
                .expect("BigInt kernels never overflow"),
        )
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small(v) => v.is_empty(),
            Repr::Big(v) => v.is_empty(),
        }
    }

    /// Same as [`IntPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Number of stored coefficients, `deg + 1` for nonzero polynomials.
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Small(v) => v.len(),
            Repr::Big(v) => v.len(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.len().checked_sub(1)
    }

    /// Coefficient of `x^j`; zero beyond the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        match &self.repr {
            Repr::Small(v) => v.get(j).copied().map(BigInt::from).unwrap_or_default(),
            Repr::Big(v) => v.get(j).cloned().unwrap_or_default(),
        }
    }

    /// Borrowed coefficients when all of them fit in `i64`.
    pub fn as_i64(&self) -> Option<&[i64]> {
        match &self.repr {
            Repr::Small(v) => Some(v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.big_coeffs().into_owned()
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> Vec<(usize, BigInt)> {
        match &self.repr {
            Repr::Small(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(j, &c)| (j, BigInt::from(c)))
                .collect(),
            Repr::Big(v) => v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.binary(rhs, AddOp).expect("addition is total")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.binary(rhs, SubOp).expect("subtraction is total")
    }

    pub fn neg(&self) -> Self {
        self.unary(NegOp)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_with_threshold(rhs, KARATSUBA_THRESHOLD)
    }

    /// Product with an explicit schoolbook/Karatsuba cutover (in terms).
    pub fn mul_with_threshold(&self, rhs: &Self, threshold: usize) -> Self {
        self.binary(rhs, MulOp(threshold))
            .expect("multiplication is total")
    }

    /// Quotient `q` with `q * g == self`, or [`Error::NotDivisible`].
    pub fn div_exact(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.binary(g, DivOp)
    }

    /// `f(x^p)`.
    pub fn substitute_power(&self, p: usize) -> Self {
        assert!(p > 0, "substitution exponent must be positive");
        match &self.repr {
            Repr::Small(v) => Self::from_small(kernel::substitute_power(v, p)),
            Repr::Big(v) => Self::from_big(kernel::substitute_power(v, p)),
        }
    }

    /// `f(-x)`.
    pub fn negate_variable(&self) -> Self {
        self.unary(NegVarOp)
    }

    /// `x^{deg f} f(1/x)`. The zero polynomial maps to itself.
    pub fn reciprocal(&self) -> Self {
        match &self.repr {
            Repr::Small(v) => Self::from_small(v.iter().rev().copied().collect()),
            Repr::Big(v) => Self::from_big(v.iter().rev().cloned().collect()),
        }
    }

    /// `x^k f(x)`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        match &self.repr {
            Repr::Small(v) => {
                let mut out = vec![0; k];
                out.extend_from_slice(v);
                Self::from_small(out)
            }
            Repr::Big(v) => {
                let mut out = vec![BigInt::zero(); k];
                out.extend_from_slice(v);
                Self::from_big(out)
            }
        }
    }

    /// `C(f)`: coefficients at indices `0..=deg f`.
    pub fn coeff_set(&self) -> Result<CoeffSet> {
        match &self.repr {
            _ if self.is_zero() => Err(Error::ZeroPolynomial),
            Repr::Small(v) => Ok(CoeffSet::from_small(v)),
            Repr::Big(v) => Ok(CoeffSet::from_values(v.iter().cloned())),
        }
    }

    /// `C_0(f) = C(f) ∪ {0}`. Defined for the zero polynomial as `{0}`.
    pub fn coeff_set0(&self) -> CoeffSet {
        self.coeff_set()
            .unwrap_or_else(|_| CoeffSet::from_values(std::iter::empty::<i64>()))
            .with_zero()
    }

    /// Largest coefficient, `H_+`.
    pub fn height_plus(&self) -> Result<BigInt> {
        Ok(self.coeff_set()?.max().cloned().expect("nonzero"))
    }

    /// Smallest coefficient, `H_-`.
    pub fn height_minus(&self) -> Result<BigInt> {
        Ok(self.coeff_set()?.min().cloned().expect("nonzero"))
    }

    /// Largest coefficient in absolute value.
    pub fn height(&self) -> Result<BigInt> {
        let set = self.coeff_set()?;
        let (lo, hi) = (set.min().expect("nonzero"), set.max().expect("nonzero"));
        Ok(lo.abs().max(hi.abs()))
    }

    /// `f(x)` evaluated at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.big_coeffs()
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Small(v) => f.debug_tuple("IntPoly").field(v).finish(),
            Repr::Big(v) => f.debug_tuple("IntPoly").field(v).finish(),
        }
    }
}

/// Sparse ascending form, e.g. `1 - x + x^3 - x^4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (j, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag == BigInt::from(1);
            match j {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{j}")?,
                _ => write!(f, "{mag}*x^{j}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                IntPoly::$method(self, rhs)
            }
        }
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                IntPoly::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(self)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(&self)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, f| IntPoly::mul(&acc, &f))
    }
}
