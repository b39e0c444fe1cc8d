//! Dense univariate polynomials over `Q`, just enough for building cyclotomic
//! moduli and inverting field elements.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in ascending order, no trailing zeros. The zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(pub(crate) Vec<BigRational>);

impl QPoly {
    pub(crate) fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub(crate) fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub(crate) fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        QPoly(vec![BigRational::one()])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    /// `t^n - 1`
    pub(crate) fn binomial(n: usize) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        c[0] = -BigRational::one();
        c[n] = BigRational::one();
        QPoly(c)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        Self::new(out)
    }

    /// Euclidean division, returns `(quotient, remainder)`.
    pub(crate) fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.lead().unwrap().recip();
        let mut rem = self.0.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Returns `s` with `s * self ≡ 1 (mod modulus)`, or `None` if the two are not coprime.
    pub(crate) fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // extended Euclid tracking only the coefficient of `self`
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).1);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd, a nonzero constant iff coprime
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.0[0].recip();
        let s = QPoly::new(s0.0.into_iter().map(|x| x * &c).collect());
        Some(s.div_rem(modulus).1)
    }
}
