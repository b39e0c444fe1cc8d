//! Arithmetic in the cyclotomic field `Q(ζ_n)`.
//!
//! Elements are stored in the power basis `1, ζ, ..., ζ^{φ(n)-1}` as an integer
//! numerator vector over one positive common denominator. The pair is kept in lowest
//! terms, so two elements are equal iff their stored data is equal.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::upoly::QPoly;
use crate::{Error, Result};

/// The field `Q(ζ_n)` together with its defining polynomial `Φ_n`.
pub struct CycloField {
    n: u32,
    /// `Φ_n`, ascending and monic. Cyclotomic polynomials have integer coefficients.
    modulus: Vec<BigInt>,
    /// Row `k` holds `t^{φ+k} mod Φ_n` for `k < φ - 1`.
    reduction: Vec<Vec<BigInt>>,
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.n)
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for CycloField {}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u32
}

fn cyclotomic_qpoly(n: u32, cache: &mut Vec<Option<QPoly>>) -> QPoly {
    if let Some(p) = &cache[n as usize] {
        return p.clone();
    }
    let mut acc = QPoly::binomial(n as usize);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_qpoly(d, cache);
        let (quot, rem) = acc.div_rem(&phi_d);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    cache[n as usize] = Some(acc.clone());
    acc
}

/// The cyclotomic polynomial `Φ_n` (ascending integer coefficients), computed as
/// `(t^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    let mut cache = vec![None; n as usize + 1];
    let p = cyclotomic_qpoly(n, &mut cache);
    Ok(p.0.into_iter().map(|c| c.to_integer()).collect())
}

/// Builds `Q(ζ_n)`.
pub fn make_field(n: u32) -> Result<Arc<CycloField>> {
    let modulus = cyclotomic_polynomial(n)?;
    let phi = modulus.len() - 1;
    debug_assert_eq!(phi as u32, totient(n));

    // t^phi = -(c_0 + ... + c_{phi-1} t^{phi-1}), then shift repeatedly
    let mut row: Vec<BigInt> = modulus[..phi].iter().map(|c| -c).collect();
    let mut reduction = Vec::with_capacity(phi.saturating_sub(1));
    for _ in 0..phi.saturating_sub(1) {
        reduction.push(row.clone());
        let top = row.pop().unwrap();
        row.insert(0, BigInt::zero());
        for (r, c) in row.iter_mut().zip(&modulus) {
            *r -= &top * c;
        }
    }
    Ok(Arc::new(CycloField { n, modulus, reduction }))
}

impl CycloField {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// `φ(n)`, the degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of `Φ_n` in ascending order.
    pub fn modulus(&self) -> Vec<BigRational> {
        self.modulus.iter().cloned().map(BigRational::from_integer).collect()
    }

    pub fn zero(self: &Arc<Self>) -> CycloElem {
        CycloElem { field: self.clone(), num: vec![BigInt::zero(); self.degree()], den: BigInt::one() }
    }

    pub fn one(self: &Arc<Self>) -> CycloElem {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> CycloElem {
        self.from_integer(BigInt::from(v))
    }

    pub fn from_integer(self: &Arc<Self>, v: BigInt) -> CycloElem {
        let mut e = self.zero();
        e.num[0] = v;
        e
    }

    pub fn from_rational(self: &Arc<Self>, v: &BigRational) -> CycloElem {
        let mut e = self.zero();
        e.num[0] = v.numer().clone();
        e.den = v.denom().clone();
        e.normalize();
        e
    }

    /// Builds an element from power-basis coordinates. Missing trailing coordinates are zero;
    /// coordinates beyond `φ(n)` are reduced modulo `Φ_n`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[BigRational]) -> CycloElem {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let raw: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut e = CycloElem { field: self.clone(), num: self.reduce_raw(raw), den };
        e.normalize();
        e
    }

    /// `ζ_n^k`, with `k` taken modulo `n`.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> CycloElem {
        let k = k.rem_euclid(self.n as i64) as usize;
        let mut raw = vec![BigInt::zero(); k + 1];
        raw[k] = BigInt::one();
        CycloElem { field: self.clone(), num: self.reduce_raw(raw), den: BigInt::one() }
    }

    /// Reduces an integer coefficient vector of any length modulo `Φ_n`.
    fn reduce_raw(&self, mut raw: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.degree();
        // fold down blocks that exceed the precomputed table
        while raw.len() > 2 * phi - 1 && phi > 0 {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - phi;
            for (i, c) in self.modulus[..phi].iter().enumerate() {
                raw[shift + i] -= &top * c;
            }
        }
        if raw.len() > phi {
            let high = raw.split_off(phi);
            for (k, c) in high.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (r, t) in raw.iter_mut().zip(&self.reduction[k]) {
                    if !t.is_zero() {
                        *r += c * t;
                    }
                }
            }
        }
        raw.resize(phi, BigInt::zero());
        raw
    }
}

/// An element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloElem {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Power-basis coordinates, length `φ(n)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The element as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.n == other.field.n {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field.n, right: other.field.n })
        }
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den.set_one();
            return;
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let combine = |a: &BigInt, b: &BigInt| if negate { a - b } else { a + b };
        let mut out = if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| combine(a, b)).collect();
            CycloElem { field: self.field.clone(), num, den: self.den.clone() }
        } else {
            let num =
                self.num.iter().zip(&other.num).map(|(a, b)| combine(&(a * &other.den), &(b * &self.den))).collect();
            CycloElem { field: self.field.clone(), num, den: &self.den * &other.den }
        };
        out.normalize();
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let phi = self.num.len();
        let nz_a: Vec<usize> = (0..phi).filter(|&i| !self.num[i].is_zero()).collect();
        let nz_b: Vec<usize> = (0..phi).filter(|&i| !other.num[i].is_zero()).collect();
        if nz_a.is_empty() || nz_b.is_empty() {
            return self.field.zero();
        }
        let mut raw = vec![BigInt::zero(); 2 * phi - 1];
        for &i in &nz_a {
            for &j in &nz_b {
                raw[i + j] += &self.num[i] * &other.num[j];
            }
        }
        let mut out =
            CycloElem { field: self.field.clone(), num: self.field.reduce_raw(raw), den: &self.den * &other.den };
        out.normalize();
        out
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm against `Φ_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.from_rational(&r.recip()));
        }
        let modulus = QPoly::from_ints(&self.field.modulus);
        let rep = QPoly::from_ints(&self.num);
        // Φ_n is irreducible, so any nonzero representative is coprime to it
        let s = rep.inverse_mod(&modulus).ok_or(Error::DivisionByZero)?;
        let mut out = self.field.from_coeffs(&s.0);
        out = out.scale_int(&self.den);
        Ok(out)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = CycloElem {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Textual form `cyclo(n)[q0, q1, ...]`.
    pub fn to_text(&self) -> String {
        let mut s = format!("cyclo({})[", self.field.n);
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&rational_text(c));
        }
        s.push(']');
        s
    }
}

/// `p/q`, or just `p` for integers.
pub fn rational_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloElem {}

impl Hash for CycloElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for CycloElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order on canonical representatives; not compatible with
/// any field structure.
impl Ord for CycloElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field.n.cmp(&other.field.n).then_with(|| self.num.cmp(&other.num)).then_with(|| self.den.cmp(&other.den))
    }
}

// Operator impls panic on a field mismatch; use the `try_*` methods to get an error instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloElem> for &CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                #[allow(clippy::redundant_closure_call)]
                ($body)(self, rhs)
            }
        }
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &CycloElem, b: &CycloElem| a.try_add(b).expect("field mismatch"));
binop!(Sub, sub, |a: &CycloElem, b: &CycloElem| a.try_sub(b).expect("field mismatch"));
binop!(Mul, mul, |a: &CycloElem, b: &CycloElem| a.try_mul(b).expect("field mismatch"));

impl AddAssign<&CycloElem> for CycloElem {
    fn add_assign(&mut self, rhs: &CycloElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloElem> for CycloElem {
    fn sub_assign(&mut self, rhs: &CycloElem) {
        *self = &*self - rhs;
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(mut self) -> CycloElem {
        for c in &mut self.num {
            *c = -core::mem::take(c);
        }
        self
    }
}
