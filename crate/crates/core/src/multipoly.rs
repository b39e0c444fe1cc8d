//! Sparse multivariate polynomials over a cyclotomic field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with respect to the variable order of the [`VarSet`]. No stored
//! coefficient is ever zero.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::{CycloElem, CycloField};
use crate::{Error, Result};

/// Ordered, distinct variable names. The order is part of the ring's identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidParameter(alloc::format!("duplicate variable `{a}`")));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    pub fn xyz() -> Arc<Self> {
        Self::new(&["x", "y", "z"]).unwrap()
    }

    pub fn abc() -> Arc<Self> {
        Self::new(&["a", "b", "c"]).unwrap()
    }

    /// The bihomogeneous ring: point coordinates `x,y,z` followed by parameters `a,b,c`.
    pub fn xyzabc() -> Arc<Self> {
        Self::new(&["x", "y", "z", "a", "b", "c"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent tuples of total degree `d` in `nvars` variables, in descending
/// lexicographic order (`x^d` first). There are `C(d + nvars - 1, nvars - 1)` of them.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Vec<u32>>) {
        if left == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(prefix, left - 1, d - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
    out
}

/// Partial degrees in `(x,y,z)` and in `(a,b,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bidegree {
    pub deg_xyz: u32,
    pub deg_abc: u32,
}

/// Replacement value for one variable in [`MultiPoly::substitute`].
#[derive(Clone, Debug)]
pub enum Substitution {
    Poly(MultiPoly),
    Value(CycloElem),
}

#[derive(Clone)]
pub struct MultiPoly {
    field: Arc<CycloField>,
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, CycloElem>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(field: &Arc<CycloField>, vars: &Arc<VarSet>) -> Self {
        MultiPoly { field: field.clone(), vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarSet>, c: CycloElem) -> Self {
        let mut p = Self::zero(c.field(), vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; vars.len()]), c);
        }
        p
    }

    pub fn one(field: &Arc<CycloField>, vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, field.one())
    }

    pub fn var(field: &Arc<CycloField>, vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(Self::monomial(field, vars, e, field.one()))
    }

    /// `coeff * x^exps`; panics if `exps` has the wrong length.
    pub fn monomial(field: &Arc<CycloField>, vars: &Arc<VarSet>, exps: Vec<u32>, coeff: CycloElem) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(field, vars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps), coeff);
        }
        p
    }

    pub fn from_terms<I>(field: &Arc<CycloField>, vars: &Arc<VarSet>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, CycloElem)>,
    {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::ArityMismatch { expected: vars.len(), got: e.len() });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch { left: field.conductor(), right: c.field().conductor() });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: CycloElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycloElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> CycloElem {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.conductor(), right: other.field.conductor() });
        }
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.field, &self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        let mut out = Self::zero(&self.field, &self.vars);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&self.field.from_int(k))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field, &self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common total degree of all terms; `None` for the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Bidegree in the six-variable ring; `None` if the polynomial is zero or mixes bidegrees.
    pub fn bidegree(&self) -> Result<Option<Bidegree>> {
        if self.vars.len() != 6 {
            return Err(Error::ArityMismatch { expected: 6, got: self.vars.len() });
        }
        let mut out: Option<Bidegree> = None;
        for m in self.terms.keys() {
            let b = Bidegree { deg_xyz: m.0[..3].iter().sum(), deg_abc: m.0[3..].iter().sum() };
            match out {
                None => out = Some(b),
                Some(prev) if prev != b => return Ok(None),
                _ => {}
            }
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.field, &self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.terms.insert(Monomial(exps), c * &self.field.from_int(e as i64));
        }
        out
    }

    pub fn partial_derivative_by_name(&self, name: &str) -> Result<Self> {
        Ok(self.partial_derivative(self.vars.index_of(name)?))
    }

    /// Mixed partial derivative, `orders[i]` times with respect to variable `i`.
    pub fn derivative(&self, orders: &[u32]) -> Self {
        let mut out = self.clone();
        for (v, &k) in orders.iter().enumerate() {
            for _ in 0..k {
                out = out.partial_derivative(v);
            }
        }
        out
    }

    /// Evaluates at a full assignment of the variables.
    pub fn eval(&self, point: &[CycloElem]) -> Result<CycloElem> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: point.len() });
        }
        for p in point {
            if p.field() != &self.field {
                return Err(Error::FieldMismatch { left: self.field.conductor(), right: p.field().conductor() });
            }
        }
        let mut powers: Vec<Vec<CycloElem>> = point.iter().map(|p| vec![self.field.one(), p.clone()]).collect();
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[v];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[v];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Replaces the listed variables (by index) and keeps the ring. Values must live in the
    /// same field and, for polynomial values, the same variable set.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Substitution>) -> Result<Self> {
        let n = self.vars.len();
        let mut images = Vec::with_capacity(n);
        for v in 0..n {
            let img = match assignment.get(&v) {
                None => {
                    let mut e = vec![0; n];
                    e[v] = 1;
                    Self::monomial(&self.field, &self.vars, e, self.field.one())
                }
                Some(Substitution::Poly(p)) => {
                    self.check_compatible(p)?;
                    p.clone()
                }
                Some(Substitution::Value(c)) => {
                    if c.field() != &self.field {
                        return Err(Error::FieldMismatch {
                            left: self.field.conductor(),
                            right: c.field().conductor(),
                        });
                    }
                    Self::constant(&self.vars, c.clone())
                }
            };
            images.push(img);
        }
        if let Some(&bad) = assignment.keys().find(|&&k| k >= n) {
            return Err(Error::UnknownVariable(alloc::format!("#{bad}")));
        }
        self.compose(&self.vars, &images)
    }

    /// Substitution keyed by variable name.
    pub fn substitute_named(&self, assignment: &[(&str, Substitution)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (name, s) in assignment {
            map.insert(self.vars.index_of(name)?, s.clone());
        }
        self.substitute(&map)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`, all living in `target`.
    pub fn compose(&self, target: &Arc<VarSet>, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: images.len() });
        }
        for img in images {
            if img.field != self.field {
                return Err(Error::FieldMismatch { left: self.field.conductor(), right: img.field.conductor() });
            }
            if &img.vars != target {
                return Err(Error::VarSetMismatch);
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![Self::one(&self.field, target), p.clone()]).collect();
        let mut out = Self::zero(&self.field, target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[v];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[v];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Coefficient of `vars[indices] ^ exps`, viewed as a polynomial in the remaining
    /// variables (same ring, with the listed variables absent).
    pub fn coefficient_in(&self, indices: &[usize], exps: &[u32]) -> Self {
        let mut out = Self::zero(&self.field, &self.vars);
        for (m, c) in &self.terms {
            if indices.iter().zip(exps).all(|(&i, &e)| m.0[i] == e) {
                let mut rest = m.0.clone();
                for &i in indices {
                    rest[i] = 0;
                }
                out.terms.insert(Monomial(rest), c.clone());
            }
        }
        out
    }

    /// Splits into `(monomial in the listed variables, coefficient)` pairs, monomials
    /// ascending in graded-lex order on the listed variables.
    pub fn collect_in(&self, indices: &[usize]) -> Vec<(Vec<u32>, MultiPoly)> {
        let mut groups: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Monomial(indices.iter().map(|&i| m.0[i]).collect());
            let mut rest = m.0.clone();
            for &i in indices {
                rest[i] = 0;
            }
            groups
                .entry(key)
                .or_insert_with(|| Self::zero(&self.field, &self.vars))
                .terms
                .insert(Monomial(rest), c.clone());
        }
        groups.into_iter().map(|(k, v)| (k.0, v)).collect()
    }

    /// Same polynomial over another variable set with the same number of variables.
    pub fn rename(&self, vars: &Arc<VarSet>) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: vars.len() });
        }
        Ok(MultiPoly { field: self.field.clone(), vars: vars.clone(), terms: self.terms.clone() })
    }

    /// Polynomial text: terms in descending graded-lex order joined by ` + `, each
    /// written `coeff * x^i y^j` with zero exponents omitted. A constant term is just
    /// its coefficient, and the zero polynomial is `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            s.push_str(&c.to_text());
            let mut first = true;
            for (name, &e) in self.vars.names.iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                s.push_str(if first { " * " } else { " " });
                first = false;
                s.push_str(name);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("incompatible polynomial rings")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$try(&rhs).expect("incompatible polynomial rings")
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("incompatible polynomial rings")
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Small builder used throughout the crate for polynomials with integer coefficients.
pub struct Ring {
    pub field: Arc<CycloField>,
    pub vars: Arc<VarSet>,
}

impl Ring {
    pub fn new(field: &Arc<CycloField>, vars: &Arc<VarSet>) -> Self {
        Ring { field: field.clone(), vars: vars.clone() }
    }

    /// The variable with the given name; panics on an unknown name.
    pub fn v(&self, name: &str) -> MultiPoly {
        MultiPoly::var(&self.field, &self.vars, name).expect("unknown variable")
    }

    pub fn int(&self, k: i64) -> MultiPoly {
        MultiPoly::constant(&self.vars, self.field.from_int(k))
    }

    pub fn elem(&self, c: CycloElem) -> MultiPoly {
        MultiPoly::constant(&self.vars, c)
    }
}
