//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! A [`Polynomial`] lives in a fixed ring `ℚ(i)[z1, ..., zn]`; the variable
//! count is part of the value and every binary operation checks it. Terms are
//! kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic, so iteration (and hence printing) is deterministic.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::GaussianRational;

/// Exponent vector `z^α`, ordered graded-lexicographically.
///
/// The derived ordering compares total degree first and then the exponents
/// lexicographically, so `z1` outranks `z2` within a degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Self { deg, exps }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { deg: 1, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            deg: self.deg + other.deg,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps,
        })
    }

    /// `α! = ∏ α_i!`.
    pub fn factorial(&self) -> BigInt {
        self.exps
            .iter()
            .map(|&e| factorial(e))
            .fold(BigInt::one(), |acc, f| acc * f)
    }
}

pub(crate) fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Falling factorial `a (a-1) ... (a-b+1)`, zero when `b > a`.
pub(crate) fn falling_factorial(a: u32, b: u32) -> BigInt {
    if b > a {
        return BigInt::from(0);
    }
    ((a - b + 1)..=a).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// All monomials of total degree `m` in `n` variables, graded-lex descending.
pub fn monomials_of_degree(n: usize, m: u32) -> Vec<Monomial> {
    fn rec(n: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(m);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=m).rev() {
            prefix.push(e);
            rec(n, m - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(n, m, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `dim V_m = C(m+n-1, n-1)`.
pub fn homogeneous_dimension(n: usize, m: u32) -> usize {
    if n == 0 {
        return usize::from(m == 0);
    }
    let (top, k) = (m as usize + n - 1, n - 1);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (top - j) as u128 / (j + 1) as u128;
    }
    acc as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, GaussianRational::one())
    }

    pub fn constant(n: usize, c: GaussianRational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    /// A single term `c·z^α`.
    pub fn term(mono: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(mono.n());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// The variable `z_{i+1}` (indices are zero-based).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::VariableIndexOutOfRange { index: i, n });
        }
        Ok(Self::term(Monomial::var(n, i), GaussianRational::one()))
    }

    /// Builds a polynomial from exponent/coefficient pairs, merging repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, GaussianRational)>,
    {
        let mut p = Self::zero(n);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: exps.len(),
                });
            }
            p.add_term(Monomial::new(exps), &c);
        }
        Ok(p)
    }

    /// `σ₂ = z1² + ... + zn²`.
    pub fn sigma2(n: usize) -> Self {
        let mut p = Self::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 2;
            p.terms.insert(Monomial::new(e), GaussianRational::one());
        }
        p
    }

    /// The linear form `a·z = Σ a_i z_i`.
    pub fn linear_form(a: &[GaussianRational]) -> Self {
        let n = a.len();
        let mut p = Self::zero(n);
        for (i, c) in a.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> GaussianRational {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// The value when the polynomial is constant (including zero).
    pub fn constant_value(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// `Some(d)` iff the polynomial is nonzero and every term has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let lo = self.terms.keys().next()?.degree();
        let hi = self.terms.keys().next_back()?.degree();
        (lo == hi).then_some(hi)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_n(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_n(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.n));
        }
        let mut acc: HashMap<Monomial, GaussianRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        Ok(Polynomial {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(mono), v * c))
                .collect(),
        }
    }

    /// `self^m` by repeated squaring; `p^0 = 1` for every `p`, zero included.
    pub fn pow(&self, mut m: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = &acc * &base;
            }
            m >>= 1;
            if m > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative `∂/∂z_{i+1}` (zero-based index).
    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        if i >= self.n {
            return Err(Error::VariableIndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.partial_unchecked(i))
    }

    pub(crate) fn partial_unchecked(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.terms.insert(
                Monomial {
                    deg: m.deg - 1,
                    exps,
                },
                c.scale_int(&BigInt::from(e)),
            );
        }
        out
    }

    /// `∂^s p / ∂z^s` for a multi-index `s`.
    pub fn partial_multi(&self, s: &Monomial) -> Result<Polynomial> {
        if s.n() != self.n {
            return Err(Error::VariableCountMismatch {
                left: self.n,
                right: s.n(),
            });
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let Some(q) = m.checked_div(s) else { continue };
            let k = m
                .exps
                .iter()
                .zip(&s.exps)
                .fold(BigInt::one(), |acc, (&a, &b)| acc * falling_factorial(a, b));
            out.terms.insert(q, c.scale_int(&k));
        }
        Ok(out)
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_slice(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a point of `ℚ(i)^n`.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.n {
            return Err(Error::PointLengthMismatch {
                expected: self.n,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<GaussianRational>> = point
            .iter()
            .map(|x| vec![GaussianRational::one(), x.clone()])
            .collect();
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`, failing if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_n(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let lc_inv = lc.inv().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.n);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm).ok_or(Error::InexactDivision)?;
            let qc = c * &lc_inv;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on variable-count mismatch; use [`Polynomial::try_add`] otherwise.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial add")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial sub")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
