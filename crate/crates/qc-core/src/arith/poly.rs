//! Dense univariate polynomials in `q` with rational coefficients.

use super::BigRat;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `q` over the rationals.
///
/// `coeffs[i]` is the coefficient of `q^i`; trailing zeros are stripped, so
/// the leading coefficient is nonzero unless the polynomial is zero. The
/// degree of the zero polynomial is the distinguished sentinel `None`,
/// never an integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// `c · q^k`
    pub fn monomial(c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    /// Degree, with `None` as the zero-polynomial sentinel.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    /// Order of vanishing at q = 0 (index of the lowest nonzero coefficient).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shl_q(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Multiply in place by `(1 - c·q^m)` with `m >= 1`.
    pub fn mul_binom_in_place(&mut self, c: &BigRat, m: usize) {
        assert!(m >= 1);
        if self.is_zero() || c.is_zero() {
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs
            .extend(std::iter::repeat_with(BigRat::zero).take(m));
        for i in (0..old_len + m).rev() {
            if i >= m && !self.coeffs[i - m].is_zero() {
                let t = &self.coeffs[i - m] * c;
                self.coeffs[i] -= t;
            }
        }
        self.strip();
    }

    /// Exact in-place division by `(1 - c·q^m)`; fails if not divisible.
    pub fn div_binom_in_place(&mut self, c: &BigRat, m: usize) -> Result<()> {
        assert!(m >= 1);
        if self.is_zero() {
            return Ok(());
        }
        let len = self.coeffs.len();
        if len < m {
            return Err(Error::InvalidArgument(
                "binomial does not divide polynomial".into(),
            ));
        }
        // p = (1 - c q^m) r  =>  r[i] = p[i] + c·r[i-m]
        for i in 0..len {
            if i >= m && !self.coeffs[i - m].is_zero() {
                let t = &self.coeffs[i - m] * c;
                self.coeffs[i] += t;
            }
        }
        for i in len - m..len {
            if !self.coeffs[i].is_zero() {
                return Err(Error::InvalidArgument(
                    "binomial does not divide polynomial".into(),
                ));
            }
        }
        self.coeffs.truncate(len - m);
        self.strip();
        Ok(())
    }

    /// Euclidean division: `self = b·quotient + remainder`, deg r < deg b.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        if self.is_zero() {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        }
        let da = self.degree().unwrap();
        if da < db {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lead_inv = b.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRat::zero(); da - db + 1];
        for i in (db..=da).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] * &lead_inv;
            let shift = i - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    let t = bc * &f;
                    rem[shift + j] -= t;
                }
            }
            quo[shift] = f;
        }
        Ok((UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem)))
    }

    /// Exact division, or `None` if the remainder is nonzero.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.divrem(b).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.divrem(&y)?;
            x = y;
            y = r.monic();
        }
        Ok(x)
    }

    /// Extended Euclidean algorithm: returns `(g, u, v)` with
    /// `u·self + v·other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (UniPoly::one(), UniPoly::zero());
        let (mut v0, mut v1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        let lead = r0.leading_coeff().unwrap().recip();
        Ok((
            r0.mul_scalar(&lead),
            u0.mul_scalar(&lead),
            v0.mul_scalar(&lead),
        ))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.mul_scalar(&l.recip()),
        }
    }

    /// Multiplicity of the (nonconstant) factor `f` in `self` (0 if coprime).
    pub fn multiplicity_of(&self, f: &Self) -> usize {
        assert!(!self.is_zero() && f.degree().unwrap_or(0) > 0);
        let mut count = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(f) {
            count += 1;
            cur = q;
        }
        count
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn strip(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub(crate) fn from_raw(coeffs: Vec<BigRat>) -> Self {
        UniPoly::from_coeffs(coeffs)
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "q^{i}")?;
            } else {
                write!(f, "{a}*q^{i}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}
