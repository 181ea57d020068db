//! Internal dense integer polynomials.
//!
//! The large truncated sums expand to polynomials whose coefficients stay
//! integral; working over `BigInt` with the rational content tracked
//! separately keeps the hot loops free of per-operation gcds.

use super::{poly::UniPoly, BigRat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut z = ZPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        };
        z.strip();
        z
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn strip(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Multiply in place by `(1 - q^m)`, `m >= 1`.
    pub fn mul_one_minus_qm(&mut self, m: usize) {
        assert!(m >= 1);
        if self.is_zero() {
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs
            .extend(std::iter::repeat_with(BigInt::zero).take(m));
        for i in (m..old_len + m).rev() {
            let t = self.coeffs[i - m].clone();
            self.coeffs[i] -= t;
        }
        self.strip();
    }

    /// Exact in-place division by `(1 - q^m)`, `m >= 1`.
    pub fn div_one_minus_qm(&mut self, m: usize) -> Result<()> {
        assert!(m >= 1);
        if self.is_zero() {
            return Ok(());
        }
        let len = self.coeffs.len();
        if len < m {
            return Err(Error::InvalidArgument(
                "(1 - q^m) does not divide polynomial".into(),
            ));
        }
        for i in m..len {
            let t = self.coeffs[i - m].clone();
            self.coeffs[i] += t;
        }
        for i in len - m..len {
            if !self.coeffs[i].is_zero() {
                return Err(Error::InvalidArgument(
                    "(1 - q^m) does not divide polynomial".into(),
                ));
            }
        }
        self.coeffs.truncate(len - m);
        self.strip();
        Ok(())
    }

    /// Multiply by a general integer polynomial (schoolbook, skipping zeros).
    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        // iterate over the sparser operand on the outside
        let (outer, inner) = if other.coeffs.len() <= self.coeffs.len() {
            (other, self)
        } else {
            (self, other)
        };
        for (i, a) in outer.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inner.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut z = ZPoly { coeffs };
        z.strip();
        z
    }

    /// `self += sign · q^shift · other`
    pub fn add_scaled(&mut self, other: &ZPoly, negative: bool, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs
                .extend(std::iter::repeat_with(BigInt::zero).take(need - self.coeffs.len()));
        }
        for (j, c) in other.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if negative {
                self.coeffs[j + shift] -= c;
            } else {
                self.coeffs[j + shift] += c;
            }
        }
        self.strip();
    }

    /// Division by a monic integer polynomial: `(quotient, remainder)`.
    pub fn divrem_monic(&self, d: &ZPoly) -> (ZPoly, ZPoly) {
        let dd = d.degree().expect("divisor must be nonzero");
        assert!(d.coeffs[dd].is_one(), "divisor must be monic");
        if self.is_zero() {
            return (ZPoly::zero(), ZPoly::zero());
        }
        let da = self.degree().unwrap();
        if da < dd {
            return (ZPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); da - dd + 1];
        for i in (dd..=da).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = rem[i].clone();
            let shift = i - dd;
            for (j, bc) in d.coeffs.iter().enumerate() {
                if !bc.is_zero() {
                    let t = bc * &f;
                    rem[shift + j] -= t;
                }
            }
            quo[shift] = f;
        }
        let mut q = ZPoly { coeffs: quo };
        let mut r = ZPoly { coeffs: rem };
        q.strip();
        r.strip();
        (q, r)
    }

    /// Multiplicity of the monic factor `d` in `self` (`self` nonzero),
    /// stopping early once `cap` divisions have succeeded.
    pub fn multiplicity_of_capped(&self, d: &ZPoly, cap: usize) -> (usize, ZPoly) {
        let mut count = 0;
        let mut cur = self.clone();
        while count < cap {
            let (q, r) = cur.divrem_monic(d);
            if !r.is_zero() {
                break;
            }
            count += 1;
            cur = q;
        }
        (count, cur)
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_raw(
            self.coeffs
                .iter()
                .map(|c| BigRat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Canonical byte encoding used for witness digests.
    pub fn digest_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for c in &self.coeffs {
            out.extend_from_slice(c.to_string().as_bytes());
            out.push(b',');
        }
        out
    }
}
