//! Laurent polynomials and Laurent rational functions in `q`.

use super::{poly::UniPoly, ratfun::RatFun, BigRat};
use crate::error::{Error, Result};
use num_traits::Zero;

/// `q^shift · body`, with `body` having a nonzero constant term unless the
/// whole value is zero (canonical shift).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    body: UniPoly,
    shift: i64,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            body: UniPoly::zero(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            body: UniPoly::one(),
            shift: 0,
        }
    }

    /// Build from a body and shift, normalizing the shift.
    pub fn new(body: UniPoly, shift: i64) -> Self {
        if body.is_zero() {
            return LaurentPoly::zero();
        }
        match body.low_order() {
            Some(0) | None => LaurentPoly { body, shift },
            Some(k) => {
                let reduced = body.exact_div(&UniPoly::monomial(super::rat_int(1), k)).unwrap();
                LaurentPoly {
                    body: reduced,
                    shift: shift + k as i64,
                }
            }
        }
    }

    pub fn from_unipoly(p: UniPoly) -> Self {
        LaurentPoly::new(p, 0)
    }

    pub fn body(&self) -> &UniPoly {
        &self.body
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            body: self.body.neg(),
            shift: self.shift,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        LaurentPoly::new(self.body.mul(&other.body), self.shift + other.shift)
    }

    pub fn mul_scalar(&self, c: &BigRat) -> Self {
        LaurentPoly::new(self.body.mul_scalar(c), self.shift)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let base = self.shift.min(other.shift);
        let a = self.body.shl_q((self.shift - base) as usize);
        let b = other.body.shl_q((other.shift - base) as usize);
        LaurentPoly::new(a.add(&b), base)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Evaluate at a nonzero rational point.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        assert!(!x.is_zero());
        self.body.eval(x) * super::rat_pow(x, self.shift)
    }
}

/// A Laurent rational function `q^shift · num / den` with `den(0) != 0`.
///
/// The denominator is not reduced against the numerator; equality is
/// decided by cross-multiplication, and divisibility questions go through
/// explicit multiplicity computations.
#[derive(Clone, Debug)]
pub struct LRat {
    pub num: LaurentPoly,
    pub den: UniPoly,
}

impl LRat {
    pub fn zero() -> Self {
        LRat {
            num: LaurentPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        LRat {
            num: LaurentPoly::one(),
            den: UniPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator("LRat".into()));
        }
        // move any q-power of the denominator into the numerator shift
        match den.low_order() {
            Some(0) => Ok(LRat { num, den }),
            Some(k) => {
                let den = den
                    .exact_div(&UniPoly::monomial(super::rat_int(1), k))
                    .unwrap();
                Ok(LRat {
                    num: LaurentPoly::new(num.body().clone(), num.shift() - k as i64),
                    den,
                })
            }
            None => unreachable!(),
        }
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        LRat {
            num,
            den: UniPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn neg(&self) -> Self {
        LRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        LRat::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroValue);
        }
        let num = self.num.mul(&LaurentPoly::new(
            other.den.clone(),
            -other.num.shift(),
        ));
        LRat::new(num, self.den.mul(other.num.body()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&LaurentPoly::from_unipoly(other.den.clone()))
            .add(&other.num.mul(&LaurentPoly::from_unipoly(self.den.clone())));
        LRat::new(num, self.den.mul(&other.den)).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact equality as rational functions (cross-multiplication).
    pub fn equals(&self, other: &Self) -> bool {
        let lhs = self.num.mul(&LaurentPoly::from_unipoly(other.den.clone()));
        let rhs = other.num.mul(&LaurentPoly::from_unipoly(self.den.clone()));
        lhs == rhs
    }

    /// Evaluate at a rational point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator(format!("at q = {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Reduce into a plain rational function (gcd-reduced, monic denominator).
    pub fn to_ratfun(&self) -> RatFun {
        let shift = self.num.shift();
        let (num, den) = if shift >= 0 {
            (self.num.body().shl_q(shift as usize), self.den.clone())
        } else {
            (
                self.num.body().clone(),
                self.den.shl_q((-shift) as usize),
            )
        };
        RatFun::new(num, den).expect("nonzero denominator")
    }
}
