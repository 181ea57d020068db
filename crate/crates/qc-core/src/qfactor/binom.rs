//! Binomial-factored values: the result of substituting parameter values
//! into a [`super::CycloFactored`].

use crate::arith::{cyclotomic, divisors, rat_pow, BigRat, LRat, LaurentPoly, UniPoly};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A factor `(1 - coeff·q^{q_exp})` with `q_exp >= 1` and
/// `coeff ∉ {0, ±1}` (those cases are cyclotomic and are stored as such).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Binom {
    pub coeff: BigRat,
    pub q_exp: u64,
}

/// `scalar · q^shift · ∏ Φ_d^{e_d} · ∏ binom^{e} · ∏ poly_num / ∏ poly_den`.
///
/// All parameters have been substituted away, so this is a univariate
/// q-quantity; the denominator factors are kept unexpanded so cyclotomic
/// valuations stay cheap.
#[derive(Clone, Debug)]
pub struct BinomProduct {
    pub(crate) scalar: BigRat,
    pub(crate) q_shift: i64,
    pub(crate) cyclo: BTreeMap<u64, i64>,
    pub(crate) binoms: BTreeMap<Binom, i64>,
    pub(crate) poly_num: Vec<UniPoly>,
    pub(crate) poly_den: Vec<UniPoly>,
}

impl BinomProduct {
    pub fn one() -> Self {
        BinomProduct::unit(BigRat::one(), 0)
    }

    pub fn zero() -> Self {
        BinomProduct::unit(BigRat::zero(), 0)
    }

    pub(crate) fn unit(scalar: BigRat, q_shift: i64) -> Self {
        BinomProduct {
            scalar,
            q_shift,
            cyclo: BTreeMap::new(),
            binoms: BTreeMap::new(),
            poly_num: Vec::new(),
            poly_den: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &BigRat {
        &self.scalar
    }

    pub fn mul_scalar(&mut self, c: &BigRat) {
        if c.is_zero() {
            *self = BinomProduct::zero();
        } else if !self.is_zero() {
            self.scalar *= c;
        }
    }

    pub fn negate(&mut self) {
        self.scalar = -self.scalar.clone();
    }

    pub fn shift_q(&mut self, s: i64) {
        self.q_shift += s;
    }

    pub fn mul_cyclo(&mut self, d: u64, e: i64) {
        if self.is_zero() || e == 0 {
            return;
        }
        let slot = self.cyclo.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.cyclo.remove(&d);
        }
    }

    /// Multiply in `(1 - c·q^e)^exp`, normalizing Laurent exponents and
    /// routing `c = ±1` into cyclotomic factors.
    ///
    /// A vanishing factor (`c = 1`, `e = 0`) zeroes the product when
    /// `exp > 0` and is an error when it sits in the denominator.
    pub fn mul_binom(&mut self, c: &BigRat, e: i64, exp: i64) -> Result<()> {
        if self.is_zero() || exp == 0 {
            return Ok(());
        }
        if c.is_zero() {
            return Ok(()); // factor is exactly 1
        }
        let (c, e) = if e < 0 {
            // (1 - c·q^e) = -c·q^e · (1 - c^{-1} q^{-e})
            let minus_c = -c.clone();
            self.mul_scalar(&rat_pow(&minus_c, exp));
            self.q_shift += e * exp;
            (c.recip(), -e)
        } else {
            (c.clone(), e)
        };
        if e == 0 {
            let val = BigRat::one() - &c;
            if val.is_zero() {
                if exp > 0 {
                    *self = BinomProduct::zero();
                    return Ok(());
                }
                return Err(Error::ZeroDenominator(format!("(1 - {c})")));
            }
            self.mul_scalar(&rat_pow(&val, exp));
            return Ok(());
        }
        if c.is_one() {
            // (1 - q^e) = -∏_{d|e} Φ_d
            if exp % 2 != 0 {
                self.scalar = -self.scalar.clone();
            }
            for d in divisors(e as u64) {
                self.mul_cyclo(d, exp);
            }
            return Ok(());
        }
        if (-c.clone()).is_one() {
            // (1 + q^e) = (1 - q^{2e}) / (1 - q^e)
            for d in divisors(2 * e as u64) {
                self.mul_cyclo(d, exp);
            }
            for d in divisors(e as u64) {
                self.mul_cyclo(d, -exp);
            }
            return Ok(());
        }
        let key = Binom {
            coeff: c,
            q_exp: e as u64,
        };
        let slot = self.binoms.entry(key.clone()).or_insert(0);
        *slot += exp;
        if *slot == 0 {
            self.binoms.remove(&key);
        }
        Ok(())
    }

    /// Multiply by a Laurent polynomial factor (numerator side).
    pub fn mul_laurent_num(&mut self, lp: &LaurentPoly) {
        if self.is_zero() {
            return;
        }
        if lp.is_zero() {
            *self = BinomProduct::zero();
            return;
        }
        self.q_shift += lp.shift();
        if !lp.body().is_one() {
            self.poly_num.push(lp.body().clone());
        }
    }

    /// Divide by a Laurent polynomial factor (denominator side).
    pub fn div_laurent(&mut self, lp: &LaurentPoly) -> Result<()> {
        if lp.is_zero() {
            return Err(Error::ZeroDenominator("polynomial factor".into()));
        }
        if self.is_zero() {
            return Ok(());
        }
        self.q_shift -= lp.shift();
        if !lp.body().is_one() {
            self.poly_den.push(lp.body().clone());
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BinomProduct::zero();
        }
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        out.q_shift += other.q_shift;
        for (&d, &e) in &other.cyclo {
            out.mul_cyclo(d, e);
        }
        for (b, &e) in &other.binoms {
            let slot = out.binoms.entry(b.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.binoms.remove(b);
            }
        }
        out.poly_num.extend(other.poly_num.iter().cloned());
        out.poly_den.extend(other.poly_den.iter().cloned());
        out
    }

    /// Exact expansion into a Laurent rational function.
    pub fn expand(&self) -> Result<LRat> {
        if self.is_zero() {
            return Ok(LRat::zero());
        }
        let mut num_cyclo: BTreeMap<u64, u64> = BTreeMap::new();
        let mut den_cyclo: BTreeMap<u64, u64> = BTreeMap::new();
        for (&d, &e) in &self.cyclo {
            if e > 0 {
                num_cyclo.insert(d, e as u64);
            } else {
                den_cyclo.insert(d, (-e) as u64);
            }
        }
        let (mut num, num_sign) = expand_cyclo_product(num_cyclo)?;
        let (mut den, den_sign) = expand_cyclo_product(den_cyclo)?;
        for (b, &e) in &self.binoms {
            let target = if e > 0 { &mut num } else { &mut den };
            for _ in 0..e.unsigned_abs() {
                target.mul_binom_in_place(&b.coeff, b.q_exp as usize);
            }
        }
        for p in &self.poly_num {
            num = num.mul(p);
        }
        for p in &self.poly_den {
            if p.is_zero() {
                return Err(Error::ZeroDenominator("polynomial factor".into()));
            }
            den = den.mul(p);
        }
        let mut scalar = self.scalar.clone();
        if num_sign != den_sign {
            scalar = -scalar;
        }
        let num = num.mul_scalar(&scalar);
        LRat::new(LaurentPoly::new(num, self.q_shift), den)
    }

    /// Evaluate directly at a rational point `q0` without expanding.
    pub fn eval_at_q(&self, q0: &BigRat) -> Result<BigRat> {
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        if q0.is_zero() {
            return Err(Error::InadmissibleParameter("q = 0".into()));
        }
        let mut acc = self.scalar.clone() * rat_pow(q0, self.q_shift);
        for (&d, &e) in &self.cyclo {
            let v = cyclotomic(d)?.eval(q0);
            if v.is_zero() && e < 0 {
                return Err(Error::ZeroDenominator(format!("Phi_{d} at q = {q0}")));
            }
            acc *= rat_pow(&v, e);
        }
        for (b, &e) in &self.binoms {
            let v = BigRat::one() - b.coeff.clone() * rat_pow(q0, b.q_exp as i64);
            if v.is_zero() {
                if e < 0 {
                    return Err(Error::ZeroDenominator(format!("binomial at q = {q0}")));
                }
                return Ok(BigRat::zero());
            }
            acc *= rat_pow(&v, e);
        }
        for p in &self.poly_num {
            acc *= p.eval(q0);
        }
        for p in &self.poly_den {
            let v = p.eval(q0);
            if v.is_zero() {
                return Err(Error::ZeroDenominator(format!("polynomial at q = {q0}")));
            }
            acc /= v;
        }
        Ok(acc)
    }
}

/// Expand `∏ Φ_d(q)^{e_d}` (non-negative exponents).
///
/// Greedily reassembles complete divisor sets into `(1 - q^m)` factors,
/// which multiply in linear time; leftover cyclotomics multiply directly.
/// Returns `(poly, negated)` with `∏ Φ^e = poly · (-1)^negated`.
pub(crate) fn expand_cyclo_product(mut exps: BTreeMap<u64, u64>) -> Result<(UniPoly, bool)> {
    let mut acc = UniPoly::one();
    let mut negs = 0u64;
    while let Some((&m, _)) = exps.iter().next_back() {
        let full_set = divisors(m).iter().all(|d| exps.get(d).is_some_and(|&e| e > 0));
        if full_set {
            // ∏_{d|m} Φ_d = q^m - 1 = -(1 - q^m)
            acc.mul_binom_in_place(&BigRat::one(), m as usize);
            negs += 1;
            for d in divisors(m) {
                let e = exps.get_mut(&d).unwrap();
                *e -= 1;
                if *e == 0 {
                    exps.remove(&d);
                }
            }
        } else {
            let e = exps.remove(&m).unwrap();
            let phi = cyclotomic(m)?;
            for _ in 0..e {
                acc = acc.mul(&phi);
            }
        }
    }
    Ok((acc, negs % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn expand_reassembles_qpow_factors() {
        // Φ1^2·Φ2·Φ3 = (1-q^2)(1-q^3)·(±1): check expansion exactly
        let mut exps = BTreeMap::new();
        exps.insert(1u64, 2u64);
        exps.insert(2u64, 1u64);
        exps.insert(3u64, 1u64);
        let (poly, neg) = expand_cyclo_product(exps).unwrap();
        let mut expect = UniPoly::one();
        expect.mul_binom_in_place(&BigRat::one(), 2);
        expect.mul_binom_in_place(&BigRat::one(), 3);
        assert_eq!(poly, expect);
        assert!(!neg); // two factor extractions, signs cancel
    }

    #[test]
    fn binom_normalization_negative_exponent() {
        // (1 - 3 q^{-2}) = -3 q^{-2} (1 - q^2/3)
        let mut bp = BinomProduct::one();
        bp.mul_binom(&rat(3, 1), -2, 1).unwrap();
        let lr = bp.expand().unwrap();
        // value at q = 5: 1 - 3/25 = 22/25
        assert_eq!(lr.eval(&rat(5, 1)).unwrap(), rat(22, 25));
    }
}
