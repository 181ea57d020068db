//! Sparse trivariate polynomials in `(q, a, b)`.
//!
//! Numerator carrier for the parametric congruence checks: weight
//! factors like `(a - b)`, `(1 - ab)`, `(-1 - a^2 + a·q^s)` live here,
//! everything else stays in factored form.

use super::ParamValue;
use crate::arith::{rat_int, rat_pow, BigRat, LaurentPoly, UniPoly};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Key `(q_exp, a_exp, b_exp)`; exponents in `a`, `b` may be negative.
type TriKey = (i64, i32, i32);

/// Sparse polynomial in `q`, `a`, `b` (Laurent in all three).
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct TriPoly {
    terms: BTreeMap<TriKey, BigRat>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::term(rat_int(1), 0, 0, 0)
    }

    pub fn term(c: BigRat, q_exp: i64, a_exp: i32, b_exp: i32) -> Self {
        let mut t = TriPoly::default();
        if !c.is_zero() {
            t.terms.insert((q_exp, a_exp, b_exp), c);
        }
        t
    }

    /// `a - b`
    pub fn a_minus_b() -> Self {
        TriPoly::term(rat_int(1), 0, 1, 0).sub(&TriPoly::term(rat_int(1), 0, 0, 1))
    }

    /// `1 - a·b`
    pub fn one_minus_ab() -> Self {
        TriPoly::one().sub(&TriPoly::term(rat_int(1), 0, 1, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            let slot = out.terms.entry(k).or_insert_with(BigRat::zero);
            *slot += c;
            if slot.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        TriPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TriPoly::default();
        for (&(q1, a1, b1), c1) in &self.terms {
            for (&(q2, a2, b2), c2) in &other.terms {
                let k = (q1 + q2, a1 + a2, b1 + b2);
                let slot = out.terms.entry(k).or_insert_with(BigRat::zero);
                *slot += c1 * c2;
                if slot.is_zero() {
                    out.terms.remove(&k);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Spread between the highest and lowest `a`-exponent; an upper bound
    /// for the `a`-degree once denominators are cleared.
    pub fn a_span(&self) -> u32 {
        let (mut lo, mut hi) = (0i32, 0i32);
        for &(_, a, _) in self.terms.keys() {
            lo = lo.min(a);
            hi = hi.max(a);
        }
        (hi - lo) as u32
    }

    pub fn b_span(&self) -> u32 {
        let (mut lo, mut hi) = (0i32, 0i32);
        for &(_, _, b) in self.terms.keys() {
            lo = lo.min(b);
            hi = hi.max(b);
        }
        (hi - lo) as u32
    }

    /// Substitute a value for `a`, leaving a polynomial in `(q, b)`.
    pub fn subst_a(&self, val: &ParamValue) -> TriPoly {
        let mut out = TriPoly::default();
        for (&(qe, ae, be), c) in &self.terms {
            let (qe2, c2) = match val {
                ParamValue::QPow(s) => (qe + s * ae as i64, c.clone()),
                ParamValue::Rat(r) => (qe, c * rat_pow(r, ae as i64)),
            };
            let k = (qe2, 0, be);
            let slot = out.terms.entry(k).or_insert_with(BigRat::zero);
            *slot += c2;
            if slot.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }

    pub fn subst_b(&self, val: &ParamValue) -> TriPoly {
        let mut out = TriPoly::default();
        for (&(qe, ae, be), c) in &self.terms {
            let (qe2, c2) = match val {
                ParamValue::QPow(s) => (qe + s * be as i64, c.clone()),
                ParamValue::Rat(r) => (qe, c * rat_pow(r, be as i64)),
            };
            let k = (qe2, ae, 0);
            let slot = out.terms.entry(k).or_insert_with(BigRat::zero);
            *slot += c2;
            if slot.is_zero() {
                out.terms.remove(&k);
            }
        }
        out
    }

    /// Evaluation with optional values: a parameter may be omitted only
    /// when it does not occur.
    pub fn eval_opt(
        &self,
        a: Option<&ParamValue>,
        b: Option<&ParamValue>,
    ) -> crate::error::Result<LaurentPoly> {
        let one = ParamValue::Rat(rat_int(1));
        let a = match a {
            Some(v) => v,
            None if self.a_span() == 0 && self.terms.keys().all(|&(_, ae, _)| ae == 0) => &one,
            None => return Err(crate::error::Error::MissingParameter('a')),
        };
        let b = match b {
            Some(v) => v,
            None if self.terms.keys().all(|&(_, _, be)| be == 0) => &one,
            None => return Err(crate::error::Error::MissingParameter('b')),
        };
        Ok(self.eval(a, b))
    }

    /// Full evaluation of both parameters into a Laurent polynomial in `q`.
    pub fn eval(&self, a: &ParamValue, b: &ParamValue) -> LaurentPoly {
        let only_q = self.subst_a(a).subst_b(b);
        if only_q.is_zero() {
            return LaurentPoly::zero();
        }
        let min_q = only_q.terms.keys().map(|&(qe, _, _)| qe).min().unwrap();
        let max_q = only_q.terms.keys().map(|&(qe, _, _)| qe).max().unwrap();
        let mut coeffs = vec![BigRat::zero(); (max_q - min_q + 1) as usize];
        for (&(qe, _, _), c) in &only_q.terms {
            coeffs[(qe - min_q) as usize] = c.clone();
        }
        LaurentPoly::new(UniPoly::from_coeffs(coeffs), min_q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn weight_denominator_identities() {
        // (a - b)(1 - ab) at a=2, b=3: (2-3)(1-6) = 5
        let p = TriPoly::a_minus_b().mul(&TriPoly::one_minus_ab());
        let v = p.eval(&ParamValue::Rat(rat(2, 1)), &ParamValue::Rat(rat(3, 1)));
        assert_eq!(v.eval(&rat(7, 1)), rat(5, 1));
        assert_eq!(p.a_span(), 2);
        assert_eq!(p.b_span(), 2);
    }

    #[test]
    fn q_power_substitution() {
        // a·q at a = q^3 is q^4
        let p = TriPoly::term(rat_int(1), 1, 1, 0);
        let v = p.eval(&ParamValue::QPow(3), &ParamValue::Rat(rat(1, 1)));
        assert_eq!(v.shift(), 4);
        assert!(v.body().is_one());
    }
}
