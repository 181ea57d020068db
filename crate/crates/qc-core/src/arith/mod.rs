//! Exact scalar and univariate polynomial arithmetic.
//!
//! Provides [`BigRat`] (arbitrary-precision rationals), [`UniPoly`] (dense
//! polynomials in `q` over the rationals), [`LaurentPoly`], [`RatFun`] /
//! [`LRat`] rational-function carriers, cyclotomic polynomials with a
//! process-wide cache, q-integers `[n] = 1 + q + … + q^{n-1}`, and p-adic
//! valuations of rationals.

mod cyclotomic;
mod laurent;
mod poly;
mod ratfun;
pub(crate) mod zpoly;

pub use cyclotomic::{
    cyclotomic, divisors, euler_phi, load_cyclotomic_cache, q_integer, save_cyclotomic_cache,
};
pub(crate) use cyclotomic::{cyclotomic_z, q_integer_z};
pub use laurent::{LRat, LaurentPoly};
pub use poly::UniPoly;
pub use ratfun::RatFun;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational scalar.
///
/// Kept reduced with a positive denominator; zero is uniquely `0/1`.
pub type BigRat = num_rational::BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// `base^exp` for a nonzero rational base and any integer exponent.
pub fn rat_pow(base: &BigRat, exp: i64) -> BigRat {
    if exp == 0 {
        return BigRat::one();
    }
    assert!(!base.is_zero(), "zero base with nonpositive exponent");
    let mut acc = BigRat::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// A p-adic valuation: finite, or +infinity for the zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    /// True when the valuation is at least `bound`.
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => *v >= bound,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// The exponent of the prime `p` in the nonzero rational `x`, so that
/// `x = p^v · u/w` with `p ∤ u`, `p ∤ w`. Zero maps to [`Valuation::Infinite`].
pub fn padic_valuation(x: &BigRat, p: &BigInt) -> Valuation {
    assert!(p.abs() > BigInt::one(), "p must be a prime > 1");
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let v_num = int_valuation(x.numer(), p);
    let v_den = int_valuation(x.denom(), p);
    Valuation::Finite(v_num - v_den)
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut v = 0i64;
    let mut cur = n.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&cur, p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        let p5 = BigInt::from(5);
        assert_eq!(padic_valuation(&rat(50, 3), &p5), Valuation::Finite(2));
        assert_eq!(padic_valuation(&rat(1, 25), &p5), Valuation::Finite(-2));
        assert_eq!(padic_valuation(&rat(5, 4), &p5), Valuation::Finite(1));
        assert_eq!(padic_valuation(&rat_int(0), &p5), Valuation::Infinite);
    }

    #[test]
    fn valuation_is_additive() {
        // 100 deterministic pseudo-random rational pairs
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let p = BigInt::from(7);
        for _ in 0..100 {
            let a = rat((next() % 4000) as i64 - 2000, (next() % 999) as i64 + 1);
            let b = rat((next() % 4000) as i64 - 2000, (next() % 999) as i64 + 1);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let (va, vb, vab) = (
                padic_valuation(&a, &p),
                padic_valuation(&b, &p),
                padic_valuation(&(a.clone() * b.clone()), &p),
            );
            match (va, vb, vab) {
                (Valuation::Finite(x), Valuation::Finite(y), Valuation::Finite(z)) => {
                    assert_eq!(x + y, z)
                }
                _ => panic!("nonzero inputs must have finite valuation"),
            }
        }
    }
}
