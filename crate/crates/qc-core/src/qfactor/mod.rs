//! Factored representation of q-Pochhammer products.
//!
//! Every quantity is kept as
//! `sign · scalar · q^shift · a^i · b^j · ∏_d Φ_d(q)^{e_d} · ∏ atoms`,
//! where an atom is a factor `(1 - a^±1 b^±1 q^e)`. Pure q-power factors
//! `(1 - q^m)` are always stored cyclotomically factored, so divisibility
//! by `Φ_n(q)` is an exponent lookup. Substituting rational values or
//! q-powers for `a`, `b` produces a [`BinomProduct`], which still keeps the
//! denominator factored and expands on demand.

mod binom;
mod tripoly;

pub use binom::{Binom, BinomProduct};
pub use tripoly::TriPoly;

use crate::arith::{divisors, rat_int, rat_pow, BigRat, LRat};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A value substituted for one of the parameters `a`, `b`: either a
/// rational number or a (coefficient-1) q-power `q^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Rat(BigRat),
    QPow(i64),
}

impl ParamValue {
    pub fn rat_i64(n: i64) -> Self {
        ParamValue::Rat(rat_int(n))
    }
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Rat(c) => write!(f, "{c}"),
            ParamValue::QPow(s) => write!(f, "q^{s}"),
        }
    }
}

/// A parametric factor `(1 - a^{a_exp} b^{b_exp} q^{q_exp})`.
///
/// The pure-q case `a_exp = b_exp = 0` is forbidden; such factors belong in
/// cyclotomic-factored form. Canonically `q_exp > 0`, or `q_exp = 0` with
/// the first nonzero of `(a_exp, b_exp)` positive; [`Atom::normalized`]
/// rewrites `(1 - M) = -M·(1 - M^{-1})` to reach that form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Atom {
    pub a_exp: i8,
    pub b_exp: i8,
    pub q_exp: i64,
}

/// Monomial adjustment produced by atom normalization:
/// `(1 - M) = sign · a^da · b^db · q^dq · (1 - M^{-1})`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MonoAdjust {
    pub negate: bool,
    pub d_a: i64,
    pub d_b: i64,
    pub d_q: i64,
}

impl Atom {
    /// Build a canonical atom from raw exponents, together with the
    /// monomial adjustment (identity adjustment when already canonical).
    pub fn normalized(a_exp: i8, b_exp: i8, q_exp: i64) -> Result<(Atom, MonoAdjust)> {
        if a_exp == 0 && b_exp == 0 {
            return Err(Error::InvalidArgument(
                "pure q-power factors must be cyclotomically factored".into(),
            ));
        }
        if !(-1..=1).contains(&a_exp) || !(-1..=1).contains(&b_exp) {
            return Err(Error::InvalidArgument(
                "atom exponents restricted to {-1, 0, 1}".into(),
            ));
        }
        let canonical = q_exp > 0 || (q_exp == 0 && (a_exp > 0 || (a_exp == 0 && b_exp > 0)));
        if canonical {
            Ok((
                Atom {
                    a_exp,
                    b_exp,
                    q_exp,
                },
                MonoAdjust::default(),
            ))
        } else {
            Ok((
                Atom {
                    a_exp: -a_exp,
                    b_exp: -b_exp,
                    q_exp: -q_exp,
                },
                MonoAdjust {
                    negate: true,
                    d_a: a_exp as i64,
                    d_b: b_exp as i64,
                    d_q: q_exp,
                },
            ))
        }
    }
}

impl std::fmt::Display for Atom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(1 - ")?;
        match self.a_exp {
            1 => write!(f, "a")?,
            -1 => write!(f, "a^-1")?,
            _ => {}
        }
        match self.b_exp {
            1 => write!(f, "b")?,
            -1 => write!(f, "b^-1")?,
            _ => {}
        }
        if self.q_exp != 0 {
            write!(f, "q^{}", self.q_exp)?;
        } else if self.a_exp == 0 && self.b_exp == 0 {
            write!(f, "1")?;
        }
        write!(f, ")")
    }
}

/// Base of a q-Pochhammer product `(base; q^d)_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochBase {
    /// `q^r`
    Q(i64),
    /// `a·q^r`
    AQ(i64),
    /// `q^r / a`
    QOverA(i64),
    /// `b·q^r`
    BQ(i64),
    /// `q^r / b`
    QOverB(i64),
}

/// A q-rational quantity in fully factored form:
/// `scalar · q^q_shift · a^a_pow · b^b_pow · ∏ Φ_d^{cyclo[d]} · ∏ atoms^{±}`.
///
/// The zero value is represented by `scalar = 0` with everything else
/// empty. Atoms are stored with signed exponents (positive = numerator),
/// so no atom ever appears on both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloFactored {
    scalar: BigRat,
    q_shift: i64,
    a_pow: i64,
    b_pow: i64,
    cyclo: BTreeMap<u64, i64>,
    atoms: BTreeMap<Atom, i64>,
}

impl CycloFactored {
    pub fn one() -> Self {
        CycloFactored::from_scalar(BigRat::one())
    }

    pub fn zero() -> Self {
        CycloFactored::from_scalar(BigRat::zero())
    }

    pub fn from_scalar(scalar: BigRat) -> Self {
        CycloFactored {
            scalar,
            q_shift: 0,
            a_pow: 0,
            b_pow: 0,
            cyclo: BTreeMap::new(),
            atoms: BTreeMap::new(),
        }
    }

    /// `q^e`
    pub fn q_power(e: i64) -> Self {
        CycloFactored {
            q_shift: e,
            ..CycloFactored::one()
        }
    }

    /// `Φ_d(q)^e`
    pub fn cyclo_power(d: u64, e: i64) -> Self {
        let mut cf = CycloFactored::one();
        if e != 0 {
            cf.cyclo.insert(d, e);
        }
        cf
    }

    /// `a^e`
    pub fn monomial_a(e: i64) -> Self {
        CycloFactored {
            a_pow: e,
            ..CycloFactored::one()
        }
    }

    /// `b^e`
    pub fn monomial_b(e: i64) -> Self {
        CycloFactored {
            b_pow: e,
            ..CycloFactored::one()
        }
    }

    /// A single canonical atom factor.
    pub fn atom_factor(a_exp: i8, b_exp: i8, q_exp: i64) -> Result<Self> {
        let (atom, adj) = Atom::normalized(a_exp, b_exp, q_exp)?;
        let mut cf = CycloFactored::one();
        cf.apply_adjust(&adj, 1);
        cf.atoms.insert(atom, 1);
        Ok(cf)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &BigRat {
        &self.scalar
    }

    pub fn sign(&self) -> i8 {
        if self.scalar.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn q_shift(&self) -> i64 {
        self.q_shift
    }

    pub fn a_pow(&self) -> i64 {
        self.a_pow
    }

    pub fn b_pow(&self) -> i64 {
        self.b_pow
    }

    pub fn cyclo_map(&self) -> &BTreeMap<u64, i64> {
        &self.cyclo
    }

    pub fn atoms_map(&self) -> &BTreeMap<Atom, i64> {
        &self.atoms
    }

    pub fn has_atoms(&self) -> bool {
        !self.atoms.is_empty() || self.a_pow != 0 || self.b_pow != 0
    }

    /// Atoms in the numerator (positive exponents), per the factored-form
    /// invariant that no atom appears on both sides.
    pub fn atoms_num(&self) -> impl Iterator<Item = (&Atom, u32)> {
        self.atoms
            .iter()
            .filter(|(_, &e)| e > 0)
            .map(|(a, &e)| (a, e as u32))
    }

    pub fn atoms_den(&self) -> impl Iterator<Item = (&Atom, u32)> {
        self.atoms
            .iter()
            .filter(|(_, &e)| e < 0)
            .map(|(a, &e)| (a, (-e) as u32))
    }

    fn apply_adjust(&mut self, adj: &MonoAdjust, exp: i64) {
        if adj.negate && exp % 2 != 0 {
            self.scalar = -self.scalar.clone();
        }
        self.a_pow += adj.d_a * exp;
        self.b_pow += adj.d_b * exp;
        self.q_shift += adj.d_q * exp;
    }

    /// Multiply in an atom power, normalizing and cancelling.
    pub fn mul_atom(&mut self, a_exp: i8, b_exp: i8, q_exp: i64, exp: i64) -> Result<()> {
        if self.is_zero() || exp == 0 {
            return Ok(());
        }
        let (atom, adj) = Atom::normalized(a_exp, b_exp, q_exp)?;
        self.apply_adjust(&adj, exp);
        let slot = self.atoms.entry(atom).or_insert(0);
        *slot += exp;
        if *slot == 0 {
            self.atoms.remove(&atom);
        }
        Ok(())
    }

    /// Multiply in `(1 - q^m)^exp`, stored cyclotomically: for `m > 0`,
    /// `(1 - q^m) = -∏_{d|m} Φ_d(q)`; negative `m` first extracts the unit
    /// `-q^m` so that `(1 - q^m) = -q^m (1 - q^{-m})`.
    pub fn mul_qpow_factor(&mut self, m: i64, exp: i64) -> Result<()> {
        if m == 0 {
            return Err(Error::ZeroQPowerFactor);
        }
        if self.is_zero() || exp == 0 {
            return Ok(());
        }
        if m < 0 {
            // (1 - q^m) = -q^m (1 - q^{-m}) = q^m ∏_{d|-m} Φ_d
            self.q_shift += m * exp;
        } else if exp % 2 != 0 {
            self.scalar = -self.scalar.clone();
        }
        for d in divisors(m.unsigned_abs()) {
            let slot = self.cyclo.entry(d).or_insert(0);
            *slot += exp;
            if *slot == 0 {
                self.cyclo.remove(&d);
            }
        }
        Ok(())
    }

    pub fn mul_scalar(&mut self, c: &BigRat) {
        if c.is_zero() {
            *self = CycloFactored::zero();
        } else if !self.is_zero() {
            self.scalar *= c;
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return CycloFactored::zero();
        }
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        out.q_shift += other.q_shift;
        out.a_pow += other.a_pow;
        out.b_pow += other.b_pow;
        for (&d, &e) in &other.cyclo {
            let slot = out.cyclo.entry(d).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.cyclo.remove(&d);
            }
        }
        for (&atom, &e) in &other.atoms {
            let slot = out.atoms.entry(atom).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.atoms.remove(&atom);
            }
        }
        out
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroValue);
        }
        Ok(CycloFactored {
            scalar: self.scalar.recip(),
            q_shift: -self.q_shift,
            a_pow: -self.a_pow,
            b_pow: -self.b_pow,
            cyclo: self.cyclo.iter().map(|(&d, &e)| (d, -e)).collect(),
            atoms: self.atoms.iter().map(|(&a, &e)| (a, -e)).collect(),
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(CycloFactored::one());
        }
        let base = if e > 0 { self.clone() } else { self.inv()? };
        let mut out = CycloFactored::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Net exponent of `Φ_n(q)` in a parameter-free value.
    ///
    /// Parametric atoms are coprime to `Φ_n` as polynomials in the
    /// indeterminates, but their content after a later substitution is
    /// unknown here, so their presence is reported as an error.
    pub fn cyclo_multiplicity(&self, n: u64) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "cyclotomic multiplicity of zero".into(),
            ));
        }
        if !self.atoms.is_empty() {
            return Err(Error::UndeterminedCycloContent);
        }
        Ok(self.cyclo.get(&n).copied().unwrap_or(0))
    }

    /// Substitute values for the parameters, producing a
    /// binomial-factored value ready for expansion. Every parameter
    /// actually occurring must be given a value.
    pub fn substitute(
        &self,
        a: Option<&ParamValue>,
        b: Option<&ParamValue>,
    ) -> Result<BinomProduct> {
        if self.is_zero() {
            return Ok(BinomProduct::zero());
        }
        let mut bp = BinomProduct::unit(self.scalar.clone(), self.q_shift);
        for (&d, &e) in &self.cyclo {
            bp.mul_cyclo(d, e);
        }
        // monomial prefactor a^i b^j
        for (pow, val, sym) in [(self.a_pow, a, 'a'), (self.b_pow, b, 'b')] {
            if pow == 0 {
                continue;
            }
            match val {
                None => return Err(Error::MissingParameter(sym)),
                Some(ParamValue::Rat(c)) => {
                    if c.is_zero() {
                        return Err(Error::InadmissibleParameter(format!("{sym} = 0")));
                    }
                    bp.mul_scalar(&rat_pow(c, pow));
                }
                Some(ParamValue::QPow(s)) => bp.shift_q(s * pow),
            }
        }
        for (&atom, &e) in &self.atoms {
            let mut coeff = BigRat::one();
            let mut q_exp = atom.q_exp;
            for (sym_exp, val, sym) in [(atom.a_exp, a, 'a'), (atom.b_exp, b, 'b')] {
                if sym_exp == 0 {
                    continue;
                }
                match val {
                    None => return Err(Error::MissingParameter(sym)),
                    Some(ParamValue::Rat(c)) => {
                        if c.is_zero() {
                            return Err(Error::InadmissibleParameter(format!("{sym} = 0")));
                        }
                        coeff *= rat_pow(c, sym_exp as i64);
                    }
                    Some(ParamValue::QPow(s)) => q_exp += s * sym_exp as i64,
                }
            }
            bp.mul_binom(&coeff, q_exp, e)?;
        }
        Ok(bp)
    }

    /// Exact expansion into a Laurent rational function. Parameters that
    /// occur must be supplied as rational values.
    pub fn expand(&self, a_val: Option<&BigRat>, b_val: Option<&BigRat>) -> Result<LRat> {
        let a = a_val.map(|c| ParamValue::Rat(c.clone()));
        let b = b_val.map(|c| ParamValue::Rat(c.clone()));
        self.substitute(a.as_ref(), b.as_ref())?.expand()
    }
}

impl std::fmt::Display for CycloFactored {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.scalar)?;
        if self.q_shift != 0 {
            write!(f, "·q^{}", self.q_shift)?;
        }
        if self.a_pow != 0 {
            write!(f, "·a^{}", self.a_pow)?;
        }
        if self.b_pow != 0 {
            write!(f, "·b^{}", self.b_pow)?;
        }
        for (d, e) in &self.cyclo {
            write!(f, "·Phi{d}^{e}")?;
        }
        for (atom, e) in &self.atoms {
            write!(f, "·{atom}^{e}")?;
        }
        Ok(())
    }
}

/// `(1 - q^m)` as a cyclotomically factored value; `m` may be negative.
pub fn qpow_factor(m: i64) -> Result<CycloFactored> {
    let mut cf = CycloFactored::one();
    cf.mul_qpow_factor(m, 1)?;
    Ok(cf)
}

/// The q-integer `[m] = (1 - q^m)/(1 - q)` in factored form; `[0] = 0`.
pub fn q_int_factor(m: i64) -> Result<CycloFactored> {
    if m == 0 {
        return Ok(CycloFactored::zero());
    }
    let mut cf = qpow_factor(m)?;
    cf.mul_qpow_factor(1, -1)?;
    Ok(cf)
}

/// The product of `k` factors `(1 - base·q^{jd})`, `j = 0, …, k-1`.
///
/// Pure-q factors are routed through the cyclotomic factorization;
/// parametric factors become atoms. A pure-q exponent hitting zero is a
/// vanishing factor and is reported as an error.
pub fn pochhammer(base: PochBase, step: u64, k: u64) -> Result<CycloFactored> {
    if step == 0 {
        return Err(Error::InvalidArgument("pochhammer step must be >= 1".into()));
    }
    let d = step as i64;
    let mut acc = CycloFactored::one();
    for j in 0..k as i64 {
        match base {
            PochBase::Q(r) => {
                let m = r + j * d;
                if m == 0 {
                    return Err(Error::VanishingFactor(format!(
                        "(q^{r}; q^{step}) factor at j = {j}"
                    )));
                }
                acc.mul_qpow_factor(m, 1)?;
            }
            PochBase::AQ(r) => acc.mul_atom(1, 0, r + j * d, 1)?,
            PochBase::QOverA(r) => acc.mul_atom(-1, 0, r + j * d, 1)?,
            PochBase::BQ(r) => acc.mul_atom(0, 1, r + j * d, 1)?,
            PochBase::QOverB(r) => acc.mul_atom(0, -1, r + j * d, 1)?,
        }
    }
    Ok(acc)
}

/// True when `(base; q^step)_k` contains a vanishing pure-q factor.
pub fn pochhammer_vanishes(base: &PochBase, step: u64, k: u64) -> bool {
    if let PochBase::Q(r) = base {
        let d = step as i64;
        (0..k as i64).any(|j| r + j * d == 0)
    } else {
        false
    }
}

/// A factored value times sparse trivariate polynomial factors: the
/// general carrier for one summand (or closed-form piece) of a parametric
/// congruence. The sparse factors hold whatever does not fit an atom,
/// such as CRT weight numerators and denominators.
#[derive(Clone, Debug)]
pub struct ParamPiece {
    pub cf: CycloFactored,
    pub tri_num: Vec<TriPoly>,
    pub tri_den: Vec<TriPoly>,
}

impl ParamPiece {
    pub fn from_cf(cf: CycloFactored) -> Self {
        ParamPiece {
            cf,
            tri_num: Vec::new(),
            tri_den: Vec::new(),
        }
    }

    pub fn negated(mut self) -> Self {
        self.cf.mul_scalar(&super::arith::rat(-1, 1));
        self
    }

    /// Substitute parameter values throughout, producing a univariate
    /// factored value. Fails when a denominator factor vanishes at the
    /// point (inadmissible) or a required parameter is missing.
    pub fn eval(&self, a: Option<&ParamValue>, b: Option<&ParamValue>) -> Result<BinomProduct> {
        let mut bp = self.cf.substitute(a, b)?;
        for t in &self.tri_num {
            bp.mul_laurent_num(&t.eval_opt(a, b)?);
        }
        for t in &self.tri_den {
            let lp = t.eval_opt(a, b)?;
            if lp.is_zero() {
                return Err(Error::InadmissibleParameter(
                    "denominator factor vanishes at evaluation point".into(),
                ));
            }
            bp.div_laurent(&lp)?;
        }
        Ok(bp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, LaurentPoly, UniPoly};

    fn pv(n: i64, d: i64) -> ParamValue {
        ParamValue::Rat(rat(n, d))
    }

    /// Independent oracle: multiply the k Pochhammer factors one by one as
    /// Laurent polynomials at rational parameter values.
    fn naive_poch(base: &PochBase, step: u64, k: u64, a: &BigRat, b: &BigRat) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for j in 0..k as i64 {
            let d = step as i64;
            let (coeff, e) = match base {
                PochBase::Q(r) => (rat_int(1), r + j * d),
                PochBase::AQ(r) => (a.clone(), r + j * d),
                PochBase::QOverA(r) => (a.recip(), r + j * d),
                PochBase::BQ(r) => (b.clone(), r + j * d),
                PochBase::QOverB(r) => (b.recip(), r + j * d),
            };
            // 1 - coeff·q^e
            let factor = LaurentPoly::one().sub(&LaurentPoly::new(
                UniPoly::constant(coeff),
                e,
            ));
            acc = acc.mul(&factor);
        }
        acc
    }

    #[test]
    fn qpow_factor_examples() {
        let f1 = qpow_factor(1).unwrap();
        assert_eq!(f1.sign(), -1);
        assert_eq!(f1.cyclo_map().get(&1), Some(&1));

        let f6 = qpow_factor(6).unwrap();
        assert_eq!(f6.sign(), -1);
        let dividers: Vec<u64> = f6.cyclo_map().keys().copied().collect();
        assert_eq!(dividers, vec![1, 2, 3, 6]);
        let expanded = f6.expand(None, None).unwrap();
        let expect = LaurentPoly::one().sub(&LaurentPoly::new(UniPoly::one(), 6));
        assert!(expanded.equals(&crate::arith::LRat::from_laurent(expect)));

        // (1 - q^{-2}) = q^{-2}·Φ1·Φ2 with positive sign
        let fm2 = qpow_factor(-2).unwrap();
        assert_eq!(fm2.sign(), 1);
        assert_eq!(fm2.q_shift(), -2);
        let expanded = fm2.expand(None, None).unwrap();
        let expect = LaurentPoly::one().sub(&LaurentPoly::new(UniPoly::one(), -2));
        assert!(expanded.equals(&crate::arith::LRat::from_laurent(expect)));

        assert!(qpow_factor(0).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        // (q; q^4)_2 = (1-q)(1-q^5) = Φ1·Φ1·Φ5 with sign +1
        let p = pochhammer(PochBase::Q(1), 4, 2).unwrap();
        assert_eq!(p.sign(), 1);
        assert_eq!(p.cyclo_map().get(&1), Some(&2));
        assert_eq!(p.cyclo_map().get(&5), Some(&1));

        // (q^{-1}; q^4)_2 = (1-q^{-1})(1-q^3), Laurent shift -1
        let p = pochhammer(PochBase::Q(-1), 4, 2).unwrap();
        let expanded = p.expand(None, None).unwrap();
        let f1 = LaurentPoly::one().sub(&LaurentPoly::new(UniPoly::one(), -1));
        let f2 = LaurentPoly::one().sub(&LaurentPoly::new(UniPoly::one(), 3));
        assert!(expanded.equals(&crate::arith::LRat::from_laurent(f1.mul(&f2))));

        // empty product
        assert_eq!(pochhammer(PochBase::AQ(1), 4, 0).unwrap(), CycloFactored::one());

        // vanishing pure-q factor
        assert!(pochhammer(PochBase::Q(-4), 4, 2).is_err());
    }

    #[test]
    fn mul_div_and_atom_cancellation() {
        let x = pochhammer(PochBase::AQ(1), 4, 3).unwrap();
        assert_eq!(x.mul(&CycloFactored::one()), x);

        let phi1_sq = CycloFactored::cyclo_power(1, 2);
        let phi1 = CycloFactored::cyclo_power(1, 1);
        assert_eq!(phi1_sq.div(&phi1).unwrap(), phi1);

        let atom = CycloFactored::atom_factor(1, 0, 1).unwrap();
        assert_eq!(atom.div(&atom).unwrap(), CycloFactored::one());
    }

    #[test]
    fn expand_examples() {
        let phi4 = CycloFactored::cyclo_power(4, 1);
        let lr = phi4.expand(None, None).unwrap();
        assert!(lr.den.is_one());
        assert_eq!(lr.num.body(), &UniPoly::from_ints(&[1, 0, 1]));

        let atom = CycloFactored::atom_factor(1, 0, 1).unwrap();
        let lr = atom.expand(Some(&rat(2, 1)), None).unwrap();
        assert_eq!(lr.num.body(), &UniPoly::from_ints(&[1, -2]));
    }

    #[test]
    fn cyclo_multiplicity_examples() {
        let n5 = q_int_factor(5).unwrap();
        assert_eq!(n5.cyclo_multiplicity(5).unwrap(), 1);

        let x = CycloFactored::cyclo_power(5, 2)
            .div(&CycloFactored::cyclo_power(5, 1))
            .unwrap();
        assert_eq!(x.cyclo_multiplicity(5).unwrap(), 1);

        let with_atoms = CycloFactored::atom_factor(1, 0, 1).unwrap();
        assert!(with_atoms.cyclo_multiplicity(5).is_err());
    }

    #[test]
    fn cyclo_multiplicity_is_additive() {
        let x = pochhammer(PochBase::Q(1), 4, 6).unwrap();
        let y = pochhammer(PochBase::Q(2), 4, 5).unwrap();
        for n in [1u64, 2, 3, 5, 7, 13] {
            assert_eq!(
                x.mul(&y).cyclo_multiplicity(n).unwrap(),
                x.cyclo_multiplicity(n).unwrap() + y.cyclo_multiplicity(n).unwrap()
            );
        }
    }

    #[test]
    fn qpow_factor_expands_exactly_up_to_60() {
        for m in 1..=60i64 {
            let lr = qpow_factor(m).unwrap().expand(None, None).unwrap();
            let expect = LaurentPoly::one().sub(&LaurentPoly::new(UniPoly::one(), m));
            assert!(lr.equals(&crate::arith::LRat::from_laurent(expect)), "m = {m}");
        }
    }

    #[test]
    fn pochhammer_round_trip_against_naive_product() {
        // 200 deterministic instances across bases, steps, lengths
        let bases = [
            PochBase::Q(1),
            PochBase::Q(-1),
            PochBase::Q(2),
            PochBase::Q(3),
            PochBase::AQ(1),
            PochBase::AQ(-1),
            PochBase::QOverA(4),
            PochBase::BQ(2),
            PochBase::QOverB(-3),
            PochBase::AQ(4),
        ];
        let a = rat(3, 2);
        let b = rat(-5, 7);
        let mut count = 0;
        'outer: for step in 1..=5u64 {
            for k in 0..=4u64 {
                for base in &bases {
                    if pochhammer_vanishes(base, step, k) {
                        continue;
                    }
                    count += 1;
                    let cf = pochhammer(*base, step, k).unwrap();
                    let got = cf.expand(Some(&a), Some(&b)).unwrap();
                    let expect = naive_poch(base, step, k, &a, &b);
                    assert!(
                        got.equals(&crate::arith::LRat::from_laurent(expect)),
                        "base {base:?} step {step} k {k}"
                    );
                    if count >= 200 {
                        break 'outer;
                    }
                }
            }
        }
        assert!(count >= 200);
    }

    #[test]
    fn cf_mul_commutative_associative() {
        let trip = [
            pochhammer(PochBase::AQ(1), 4, 2).unwrap(),
            pochhammer(PochBase::Q(2), 4, 3).unwrap(),
            pochhammer(PochBase::QOverB(1), 2, 2).unwrap(),
        ];
        let [x, y, z] = trip;
        let a = rat(7, 3);
        let b = rat(2, 5);
        let xy = x.mul(&y);
        let yx = y.mul(&x);
        assert!(xy
            .expand(Some(&a), Some(&b))
            .unwrap()
            .equals(&yx.expand(Some(&a), Some(&b)).unwrap()));
        let xyz1 = x.mul(&y).mul(&z);
        let xyz2 = x.mul(&y.mul(&z));
        assert!(xyz1
            .expand(Some(&a), Some(&b))
            .unwrap()
            .equals(&xyz2.expand(Some(&a), Some(&b)).unwrap()));
    }
}
