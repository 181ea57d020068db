//! Builders for the truncated basic hypergeometric sums, their closed-form
//! sides, and the parametric generalizations, all in factored form.
//!
//! Summand conventions follow the q-shifted factorial
//! `(a;q)_n = (1-a)(1-aq)…(1-aq^{n-1})` and the q-integer
//! `[m] = (1-q^m)/(1-q)`; every builder returns exact factored values.

mod classical;
mod identities;

pub use classical::{classical_sum, classical_pochhammer, ClassicalKind};
pub use identities::{pfaff_sides, phi43_t_sides, watson_sides, IdentityInstance, IdentityKind, QMono};

use crate::arith::{rat, rat_int, BigRat, LRat, LaurentPoly, UniPoly};
use crate::error::{Error, Result};
use crate::qfactor::{
    pochhammer, q_int_factor, qpow_factor, CycloFactored, ParamPiece, ParamValue, PochBase,
    TriPoly,
};

/// Closed enumeration of the verified congruence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    More5,
    More6,
    Super3,
    Super5,
    Super6,
    Super11,
    Section41,
    ModPhi,
    MoreFin,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TheoremId::More5 => "more5",
            TheoremId::More6 => "more6",
            TheoremId::Super3 => "super3",
            TheoremId::Super5 => "super5",
            TheoremId::Super6 => "super6",
            TheoremId::Super11 => "super11",
            TheoremId::Section41 => "section41",
            TheoremId::ModPhi => "mod-phi",
            TheoremId::MoreFin => "more-fin",
        };
        write!(f, "{s}")
    }
}

/// `M` and `t` for the two-parameter congruence behind the `[8k+1]` family:
/// `(M, t) = ((n-1)/4, 1)` for `n ≡ 1 (mod 4)`, `((3n-1)/4, 3)` otherwise.
pub fn case_table_plus(n: u64) -> (u64, u64) {
    assert!(n % 2 == 1);
    if n % 4 == 1 {
        ((n - 1) / 4, 1)
    } else {
        ((3 * n - 1) / 4, 3)
    }
}

/// `M` and `t` for the `[8k-1]` family: `((3n+1)/4, 3)` for `n ≡ 1 (mod 4)`,
/// `((n+1)/4, 1)` otherwise.
pub fn case_table_minus(n: u64) -> (u64, u64) {
    assert!(n % 2 == 1);
    if n % 4 == 1 {
        ((3 * n + 1) / 4, 3)
    } else {
        ((n + 1) / 4, 1)
    }
}

/// k-th summand of the `[8k+1]` sum:
/// `[8k+1] (q;q⁴)_k⁶ (q²;q²)_{2k} / ((q⁴;q⁴)_k⁶ (q;q²)_{2k}) · q^{4k}`,
/// or its two-parameter form
/// `[8k+1] (aq,q/a,bq,q/b,q,q²;q⁴)_k / (aq⁴,q⁴/a,bq⁴,q⁴/b,q⁴,q³;q⁴)_k · q^{4k}`.
pub fn term_more5(k: u64, parametric: bool) -> CycloFactored {
    let mut t = q_int_factor(8 * k as i64 + 1).unwrap();
    if parametric {
        for base in [
            PochBase::AQ(1),
            PochBase::QOverA(1),
            PochBase::BQ(1),
            PochBase::QOverB(1),
            PochBase::Q(1),
            PochBase::Q(2),
        ] {
            t = t.mul(&pochhammer(base, 4, k).unwrap());
        }
        for base in [
            PochBase::AQ(4),
            PochBase::QOverA(4),
            PochBase::BQ(4),
            PochBase::QOverB(4),
            PochBase::Q(4),
            PochBase::Q(3),
        ] {
            t = t.div(&pochhammer(base, 4, k).unwrap()).unwrap();
        }
    } else {
        let num = pochhammer(PochBase::Q(1), 4, k)
            .unwrap()
            .pow(6)
            .unwrap()
            .mul(&pochhammer(PochBase::Q(2), 2, 2 * k).unwrap());
        let den = pochhammer(PochBase::Q(4), 4, k)
            .unwrap()
            .pow(6)
            .unwrap()
            .mul(&pochhammer(PochBase::Q(1), 2, 2 * k).unwrap());
        t = t.mul(&num).div(&den).unwrap();
    }
    t.mul(&CycloFactored::q_power(4 * k as i64))
}

/// The five-plus-one column rewriting of [`term_more5`]:
/// `[8k+1] (q;q⁴)_k⁵ (q²;q⁴)_k / ((q⁴;q⁴)_k⁵ (q³;q⁴)_k) · q^{4k}`.
pub fn term_more5_compact(k: u64) -> CycloFactored {
    let num = pochhammer(PochBase::Q(1), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(2), 4, k).unwrap());
    let den = pochhammer(PochBase::Q(4), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(3), 4, k).unwrap());
    q_int_factor(8 * k as i64 + 1)
        .unwrap()
        .mul(&num)
        .div(&den)
        .unwrap()
        .mul(&CycloFactored::q_power(4 * k as i64))
}

/// k-th summand of the `[8k-1]` sum:
/// `[8k-1] (q⁻¹;q⁴)_k⁶ (q²;q²)_{2k} / ((q⁴;q⁴)_k⁶ (q⁻¹;q²)_{2k}) · q^{8k}`,
/// or the two-parameter form
/// `[8k-1] (q⁻¹,aq⁻¹,q⁻¹/a,bq⁻¹,q⁻¹/b,q²;q⁴)_k / (aq⁴,q⁴/a,bq⁴,q⁴/b,q⁴,q;q⁴)_k · q^{8k}`.
pub fn term_more6(k: u64, parametric: bool) -> CycloFactored {
    let mut t = q_int_factor(8 * k as i64 - 1).unwrap();
    if parametric {
        for base in [
            PochBase::Q(-1),
            PochBase::AQ(-1),
            PochBase::QOverA(-1),
            PochBase::BQ(-1),
            PochBase::QOverB(-1),
            PochBase::Q(2),
        ] {
            t = t.mul(&pochhammer(base, 4, k).unwrap());
        }
        for base in [
            PochBase::AQ(4),
            PochBase::QOverA(4),
            PochBase::BQ(4),
            PochBase::QOverB(4),
            PochBase::Q(4),
            PochBase::Q(1),
        ] {
            t = t.div(&pochhammer(base, 4, k).unwrap()).unwrap();
        }
    } else {
        let num = pochhammer(PochBase::Q(-1), 4, k)
            .unwrap()
            .pow(6)
            .unwrap()
            .mul(&pochhammer(PochBase::Q(2), 2, 2 * k).unwrap());
        let den = pochhammer(PochBase::Q(4), 4, k)
            .unwrap()
            .pow(6)
            .unwrap()
            .mul(&pochhammer(PochBase::Q(-1), 2, 2 * k).unwrap());
        t = t.mul(&num).div(&den).unwrap();
    }
    t.mul(&CycloFactored::q_power(8 * k as i64))
}

/// Compact form of [`term_more6`]:
/// `[8k-1] (q⁻¹;q⁴)_k⁵ (q²;q⁴)_k / ((q⁴;q⁴)_k⁵ (q;q⁴)_k) · q^{8k}`.
pub fn term_more6_compact(k: u64) -> CycloFactored {
    let num = pochhammer(PochBase::Q(-1), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(2), 4, k).unwrap());
    let den = pochhammer(PochBase::Q(4), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(1), 4, k).unwrap());
    q_int_factor(8 * k as i64 - 1)
        .unwrap()
        .mul(&num)
        .div(&den)
        .unwrap()
        .mul(&CycloFactored::q_power(8 * k as i64))
}

/// k-th summand of the mod-Φₙ² companion sum:
/// `(q;q²)_k² (q²;q⁴)_k / ((q²;q²)_k² (q⁴;q⁴)_k) · q^{2k}`.
pub fn term_mod_phi(k: u64) -> CycloFactored {
    let num = pochhammer(PochBase::Q(1), 2, k)
        .unwrap()
        .pow(2)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(2), 4, k).unwrap());
    let den = pochhammer(PochBase::Q(2), 2, k)
        .unwrap()
        .pow(2)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(4), 4, k).unwrap());
    num.div(&den)
        .unwrap()
        .mul(&CycloFactored::q_power(2 * k as i64))
}

/// k-th summand `c_q(k)` of the `[n]`-divisible sums (`r = ±1`, step 4):
/// `[8k+r] (q^r;q⁴)_k⁵ (q²;q⁴)_k / ((q⁴;q⁴)_k⁵ (q^{2+r};q⁴)_k) · q^{(6-2r)k}`.
pub fn term_super56(k: u64, r: i64) -> CycloFactored {
    assert!(r == 1 || r == -1);
    let num = pochhammer(PochBase::Q(r), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(2), 4, k).unwrap());
    let den = pochhammer(PochBase::Q(4), 4, k)
        .unwrap()
        .pow(5)
        .unwrap()
        .mul(&pochhammer(PochBase::Q(2 + r), 4, k).unwrap());
    q_int_factor(8 * k as i64 + r)
        .unwrap()
        .mul(&num)
        .div(&den)
        .unwrap()
        .mul(&CycloFactored::q_power((6 - 2 * r) * k as i64))
}

/// Truncation bound for the `[n]`-divisible sums: `(n-r)/4` when
/// `n ≡ r (mod 4)`, `(3n-r)/4` when `n ≡ -r (mod 4)`.
pub fn super56_m(n: u64, r: i64) -> u64 {
    assert!(n % 2 == 1 && (r == 1 || r == -1));
    let n = n as i64;
    let m = if (n - r) % 4 == 0 {
        (n - r) / 4
    } else {
        (3 * n - r) / 4
    };
    m as u64
}

/// k-th summand of the ten-column parametric sum congruent to zero mod
/// `Φ_n(q)`. Returns the zero value when a numerator factor vanishes
/// (the `r = 0` case) and an error when a denominator factor vanishes.
pub fn term_super3(k: u64, d: u64, r: i64) -> Result<CycloFactored> {
    let di = d as i64;
    let num_bases = [
        PochBase::Q(r),
        PochBase::AQ(r),
        PochBase::QOverA(r),
        PochBase::BQ(r),
        PochBase::QOverB(r),
        PochBase::Q(2),
    ];
    let den_bases = [
        PochBase::AQ(di),
        PochBase::QOverA(di),
        PochBase::QOverB(di),
        PochBase::Q(di),
        PochBase::BQ(di),
        PochBase::Q(di + r - 2),
    ];
    for base in &den_bases {
        if crate::qfactor::pochhammer_vanishes(base, d, k) {
            return Err(Error::VanishingFactor(format!(
                "denominator column {base:?} of the d={d}, r={r} summand"
            )));
        }
    }
    let bracket = q_int_factor(2 * di * k as i64 + r).unwrap();
    if bracket.is_zero() {
        return Ok(CycloFactored::zero());
    }
    for base in &num_bases {
        if crate::qfactor::pochhammer_vanishes(base, d, k) {
            return Ok(CycloFactored::zero());
        }
    }
    let mut t = bracket;
    for base in num_bases {
        t = t.mul(&pochhammer(base, d, k)?);
    }
    for base in den_bases {
        t = t.div(&pochhammer(base, d, k)?).unwrap();
    }
    Ok(t.mul(&CycloFactored::q_power((2 * di - 2 * r - 2) * k as i64)))
}

/// Closed-form side of the `[8k+1]` congruence:
/// `[n] (q²;q⁴)²_{(n-1)/4} / (q⁴;q⁴)²_{(n-1)/4}` for `n ≡ 1 (mod 4)`,
/// zero for `n ≡ 3 (mod 4)`.
pub fn rhs_more5(n: u64) -> Result<CycloFactored> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument("n must be odd".into()));
    }
    if n % 4 == 3 {
        return Ok(CycloFactored::zero());
    }
    let m = (n - 1) / 4;
    let num = pochhammer(PochBase::Q(2), 4, m)?.pow(2)?;
    let den = pochhammer(PochBase::Q(4), 4, m)?.pow(2)?;
    Ok(q_int_factor(n as i64)?.mul(&num).div(&den)?)
}

/// The prefactor of the `[8k-1]` sum's closed form for `n ≡ 3 (mod 4)`:
///
/// `A_n = q^{n+1}(q^n-2)[n] ·
///   ((1-q^{1-n})³ - q^{-n-2}(1+q)(1-q²)²(1-q^{2-n})) /
///   ((1-q^{3-n})(1-q^{1-n})²)`.
///
/// The numerator difference is a general Laurent polynomial, so the result
/// is carried as a Laurent rational rather than in factored form.
pub fn a_n(n: u64) -> Result<LRat> {
    let (cf, extra) = a_n_parts(n)?;
    let mut lr = cf.expand(None, None)?;
    for p in &extra {
        lr = lr.mul(&LRat::from_laurent(p.clone()));
    }
    Ok(lr)
}

/// Factored-plus-polynomial decomposition of `A_n`, for the sum engine:
/// `A_n = cf · ∏ extras` with `cf` purely cyclotomic.
pub(crate) fn a_n_parts(n: u64) -> Result<(CycloFactored, Vec<LaurentPoly>)> {
    if n % 2 == 0 || n <= 3 {
        return Err(Error::InvalidArgument(
            "A_n requires odd n > 3 (the n = 3 denominator factor vanishes)".into(),
        ));
    }
    let ni = n as i64;
    // q^{n+1} [n] / ((1-q^{3-n})(1-q^{1-n})^2)
    let mut cf = CycloFactored::q_power(ni + 1).mul(&q_int_factor(ni)?);
    cf.mul_qpow_factor(3 - ni, -1)?;
    cf.mul_qpow_factor(1 - ni, -2)?;

    // (q^n - 2)
    let qn_minus_2 = LaurentPoly::from_unipoly(UniPoly::monomial(rat_int(1), n as usize))
        .sub(&LaurentPoly::from_unipoly(UniPoly::constant(rat_int(2))));

    // (1-q^{1-n})^3 - q^{-n-2}(1+q)(1-q^2)^2(1-q^{2-n})
    let one = LaurentPoly::one();
    let f = |e: i64| one.sub(&LaurentPoly::new(UniPoly::one(), e));
    let t1 = f(1 - ni).mul(&f(1 - ni)).mul(&f(1 - ni));
    let t2 = LaurentPoly::new(UniPoly::one(), -ni - 2)
        .mul(&one.add(&LaurentPoly::new(UniPoly::one(), 1)))
        .mul(&f(2).mul(&f(2)))
        .mul(&f(2 - ni));
    let bracket = t1.sub(&t2);

    Ok((cf, vec![qn_minus_2, bracket]))
}

/// Closed-form side of the `[8k-1]` congruence: zero for `n ≡ 1 (mod 4)`,
/// `A_n (q²;q⁴)²_{(n+1)/4} / (q⁴;q⁴)²_{(n+1)/4}` for `n ≡ 3 (mod 4)`.
pub fn rhs_more6(n: u64) -> Result<LRat> {
    if n % 2 == 0 || n <= 3 {
        return Err(Error::InvalidArgument("rhs requires odd n > 3".into()));
    }
    if n % 4 == 1 {
        return Ok(LRat::zero());
    }
    let m = (n + 1) / 4;
    let ratio = pochhammer(PochBase::Q(2), 4, m)?
        .pow(2)?
        .div(&pochhammer(PochBase::Q(4), 4, m)?.pow(2)?)?;
    Ok(a_n(n)?.mul(&ratio.expand(None, None)?))
}

/// Same value as [`rhs_more6`] but decomposed for the sum engine.
pub(crate) fn rhs_more6_parts(n: u64) -> Result<(CycloFactored, Vec<LaurentPoly>)> {
    let (mut cf, extra) = a_n_parts(n)?;
    let m = (n + 1) / 4;
    cf = cf
        .mul(&pochhammer(PochBase::Q(2), 4, m)?.pow(2)?)
        .div(&pochhammer(PochBase::Q(4), 4, m)?.pow(2)?)?;
    Ok((cf, extra))
}

/// Closed-form side of the mod-Φₙ² companion congruence:
/// `q^{(n-1)/2} (q²;q⁴)²_{(n-1)/4} / (q⁴;q⁴)²_{(n-1)/4}` for `n ≡ 1 (mod 4)`,
/// zero otherwise.
pub fn rhs_mod_phi(n: u64) -> Result<CycloFactored> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument("n must be odd".into()));
    }
    if n % 4 == 3 {
        return Ok(CycloFactored::zero());
    }
    let m = (n - 1) / 4;
    let num = pochhammer(PochBase::Q(2), 4, m)?.pow(2)?;
    let den = pochhammer(PochBase::Q(4), 4, m)?.pow(2)?;
    Ok(CycloFactored::q_power((n as i64 - 1) / 2)
        .mul(&num)
        .div(&den)?)
}

/// Which of the two symbols a parametric factor binds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    A,
    B,
}

fn poch_sym(sym: Symbol, kind_q_over: bool, r: i64, step: u64, k: u64) -> Result<CycloFactored> {
    let base = match (sym, kind_q_over) {
        (Symbol::A, false) => PochBase::AQ(r),
        (Symbol::A, true) => PochBase::QOverA(r),
        (Symbol::B, false) => PochBase::BQ(r),
        (Symbol::B, true) => PochBase::QOverB(r),
    };
    pochhammer(base, step, k)
}

/// `(xq², q²/x; q⁴)_len / (xq⁴, q⁴/x; q⁴)_len` for symbol `x`.
fn poch_ratio(sym: Symbol, len: u64) -> Result<CycloFactored> {
    let num = poch_sym(sym, false, 2, 4, len)?.mul(&poch_sym(sym, true, 2, 4, len)?);
    let den = poch_sym(sym, false, 4, 4, len)?.mul(&poch_sym(sym, true, 4, 4, len)?);
    num.div(&den)
}

/// `(x - q^{tn})` as a factored value: `x·(1 - q^{tn}/x)`.
fn sym_minus_qpow(sym: Symbol, tn: i64) -> CycloFactored {
    let mut cf = match sym {
        Symbol::A => CycloFactored::atom_factor(-1, 0, tn).unwrap(),
        Symbol::B => CycloFactored::atom_factor(0, -1, tn).unwrap(),
    };
    cf = cf.mul(&match sym {
        Symbol::A => CycloFactored::monomial_a(1),
        Symbol::B => CycloFactored::monomial_b(1),
    });
    cf
}

/// `(1 - x·q^{tn})` as an atom for symbol `x`.
fn one_minus_sym_qpow(sym: Symbol, tn: i64) -> CycloFactored {
    match sym {
        Symbol::A => CycloFactored::atom_factor(1, 0, tn).unwrap(),
        Symbol::B => CycloFactored::atom_factor(0, 1, tn).unwrap(),
    }
}

/// The Chinese-remainder weight numerator `(-1 - x² + x·q^{tn})` for the
/// opposite symbol `x`.
fn weight_tri(sym: Symbol, tn: i64) -> TriPoly {
    let (ae, be) = match sym {
        Symbol::A => (1, 0),
        Symbol::B => (0, 1),
    };
    TriPoly::term(rat_int(-1), 0, 0, 0)
        .add(&TriPoly::term(rat_int(-1), 0, 2 * ae, 2 * be))
        .add(&TriPoly::term(rat_int(1), tn, ae, be))
}

/// The two CRT-combined closed-form pieces of the two-parameter `[8k+1]`
/// congruence: piece carrying the b-Pochhammer ratio (weight in `a`), and
/// its `a ↔ b` mirror.
pub fn rhs_super11_pieces(tn: i64) -> Result<Vec<ParamPiece>> {
    if tn < 1 || tn % 4 != 1 {
        return Err(Error::InvalidArgument(
            "tn must be ≡ 1 (mod 4) for the (tn-1)/4 Pochhammer length".into(),
        ));
    }
    let len = (tn as u64 - 1) / 4;
    let bracket = q_int_factor(tn)?;
    let weight_den = vec![TriPoly::a_minus_b(), TriPoly::one_minus_ab()];

    // [tn] · (1-bq^{tn})(b-q^{tn})(-1-a²+aq^{tn})/((a-b)(1-ab)) · ratio_b
    let piece_b = ParamPiece {
        cf: bracket
            .mul(&one_minus_sym_qpow(Symbol::B, tn))
            .mul(&sym_minus_qpow(Symbol::B, tn))
            .mul(&poch_ratio(Symbol::B, len)?),
        tri_num: vec![weight_tri(Symbol::A, tn)],
        tri_den: weight_den.clone(),
    };
    // mirror: (b-a)(1-ab) = -(a-b)(1-ab), sign folded into the scalar
    let mut cf_a = bracket
        .mul(&one_minus_sym_qpow(Symbol::A, tn))
        .mul(&sym_minus_qpow(Symbol::A, tn))
        .mul(&poch_ratio(Symbol::A, len)?);
    cf_a.mul_scalar(&rat(-1, 1));
    let piece_a = ParamPiece {
        cf: cf_a,
        tri_num: vec![weight_tri(Symbol::B, tn)],
        tri_den: weight_den,
    };
    Ok(vec![piece_b, piece_a])
}

/// Evaluate the CRT-combined closed form at parameter values.
pub fn rhs_super11(tn: i64, a: &ParamValue, b: &ParamValue) -> Result<LRat> {
    let pieces = rhs_super11_pieces(tn)?;
    let mut acc = LRat::zero();
    for p in &pieces {
        acc = acc.add(&p.eval(Some(a), Some(b))?.expand()?);
    }
    Ok(acc)
}

/// The two summands of the correction factor `T(tn, x, q)`; `x` is the
/// symbol the second summand binds. Rejects `tn = 1` (contract) and
/// `tn = 3`, where the denominator `(q⁻² - q^{1-tn})` is identically zero.
pub fn t_factor_pieces(tn: i64, sym: Symbol) -> Result<Vec<CycloFactored>> {
    if tn == 1 || tn == 3 || tn < 1 || tn % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "T(tn, ·, q) requires odd tn >= 5 (tn = {tn}); (q^-2 - q^(1-tn)) vanishes at tn = 3"
        )));
    }
    // T1 = (1-q)(q^{-2}-q^{-1-tn}) / ((1-q^{-2-tn})(q^{-2}-q^{1-tn}))
    //    with (q^{-2}-q^{-1-tn}) = q^{-2}(1-q^{1-tn}), (q^{-2}-q^{1-tn}) = q^{-2}(1-q^{3-tn})
    let mut t1 = qpow_factor(1)?;
    t1.mul_qpow_factor(1 - tn, 1)?;
    t1.mul_qpow_factor(-2 - tn, -1)?;
    t1.mul_qpow_factor(3 - tn, -1)?;

    // T2 = (q^{-tn}-q^{-2-tn})(q^{-2}-q^{-tn})(xq^{-1}-q)(q^{-1}/x-q)
    //    / ((1-q^{-2-tn})(xq^{-1}-q^{-tn})(q^{-1}/x-q^{-tn})(q^{-2}-q^{1-tn}))
    let mut t2 = CycloFactored::one();
    // (q^{-tn}-q^{-2-tn}) = -q^{-2-tn}(1-q^2)
    t2.mul_scalar(&rat(-1, 1));
    t2 = t2.mul(&CycloFactored::q_power(-2 - tn));
    t2.mul_qpow_factor(2, 1)?;
    // (q^{-2}-q^{-tn}) = -q^{-tn}(1-q^{tn-2})
    t2.mul_scalar(&rat(-1, 1));
    t2 = t2.mul(&CycloFactored::q_power(-tn));
    t2.mul_qpow_factor(tn - 2, 1)?;
    // (xq^{-1}-q) = x·q^{-1}(1-q^2/x)
    t2 = t2.mul(&sym_mono(sym, 1)).mul(&CycloFactored::q_power(-1));
    t2 = t2.mul(&sym_atom(sym, true, 2));
    // (q^{-1}/x-q) = q^{-1}x^{-1}(1-x·q^2)
    t2 = t2.mul(&sym_mono(sym, -1)).mul(&CycloFactored::q_power(-1));
    t2 = t2.mul(&sym_atom(sym, false, 2));
    // 1/(1-q^{-2-tn})
    t2.mul_qpow_factor(-2 - tn, -1)?;
    // 1/(xq^{-1}-q^{-tn}) = 1/(x·q^{-1}(1-q^{1-tn}/x))
    t2 = t2.mul(&sym_mono(sym, -1)).mul(&CycloFactored::q_power(1));
    t2 = t2.div(&sym_atom(sym, true, 1 - tn))?;
    // 1/(q^{-1}/x-q^{-tn}) = 1/(q^{-1}x^{-1}(1-x·q^{1-tn}))
    t2 = t2.mul(&sym_mono(sym, 1)).mul(&CycloFactored::q_power(1));
    t2 = t2.div(&sym_atom(sym, false, 1 - tn))?;
    // 1/(q^{-2}-q^{1-tn}) = 1/(q^{-2}(1-q^{3-tn}))
    t2 = t2.mul(&CycloFactored::q_power(2));
    t2.mul_qpow_factor(3 - tn, -1)?;

    Ok(vec![t1, t2])
}

fn sym_mono(sym: Symbol, e: i64) -> CycloFactored {
    match sym {
        Symbol::A => CycloFactored::monomial_a(e),
        Symbol::B => CycloFactored::monomial_b(e),
    }
}

fn sym_atom(sym: Symbol, inverse: bool, q_exp: i64) -> CycloFactored {
    let (ae, be): (i8, i8) = match (sym, inverse) {
        (Symbol::A, false) => (1, 0),
        (Symbol::A, true) => (-1, 0),
        (Symbol::B, false) => (0, 1),
        (Symbol::B, true) => (0, -1),
    };
    CycloFactored::atom_factor(ae, be, q_exp).unwrap()
}

/// `T(tn, b, q)` at a rational `b`, as the exact two-summand expression.
pub fn t_factor(tn: i64, b_val: &BigRat) -> Result<LRat> {
    let pieces = t_factor_pieces(tn, Symbol::B)?;
    let b = ParamValue::Rat(b_val.clone());
    let mut acc = LRat::zero();
    for p in &pieces {
        acc = acc.add(&p.substitute(None, Some(&b))?.expand()?);
    }
    Ok(acc)
}

/// `T(tn, 1, q)`: the `x = 1` specialization, still a pure q-quantity.
pub(crate) fn t_factor_at_one(tn: i64) -> Result<Vec<CycloFactored>> {
    let pieces = t_factor_pieces(tn, Symbol::B)?;
    pieces
        .iter()
        .map(|p| {
            // substituting b = 1 keeps the value cyclotomically factored
            let bp = p.substitute(None, Some(&ParamValue::Rat(rat_int(1))))?;
            bp.to_cyclo_factored()
        })
        .collect()
}

/// Symbolic `T(tn, b, q)` as a quotient of sparse polynomials in `(q, b)`,
/// built directly from the displayed two-summand expression. Independent
/// of the factored-piece construction.
pub fn t_factor_symbolic(tn: i64) -> Result<(TriPoly, TriPoly)> {
    if tn == 1 || tn == 3 || tn < 1 || tn % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "T(tn, ·, q) requires odd tn >= 5 (tn = {tn})"
        )));
    }
    let qp = |e: i64| TriPoly::term(rat_int(1), e, 0, 0);
    let bq = |e: i64| TriPoly::term(rat_int(1), e, 0, 1);
    let q_over_b = |e: i64| TriPoly::term(rat_int(1), e, 0, -1);
    let one = TriPoly::one();

    let n1 = one.sub(&qp(1)).mul(&qp(-2).sub(&qp(-1 - tn)));
    let d1 = one.sub(&qp(-2 - tn)).mul(&qp(-2).sub(&qp(1 - tn)));
    let n2 = qp(-tn)
        .sub(&qp(-2 - tn))
        .mul(&qp(-2).sub(&qp(-tn)))
        .mul(&bq(-1).sub(&qp(1)))
        .mul(&q_over_b(-1).sub(&qp(1)));
    let d2 = one
        .sub(&qp(-2 - tn))
        .mul(&bq(-1).sub(&qp(-tn)))
        .mul(&q_over_b(-1).sub(&qp(-tn)))
        .mul(&qp(-2).sub(&qp(1 - tn)));
    // T = n1/d1 + n2/d2 = (n1·d2 + n2·d1)/(d1·d2)
    Ok((n1.mul(&d2).add(&n2.mul(&d1)), d1.mul(&d2)))
}

/// The four closed-form pieces of the `[8k-1]` two-parameter congruence:
/// `q^{-1-tn}[tn][tn+2] · (weight_x · ratio_x · T(tn, x, q))` summed over
/// the two symbols, with `T` split into its two summands.
pub fn rhs_section41_pieces(tn: i64) -> Result<Vec<ParamPiece>> {
    if tn < 5 || tn % 4 != 3 {
        return Err(Error::InvalidArgument(
            "tn must be ≡ 3 (mod 4) and >= 7 for the (tn+1)/4 Pochhammer length".into(),
        ));
    }
    let len = (tn as u64 + 1) / 4;
    let prefix = CycloFactored::q_power(-1 - tn)
        .mul(&q_int_factor(tn)?)
        .mul(&q_int_factor(tn + 2)?);
    let weight_den = vec![TriPoly::a_minus_b(), TriPoly::one_minus_ab()];
    let mut pieces = Vec::new();
    for (sym, other) in [(Symbol::B, Symbol::A), (Symbol::A, Symbol::B)] {
        let mut base = prefix
            .mul(&one_minus_sym_qpow(sym, tn))
            .mul(&sym_minus_qpow(sym, tn))
            .mul(&poch_ratio(sym, len)?);
        if sym == Symbol::A {
            base.mul_scalar(&rat(-1, 1)); // (b-a) = -(a-b)
        }
        for t_piece in t_factor_pieces(tn, sym)? {
            pieces.push(ParamPiece {
                cf: base.mul(&t_piece),
                tri_num: vec![weight_tri(other, tn)],
                tri_den: weight_den.clone(),
            });
        }
    }
    Ok(pieces)
}

/// Single-factor closed form of the `[8k-1]` parametric congruence
/// (valid modulo `(1-aq^{tn})(a-q^{tn})`): the `b`-side pieces without
/// CRT weights.
pub fn rhs_section41_single_pieces(tn: i64) -> Result<Vec<ParamPiece>> {
    if tn < 5 || tn % 4 != 3 {
        return Err(Error::InvalidArgument(
            "tn must be ≡ 3 (mod 4) and >= 7".into(),
        ));
    }
    let len = (tn as u64 + 1) / 4;
    let base = CycloFactored::q_power(-1 - tn)
        .mul(&q_int_factor(tn)?)
        .mul(&q_int_factor(tn + 2)?)
        .mul(&poch_ratio(Symbol::B, len)?);
    Ok(t_factor_pieces(tn, Symbol::B)?
        .into_iter()
        .map(|t| ParamPiece {
            cf: base.mul(&t),
            tri_num: vec![],
            tri_den: vec![],
        })
        .collect())
}

/// The `a → 1` closed form `μ(b, tn)` of the `[8k+1]` congruence, as two
/// engine pieces over the common `(1-b)²` denominator.
pub fn mu_pieces(tn: i64) -> Result<Vec<ParamPiece>> {
    if tn < 1 || tn % 4 != 1 {
        return Err(Error::InvalidArgument("tn must be ≡ 1 (mod 4)".into()));
    }
    let len = (tn as u64 - 1) / 4;
    let bracket = q_int_factor(tn)?;
    let one_minus_b_sq = sym_atom(Symbol::B, false, 0).pow(2)?;

    // (q^{tn} - 2) carried as a sparse polynomial factor
    let qtn_minus_2 = TriPoly::term(rat_int(1), tn, 0, 0).sub(&TriPoly::term(rat_int(2), 0, 0, 0));
    let piece1 = ParamPiece {
        cf: bracket
            .mul(&one_minus_sym_qpow(Symbol::B, tn))
            .mul(&sym_minus_qpow(Symbol::B, tn))
            .mul(&poch_ratio(Symbol::B, len)?)
            .div(&one_minus_b_sq)?,
        tri_num: vec![qtn_minus_2],
        tri_den: vec![],
    };
    // -(1-q^{tn})² (-1-b²+bq^{tn})/(1-b)² · (q²;q⁴)²/(q⁴;q⁴)²
    let mut cf2 = bracket.mul(&qpow_factor(tn)?.pow(2)?);
    cf2.mul_scalar(&rat(-1, 1));
    let pure_ratio = pochhammer(PochBase::Q(2), 4, len)?
        .pow(2)?
        .div(&pochhammer(PochBase::Q(4), 4, len)?.pow(2)?)?;
    let piece2 = ParamPiece {
        cf: cf2.mul(&pure_ratio).div(&one_minus_b_sq)?,
        tri_num: vec![weight_tri(Symbol::B, tn)],
        tri_den: vec![],
    };
    Ok(vec![piece1, piece2])
}

/// `μ(b, tn)` at a rational `b ≠ 1`.
pub fn mu(tn: i64, b_val: &BigRat) -> Result<LRat> {
    if b_val == &rat_int(1) {
        return Err(Error::InadmissibleParameter(
            "b = 1 makes the (1-b)² denominator vanish".into(),
        ));
    }
    let b = ParamValue::Rat(b_val.clone());
    let mut acc = LRat::zero();
    for p in &mu_pieces(tn)? {
        acc = acc.add(&p.eval(None, Some(&b))?.expand()?);
    }
    Ok(acc)
}

/// The `a → 1` closed form `ν(tn, b, q)` of the `[8k-1]` congruence:
/// like `μ` but with the `T` correction factors, `(tn+1)/4` lengths, and
/// no leading `[tn]`.
pub fn nu_pieces(tn: i64) -> Result<Vec<ParamPiece>> {
    if tn < 5 || tn % 4 != 3 {
        return Err(Error::InvalidArgument(
            "tn must be ≡ 3 (mod 4) and >= 7".into(),
        ));
    }
    let len = (tn as u64 + 1) / 4;
    let one_minus_b_sq = sym_atom(Symbol::B, false, 0).pow(2)?;
    let qtn_minus_2 = TriPoly::term(rat_int(1), tn, 0, 0).sub(&TriPoly::term(rat_int(2), 0, 0, 0));

    let base1 = one_minus_sym_qpow(Symbol::B, tn)
        .mul(&sym_minus_qpow(Symbol::B, tn))
        .mul(&poch_ratio(Symbol::B, len)?)
        .div(&one_minus_b_sq)?;
    let mut pieces = Vec::new();
    for t_piece in t_factor_pieces(tn, Symbol::B)? {
        pieces.push(ParamPiece {
            cf: base1.mul(&t_piece),
            tri_num: vec![qtn_minus_2.clone()],
            tri_den: vec![],
        });
    }
    let mut cf2 = qpow_factor(tn)?.pow(2)?;
    cf2.mul_scalar(&rat(-1, 1));
    let pure_ratio = pochhammer(PochBase::Q(2), 4, len)?
        .pow(2)?
        .div(&pochhammer(PochBase::Q(4), 4, len)?.pow(2)?)?;
    let base2 = cf2.mul(&pure_ratio).div(&one_minus_b_sq)?;
    for t_one in t_factor_at_one(tn)? {
        pieces.push(ParamPiece {
            cf: base2.mul(&t_one),
            tri_num: vec![weight_tri(Symbol::B, tn)],
            tri_den: vec![],
        });
    }
    Ok(pieces)
}

/// `ν(tn, b, q)` at a rational `b ≠ 1`.
pub fn nu(tn: i64, b_val: &BigRat) -> Result<LRat> {
    if b_val == &rat_int(1) {
        return Err(Error::InadmissibleParameter(
            "b = 1 makes the (1-b)² denominator vanish".into(),
        ));
    }
    let b = ParamValue::Rat(b_val.clone());
    let mut acc = LRat::zero();
    for p in &nu_pieces(tn)? {
        acc = acc.add(&p.eval(None, Some(&b))?.expand()?);
    }
    Ok(acc)
}

/// LHS summand of the `a → 1` specialization behind `μ`:
/// `[8k+1](q,q,bq,q/b,q,q²;q⁴)_k / (q⁴,q⁴,bq⁴,q⁴/b,q⁴,q³;q⁴)_k · q^{4k}`.
pub fn term_more5_b_only(k: u64) -> CycloFactored {
    let num = pochhammer(PochBase::Q(1), 4, k)
        .unwrap()
        .pow(3)
        .unwrap()
        .mul(&pochhammer(PochBase::BQ(1), 4, k).unwrap())
        .mul(&pochhammer(PochBase::QOverB(1), 4, k).unwrap())
        .mul(&pochhammer(PochBase::Q(2), 4, k).unwrap());
    let den = pochhammer(PochBase::Q(4), 4, k)
        .unwrap()
        .pow(3)
        .unwrap()
        .mul(&pochhammer(PochBase::BQ(4), 4, k).unwrap())
        .mul(&pochhammer(PochBase::QOverB(4), 4, k).unwrap())
        .mul(&pochhammer(PochBase::Q(3), 4, k).unwrap());
    q_int_factor(8 * k as i64 + 1)
        .unwrap()
        .mul(&num)
        .div(&den)
        .unwrap()
        .mul(&CycloFactored::q_power(4 * k as i64))
}

/// Pieces of the bracketed tail in the strengthened mod-Φₙ³ closed form:
/// `[tn]·R²·[1 + (1-q^{tn})²(q^{tn}-2)(Σ_{j=1}^{L} q^{4j}/(1-q^{4j})²
///   - Σ_{j=0}^{L-1} q^{4j+2}/(1-q^{4j+2})²)]` with `L = (tn-1)/4`.
pub fn rhs_added_pieces(tn: i64) -> Result<Vec<(CycloFactored, Vec<LaurentPoly>)>> {
    if tn < 1 || tn % 4 != 1 {
        return Err(Error::InvalidArgument("tn must be ≡ 1 (mod 4)".into()));
    }
    let len = (tn as u64 - 1) / 4;
    let r_sq = pochhammer(PochBase::Q(2), 4, len)?
        .pow(2)?
        .div(&pochhammer(PochBase::Q(4), 4, len)?.pow(2)?)?;
    let head = q_int_factor(tn)?.mul(&r_sq);
    let mut pieces = vec![(head.clone(), Vec::new())];
    let qtn_minus_2 = LaurentPoly::from_unipoly(UniPoly::monomial(rat_int(1), tn as usize))
        .sub(&LaurentPoly::from_unipoly(UniPoly::constant(rat_int(2))));
    let tail_base = head.mul(&qpow_factor(tn)?.pow(2)?);
    for j in 1..=len as i64 {
        let mut cf = tail_base.mul(&CycloFactored::q_power(4 * j));
        cf.mul_qpow_factor(4 * j, -2)?;
        pieces.push((cf, vec![qtn_minus_2.clone()]));
    }
    for j in 0..len as i64 {
        let mut cf = tail_base.mul(&CycloFactored::q_power(4 * j + 2));
        cf.mul_qpow_factor(4 * j + 2, -2)?;
        cf.mul_scalar(&rat(-1, 1));
        pieces.push((cf, vec![qtn_minus_2.clone()]));
    }
    Ok(pieces)
}

/// Both sides of the k-th instance of the Φₙ-congruence relating a
/// Pochhammer quotient at index `m-k` to the one at index `k`:
/// LHS `(aq^r;q^d)_{m-k}/(q^d/a;q^d)_{m-k}`, RHS
/// `(-a)^{m-2k}(aq^r;q^d)_k/(q^d/a;q^d)_k · q^{m(dm-d+2r)/2+(d-r)k}`.
pub fn lemma21_sides(d: u64, m: u64, r: i64, k: u64) -> Result<(ParamPiece, ParamPiece)> {
    if k > m {
        return Err(Error::InvalidArgument("k must satisfy 0 <= k <= m".into()));
    }
    let lhs = pochhammer(PochBase::AQ(r), d, m - k)?
        .div(&pochhammer(PochBase::QOverA(d as i64), d, m - k)?)?;
    let mi = m as i64;
    let ki = k as i64;
    let di = d as i64;
    let e = mi * (di * mi - di + 2 * r) / 2 + (di - r) * ki;
    let mut rhs = pochhammer(PochBase::AQ(r), d, k)?
        .div(&pochhammer(PochBase::QOverA(di), d, k)?)?
        .mul(&CycloFactored::q_power(e))
        .mul(&CycloFactored::monomial_a(mi - 2 * ki));
    if (mi - 2 * ki) % 2 != 0 {
        rhs.mul_scalar(&rat(-1, 1));
    }
    let wrap = |cf: CycloFactored| ParamPiece {
        cf,
        tri_num: vec![],
        tri_den: vec![],
    };
    Ok((wrap(lhs), wrap(rhs)))
}

#[cfg(test)]
mod tests;
