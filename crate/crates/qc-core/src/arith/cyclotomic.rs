//! Cyclotomic polynomials and q-integers, with a process-wide cache.

use super::poly::UniPoly;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

fn cache() -> &'static RwLock<BTreeMap<u64, Arc<ZPoly>>> {
    static CACHE: OnceLock<RwLock<BTreeMap<u64, Arc<ZPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BTreeMap::new()))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The n-th cyclotomic polynomial as an integer polynomial, cached.
///
/// Computed by dividing `q^n - 1` by the product of `Φ_d(q)` over the
/// proper divisors `d` of `n`.
pub(crate) fn cyclotomic_z(n: u64) -> Result<Arc<ZPoly>> {
    if n == 0 {
        return Err(Error::CyclotomicIndexZero);
    }
    if let Some(p) = cache().read().unwrap().get(&n) {
        return Ok(Arc::clone(p));
    }
    let phi = compute_cyclotomic(n)?;
    let arc = Arc::new(phi);
    cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&arc));
    Ok(arc)
}

fn compute_cyclotomic(n: u64) -> Result<ZPoly> {
    if n == 1 {
        return Ok(ZPoly::from_ints(&[-1, 1]));
    }
    // q^n - 1
    let mut num = ZPoly::monomial(BigInt::one(), n as usize);
    num.coeffs[0] = -BigInt::one();
    let mut den = ZPoly::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_z(d)?;
            den = den.mul(&phi_d);
        }
    }
    let (quo, rem) = num.divrem_monic(&den);
    assert!(rem.is_zero(), "cyclotomic division must be exact");
    Ok(quo)
}

/// The n-th cyclotomic polynomial `Φ_n(q)`, monic of degree `φ(n)`.
pub fn cyclotomic(n: u64) -> Result<UniPoly> {
    Ok(cyclotomic_z(n)?.to_unipoly())
}

/// The q-integer `[n] = (1 - q^n)/(1 - q) = 1 + q + … + q^{n-1}`.
///
/// Satisfies `[n] = ∏_{s | n, s > 1} Φ_s(q)`; `[0] = 0`.
pub fn q_integer(n: u64) -> UniPoly {
    q_integer_z(n).to_unipoly()
}

pub(crate) fn q_integer_z(n: u64) -> ZPoly {
    ZPoly {
        coeffs: vec![BigInt::one(); n as usize],
    }
}

const CACHE_HEADER: &str = "qc cyclotomic cache v1";

/// Pre-populate the cyclotomic cache from a plain-text file.
///
/// Lines are `n: c0 c1 … c_phi(n)`; entries failing a sanity check
/// (degree, monic) are ignored. Returns the number of entries loaded.
pub fn load_cyclotomic_cache(path: &Path) -> std::io::Result<usize> {
    let file = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(file).lines();
    match lines.next() {
        Some(Ok(h)) if h.trim() == CACHE_HEADER => {}
        _ => return Ok(0),
    }
    let mut loaded = 0;
    for line in lines {
        let line = line?;
        let Some((n_str, rest)) = line.split_once(':') else {
            continue;
        };
        let Ok(n) = n_str.trim().parse::<u64>() else {
            continue;
        };
        let coeffs: Option<Vec<BigInt>> = rest
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().ok())
            .collect();
        let Some(coeffs) = coeffs else { continue };
        let poly = ZPoly { coeffs };
        if n == 0
            || poly.degree() != Some(euler_phi(n) as usize)
            || !poly.coeffs.last().unwrap().is_one()
        {
            continue;
        }
        cache().write().unwrap().entry(n).or_insert(Arc::new(poly));
        loaded += 1;
    }
    Ok(loaded)
}

/// Persist the current cyclotomic cache to a plain-text file.
pub fn save_cyclotomic_cache(path: &Path) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "{CACHE_HEADER}")?;
    for (n, poly) in cache().read().unwrap().iter() {
        let coeffs: Vec<String> = poly.coeffs.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{n}: {}", coeffs.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), UniPoly::from_ints(&[1, 0, 1]));
        // oracle: divide q^15 - 1 by Φ1·Φ3·Φ5 directly
        let mut q15 = UniPoly::monomial(super::super::rat_int(1), 15);
        q15 = q15.sub(&UniPoly::one());
        let mut den = cyclotomic(1).unwrap();
        den = den.mul(&cyclotomic(3).unwrap());
        den = den.mul(&cyclotomic(5).unwrap());
        let oracle = q15.exact_div(&den).unwrap();
        assert_eq!(cyclotomic(15).unwrap(), oracle);
        assert_eq!(
            oracle,
            UniPoly::from_ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn cyclotomic_product_is_qn_minus_one() {
        for n in 1..=60u64 {
            let mut prod = UniPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
            let mut expect = UniPoly::monomial(super::super::rat_int(1), n as usize);
            expect = expect.sub(&UniPoly::one());
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn q_integer_examples_and_factorization() {
        assert_eq!(q_integer(3), UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(q_integer(1), UniPoly::one());
        assert_eq!(q_integer(0), UniPoly::zero());
        for n in 1..=60u64 {
            let mut prod = UniPoly::one();
            for s in divisors(n) {
                if s > 1 {
                    prod = prod.mul(&cyclotomic(s).unwrap());
                }
            }
            assert_eq!(q_integer(n), prod, "n = {n}");
        }
    }

    #[test]
    fn degree_is_phi() {
        for n in [1u64, 2, 6, 12, 30, 45, 60, 105] {
            assert_eq!(
                cyclotomic(n).unwrap().degree(),
                Some(euler_phi(n) as usize)
            );
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join("qc-cyclo-cache-test");
        let path = dir.join("cyclotomic.txt");
        let _ = cyclotomic(30).unwrap();
        save_cyclotomic_cache(&path).unwrap();
        let loaded = load_cyclotomic_cache(&path).unwrap();
        assert!(loaded >= 1);
        std::fs::remove_dir_all(&dir).ok();
    }
}
