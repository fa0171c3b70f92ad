//! Integer helpers: primality, totients, cyclotomic polynomials and the
//! uniform root-of-unity exponent.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Poly, Scalar};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub fn totient(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut k = 2u64;
    while k * k <= m {
        if m % k == 0 {
            while m % k == 0 {
                m /= k;
            }
            out -= out / k;
        }
        k += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// `lcm{ n ≥ 1 : φ(n) ≤ g }`. Every such `n` satisfies `n ≤ 2g²`.
///
/// Panics if the result does not fit in `u128` (only for `g` in the hundreds).
pub fn cyclotomic_bound(g: usize) -> u128 {
    let g = g.max(1) as u64;
    let limit = 2 * g * g;
    let mut acc: u128 = 1;
    for n in 1..=limit {
        if totient(n) <= g {
            acc = acc.lcm(&(n as u128));
            assert!(acc < u128::MAX / 4, "cyclotomic bound overflows for g = {g}");
        }
    }
    acc
}

/// `p^{f/2}`, living in ℚ(√p) when `f` is odd.
pub fn sqrt_power(p: u64, f: u32) -> Result<Scalar> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let half = BigRational::from_integer(BigInt::from(p).pow(f / 2));
    if f % 2 == 0 {
        Ok(Scalar::rational(half))
    } else {
        Scalar::new(BigRational::zero(), half, p)
    }
}

/// `p^e` as a rational scalar, `e` may be negative.
pub fn prime_power(p: u64, e: i64) -> Scalar {
    let base = BigRational::from_integer(BigInt::from(p).pow(e.unsigned_abs() as u32));
    if e < 0 {
        Scalar::rational(base.recip())
    } else {
        Scalar::rational(base)
    }
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut k = 2u64;
    while k * k <= m {
        if m % k == 0 {
            m /= k;
            if m % k == 0 {
                return 0;
            }
            sign = -sign;
        }
        k += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// The `n`-th cyclotomic polynomial, via `Φ_n = ∏_{e|n} (X^e − 1)^{μ(n/e)}`.
pub fn cyclotomic_poly(n: u64) -> Poly {
    assert!(n >= 1);
    // integer coefficients, lowest first
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    let divisors: Vec<u64> = (1..=n).filter(|e| n % e == 0).collect();
    for &e in &divisors {
        if mobius(n / e) == 1 {
            // multiply by (X^e − 1)
            let e = e as usize;
            let mut out = vec![BigInt::zero(); c.len() + e];
            for (i, ci) in c.iter().enumerate() {
                out[i + e] += ci;
                out[i] -= ci;
            }
            c = out;
        }
    }
    for &e in &divisors {
        if mobius(n / e) == -1 {
            // exact division by (X^e − 1): c = q·(X^e − 1), so q[k] = q[k−e] − c[k]
            let e = e as usize;
            let qlen = c.len() - e;
            let mut q = vec![BigInt::zero(); qlen];
            for k in 0..qlen {
                let prev = if k >= e { q[k - e].clone() } else { BigInt::zero() };
                q[k] = prev - &c[k];
            }
            c = q;
        }
    }
    Poly::new(
        c.into_iter()
            .map(|x| Scalar::rational(BigRational::from_integer(x)))
            .collect(),
    )
}

/// Degree of the coefficient field of `p` over ℚ (1 or 2).
pub fn field_degree(d_tag: u64) -> usize {
    if d_tag == 1 {
        1
    } else {
        2
    }
}

/// Orders `n | n0` whose primitive roots could be roots of a polynomial of
/// degree `deg` over a field of degree `field_deg`: an irreducible factor of
/// `Φ_n` over such a field has degree at least `φ(n)/field_deg`.
pub fn candidate_orders(n0: u128, deg: usize, field_deg: usize) -> Vec<u64> {
    let bound = (deg * field_deg) as u64;
    let limit = 2 * bound * bound;
    (1..=limit.max(2))
        .filter(|&n| n0 % (n as u128) == 0 && totient(n) <= bound)
        .collect()
}

/// Monic `gcd(P, X^{n0} − 1)`.
///
/// Computed as `∏_{n|n0} gcd(P, Φ_n)`; the cyclotomic factors are pairwise
/// coprime, and only orders admissible for `deg P` can contribute.
pub fn gcd_with_unity(p: &Poly, n0: u128) -> Result<Poly> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut acc = Poly::one();
    if deg == 0 {
        return Ok(acc);
    }
    for n in candidate_orders(n0, deg, field_degree(p.d_tag())) {
        let g = p.gcd(&cyclotomic_poly(n))?;
        if g.degree() > Some(0) {
            acc = acc.mul(&g);
        }
    }
    Ok(acc)
}
