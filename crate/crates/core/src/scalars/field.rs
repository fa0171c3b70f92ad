//! Elements of ℚ or a real quadratic field ℚ(√d).
//!
//! A [`Scalar`] is stored as `a + b·√d` with `a, b` rational and `d`
//! squarefree. Rational values always carry the tag `d = 1`, so they mix
//! freely with any quadratic field; two genuinely irrational values with
//! different tags cannot be combined and the operator impls panic on that
//! (the `try_*` methods return an error instead).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    d: u64,
}

pub(crate) fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl Scalar {
    /// Builds `a + b·√d`. `d` must be squarefree; `d = 1` folds `b` into `a`.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if !is_squarefree(d) {
            return Err(Error::Parse(format!("{d} is not squarefree")));
        }
        if d == 1 {
            return Ok(Self::rational(a + b));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() {
            Scalar { a, b, d: 1 }
        } else {
            Scalar { a, b, d }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        Scalar { a, b: BigRational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, m: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(m)))
    }

    /// `√d` itself.
    pub fn sqrt_of(d: u64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field tag: 1 for rationals, otherwise the radicand.
    pub fn d_tag(&self) -> u64 {
        self.d
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    /// The rational value, if there is no surd component.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    /// Integer value, if this is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    fn join(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (1, e) | (e, 1) => Ok(e),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::FieldMismatch(d, e)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.join(other)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.join(other)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.join(other)?;
        if self.b.is_zero() {
            if other.b.is_zero() {
                return Ok(Self::rational(&self.a * &other.a));
            }
            return Ok(Self::normalized(&self.a * &other.a, &self.a * &other.b, d));
        }
        if other.b.is_zero() {
            return Ok(Self::normalized(&self.a * &other.a, &self.b * &other.a, d));
        }
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, d))
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::normalized(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Norm `a² − d·b²` down to ℚ.
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - &self.b * &self.b * dd
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        if self.b.is_zero() {
            return Ok(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$try(rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("division by zero or field mismatch")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(-self.a, -self.b, self.d)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.b.is_zero() && rhs.b.is_zero() {
            self.a += &rhs.a;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as `a`, `a/b`, or `a/b+c/e*r` where `r` stands for `√d`.
/// The radicand itself is carried by the enclosing document.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let coeff = |q: &BigRational| -> String {
            if q.is_one() {
                "r".to_string()
            } else {
                format!("{}*r", fmt_rat(q))
            }
        };
        if self.a.is_zero() {
            if (-&self.b).is_one() {
                return write!(f, "-r");
            }
            return write!(f, "{}", coeff(&self.b));
        }
        if self.b.is_negative() {
            let m = -&self.b;
            write!(f, "{}-{}", fmt_rat(&self.a), coeff(&m))
        } else {
            write!(f, "{}+{}", fmt_rat(&self.a), coeff(&self.b))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{self}")
        } else {
            write!(f, "{self} (r=√{})", self.d)
        }
    }
}

fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    BigRational::from_str(s).map_err(|_| Error::Parse(format!("bad rational '{s}'")))
}

impl Scalar {
    /// Parses the serialized form, reading `r` as `√d`.
    pub fn parse_with(s: &str, d: u64) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(head) = t.strip_suffix('r') else {
            return Ok(Scalar::rational(parse_rat(&t)?));
        };
        if d == 1 {
            return Err(Error::Parse(format!("'{s}' uses r but the field is ℚ")));
        }
        let head = head.strip_suffix('*').unwrap_or(head);
        // split rational part from the surd coefficient at the last sign
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (ra, rb) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if ra.is_empty() { BigRational::zero() } else { parse_rat(ra)? };
        let b = match rb {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rat(other)?,
        };
        Scalar::new(a, b, d)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    /// Parses without field context; only rationals are accepted.
    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse_with(s, 1)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Deserializes rationals only; quadratic values go through document
/// parsing, which knows the field.
impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse_with(&s, 1).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_squared() {
        let r = Scalar::sqrt_of(2).unwrap();
        assert_eq!(&r * &r, Scalar::from_int(2));
        assert_eq!((&r * &r).d_tag(), 1);
    }

    #[test]
    fn inverse_of_surd() {
        let x = Scalar::parse_with("1+r", 2).unwrap();
        let y = x.inv().unwrap();
        assert_eq!(y, Scalar::parse_with("-1+r", 2).unwrap());
        assert!((&x * &y).is_one());
    }

    #[test]
    fn mismatch_is_error() {
        let a = Scalar::sqrt_of(2).unwrap();
        let b = Scalar::sqrt_of(3).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch(2, 3)));
        assert!(a.try_mul(&Scalar::from_int(5)).is_ok());
    }

    #[test]
    fn round_trip_strings() {
        for s in ["0", "-3", "7/2", "r", "-r", "3*r", "1/2+3/4*r", "1/2-3/4*r", "-1/2-r", "5+r"] {
            let x = Scalar::parse_with(s, 3).unwrap();
            assert_eq!(x.to_string(), s, "{s}");
        }
    }

    #[test]
    fn nonsquarefree_rejected() {
        assert!(Scalar::new(BigRational::zero(), BigRational::one(), 8).is_err());
    }
}
