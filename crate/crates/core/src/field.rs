//! Exact coefficient arithmetic over the two supported fields:
//! arbitrary-precision rationals and prime fields F_p for an odd prime p < 2^31.
//!
//! A [`Coeff`] is just a value; the field it belongs to is carried by the ambient
//! ring (see [`crate::ring::VarTable`]) and passed explicitly to the arithmetic
//! here. Rational values are kept in lowest terms with a positive denominator
//! (the `BigRational` canonical form); F_p values are least nonnegative residues.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a computation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    /// Arbitrary-precision rationals.
    Rat,
    /// F_p for an odd prime p < 2^31.
    Fp(u64),
}

const MAX_PRIME: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Validated constructor for F_p.
    pub fn fp(p: u64) -> Result<FieldSpec> {
        if p < MAX_PRIME && p % 2 == 1 && is_prime(p) {
            Ok(FieldSpec::Fp(p))
        } else {
            Err(Error::InvalidField(format!("fp:{p}")))
        }
    }

    /// Parse a field spec from its textual form: `rat` or `fp:<prime>`.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        let t = text.trim();
        if t == "rat" {
            return Ok(FieldSpec::Rat);
        }
        if let Some(rest) = t.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(text.to_string()))?;
            return FieldSpec::fp(p);
        }
        Err(Error::InvalidField(text.to_string()))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rat => Coeff::Rat(BigRational::zero()),
            FieldSpec::Fp(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Rat => Coeff::Rat(BigRational::one()),
            FieldSpec::Fp(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            FieldSpec::Rat => Coeff::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Fp(p) => Coeff::Fp((v.rem_euclid(*p as i64)) as u64),
        }
    }

    /// Build a coefficient from an exact integer ratio. Over F_p the denominator
    /// is inverted; a denominator divisible by p is an error.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rat => Ok(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            FieldSpec::Fp(p) => {
                let pl = BigInt::from(*p);
                let n = ((num % &pl) + &pl) % &pl;
                let d = ((den % &pl) + &pl) % &pl;
                let n: u64 = n.try_into().expect("residue fits u64");
                let d: u64 = d.try_into().expect("residue fits u64");
                let dinv = inv_mod(d, *p).ok_or(Error::DivisionByZero)?;
                Ok(Coeff::Fp(mul_mod(n, dinv, *p)))
            }
        }
    }

    fn check(&self, c: &Coeff) {
        debug_assert!(
            matches!(
                (self, c),
                (FieldSpec::Rat, Coeff::Rat(_)) | (FieldSpec::Fp(_), Coeff::Fp(_))
            ),
            "coefficient does not belong to {self:?}"
        );
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (FieldSpec::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (FieldSpec::Fp(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(add_mod(*x, *y, *p)),
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.check(a);
        match (self, a) {
            (FieldSpec::Rat, Coeff::Rat(x)) => Coeff::Rat(-x),
            (FieldSpec::Fp(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (FieldSpec::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (FieldSpec::Fp(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(mul_mod(*x, *y, *p)),
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        self.check(a);
        match (self, a) {
            (FieldSpec::Rat, Coeff::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Coeff::Rat(x.recip()))
                }
            }
            (FieldSpec::Fp(p), Coeff::Fp(x)) => {
                inv_mod(*x, *p).map(Coeff::Fp).ok_or(Error::DivisionByZero)
            }
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduce a rational coefficient mod p. `None` if the denominator vanishes mod p.
    pub fn reduce_rat(&self, c: &BigRational) -> Option<Coeff> {
        match self {
            FieldSpec::Rat => Some(Coeff::Rat(c.clone())),
            FieldSpec::Fp(p) => {
                let pl = BigInt::from(*p);
                let n = ((c.numer() % &pl) + &pl) % &pl;
                let d = ((c.denom() % &pl) + &pl) % &pl;
                let n: u64 = n.try_into().ok()?;
                let d: u64 = d.try_into().ok()?;
                let dinv = inv_mod(d, *p)?;
                Some(Coeff::Fp(mul_mod(n, dinv, *p)))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rat => write!(f, "rat"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b; // p < 2^31, so no overflow
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    // a, b < 2^31 so the product fits in u64.
    (a * b) % p
}

/// Modular inverse by extended Euclid; `None` when `a == 0 (mod p)`.
fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "p must be prime");
    Some(t.rem_euclid(p as i64) as u64)
}

/// An exact coefficient value. Which field it lives in is contextual.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// Whether the canonical textual form starts with a minus sign.
    /// F_p residues are printed as nonnegative integers, so only rationals count.
    pub fn display_negative(&self, field: &FieldSpec) -> bool {
        match (self, field) {
            (Coeff::Rat(x), _) => x.is_negative(),
            // balanced representative: residues above p/2 print as negatives
            (Coeff::Fp(v), FieldSpec::Fp(p)) => *v > p / 2,
            (Coeff::Fp(_), FieldSpec::Rat) => false,
        }
    }

    /// Magnitude for display purposes (absolute value over the rationals,
    /// balanced representative modulo a prime).
    pub fn display_magnitude(&self, field: &FieldSpec) -> String {
        match (self, field) {
            (Coeff::Rat(x), _) => {
                let a = x.abs();
                if a.denom().is_one() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            }
            (Coeff::Fp(v), FieldSpec::Fp(p)) if *v > p / 2 => (p - v).to_string(),
            (Coeff::Fp(v), _) => v.to_string(),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(v) => write!(f, "{v}"),
        }
    }
}
