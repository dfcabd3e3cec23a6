//! Exact arithmetic in the biquadratic field ℚ(i, √2).
//!
//! A [`Scalar`] is stored as four rational coordinates over the fixed basis
//! `(1, i, √2, i√2)`. The representation is canonical: two scalars are equal
//! exactly when their coordinates agree.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// An element `a + b·i + c·√2 + d·i√2` of ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    c: [Rational; 4],
}

// Product table for the basis (1, i, √2, i√2): basis[p] * basis[q] = FACTOR * basis[TARGET].
const MUL_TARGET: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const MUL_FACTOR: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, 2, 2], [1, -1, 2, -2]];

impl Scalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Scalar { c: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(rational(numer, denom))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    /// Gaussian rational `re + im·i`.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Scalar {
            c: [re, im, Rational::zero(), Rational::zero()],
        }
    }

    pub fn i() -> Self {
        Self::gaussian(Rational::zero(), Rational::one())
    }

    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::zero(), rational(1, 2), Rational::zero())
    }

    pub fn a(&self) -> &Rational {
        &self.c[0]
    }
    pub fn b(&self) -> &Rational {
        &self.c[1]
    }
    pub fn c(&self) -> &Rational {
        &self.c[2]
    }
    pub fn d(&self) -> &Rational {
        &self.c[3]
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when the imaginary coordinates `b` and `d` vanish.
    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// True when the scalar lies in ℚ(i), i.e. has no √2 part.
    pub fn is_gaussian(&self) -> bool {
        self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Complex conjugation `a − bi + c√2 − di√2`.
    pub fn conj(&self) -> Self {
        Scalar {
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// Real part `a + c√2`, returned as a real scalar.
    pub fn re(&self) -> Self {
        Scalar {
            c: [self.c[0].clone(), Rational::zero(), self.c[2].clone(), Rational::zero()],
        }
    }

    /// Imaginary part `b + d√2`, returned as a real scalar.
    pub fn im(&self) -> Self {
        Scalar {
            c: [self.c[1].clone(), Rational::zero(), self.c[3].clone(), Rational::zero()],
        }
    }

    /// Multiplicative inverse, computed through the norms of the tower ℚ ⊂ ℚ(√2) ⊂ ℚ(i, √2).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x = p + q·i with p, q ∈ ℚ(√2); x·conj(x) = p² + q² =: u + v√2.
        let [a, b, c, d] = &self.c;
        let two = Rational::from_integer(BigInt::from(2));
        let u = a * a + b * b + &two * (c * c + d * d);
        let v = &two * (a * c + b * d);
        // (u + v√2)⁻¹ = (u − v√2) / (u² − 2v²)
        let denom = &u * &u - &two * &v * &v;
        let norm_inv = Scalar::new(&u / &denom, Rational::zero(), -(&v / &denom), Rational::zero());
        Ok(self.conj() * norm_inv)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Scalar {
            c: [0, 1, 2, 3].map(|k| &self.c[k] * r),
        }
    }

    /// Multiply by `i`, a pure coordinate permutation.
    pub fn mul_i(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Scalar {
            c: [-b.clone(), a.clone(), -d.clone(), c.clone()],
        }
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        let mut out: [Rational; 4] = Default::default();
        for p in 0..4 {
            if self.c[p].is_zero() {
                continue;
            }
            for q in 0..4 {
                if rhs.c[q].is_zero() {
                    continue;
                }
                let prod = &self.c[p] * &rhs.c[q];
                let f = MUL_FACTOR[p][q];
                let t = MUL_TARGET[p][q];
                match f {
                    1 => out[t] += prod,
                    -1 => out[t] -= prod,
                    _ => out[t] += prod * BigInt::from(f),
                }
            }
        }
        Scalar { c: out }
    }

    /// Render the rational coordinates as `"p/q"` strings.
    pub fn to_strings(&self) -> [String; 4] {
        self.c.clone().map(|r| format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn from_strings(parts: &[&str]) -> Result<Self> {
        if parts.len() != 4 {
            return Err(Error::Parse(parts.join(",")));
        }
        let mut c: [Rational; 4] = Default::default();
        for (slot, s) in c.iter_mut().zip(parts) {
            *slot = parse_rational(s)?;
        }
        Ok(Scalar { c })
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
    let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(p, q))
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| Scalar {
    c: [0, 1, 2, 3].map(|k| &x.c[k] + &y.c[k]),
});
forward_binop!(Sub, sub, |x, y| Scalar {
    c: [0, 1, 2, 3].map(|k| &x.c[k] - &y.c[k]),
});
forward_binop!(Mul, mul, |x, y| x.mul_ref(y));

/// Panics on division by zero; use [`Scalar::inv`] for a checked inverse.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero scalar"))
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { c: self.c.map(|r| -r) }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNIT: [&str; 4] = ["", "i", "√2", "i√2"];
        let mut first = true;
        for (k, r) in self.c.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let neg = r.is_negative();
            let mag = fmt_rational(&r.abs());
            let body = match (k, mag.as_str()) {
                (0, m) => m.to_string(),
                (_, "1") => UNIT[k].to_string(),
                (_, m) if m.contains('/') => format!("({m}){}", UNIT[k]),
                (_, m) => format!("{m}{}", UNIT[k]),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(4)?;
        for s in self.to_strings() {
            tup.serialize_element(&s)?;
        }
        tup.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(deserializer)?;
        let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
        Scalar::from_strings(&refs).map_err(de::Error::custom)
    }
}
