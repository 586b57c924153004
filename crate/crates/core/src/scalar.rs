//! Exact arithmetic in the cyclotomic field Q(z), z a primitive cube root of unity.
//!
//! Elements are stored as `a + b*z` with rational `a`, `b`, using `z^2 = -1 - z`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ScalarError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyc {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Cyc { re: a, im: b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyc::new(rat(a), rat(b))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Cyc::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn zero() -> Self {
        Cyc::default()
    }

    pub fn one() -> Self {
        Cyc::from_ints(1, 0)
    }

    pub fn int(n: i64) -> Self {
        Cyc::from_ints(n, 0)
    }

    /// The generator `z`.
    pub fn zeta() -> Self {
        Cyc::from_ints(0, 1)
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Cyc::one(),
            1 => Cyc::zeta(),
            _ => Cyc::from_ints(-1, -1),
        }
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &BigRational {
        &self.re
    }

    /// Coefficient of z.
    pub fn b(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// Image under the Galois automorphism `z -> z^2`.
    pub fn conj(&self) -> Self {
        Cyc::new(&self.re - &self.im, -&self.im)
    }

    /// Field norm `a^2 - ab + b^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re - &self.re * &self.im + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Cyc::new(c.re / &n, c.im / n))
    }

    pub fn checked_div(&self, other: &Cyc) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyc::new(&self.re * r, &self.im * r)
    }

    fn mul_ref(&self, o: &Cyc) -> Cyc {
        if self.im.is_zero() && o.im.is_zero() {
            return Cyc::new(&self.re * &o.re, BigRational::zero());
        }
        let bd = &self.im * &o.im;
        Cyc::new(
            &self.re * &o.re - &bd,
            &self.re * &o.im + &self.im * &o.re - bd,
        )
    }
}

impl From<i64> for Cyc {
    fn from(n: i64) -> Self {
        Cyc::int(n)
    }
}

impl From<BigRational> for Cyc {
    fn from(r: BigRational) -> Self {
        Cyc::new(r, BigRational::zero())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyc> for &Cyc {
            type Output = Cyc;
            fn $m(self, o: &Cyc) -> Cyc {
                $body(self, o)
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                $body(&self, &o)
            }
        }
        impl $tr<&Cyc> for Cyc {
            type Output = Cyc;
            fn $m(self, o: &Cyc) -> Cyc {
                $body(&self, o)
            }
        }
        impl $tr<Cyc> for &Cyc {
            type Output = Cyc;
            fn $m(self, o: Cyc) -> Cyc {
                $body(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, |x: &Cyc, y: &Cyc| Cyc::new(
    &x.re + &y.re,
    &x.im + &y.im
));
forward_binop!(Sub, sub, |x: &Cyc, y: &Cyc| Cyc::new(
    &x.re - &y.re,
    &x.im - &y.im
));
forward_binop!(Mul, mul, |x: &Cyc, y: &Cyc| x.mul_ref(y));
forward_binop!(Div, div, |x: &Cyc, y: &Cyc| x
    .checked_div(y)
    .expect("division by zero in Q(z)"));

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, o: &Cyc) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign for Cyc {
    fn add_assign(&mut self, o: Cyc) {
        *self += &o;
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, o: &Cyc) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl SubAssign for Cyc {
    fn sub_assign(&mut self, o: Cyc) {
        *self -= &o;
    }
}

impl MulAssign<&Cyc> for Cyc {
    fn mul_assign(&mut self, o: &Cyc) {
        *self = self.mul_ref(o);
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::new(-self.re, -self.im)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::new(-&self.re, -&self.im)
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |acc, x| acc + x)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyc {
    /// Canonical form: `a`, `b*z`, `a + b*z` or `a - b*z`, omitting unit coefficients of `z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let mag = self.im.abs();
        let zpart = if mag.is_one() {
            "z".to_string()
        } else {
            format!("{}*z", fmt_rat(&mag))
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{zpart}")
            } else {
                write!(f, "{zpart}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {zpart}", fmt_rat(&self.re))
        }
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rat(s: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Cyc {
    type Err = ScalarError;

    /// Accepts sums of terms `q`, `q*z`, `z` with optional signs, e.g. `1/2 - 3*z`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = Cyc::zero();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let term = if body == "z" {
                Cyc::zeta()
            } else if let Some(coef) = body.strip_suffix("*z") {
                Cyc::new(BigRational::zero(), parse_rat(coef)?)
            } else if body.contains('z') {
                return Err(bad());
            } else {
                Cyc::from(parse_rat(body)?)
            };
            acc += if neg { -term } else { term };
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    a: String,
    b: String,
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycRepr {
            a: fmt_rat(&self.re),
            b: fmt_rat(&self.im),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CycRepr::deserialize(d)?;
        let a = parse_rat(&r.a).map_err(serde::de::Error::custom)?;
        let b = parse_rat(&r.b).map_err(serde::de::Error::custom)?;
        Ok(Cyc::new(a, b))
    }
}
