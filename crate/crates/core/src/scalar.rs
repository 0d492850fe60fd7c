//! Exact rational scalars.
//!
//! Almost every coefficient that shows up in normal-form computations is a
//! small integer, so values are kept as a reduced `i64` fraction and only
//! promoted to an arbitrary-precision rational when an operation overflows.
//! Representations are canonical: a value that fits the small form is always
//! stored in it, which keeps derived equality and hashing sound.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// numerator, denominator; denominator > 0, gcd 1
    Small(i64, i64),
    Big(BigRational),
}

/// An exact rational number in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    /// Builds `num/den`; fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// Numerator and denominator as decimal strings.
    pub fn parts(&self) -> (String, String) {
        match &self.0 {
            Repr::Small(n, d) => (n.to_string(), d.to_string()),
            Repr::Big(r) => (r.numer().to_string(), r.denom().to_string()),
        }
    }

    /// Numerator and denominator when both fit in `i64`.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::Small(n, d) => Some((*n, *d)),
            Repr::Big(_) => None,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("reciprocal of zero".into()));
        }
        Ok(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }

    /// `self^k` with the convention `0^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Self::from_int(n as i64)
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Self::from_i128(n as i128, 1)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `n`, `n/d`, and plain decimals such as `2.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            location: format!("scalar `{s}`"),
            message: "expected an integer, a fraction n/d, or a decimal".into(),
        };
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let neg = int.starts_with('-');
            let whole: BigInt = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| bad())?
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let f: BigInt = frac.parse().map_err(|_| bad())?;
            let mut num = whole.abs() * &scale + f;
            if neg {
                num = -num;
            }
            return Ok(Self::from_big(BigRational::new(num, scale)));
        }
        let r: BigRational = s.parse().map_err(|_| bad())?;
        Ok(Self::from_big(r))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) => rhs.clone(),
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    Scalar::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    match a
                        .checked_mul(d)
                        .and_then(|x| c.checked_mul(b).and_then(|y| x.checked_add(y)))
                    {
                        Some(n) => Scalar::from_i128(n, b * d),
                        None => Scalar::from_big(self.to_big() + rhs.to_big()),
                    }
                }
            }
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Scalar::zero(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Scalar::from_i128((*a as i128) * (*c as i128), (*b as i128) * (*d as i128))
            }
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like the primitive integer types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.recip().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar::from_i128(-(*n as i128), *d as i128),
            Repr::Big(r) => Scalar::from_big(-r.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, 5), Scalar::zero());
        assert!(Scalar::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(1, 2) * &q(2, 3), q(1, 3));
        assert_eq!(&q(1, 2) - &q(1, 2), Scalar::zero());
        assert_eq!(&q(5, 2) / &q(5, 4), q(2, 1));
        assert_eq!(q(-3, 2).pow(0), Scalar::one());
        assert_eq!(Scalar::zero().pow(0), Scalar::one());
        assert_eq!(q(-1, 2).pow(3), q(-1, 8));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let s = &big + &Scalar::one();
        assert_eq!(&s - &Scalar::one(), big);
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!("5/2".parse::<Scalar>().unwrap(), q(5, 2));
        assert_eq!("-1".parse::<Scalar>().unwrap(), q(-1, 1));
        assert_eq!("2.5".parse::<Scalar>().unwrap(), q(5, 2));
        assert_eq!("-0.25".parse::<Scalar>().unwrap(), q(-1, 4));
        assert!("x".parse::<Scalar>().is_err());
        assert_eq!(q(-5, 2).to_string(), "-5/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn ordering() {
        assert!(q(1, 3) < q(1, 2));
        assert!(q(-1, 2) < Scalar::zero());
        let huge = &Scalar::from_int(i64::MAX) * &Scalar::from_int(4);
        assert!(huge > Scalar::from_int(i64::MAX));
    }
}
