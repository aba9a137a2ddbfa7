//! Exact signed rationals in lowest terms.
//!
//! [`Rational`] is the value type of the whole crate. It wraps
//! `num_rational::BigRational`, which keeps every value reduced with a
//! positive denominator, and fixes the text format to `num/den`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always in lowest terms.
///
/// Zero is `0/1`. The [`Display`](fmt::Display) form is always `num/den`,
/// even for integers (`7/1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `numer/denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// `1/d` for a nonzero integer `d`.
    ///
    /// # Panics
    ///
    /// Panics if `d` is zero.
    pub fn unit_fraction(d: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(BigInt::one(), d.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer power; negative exponents invert.
    ///
    /// # Panics
    ///
    /// Panics when raising zero to a negative power.
    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            assert!(!self.is_zero(), "zero raised to a negative power");
        }
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// `(-1)^k` as a rational.
    pub fn sign_power(k: usize) -> Self {
        if k % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big_rational(self) -> BigRational {
        self.0
    }

    /// Decimal rendering with exactly `digits` fractional digits, rounded half
    /// away from zero. Display only; the exact value is never replaced.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10u32), digits);
        let scaled = self.0.abs() * BigRational::from_integer(scale.clone());
        let (q, r) = scaled.numer().div_rem(scaled.denom());
        let rounded = if r * 2u32 >= *scaled.denom() { q + 1u32 } else { q };
        let (int_part, frac_part) = rounded.div_rem(&scale);
        let sign = if self.is_negative() && !rounded_is_zero(&int_part, &frac_part) {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
        }
    }
}

fn rounded_is_zero(int_part: &BigInt, frac_part: &BigInt) -> bool {
    int_part.is_zero() && frac_part.is_zero()
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[+-]digits` or `[+-]digits/digits`; the denominator must be
/// nonzero and unsigned. The result is reduced.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason| Error::ParseRational {
            input: s.to_string(),
            reason,
        };
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let (sign, digits) = match num_str.as_bytes().first() {
            Some(b'-') => (Sign::Minus, &num_str[1..]),
            Some(b'+') => (Sign::Plus, &num_str[1..]),
            _ => (Sign::Plus, num_str),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(fail("numerator is not an integer"));
        }
        let mut numer: BigInt = digits.parse().map_err(|_| fail("numerator is not an integer"))?;
        if sign == Sign::Minus {
            numer = -numer;
        }
        let denom: BigInt = match den_str {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(fail("denominator is not an unsigned integer"));
                }
                d.parse().map_err(|_| fail("denominator is not an unsigned integer"))?
            }
        };
        if denom.is_zero() {
            return Err(fail("zero denominator"));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(BigInt::from(n))
            }
        }
    )*};
}
from_primitive!(i32, i64, u32, u64, usize, i128, u128);

macro_rules! binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $atr<Rational> for Rational {
            fn $amethod(&mut self, rhs: Rational) {
                self.0.$amethod(rhs.0);
            }
        }
        impl<'a> $atr<&'a Rational> for Rational {
            fn $amethod(&mut self, rhs: &'a Rational) {
                self.0.$amethod(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a Rational> for Rational {
    fn product<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}
