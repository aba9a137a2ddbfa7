use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::Rational;

/// Dense polynomial in `x` over the rationals, coefficients in ascending
/// order with trailing zeros removed (the zero polynomial is empty).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Poly::new(vec![c.into()])
    }

    /// `c x^k`.
    pub fn monomial(c: impl Into<Rational>, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k];
        v.push(c.into());
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl<'b> Add<&'b Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &'b Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'b> Sub<&'b Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &'b Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'b> Mul<&'b Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &'b Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Ascending powers with `+`/`-` separators: `6 - 2x + x^2`. Non-integer
/// coefficients are parenthesised: `(1/2)x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag_str = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => f.write_str(&mag_str)?,
                _ => {
                    if !mag.is_one() {
                        f.write_str(&mag_str)?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
