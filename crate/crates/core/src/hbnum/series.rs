use std::ops::{Add, Mul, Sub};

use crate::exactnum::Rational;

/// Truncated power series `sum c_i x^i + O(x^order)` with `order = len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order` terms.
    pub fn from_coeffs(coeffs: &[Rational], order: usize) -> Self {
        let mut v: Vec<Rational> = coeffs.iter().take(order).cloned().collect();
        v.resize(order, Rational::zero());
        Series { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the stored terms is not returned
    /// since it is unknown, hence the `Option`.
    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<'b> Mul<&'b Series> for &Series {
    type Output = Series;

    fn mul(self, rhs: &'b Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

impl<'b> Add<&'b Series> for &Series {
    type Output = Series;

    fn add(self, rhs: &'b Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'b> Sub<&'b Series> for &Series {
    type Output = Series;

    fn sub(self, rhs: &'b Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Series {
        Series::new(v.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn product_truncates_to_shorter_order() {
        let a = s(&[1, 1, 0, 0]);
        let b = s(&[1, -1, 1]);
        assert_eq!(&a * &b, s(&[1, 0, 0]));
        assert_eq!(a.pow(3), s(&[1, 3, 3, 1]));
        assert_eq!(a.pow(0), Series::one(4));
    }

    #[test]
    fn add_sub() {
        let a = s(&[1, 2, 3]);
        let b = s(&[3, 2]);
        assert_eq!(&a + &b, s(&[4, 4]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn from_coeffs_pads() {
        let a = Series::from_coeffs(&[Rational::one()], 3);
        assert_eq!(a, s(&[1, 0, 0]));
        assert_eq!(a.coeff(2), Some(&Rational::zero()));
        assert_eq!(a.coeff(3), None);
    }
}
