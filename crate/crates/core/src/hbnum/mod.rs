//! Reference values of `B_{N,n}` and `B_{N,n}^{(r)}` from the defining
//! recurrences.
//!
//! The generating function is
//!
//! ```text
//! 1 / 1F1(1; N+1; x)^r = sum_n B_{N,n}^{(r)} x^n / n!
//! ```
//!
//! and `B_{N,n} = B_{N,n}^{(1)}`; `N = 1` gives the classical Bernoulli
//! numbers with `B_1 = -1/2`. Every alternative route in this crate is
//! checked against the functions here.

mod memo;
mod series;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, shifted_product, CompositionSpec, Rational};

pub use memo::{HbKey, MemoStore};
pub use series::Series;

pub(crate) fn check_n_param(big_n: u64) -> Result<()> {
    if big_n == 0 {
        return Err(Error::InvalidKey("N must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn check_order(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidKey("r must be at least 1".into()));
    }
    Ok(())
}

/// `N!/(N+i)!` for `i = 0..len`: the coefficients of `1F1(1; N+1; x)`.
pub fn factorial_ratios(big_n: &BigInt, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut denom = BigInt::one();
    for i in 0..len {
        if i > 0 {
            denom *= big_n + i;
        }
        out.push(Rational::unit_fraction(denom.clone()));
    }
    out
}

/// `B_{N,0}, ..., B_{N,len-1}` for an arbitrary-precision `N >= 1`, by
///
/// ```text
/// B_{N,n} = - sum_{k<n} C(N+n, k) / C(N+n, n) * B_{N,k},   B_{N,0} = 1.
/// ```
pub fn hb_row_big(big_n: &BigInt, len: usize) -> Result<Vec<Rational>> {
    if *big_n < BigInt::one() {
        return Err(Error::InvalidKey("N must be at least 1".into()));
    }
    let mut row: Vec<Rational> = Vec::with_capacity(len);
    if len == 0 {
        return Ok(row);
    }
    row.push(Rational::one());
    for n in 1..len {
        let top = big_n + n;
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (k, b) in row.iter().enumerate() {
            acc += b * Rational::from_integer(binom.clone());
            binom = binom * (&top - k) / (k + 1);
        }
        // binom is now C(N+n, n)
        row.push(-acc / Rational::from_integer(binom));
    }
    Ok(row)
}

pub fn hb_row(big_n: u64, len: usize) -> Result<Vec<Rational>> {
    hb_row_big(&BigInt::from(big_n), len)
}

/// `B_{N,n}`.
pub fn hb(big_n: u64, n: usize) -> Result<Rational> {
    check_n_param(big_n)?;
    Ok(hb_row(big_n, n + 1)?.pop().expect("row has n+1 entries"))
}

/// Classical Bernoulli number `B_n = B_{1,n}` (so `B_1 = -1/2`).
pub fn classical(n: usize) -> Rational {
    hb(1, n).expect("N = 1 is valid")
}

/// `B_0, ..., B_{len-1}`.
pub fn classical_row(len: usize) -> Vec<Rational> {
    hb_row(1, len).expect("N = 1 is valid")
}

/// The variant generated by `x / (1 - e^{-x})`: `(-1)^n B_n`.
pub fn signed_variant(n: usize) -> Rational {
    Rational::sign_power(n) * classical(n)
}

/// `B_{N,0}^{(r)}, ..., B_{N,len-1}^{(r)}` from the `r`-fold recurrence
///
/// ```text
/// B_{N,n}^{(r)} = -n! (N!)^r sum_{m<n} B_{N,m}^{(r)} / m!
///                   * sum_{i_1+..+i_r = n-m} 1 / ((N+i_1)! ... (N+i_r)!)
/// ```
///
/// The inner sum is the coefficient of `x^{n-m}` in the `r`-th power of the
/// `1F1` series, taken here by series multiplication.
pub fn hb_higher_row(big_n: u64, r: usize, len: usize) -> Result<Vec<Rational>> {
    check_n_param(big_n)?;
    check_order(r)?;
    let f = Series::new(factorial_ratios(&BigInt::from(big_n), len));
    let inner = f.pow(r);
    // b_n = B_n / n!
    let mut b: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            b.push(Rational::one());
            continue;
        }
        let s: Rational = (0..n).map(|m| &b[m] * &inner.coeffs()[n - m]).sum();
        b.push(-s);
    }
    Ok(b
        .into_iter()
        .enumerate()
        .map(|(n, bn)| bn * Rational::from_integer(factorial(n)))
        .collect())
}

/// `B_{N,n}^{(r)}`.
pub fn hb_higher(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    Ok(hb_higher_row(big_n, r, n + 1)?.pop().expect("row has n+1 entries"))
}

/// `sum_{i<order} B_{N,i}^{(r)} / i! x^i + O(x^order)`.
pub fn hb_series(big_n: u64, r: usize, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    let row = hb_higher_row(big_n, r, order)?;
    Ok(Series::new(
        row.into_iter()
            .enumerate()
            .map(|(i, v)| v / Rational::from_integer(factorial(i)))
            .collect(),
    ))
}

/// Left side of
///
/// ```text
/// sum_{m=0}^{n} sum_{i_1+..+i_r = n-m} B_{N,m}^{(r)} / (m! (N+i_1)! ... (N+i_r)!) = 0
/// ```
///
/// with the inner sum enumerated term by term. Zero for every `n >= 1`.
pub fn recurrence_residual(big_n: u64, r: usize, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::RoutePrecondition("the residual identity needs n >= 1".into()));
    }
    let row = hb_higher_row(big_n, r, n + 1)?;
    let bn = BigInt::from(big_n);
    let n_fact = Rational::from_integer(factorial_big(&bn));
    let mut total = Rational::zero();
    for (m, bm) in row.iter().enumerate() {
        let mut inner = Rational::zero();
        for comp in CompositionSpec::nonnegative(n - m, r)?.iter() {
            let denom: BigInt = comp
                .iter()
                .map(|&i| shifted_product(&bn, 1, i as i64))
                .product();
            // 1/(N+i)! = 1/(N! * prod_{l<=i}(N+l))
            inner += Rational::unit_fraction(denom);
        }
        inner /= n_fact.pow(r as i32);
        total += bm * inner / Rational::from_integer(factorial(m));
    }
    Ok(total)
}

fn factorial_big(n: &BigInt) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = BigInt::one();
    while &i <= n {
        acc *= &i;
        i += 1u32;
    }
    acc
}
