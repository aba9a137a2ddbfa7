//! Convergents of the continued fraction
//!
//! ```text
//! 1 / 1F1(1; N+1; x) = 1 - x/(N+1 + x/(N+2 - (N+1)x/(N+3 + 2x/(N+4 - (N+2)x/(N+5 + ...)))))
//! ```
//!
//! with partial numerators `b_{2m} = m x`, `b_{2m+1} = -(N+m) x` and partial
//! denominators `a_n = N + n`. The convergents `P_n / Q_n` are built both by
//! the three-term recurrence and from closed forms, and the identities that
//! follow from `Q_n * sum B_{N,k} x^k/k! = P_n + O(x^{n+1})` are evaluated
//! side by side.

mod identities;
mod poly;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactnum::{binom, falling, shifted_product, Rational};
use crate::hbnum::{check_n_param, hb_series, Series};

pub use identities::{
    classical_identity, identity_even, identity_even_max_h, identity_odd, identity_odd_max_h,
    ClassicalVariant,
};
pub use poly::Poly;

/// `P_n`, `Q_n` for one parameter `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub index: usize,
    pub big_n: u64,
    pub p: Poly,
    pub q: Poly,
}

impl ConvergentPair {
    /// Expected degrees `(deg P, deg Q)`: `(m, m)` for index `2m`,
    /// `(m, m-1)` for index `2m-1`. At `N = 1` the degree of `Q_{2m-1}` can
    /// be smaller, since its odd-power coefficients vanish there.
    pub fn expected_degrees(index: usize) -> (usize, usize) {
        if index % 2 == 0 {
            (index / 2, index / 2)
        } else {
            let m = index.div_ceil(2);
            (m, m - 1)
        }
    }
}

/// Runs `X_k = a_k X_{k-1} + b_k X_{k-2}` from `X_0`, `X_1` up to `X_n`.
pub fn three_term<A, B>(a: A, b: B, x0: Poly, x1: Poly, n: usize) -> Poly
where
    A: Fn(usize) -> Poly,
    B: Fn(usize) -> Poly,
{
    if n == 0 {
        return x0;
    }
    let (mut prev, mut cur) = (x0, x1);
    for k in 2..=n {
        let next = &(&a(k) * &cur) + &(&b(k) * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn partial_numerator(big_n: u64, k: usize) -> Poly {
    let m = k / 2;
    if k % 2 == 0 {
        Poly::monomial(Rational::from(m), 1)
    } else {
        Poly::monomial(-Rational::from(big_n + m as u64), 1)
    }
}

/// `P_n`, `Q_n` from the recurrence.
pub fn convergent_rec(big_n: u64, n: usize) -> Result<ConvergentPair> {
    check_n_param(big_n)?;
    let a = |k: usize| Poly::constant(Rational::from(big_n + k as u64));
    let b = |k: usize| partial_numerator(big_n, k);
    let n1 = Rational::from(big_n + 1);
    let p1 = Poly::new(vec![n1.clone(), -Rational::one()]);
    let q1 = Poly::constant(n1);
    Ok(ConvergentPair {
        index: n,
        big_n,
        p: three_term(a, b, Poly::constant(1), p1, n),
        q: three_term(a, b, Poly::constant(1), q1, n),
    })
}

/// `sum_{j=0}^{m} (-1)^j C(m, j) prod_{l=1}^{top-j} (N+l) x^j`.
fn closed_p(big_n: &BigInt, m: usize, top: usize) -> Poly {
    Poly::new(
        (0..=m)
            .map(|j| {
                let c = binom(BigInt::from(m), j) * shifted_product(big_n, 1, top as i64 - j as i64);
                Rational::sign_power(j) * Rational::from_integer(c)
            })
            .collect(),
    )
}

/// `sum_{j=0}^{jmax} sum_{k=0}^{j} (-1)^{j-k} (top-j)_k C(m-k-1, j-k) prod_{l=k+1}^{top-j} (N+l) x^j`
/// with the falling factorial `(a)_k`.
fn closed_q(big_n: &BigInt, m: usize, top: usize, jmax: usize) -> Poly {
    Poly::new(
        (0..=jmax)
            .map(|j| {
                let t = top as i64 - j as i64;
                let mut c = BigInt::from(0);
                for k in 0..=j {
                    let term = falling(t, k)
                        * binom(BigInt::from(m as i64 - k as i64 - 1), j - k)
                        * shifted_product(big_n, k as i64 + 1, t);
                    if (j - k) % 2 == 0 {
                        c += term;
                    } else {
                        c -= term;
                    }
                }
                Rational::from_integer(c)
            })
            .collect(),
    )
}

/// `P_n`, `Q_n` from the closed forms, index `2m` or `2m-1`.
pub fn convergent_closed(big_n: u64, n: usize) -> Result<ConvergentPair> {
    check_n_param(big_n)?;
    let bn = BigInt::from(big_n);
    let (p, q) = if n == 0 {
        (Poly::constant(1), Poly::constant(1))
    } else if n % 2 == 0 {
        let m = n / 2;
        (closed_p(&bn, m, 2 * m), closed_q(&bn, m, 2 * m, m))
    } else {
        let m = n.div_ceil(2);
        (closed_p(&bn, m, 2 * m - 1), closed_q(&bn, m, 2 * m - 1, m - 1))
    };
    Ok(ConvergentPair {
        index: n,
        big_n,
        p,
        q,
    })
}

/// `Q_n(x) sum_k B_{N,k} x^k/k! - P_n(x)` to order `n+1`.
pub fn approximation_defect(pair: &ConvergentPair) -> Result<Series> {
    let order = pair.index + 1;
    let s = hb_series(pair.big_n, 1, order)?;
    let q = Series::from_coeffs(pair.q.coeffs(), order);
    let p = Series::from_coeffs(pair.p.coeffs(), order);
    Ok(&(&q * &s) - &p)
}
