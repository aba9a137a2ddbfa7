//! Coefficient identities read off `Q_n * sum B_{N,k} x^k/k! = P_n + ...`.
//!
//! Each function returns both sides so a failure shows its size. The ranges
//! in which the two sides agree are given by `max_h`; past them the
//! functions still evaluate, and the sides differ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{binom, factorial, falling, shifted_product, Rational};
use crate::hbnum::{classical_row, hb_row};

fn need_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("identities need n >= 1".into()));
    }
    Ok(())
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn fact(n: usize) -> Rational {
    int(factorial(n))
}

/// Inner weight `sum_{k<=j} (-1)^{j-k} (top-j)_k C(n-k-1, j-k) prod_{l=k+1}^{top-j} (N+l)`.
fn q_coefficient(big_n: &BigInt, n: usize, top: usize, j: usize) -> BigInt {
    let t = top as i64 - j as i64;
    let mut c = BigInt::from(0);
    for k in 0..=j {
        let term = falling(t, k) * binom(BigInt::from(n as i64 - k as i64 - 1), j - k) * shifted_product(big_n, k as i64 + 1, t);
        if (j - k) % 2 == 0 {
            c += term;
        } else {
            c -= term;
        }
    }
    c
}

fn identity(big_n: u64, n: usize, h: usize, top: usize) -> Result<(Rational, Rational)> {
    need_n(n)?;
    let row = hb_row(big_n, h + 1)?;
    let bn = BigInt::from(big_n);
    let mut lhs = Rational::zero();
    for j in 0..=h.min(n) {
        let b = &row[h - j] / fact(h - j);
        if b.is_zero() {
            continue;
        }
        lhs += int(q_coefficient(&bn, n, top, j)) * b;
    }
    let rhs = if h <= n {
        let c = binom(BigInt::from(n), h) * shifted_product(&bn, 1, top as i64 - h as i64);
        Rational::sign_power(h) * int(c)
    } else {
        Rational::zero()
    };
    Ok((lhs, rhs))
}

/// Coefficient of `x^h` in `Q_{2n} * sum B_{N,k} x^k/k!` against that of `P_{2n}`.
/// The two agree for `h <= 2n`.
pub fn identity_even(big_n: u64, n: usize, h: usize) -> Result<(Rational, Rational)> {
    identity(big_n, n, h, 2 * n)
}

/// Coefficient of `x^h` in `Q_{2n-1} * sum B_{N,k} x^k/k!` against that of
/// `P_{2n-1}`. The two agree for `h <= 2n-1`.
pub fn identity_odd(big_n: u64, n: usize, h: usize) -> Result<(Rational, Rational)> {
    identity(big_n, n, h, 2 * n - 1)
}

pub fn identity_even_max_h(n: usize) -> usize {
    2 * n
}

pub fn identity_odd_max_h(n: usize) -> usize {
    2 * n - 1
}

/// The `N = 1` forms, and their versions with the inner `k`-sum summed in
/// closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalVariant {
    Even,
    Odd,
    EvenReduced,
    OddReduced,
}

impl ClassicalVariant {
    pub const ALL: [ClassicalVariant; 4] = [
        ClassicalVariant::Even,
        ClassicalVariant::Odd,
        ClassicalVariant::EvenReduced,
        ClassicalVariant::OddReduced,
    ];

    /// Largest `h` for which the two sides agree.
    pub fn max_h(self, n: usize) -> usize {
        match self {
            ClassicalVariant::Even | ClassicalVariant::EvenReduced => 2 * n,
            ClassicalVariant::Odd | ClassicalVariant::OddReduced => 2 * n - 1,
        }
    }

    /// Largest `h` for which the expression is defined at all (the factorial
    /// `(2n-h+1)!` or `(2n-h)!` needs a nonnegative argument).
    pub fn defined_h(self, n: usize) -> usize {
        match self {
            ClassicalVariant::Even | ClassicalVariant::EvenReduced => 2 * n + 1,
            ClassicalVariant::Odd | ClassicalVariant::OddReduced => 2 * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassicalVariant::Even => "even",
            ClassicalVariant::Odd => "odd",
            ClassicalVariant::EvenReduced => "even-reduced",
            ClassicalVariant::OddReduced => "odd-reduced",
        }
    }
}

impl fmt::Display for ClassicalVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassicalVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassicalVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown identity variant {s:?}")))
    }
}

/// Both sides of the classical (`N = 1`) identity `variant` at `(n, h)`.
///
/// The unreduced forms are normalised so the right side is `(-1)^h C(n, h)`;
/// the reduced forms are scaled by `(2n-h+1)!` (even) or `(2n-h)!` (odd).
pub fn classical_identity(variant: ClassicalVariant, n: usize, h: usize) -> Result<(Rational, Rational)> {
    need_n(n)?;
    if h > variant.defined_h(n) {
        return Err(Error::InvalidArgument(format!(
            "{variant} identity is defined for h <= {}, got h = {h}",
            variant.defined_h(n)
        )));
    }
    let b = classical_row(h + 1);
    let bf = |i: usize| &b[i] / fact(i);
    let choose = |a: i64, k: usize| int(binom(BigInt::from(a), k));
    let ni = n as i64;
    let rhs_sign = Rational::sign_power(h) * choose(ni, h);
    let rhs_zero_past_n = |v: Rational| if h <= n { v } else { Rational::zero() };

    match variant {
        ClassicalVariant::Even | ClassicalVariant::Odd => {
            let shift = usize::from(variant == ClassicalVariant::Even);
            let mut lhs = Rational::zero();
            for j in 0..=h.min(n) {
                let top = 2 * n - j + shift - 1;
                let mut inner = Rational::zero();
                for k in 0..=j {
                    let w = int(falling(top as i64, k)) * choose(ni - k as i64 - 1, j - k)
                        / fact(k + 1);
                    inner += Rational::sign_power(j - k) * w;
                }
                let scale = fact(top + 1) / fact(2 * n + shift - h);
                lhs += inner * scale * bf(h - j);
            }
            Ok((lhs, rhs_zero_past_n(rhs_sign)))
        }
        ClassicalVariant::EvenReduced => {
            let mut lhs = Rational::zero();
            // even original index 2j
            for j in 0..=h / 2 {
                if 2 * j > n {
                    break;
                }
                lhs += fact(2 * n - 2 * j + 1) / Rational::from(2 * j + 1) * choose(ni, 2 * j) * bf(h - 2 * j);
            }
            // original index 1
            if h >= 1 {
                lhs += fact(2 * n) / Rational::from(2) * bf(h - 1);
            }
            // odd original index 2j+1 >= 3
            for j in 1..=h.saturating_sub(1) / 2 {
                if 2 * j + 1 > n {
                    break;
                }
                let w = fact(2 * n - 2 * j) / Rational::from(4 * (2 * j + 1))
                    / choose(2 * j as i64 - 1, j)
                    * choose(ni - j as i64 - 1, j)
                    * choose(ni, j);
                lhs += w * bf(h - 2 * j - 1);
            }
            Ok((lhs, rhs_zero_past_n(rhs_sign * fact(2 * n + 1 - h))))
        }
        ClassicalVariant::OddReduced => {
            let mut lhs = Rational::zero();
            for j in 0..=h / 2 {
                if 2 * j > n {
                    break;
                }
                let w = fact(j).pow(2) * fact(2 * n - 2 * j) / fact(2 * j + 1)
                    * choose(ni, j)
                    * choose(ni - j as i64 - 1, j);
                lhs += w * bf(h - 2 * j);
            }
            Ok((lhs, rhs_zero_past_n(rhs_sign * fact(2 * n - h))))
        }
    }
}
