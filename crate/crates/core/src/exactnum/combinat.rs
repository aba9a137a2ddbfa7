//! Integer-valued combinatorial primitives.
//!
//! Binomials use the falling-factorial definition for every integer upper
//! argument, so `binom(n, k) = 0` for `0 <= n < k` and `binom(-1, 0) = 1`
//! both fall out of one formula. Empty products are 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Falling factorial `a (a-1) ... (a-k+1)`; `falling(a, 0) = 1`.
pub fn falling(a: impl Into<BigInt>, k: usize) -> BigInt {
    let a = a.into();
    (0..k).fold(BigInt::one(), |acc, i| acc * (&a - i))
}

/// Rising factorial `a (a+1) ... (a+k-1)`; `rising(a, 0) = 1`.
pub fn rising(a: impl Into<BigInt>, k: usize) -> BigInt {
    let a = a.into();
    (0..k).fold(BigInt::one(), |acc, i| acc * (&a + i))
}

pub fn factorial(n: usize) -> BigInt {
    rising(1u32, n)
}

/// `falling(a, k) / k!` for any integer `a`.
pub fn binom(a: impl Into<BigInt>, k: usize) -> BigInt {
    let num = falling(a, k);
    let (q, r) = num.div_rem(&factorial(k));
    debug_assert!(r.is_zero());
    q
}

/// `(sum parts)! / prod(part_i!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    // product of binomials avoids the large intermediate factorial
    let mut total = 0usize;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binom(BigInt::from(total), p);
    }
    acc
}

/// Unsigned Stirling numbers of the first kind, `[n k]`, from
/// `s(n+1, k) = s(n, k-1) + n s(n, k)` with `s(0, 0) = 1`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_row(n).swap_remove(k)
}

/// Row `[n 0], [n 1], ..., [n n]`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (k, v) in row.iter().enumerate() {
            next[k + 1] += v;
            next[k] += v * m;
        }
        row = next;
    }
    row
}

/// `prod_{l=lo}^{hi} (base + l)`, empty (hence 1) when `hi < lo`.
pub fn shifted_product(base: &BigInt, lo: i64, hi: i64) -> BigInt {
    if hi < lo {
        return BigInt::one();
    }
    rising(base + lo, (hi - lo + 1) as usize)
}
